#include "ringlat/extension.hpp"

#include "ringlat/errors.hpp"

namespace ringlat {

Extension make_extension(Algebra s, Subspace r) {
  Subalgebra base = Subalgebra::verified(s, std::move(r));
  return Extension{std::move(s), std::move(base)};
}

Extension make_extension_generated(Algebra s, std::span<const Vec> generators) {
  for (const auto& g : generators) {
    if (g.size() != s.dim()) throw AlgebraError("generator has the wrong number of coordinates");
  }
  Subalgebra base = generated_subalgebra(s, generators);
  return Extension{std::move(s), std::move(base)};
}

std::vector<Subspace> base_maximal_ideals(const Extension& ext) {
  return local_structure(ext.algebra, ext.r()).maximal_ideals;
}

Subspace LocalizedExtension::lift(const Subspace& local) const {
  return complement.sum(embedding.image_in_parent(local));
}

namespace {

Subspace times_idempotent(const Algebra& a, const Vec& e, const Subspace& s) {
  std::vector<Vec> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.push_back(a.mul(e, v));
  return a.span(out);
}

}  // namespace

LocalizedExtension localize_extension(const Extension& ext, const Subspace& m) {
  const Algebra& a = ext.algebra;
  const LocalStructure ls = local_structure(a, ext.r());
  const std::size_t idx = ls.index_of(m);
  if (idx == ls.size()) throw AlgebraError("localization at an ideal that is not maximal in the base ring");
  const Vec& e = ls.idempotents[idx];
  Restriction res = restrict_algebra(a, times_idempotent(a, e, a.full()), e);
  Subspace local_r = res.preimage_of(times_idempotent(a, e, ext.r()));
  Extension local{res.algebra, Subalgebra::trusted(std::move(local_r))};
  Subspace rest = times_idempotent(a, a.sub(a.one(), e), ext.r());
  return LocalizedExtension{std::move(local), std::move(res), e, m, std::move(rest)};
}

std::vector<Subspace> support(const Extension& ext) {
  const Algebra& a = ext.algebra;
  const LocalStructure ls = local_structure(a, ext.r());
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const Vec& e = ls.idempotents[i];
    if (times_idempotent(a, e, ext.r()).dim() != times_idempotent(a, e, a.full()).dim()) {
      out.push_back(ls.maximal_ideals[i]);
    }
  }
  return out;
}

SubExtension sub_extension(const Extension& ext, const Subspace& t, const Subspace& u) {
  const Algebra& a = ext.algebra;
  if (!u.contains(t)) throw AlgebraError("sub-extension endpoints are not nested");
  if (!t.contains(ext.r())) throw AlgebraError("sub-extension does not contain the base ring");
  if (!t.contains(a.one()) || !a.is_closed(t)) throw AlgebraError("lower endpoint is not a subalgebra");
  Restriction res = restrict_algebra(a, u, a.one());
  Subspace local_t = res.preimage_of(t);
  Extension sub{res.algebra, Subalgebra::trusted(std::move(local_t))};
  return SubExtension{std::move(sub), std::move(res)};
}

QuotientExtension quotient_extension(const Extension& ext, const Subspace& j) {
  Quotient qt = quotient(ext.algebra, j);
  Subspace image = qt.project(ext.r());
  Extension reduced{qt.algebra, Subalgebra::trusted(std::move(image))};
  return QuotientExtension{std::move(reduced), std::move(qt)};
}

}  // namespace ringlat
