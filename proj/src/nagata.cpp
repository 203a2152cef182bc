#include "ringlat/nagata.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat {

std::size_t nilpotency_index(const Algebra& a, const Subspace& m, const Subspace& c) {
  Subspace p = m;
  for (std::size_t n = 1; n <= a.dim() + 1; ++n) {
    if (c.contains(p)) return n;
    p = a.product(p, m);
  }
  throw InvariantViolation("nilpotency", "maximal ideal is not nilpotent modulo the conductor");
}

SubintegralLocalData filtration_data(const Extension& ext) {
  if (ext.trivial()) throw AlgebraError("filtration data needs a proper extension");
  const Algebra& a = ext.algebra;
  const LocalStructure lr = local_structure(a, ext.r());
  if (lr.size() != 1) throw AlgebraError("filtration data needs a local base ring");
  if (!is_subintegral(ext)) throw AlgebraError("filtration data needs a subintegral extension");

  Subspace c = conductor(a, ext.r(), a.full());
  QuotientExtension qe = quotient_extension(ext, c);
  Subspace m = qe.quotient.project(lr.maximal_ideals[0]);
  SubintegralLocalData d{std::move(qe.ext), std::move(c), std::move(m), 1, {}, {}, {}, {}, 0};
  const Algebra& b = d.reduced.algebra;
  const Subspace& r = d.reduced.r();
  const Subspace s = b.full();
  d.n = nilpotency_index(b, d.m, b.zero_space());

  auto sm_power = [&](std::size_t i) { return b.product(s, ideal_power(b, d.m, i, r)); };
  for (std::size_t i = 0; i <= d.n; ++i) {
    const Subspace smi = sm_power(i);
    d.r.push_back(r.sum(smi));
    d.mi.push_back(d.m.sum(smi));
  }
  d.r2 = r.sum(sm_power(2));
  for (std::size_t i = 1; i < d.n; ++i) d.layer_lengths.push_back(module_length(b, r, d.mi[i], d.mi[i + 1]));
  d.sm_over_m_length = module_length(b, r, b.product(s, d.m), d.m);
  return d;
}

FiltrationConditions filtration_conditions(const SubintegralLocalData& d, const LatticeOptions& options) {
  FiltrationConditions c;
  c.length_condition = d.sm_over_m_length + 1 == d.n;
  c.layer_condition =
      std::all_of(d.layer_lengths.begin(), d.layer_lengths.end(), [](std::size_t l) { return l == 1; });
  const Subspace& r1 = d.n >= 1 ? d.r[1] : d.reduced.r();
  const SubExtension sub = sub_extension(d.reduced, d.reduced.r(), r1);
  c.chained_condition = is_chained(enumerate_interval(sub.ext, options)).chained;
  return c;
}

FipResult nagata_has_fip(const LatticeAnalysis& an) {
  FipResult res;
  const auto& lat = an.lattice();
  res.seminormalization = seminormalization(an);
  const SubExtension sub = sub_extension(an.extension(), lat.node(lat.bottom()), lat.node(res.seminormalization));
  const ArithmeticResult arith = is_arithmetic(sub.ext, an.options());
  res.fip = arith.arithmetic;
  for (const auto& f : arith.failures) {
    res.failures.push_back(ArithmeticFailure{sub.embedding.image_in_parent(f.maximal_ideal),
                                             sub.embedding.image_in_parent(f.first),
                                             sub.embedding.image_in_parent(f.second)});
  }
  return res;
}

FipCrosscheck nagata_fip_subintegral_crosscheck(const Extension& ext, const LatticeOptions& options) {
  if (!is_subintegral(ext)) throw AlgebraError("the criterion comparison needs a subintegral extension");
  FipCrosscheck out;
  out.verdict_a = is_arithmetic(ext, options).arithmetic;
  for (const auto& m : support(ext)) {
    const LocalizedExtension loc = localize_extension(ext, m);
    const SubintegralLocalData d = filtration_data(loc.ext);
    LocalCriterion lc;
    lc.maximal_ideal = m;
    lc.n = d.n;
    lc.sm_over_m_length = d.sm_over_m_length;
    const SubExtension upper = sub_extension(d.reduced, d.r2, d.reduced.algebra.full());
    lc.r2_chained = is_chained(enumerate_interval(upper.ext, options)).chained;
    lc.holds = lc.r2_chained && d.sm_over_m_length + 1 == d.n;
    out.verdict_b = out.verdict_b && lc.holds;
    out.locals.push_back(std::move(lc));
  }
  return out;
}

NagataReport nagata_report(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  NagataReport rep;
  const FipResult fip = nagata_has_fip(an);
  rep.fip = fip.fip;
  rep.witnesses = fip.failures;
  if (rep.fip) rep.cardinality = lat.size();
  rep.length = interval_length(lat).length;
  rep.lambda = lambda_invariant(an.algebra(), an.extension().r(), an.algebra().full());
  rep.criteria.push_back({"seminormal part arithmetic", fip.fip});
  if (an.subintegral(lat.bottom(), lat.top()) && !an.extension().trivial()) {
    const FipCrosscheck cc = nagata_fip_subintegral_crosscheck(an.extension(), an.options());
    rep.criteria.push_back({"arithmetic", cc.verdict_a});
    rep.criteria.push_back({"local filtration criterion", cc.verdict_b});
  }
  rep.criteria_agree = std::all_of(rep.criteria.begin(), rep.criteria.end(),
                                   [&](const Criterion& c) { return c.verdict == rep.fip; });
  rep.transfers = {
      {"fip", "FIP transfers exactly when the subintegral part is arithmetic"},
      {"cardinality", "under FIP the interval cardinality is unchanged"},
      {"length", "chain length is unchanged"},
      {"lambda", "maximal residual length is unchanged"},
  };
  return rep;
}

}  // namespace ringlat
