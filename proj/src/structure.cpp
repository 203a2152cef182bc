#include "ringlat/structure.hpp"

#include <algorithm>
#include <string>

#include "ringlat/errors.hpp"

namespace ringlat {

Subalgebra Subalgebra::verified(const Algebra& a, Subspace space) {
  if (space.ambient_dim() != a.dim()) throw AlgebraError("subalgebra lives in a different ambient space");
  if (!space.contains(a.one())) throw AlgebraError("subalgebra does not contain the unit");
  if (!a.is_closed(space)) throw AlgebraError("subspace is not closed under multiplication");
  return Subalgebra(std::move(space));
}

Subalgebra generated_subalgebra(const Algebra& a, const Subspace& seed, std::span<const Vec> gens) {
  std::vector<Vec> start = seed.basis();
  start.push_back(a.one());
  start.insert(start.end(), gens.begin(), gens.end());
  Subspace v = a.span(start);
  while (true) {
    std::vector<Vec> all = v.basis();
    const auto& B = v.basis();
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t j = i; j < B.size(); ++j) {
        Vec p = a.mul(B[i], B[j]);
        if (!v.contains(p)) all.push_back(std::move(p));
      }
    }
    if (all.size() == B.size()) break;
    v = a.span(all);
  }
  return Subalgebra::trusted(std::move(v));
}

Subalgebra generated_subalgebra(const Algebra& a, std::span<const Vec> gens) {
  return generated_subalgebra(a, a.zero_space(), gens);
}

Subalgebra prime_subring(const Algebra& a) {
  return generated_subalgebra(a, std::span<const Vec>{});
}

Subspace nilradical(const Algebra& a) {
  const FiniteField& F = a.field();
  const unsigned p = F.characteristic();
  const unsigned e = F.degree();
  unsigned m = 0;
  std::uint64_t pm = 1;
  while (pm < a.dim()) {
    pm *= p;
    ++m;
  }
  // phi(sum c_i e_i) = sum c_i^{p^m} phi(e_i); its kernel is sigma^{-1} of the
  // kernel of the linear map d -> sum d_i phi(e_i), sigma = c -> c^{p^m}.
  std::vector<Vec> images;
  images.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(a.pow(a.basis_vector(i), pm));
  const Subspace lin_kernel = nullspace(a.field_ptr(), images, a.dim());
  const unsigned back = (e - m % e) % e;
  std::uint64_t inv_exp = 1;
  for (unsigned i = 0; i < back; ++i) inv_exp *= p;
  std::vector<Vec> out;
  for (const auto& v : lin_kernel.basis()) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = F.pow(v[i], inv_exp);
    out.push_back(std::move(w));
  }
  return a.span(out);
}

std::size_t LocalStructure::index_of(const Subspace& m) const {
  for (std::size_t i = 0; i < maximal_ideals.size(); ++i) {
    if (maximal_ideals[i] == m) return i;
  }
  return maximal_ideals.size();
}

LocalStructure local_structure(const Algebra& a, const Subspace& t) {
  return local_structure(a, t, nilradical(a));
}

LocalStructure local_structure(const Algebra& a, const Subspace& t, const Subspace& nil_a) {
  const FiniteField& F = a.field();
  const unsigned q = F.order();
  LocalStructure ls;
  ls.nil = nil_a.intersect(t);

  // W = {x in T : x^q - x nilpotent}; W / Nil(T) is the split part F_q^r of
  // the semisimple quotient.
  const auto& tb = t.basis();
  std::vector<Vec> images;
  images.reserve(tb.size());
  for (const auto& x : tb) images.push_back(ls.nil.reduce(a.sub(a.pow(x, q), x)));
  const Subspace coeffs = nullspace(a.field_ptr(), images, a.dim());
  std::vector<Vec> w_vectors;
  for (const auto& c : coeffs.basis()) w_vectors.push_back(t.combine(c));
  const Subspace w = a.span(w_vectors);
  const std::size_t factors = w.dim() - ls.nil.dim();

  std::vector<Vec> idempotents{a.one()};
  for (const auto& x : w.basis()) {
    // x^{q^k} sheds its nilpotent part and lands in the span of the
    // primitive idempotents with F_q coefficients.
    Vec s = x;
    bool stable = false;
    for (int iter = 0; iter < 64; ++iter) {
      Vec s2 = a.pow(s, q);
      if (s2 == s) {
        stable = true;
        break;
      }
      s = std::move(s2);
    }
    if (!stable) throw InvariantViolation("idempotent-lifting", "Frobenius iteration did not stabilize");
    std::vector<Vec> refined;
    for (const auto& e : idempotents) {
      for (unsigned c = 0; c < q; ++c) {
        const Vec shifted = a.sub(s, a.scalar(static_cast<Scalar>(c)));
        const Vec indicator = a.sub(a.one(), a.pow(shifted, q - 1));
        Vec f = a.mul(e, indicator);
        if (!vec::is_zero(f)) refined.push_back(std::move(f));
      }
    }
    idempotents = std::move(refined);
  }
  if (idempotents.size() != factors) {
    throw InvariantViolation("idempotent-lifting", "found " + std::to_string(idempotents.size()) +
                                                       " idempotents, expected " +
                                                       std::to_string(factors));
  }
  std::sort(idempotents.begin(), idempotents.end());
  ls.idempotents = idempotents;

  for (const auto& e : idempotents) {
    std::vector<Vec> et, en, complement;
    const Vec f = a.sub(a.one(), e);
    for (const auto& x : tb) {
      et.push_back(a.mul(e, x));
      complement.push_back(a.mul(f, x));
    }
    for (const auto& x : ls.nil.basis()) en.push_back(a.mul(e, x));
    const std::size_t degree = a.span(et).dim() - a.span(en).dim();
    ls.residue_degrees.push_back(degree);
    ls.maximal_ideals.push_back(ls.nil.sum(a.span(complement)));
  }
  return ls;
}

LocalStructure local_structure(const Algebra& a) { return local_structure(a, a.full()); }

LocalDecomposition local_decomposition(const Algebra& a) {
  LocalStructure ls = local_structure(a);
  LocalDecomposition d;
  d.idempotents = ls.idempotents;
  d.maximal_ideals = ls.maximal_ideals;
  d.residue_degrees = ls.residue_degrees;
  for (const auto& e : ls.idempotents) {
    std::vector<Vec> ea;
    for (std::size_t i = 0; i < a.dim(); ++i) ea.push_back(a.mul(e, a.basis_vector(i)));
    d.factors.push_back(restrict_algebra(a, a.span(ea), e));
  }
  return d;
}

Subspace conductor(const Algebra& a, const Subspace& t, const Subspace& u) {
  const auto& tb = t.basis();
  std::vector<Vec> images;
  images.reserve(tb.size());
  for (const auto& x : tb) {
    Vec stacked;
    stacked.reserve(a.dim() * u.dim());
    for (const auto& y : u.basis()) {
      const Vec r = t.reduce(a.mul(x, y));
      stacked.insert(stacked.end(), r.begin(), r.end());
    }
    images.push_back(std::move(stacked));
  }
  const Subspace coeffs = nullspace(a.field_ptr(), images, a.dim() * u.dim());
  std::vector<Vec> out;
  for (const auto& c : coeffs.basis()) out.push_back(t.combine(c));
  return a.span(out);
}

Subspace ideal_power(const Algebra& a, const Subspace& ideal, std::size_t k, const Subspace& ring) {
  if (k == 0) return ring;
  Subspace p = ideal;
  for (std::size_t i = 1; i < k; ++i) p = a.product(p, ideal);
  return p;
}

std::size_t module_length(const Algebra& a, const Subspace& r, const Subspace& outer,
                          const Subspace& inner) {
  if (!outer.contains(inner)) throw AlgebraError("module length: inner space not contained in outer");
  if (!a.is_ideal_of(outer, r) || !a.is_ideal_of(inner, r)) {
    throw AlgebraError("module length: spaces are not stable under the ring");
  }
  const LocalStructure ls = local_structure(a, r);
  const Subspace& rad = ls.nil;
  std::size_t length = 0;
  Subspace x = outer;
  while (!(x == inner)) {
    const Subspace y = a.product(rad, x).sum(inner);
    if (y.dim() == x.dim()) {
      throw InvariantViolation("radical-filtration", "radical layer failed to shrink");
    }
    // The layer x/y is a module over R/J, a product of residue fields.
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Vec> ex;
      for (const auto& v : x.basis()) ex.push_back(a.mul(ls.idempotents[k], v));
      const std::size_t d = a.span(ex).sum(y).dim() - y.dim();
      if (d % ls.residue_degrees[k] != 0) {
        throw InvariantViolation("radical-filtration", "layer dimension not a multiple of the residue degree");
      }
      length += d / ls.residue_degrees[k];
    }
    x = y;
  }
  return length;
}

}  // namespace ringlat
