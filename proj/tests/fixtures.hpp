#pragma once

#include <initializer_list>
#include <vector>

#include "ringlat/canonical.hpp"
#include "ringlat/extension.hpp"

namespace fx {

using namespace ringlat;

inline FieldPtr gf(unsigned p, unsigned e = 1) { return FiniteField::make(p, e); }

inline Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(static_cast<Scalar>(x));
  return out;
}

/// F[Y]/(Y^k)
inline Algebra truncated(const FieldPtr& f, std::size_t k) {
  Poly p(k + 1, 0);
  p[k] = 1;
  return make_poly_quotient(f, p);
}

inline Algebra poly_quotient(const FieldPtr& f, std::initializer_list<int> coeffs) {
  Poly p;
  for (int c : coeffs) p.push_back(static_cast<Scalar>(c));
  return make_poly_quotient(f, p);
}

/// F_2[Y]/(Y^2+Y+1), F_2[Y]/(Y^3+Y+1), F_2[Y]/(Y^6+Y+1).
inline Algebra f4() { return poly_quotient(gf(2), {1, 1, 1}); }
inline Algebra f8() { return poly_quotient(gf(2), {1, 1, 0, 1}); }
inline Algebra f16() { return poly_quotient(gf(2), {1, 1, 0, 0, 1}); }
inline Algebra f64() { return poly_quotient(gf(2), {1, 1, 0, 0, 0, 0, 1}); }

inline Extension over_prime(Algebra s) { return make_extension_generated(std::move(s), {}); }

inline Extension with_base(Algebra s, std::initializer_list<Vec> gens) {
  std::vector<Vec> g(gens);
  return make_extension_generated(std::move(s), g);
}

inline Subspace span(const Algebra& a, std::initializer_list<Vec> vs) {
  std::vector<Vec> g(vs);
  return a.span(g);
}

/// K = F_2 ⊆ T = F_2[Y]/(Y^4)
inline Extension example_y4() { return over_prime(truncated(gf(2), 4)); }
inline Extension example_y3() { return over_prime(truncated(gf(2), 3)); }
inline Extension tower_f64() { return over_prime(f64()); }

/// span{1, t^2} ⊆ F_2[t]/(t^4): [R, R_1] is a chain.
inline Extension uniserial() { return with_base(truncated(gf(2), 4), {v({0, 0, 1, 0})}); }

/// span{1, m} ⊆ F_2[m,a,b] on the monomials 1, m, a, b, ma, mb: the layer
/// SM/M has length 2.
inline Extension fat_layer() {
  const std::vector<std::vector<unsigned>> standard{{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                                    {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
  return with_base(make_monomial_algebra(gf(2), standard), {v({0, 1, 0, 0, 0, 0})});
}

}  // namespace fx
