#include "ringlat/poly.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Poly add(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

Poly rem(const FiniteField& F, const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw AlgebraError("polynomial division by zero");
  Poly r = a;
  trim(r);
  const Scalar lead_inv = F.inv(b[db]);
  for (int i = degree(r); i >= db; i = degree(r)) {
    const Scalar c = F.mul(r[i], lead_inv);
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    trim(r);
  }
  return r;
}

Poly gcd(const FiniteField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar c = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, c);
  }
  return a;
}

Poly pow_mod(const FiniteField& F, Poly base, std::uint64_t k, const Poly& m) {
  Poly result{1};
  base = rem(F, base, m);
  while (k > 0) {
    if (k & 1U) result = rem(F, mul(F, result, base), m);
    base = rem(F, mul(F, base, base), m);
    k >>= 1U;
  }
  return rem(F, result, m);
}

bool is_irreducible(const FiniteField& F, const Poly& f) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; 2 * i <= n; ++i) {
    h = pow_mod(F, h, F.order(), f);
    if (degree(gcd(F, f, sub(F, h, x))) > 0) return false;
  }
  return true;
}

}  // namespace ringlat::poly
