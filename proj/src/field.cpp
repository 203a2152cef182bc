#include "ringlat/field.hpp"

#include <string>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace {

// Conway polynomials, low degree first.
struct BuiltinModulus {
  unsigned p;
  unsigned e;
  std::vector<unsigned> coeffs;
};

const std::vector<BuiltinModulus>& builtin_table() {
  static const std::vector<BuiltinModulus> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {5, 2, {2, 4, 1}},
      {7, 2, {3, 6, 1}},
  };
  return table;
}

// Remainder of a by the monic polynomial m over F_p (both low degree first).
std::vector<unsigned> poly_rem_modp(std::vector<unsigned> a, const std::vector<unsigned>& m,
                                    unsigned p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const unsigned c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool irreducible_by_trial(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  // Monic candidates of degree d enumerated as base-p counters.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::vector<unsigned> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      auto r = poly_rem_modp(f, g, p);
      bool zero = true;
      for (unsigned c : r) zero = zero && (c % p == 0);
      if (zero) return false;
      std::size_t k = 0;
      while (k < d && ++g[k] == p) g[k++] = 0;
      if (k == d) break;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned prime_omega(std::uint64_t n) noexcept {
  unsigned count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

bool split_prime_power(std::uint64_t q, unsigned& p, unsigned& e) noexcept {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  unsigned k = 0;
  while (q % d == 0) {
    q /= d;
    ++k;
  }
  if (q != 1) return false;
  p = static_cast<unsigned>(d);
  e = k;
  return true;
}

std::vector<unsigned> FiniteField::builtin_modulus(unsigned p, unsigned e) {
  if (e == 1 && is_prime(p)) return {0, 1};
  for (const auto& entry : builtin_table()) {
    if (entry.p == p && entry.e == e) return entry.coeffs;
  }
  return {};
}

FieldPtr FiniteField::make(unsigned p, unsigned e, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw AlgebraError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw AlgebraError("field order exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
  }
  if (modulus.empty()) {
    modulus = builtin_modulus(p, e);
    if (modulus.empty()) {
      throw AlgebraError("no built-in modulus for F_" + std::to_string(q) + "; supply one");
    }
  }
  if (modulus.size() != e + 1) {
    throw AlgebraError("modulus must have degree " + std::to_string(e));
  }
  for (unsigned c : modulus) {
    if (c >= p) throw AlgebraError("modulus coefficient out of range 0..p-1");
  }
  if (modulus.back() != 1) throw AlgebraError("modulus must be monic");
  if (!irreducible_by_trial(modulus, p)) throw AlgebraError("modulus is reducible over F_p");
  return FieldPtr(new FiniteField(p, e, std::move(modulus)));
}

FiniteField::FiniteField(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<std::vector<unsigned>> dig(q_);
  for (unsigned a = 0; a < q_; ++a) dig[a] = digits(static_cast<Scalar>(a));

  for (unsigned a = 0; a < q_; ++a) {
    std::vector<unsigned> n(e_);
    for (unsigned i = 0; i < e_; ++i) n[i] = (p_ - dig[a][i]) % p_;
    neg_[a] = from_digits(n);
    for (unsigned b = 0; b < q_; ++b) {
      std::vector<unsigned> s(e_);
      for (unsigned i = 0; i < e_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
      add_[idx(a, b)] = from_digits(s);
      std::vector<unsigned> prod(2 * e_ - 1, 0);
      for (unsigned i = 0; i < e_; ++i) {
        if (dig[a][i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j) {
          prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p_;
        }
      }
      auto r = poly_rem_modp(std::move(prod), modulus_, p_);
      r.resize(e_, 0);
      mul_[idx(a, b)] = from_digits(r);
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<Scalar>(b);
        break;
      }
    }
  }
}

Scalar FiniteField::inv(Scalar a) const {
  if (a == 0) throw AlgebraError("inverse of zero");
  return inv_[a];
}

Scalar FiniteField::pow(Scalar a, std::uint64_t k) const noexcept {
  Scalar result = 1;
  Scalar base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::vector<unsigned> FiniteField::digits(Scalar a) const {
  std::vector<unsigned> d(e_);
  unsigned v = a;
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Scalar FiniteField::from_digits(const std::vector<unsigned>& digits) const {
  unsigned v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
  return static_cast<Scalar>(v);
}

Scalar FiniteField::from_int(long long k) const noexcept {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

}  // namespace ringlat
