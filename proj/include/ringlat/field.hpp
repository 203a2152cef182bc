#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ringlat {

/// Field elements are encoded as integers 0..q-1: the base-p digits of the
/// code are the coefficients of the element in the polynomial basis
/// 1, a, a^2, ... where a is a root of the modulus.
using Scalar = std::uint16_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_q with q = p^e, arithmetic by lookup tables.
class FiniteField {
 public:
  static constexpr unsigned kMaxOrder = 1024;

  /// `modulus` holds the coefficients over F_p, low degree first, and must be
  /// monic of degree e. When empty, a built-in modulus is used (q <= 64).
  static FieldPtr make(unsigned p, unsigned e, std::vector<unsigned> modulus = {});

  /// Built-in irreducible modulus for F_{p^e}; empty when none is tabulated.
  static std::vector<unsigned> builtin_modulus(unsigned p, unsigned e);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  unsigned order() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Scalar add(Scalar a, Scalar b) const noexcept { return add_[idx(a, b)]; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add_[idx(a, neg_[b])]; }
  Scalar neg(Scalar a) const noexcept { return neg_[a]; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return mul_[idx(a, b)]; }
  /// Throws AlgebraError on zero.
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t k) const noexcept;

  /// Digits of `a` in the polynomial basis over F_p.
  std::vector<unsigned> digits(Scalar a) const;
  Scalar from_digits(const std::vector<unsigned>& digits) const;
  /// Image of the prime-field element k mod p.
  Scalar from_int(long long k) const noexcept;

  bool same_as(const FiniteField& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField(unsigned p, unsigned e, std::vector<unsigned> modulus);
  std::size_t idx(Scalar a, Scalar b) const noexcept {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Scalar> add_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> neg_;
  std::vector<Scalar> inv_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Number of prime factors counted with multiplicity; 0 for n = 1.
unsigned prime_omega(std::uint64_t n) noexcept;
/// Decomposes q as p^e; returns false when q is not a prime power.
bool split_prime_power(std::uint64_t q, unsigned& p, unsigned& e) noexcept;

}  // namespace ringlat
