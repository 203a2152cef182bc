#pragma once

#include <cstdint>
#include <vector>

#include "ringlat/field.hpp"
#include "ringlat/linalg.hpp"
#include "ringlat/poly.hpp"

namespace ringlat {

/// A finite-dimensional commutative unital F_q-algebra given by structure
/// constants: e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  /// Validates commutativity, associativity on every basis triple and the
  /// unit law; throws AlgebraError naming the first failing coordinates.
  Algebra(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one);

  /// Skips validation. Only for algebras derived from a valid one
  /// (restrictions, quotients, products).
  static Algebra trusted(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const FiniteField& field() const noexcept { return *field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vec& one() const noexcept { return one_; }
  Vec zero() const { return Vec(dim_, 0); }
  Vec basis_vector(std::size_t i) const;
  /// c[i][j][*]
  Vec structure(std::size_t i, std::size_t j) const;
  const std::vector<Scalar>& table() const noexcept { return table_; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow(const Vec& x, std::uint64_t k) const;
  Vec add(const Vec& x, const Vec& y) const { return vec::add(*field_, x, y); }
  Vec sub(const Vec& x, const Vec& y) const { return vec::sub(*field_, x, y); }
  Vec scale(Scalar c, const Vec& x) const { return vec::scale(*field_, c, x); }
  Vec scalar(Scalar c) const { return scale(c, one_); }

  Subspace full() const { return Subspace::full(field_, dim_); }
  Subspace span(std::span<const Vec> vectors) const { return Subspace::span(field_, dim_, vectors); }
  Subspace zero_space() const { return Subspace(field_, dim_); }

  /// span{a*b : a in A, b in B}
  Subspace product(const Subspace& a, const Subspace& b) const;
  bool is_closed(const Subspace& s) const;
  /// Whether s absorbs multiplication by every element of `ring`.
  bool is_ideal_of(const Subspace& s, const Subspace& ring) const;

  friend bool operator==(const Algebra& a, const Algebra& b) noexcept {
    return a.field_->same_as(*b.field_) && a.dim_ == b.dim_ && a.table_ == b.table_ &&
           a.one_ == b.one_;
  }

 private:
  Algebra(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one, bool validate);
  void validate() const;

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Scalar> table_;
  Vec one_;
};

/// F_q[Y]/(f) on the basis 1, y, ..., y^{deg f - 1}. f is monic, degree >= 1.
Algebra make_poly_quotient(FieldPtr field, const Poly& f);

/// A x B with block-diagonal structure constants and unit (1, 1).
Algebra make_product(const Algebra& a, const Algebra& b);

/// F_q[Y_1..Y_v] modulo every monomial outside `standard`, which must be an
/// order ideal of exponent vectors (closed under division) containing 1.
/// Basis order follows `standard`.
Algebra make_monomial_algebra(FieldPtr field, const std::vector<std::vector<unsigned>>& standard);

/// The algebra carried by a multiplicatively closed subspace U of A with its
/// own unit (an idempotent of A lying in U). `embedding` lists U's echelon
/// basis in A-coordinates; coordinates in the new algebra are echelon
/// coordinates.
struct Restriction {
  Algebra algebra;
  Subspace embedding;

  Vec to_parent(const Vec& coords) const { return embedding.combine(coords); }
  Vec from_parent(const Vec& v) const { return embedding.coordinates(v); }
  Subspace image_in_parent(const Subspace& s) const;
  Subspace preimage_of(const Subspace& parent_space) const;
};

Restriction restrict_algebra(const Algebra& a, const Subspace& u, const Vec& unit);

/// A/J with its projection. Coordinates of the quotient are the entries of
/// the normal form at J's free columns.
struct Quotient {
  Algebra algebra;
  Subspace kernel;

  Vec project(const Vec& v) const;
  Subspace project(const Subspace& s) const;
};

/// Throws AlgebraError when J is not an ideal or is all of A.
Quotient quotient(const Algebra& a, const Subspace& j);

}  // namespace ringlat
