#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ringlat/field.hpp"

namespace ringlat {

using Vec = std::vector<Scalar>;

namespace vec {

bool is_zero(const Vec& v) noexcept;
Vec add(const FiniteField& F, const Vec& a, const Vec& b);
Vec sub(const FiniteField& F, const Vec& a, const Vec& b);
Vec scale(const FiniteField& F, Scalar c, const Vec& a);
/// a += c * b
void axpy(const FiniteField& F, Vec& a, Scalar c, const Vec& b);

}  // namespace vec

/// A subspace of F_q^n held in reduced row echelon form with unit pivots.
/// The echelon basis is unique, so equality and ordering are structural.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F_q^n.
  Subspace(FieldPtr field, std::size_t ambient_dim);

  static Subspace span(FieldPtr field, std::size_t ambient_dim, std::span<const Vec> vectors);
  static Subspace full(FieldPtr field, std::size_t ambient_dim);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Normal form modulo the subspace: zero at every pivot column. Two vectors
  /// share a coset exactly when their normal forms agree.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed inside) in the echelon basis.
  Vec coordinates(const Vec& v) const;
  /// Vector with the given echelon-basis coordinates.
  Vec combine(const Vec& coords) const;
  /// Standard basis columns outside the pivots; they index a complement.
  std::vector<std::size_t> free_columns() const;

  Subspace sum(const Subspace& other) const;
  Subspace sum(const Vec& v) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  /// Orders by dimension, then lexicographically by echelon basis.
  friend bool operator<(const Subspace& a, const Subspace& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// Coefficient vectors a (length images.size()) with sum_j a_j images[j] = 0.
/// Returned as a subspace of F_q^{images.size()}.
Subspace nullspace(const FieldPtr& field, std::span<const Vec> images, std::size_t image_dim);

}  // namespace ringlat
