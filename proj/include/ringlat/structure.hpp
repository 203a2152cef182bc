#pragma once

#include <vector>

#include "ringlat/algebra.hpp"

namespace ringlat {

/// A subspace of an algebra that contains the unit and is closed under
/// multiplication, held in canonical echelon form.
class Subalgebra {
 public:
  /// Throws AlgebraError when `space` is not a unital subalgebra of `a`.
  static Subalgebra verified(const Algebra& a, Subspace space);
  static Subalgebra trusted(Subspace space) { return Subalgebra(std::move(space)); }

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Vec>& basis() const noexcept { return space_.basis(); }
  bool contains(const Subalgebra& other) const { return space_.contains(other.space_); }

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) noexcept { return a.space_ == b.space_; }
  friend bool operator<(const Subalgebra& a, const Subalgebra& b) noexcept { return a.space_ < b.space_; }

 private:
  explicit Subalgebra(Subspace space) : space_(std::move(space)) {}
  Subspace space_;
};

/// Smallest subalgebra containing `seed`, the unit and `gens`, by iterated
/// span-and-multiply to a fixpoint.
Subalgebra generated_subalgebra(const Algebra& a, const Subspace& seed, std::span<const Vec> gens);
Subalgebra generated_subalgebra(const Algebra& a, std::span<const Vec> gens);
Subalgebra prime_subring(const Algebra& a);

/// Nilpotent elements of `a`: kernel of the semilinear map x -> x^{p^m}
/// with p^m >= dim.
Subspace nilradical(const Algebra& a);

/// Local structure of a subalgebra T (coordinates in the ambient algebra).
/// Index i of `idempotents`, `maximal_ideals` and `residue_degrees` refers
/// to the same local factor e_i T. Idempotents are sorted.
struct LocalStructure {
  Subspace nil;
  std::vector<Vec> idempotents;
  std::vector<Subspace> maximal_ideals;
  /// [T/M_i : F_q]
  std::vector<std::size_t> residue_degrees;

  std::size_t size() const noexcept { return idempotents.size(); }
  /// Index of a maximal ideal, or size() when `m` is not one.
  std::size_t index_of(const Subspace& m) const;
};

LocalStructure local_structure(const Algebra& a, const Subspace& t);
/// Same, reusing a precomputed nilradical of `a`.
LocalStructure local_structure(const Algebra& a, const Subspace& t, const Subspace& nil_a);
LocalStructure local_structure(const Algebra& a);

/// Splitting of an algebra into local factors e_i A, each a standalone
/// algebra with unit e_i and a projection x -> e_i x.
struct LocalDecomposition {
  std::vector<Vec> idempotents;
  std::vector<Restriction> factors;
  std::vector<Subspace> maximal_ideals;
  std::vector<std::size_t> residue_degrees;

  std::size_t size() const noexcept { return idempotents.size(); }
};

LocalDecomposition local_decomposition(const Algebra& a);

/// (T:U) = {x in T : xU in T} for subalgebras T in U.
Subspace conductor(const Algebra& a, const Subspace& t, const Subspace& u);

/// I^k, with I^0 the whole of `ring`.
Subspace ideal_power(const Algebra& a, const Subspace& ideal, std::size_t k, const Subspace& ring);

/// Length of the R-module outer/inner, for R-stable subspaces inner in outer,
/// by the radical filtration J^i outer + inner with J = Nil(R).
std::size_t module_length(const Algebra& a, const Subspace& r, const Subspace& outer,
                          const Subspace& inner);

}  // namespace ringlat
