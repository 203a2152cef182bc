#pragma once

#include <vector>

#include "ringlat/structure.hpp"

namespace ringlat {

/// A ring extension R ⊆ S: the ambient algebra S and a unital subalgebra R.
struct Extension {
  Algebra algebra;
  Subalgebra base;

  const Subspace& r() const noexcept { return base.space(); }
  bool trivial() const noexcept { return base.dim() == algebra.dim(); }
};

/// R is verified to be a subalgebra of S.
Extension make_extension(Algebra s, Subspace r);
/// R is the subalgebra generated by `generators` (the prime subring when empty).
Extension make_extension_generated(Algebra s, std::span<const Vec> generators);

/// Max(R) for the base ring, in local_structure order.
std::vector<Subspace> base_maximal_ideals(const Extension& ext);

/// The pair e·R ⊆ e·S for the idempotent e of R belonging to a maximal
/// ideal M, as a standalone extension with unit e.
struct LocalizedExtension {
  Extension ext;
  Restriction embedding;
  Vec idempotent;
  Subspace maximal_ideal;
  /// (1-e)R in parent coordinates.
  Subspace complement;

  /// Lift a subalgebra of e·S back to the interval [R,S]: (1-e)R + eT.
  Subspace lift(const Subspace& local) const;
};

/// Throws AlgebraError when `m` is not a maximal ideal of R.
LocalizedExtension localize_extension(const Extension& ext, const Subspace& m);

/// Maximal ideals of R at which the localized extension is proper.
std::vector<Subspace> support(const Extension& ext);

/// T ⊆ U for subalgebras R ⊆ T ⊆ U ⊆ S, carried inside U as the ambient algebra.
struct SubExtension {
  Extension ext;
  Restriction embedding;
};

SubExtension sub_extension(const Extension& ext, const Subspace& t, const Subspace& u);

/// R/(R∩J) ⊆ S/J for an ideal J of S.
struct QuotientExtension {
  Extension ext;
  Quotient quotient;
};

QuotientExtension quotient_extension(const Extension& ext, const Subspace& j);

}  // namespace ringlat
