#pragma once

#include <cstdint>
#include <vector>

#include "ringlat/field.hpp"

namespace ringlat {

/// Dense univariate polynomial over F_q, coefficients low degree first.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

namespace poly {

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const FiniteField& F, const Poly& a, const Poly& b);
Poly sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly mul(const FiniteField& F, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly rem(const FiniteField& F, const Poly& a, const Poly& b);
Poly gcd(const FiniteField& F, Poly a, Poly b);
Poly pow_mod(const FiniteField& F, Poly base, std::uint64_t k, const Poly& m);

/// Ben-Or irreducibility test over F_q.
bool is_irreducible(const FiniteField& F, const Poly& f);

}  // namespace poly
}  // namespace ringlat
