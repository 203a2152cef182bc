#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringlat/extension.hpp"

namespace ringlat {

enum class Shape { LocalSubintegral, ProductOfLocals, FieldTower, Mixed };

std::string shape_name(Shape s);
std::optional<Shape> parse_shape(const std::string& name);

/// Upper bound on dim S for generated instances.
inline constexpr std::size_t kMaxGenDim = 8;
/// Attempts allowed per emitted instance.
inline constexpr std::size_t kRejectionBudget = 10000;

struct GenSpec {
  std::uint64_t seed = 1;
  unsigned q = 2;
  std::size_t max_dim = 4;
  Shape shape = Shape::Mixed;
  std::size_t count = 1;
};

/// local-subintegral: S local with residue field F_q, R a proper subalgebra
/// whose maximal ideal is not the conductor (R/(R:S) is not a field).
/// product-of-locals: S a product of at least two local algebras.
/// field-tower: F_q ⊆ F_{q^max_dim}.
/// mixed: S = F_q[Y]/(f) for random monic f, or local × F_q[Y]/(Y^k).

/// Seeded source with a fixed reduction to ranges, so streams agree across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Inclusive range.
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// A local algebra with residue field F_q: a truncated F_q[Y1,Y2] modulo a
/// random ideal inside the maximal ideal, of dimension in [2, max_dim].
Algebra random_local_algebra(Rng& rng, const FieldPtr& field, std::size_t max_dim);

/// F_q[Y]/(g^k) for a random monic irreducible g of degree f.
Algebra random_primary_quotient(Rng& rng, const FieldPtr& field, std::size_t f, std::size_t k);

/// Random monic irreducible polynomial of the given degree.
Poly random_irreducible(Rng& rng, const FiniteField& field, std::size_t degree);

/// Throws AlgebraError for an invalid spec.
void validate_spec(const GenSpec& spec);

struct GenStats {
  std::size_t attempts = 0;
  std::size_t accepted = 0;

  double acceptance_ratio() const { return attempts ? double(accepted) / double(attempts) : 0.0; }
};

/// Deterministic stream of `count` extensions of the requested shape. Throws
/// BudgetExceeded when one instance needs more than kRejectionBudget attempts.
class ExtensionGenerator {
 public:
  explicit ExtensionGenerator(const GenSpec& spec);
  Extension next();
  const GenStats& stats() const noexcept { return stats_; }

 private:
  std::optional<Extension> attempt();

  GenSpec spec_;
  FieldPtr field_;
  Rng rng_;
  GenStats stats_;
};

std::vector<Extension> random_extensions(const GenSpec& spec, GenStats* stats = nullptr);

}  // namespace ringlat
