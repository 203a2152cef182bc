#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/lattice.hpp"

namespace ringlat {

enum class MinimalKindTag { Inert, Decomposed, Ramified };

/// "inert", "decomposed" or "ramified".
std::string kind_name(MinimalKindTag k);
/// 'I', 'D' or 'R'.
char kind_letter(MinimalKindTag k);

/// Classification of a minimal extension T ⊂ U with its evidence.
struct MinimalKind {
  MinimalKindTag kind;
  /// (T:U), a maximal ideal of T.
  Subspace conductor;
  /// Maximal ideals of U containing the conductor.
  std::vector<Subspace> ideals_above;
  /// [T/conductor : F_q]
  std::size_t base_degree = 0;
  /// [U/N : F_q] for each N in ideals_above.
  std::vector<std::size_t> upper_degrees;
};

/// Whether T ⊂ U has no intermediate subalgebra: T[s] = U for every s in U \ T.
bool is_minimal_pair(const Algebra& a, const Subspace& t, const Subspace& u);

/// Throws AlgebraError when the pair is not adjacent (checked only when
/// `verify_adjacent`), InvariantViolation when the conductor is not maximal
/// or the number of matching cases is not exactly one.
MinimalKind classify_minimal(const Algebra& a, const Subspace& t, const Subspace& u, bool verify_adjacent = true);
MinimalKind classify_minimal(const Algebra& a, const Subspace& t, const Subspace& u, const LocalStructure& lt,
                             const LocalStructure& lu);

/// The unique maximal ideal of T at which T ⊂ U is not locally an equality,
/// found by projecting onto each local factor; checked against (T:U).
Subspace crucial_ideal(const Algebra& a, const Subspace& t, const Subspace& u);

/// Q ∈ Max(T) over P = Q∩R with degree [T/Q : R/P] and length Ω(degree).
struct ResidualExtension {
  Subspace q;
  Subspace p;
  std::size_t degree = 1;
  unsigned length = 0;
};

std::vector<ResidualExtension> residual_extensions(const Algebra& a, const LocalStructure& lr,
                                                   const LocalStructure& lt);
std::vector<ResidualExtension> residual_extensions(const Algebra& a, const Subspace& r, const Subspace& t);

/// All residual degrees 1.
bool is_infra_integral(const Algebra& a, const Subspace& r, const Subspace& t);
/// Infra-integral with a bijective map Max(T) → Max(R).
bool is_subintegral(const Algebra& a, const Subspace& r, const Subspace& t);
bool is_infra_integral(const Extension& ext);
bool is_subintegral(const Extension& ext);

/// Max over Max(T) of residual lengths.
unsigned lambda_invariant(const Algebra& a, const Subspace& r, const Subspace& t);
unsigned lambda_invariant(const Extension& ext);

/// The lattice of an extension with per-node local structures and per-edge
/// classifications, computed once.
class LatticeAnalysis {
 public:
  explicit LatticeAnalysis(Extension ext, const LatticeOptions& options = {});
  LatticeAnalysis(Extension ext, ExtensionLattice lattice, const LatticeOptions& options = {});

  const Extension& extension() const noexcept { return ext_; }
  const Algebra& algebra() const noexcept { return ext_.algebra; }
  const ExtensionLattice& lattice() const noexcept { return lattice_; }
  const LatticeOptions& options() const noexcept { return options_; }
  const Subspace& nil() const noexcept { return nil_; }
  const LocalStructure& structure(std::size_t node) const { return structures_[node]; }
  /// Parallel to lattice().covers().
  const std::vector<MinimalKind>& edge_kinds() const noexcept { return kinds_; }
  const MinimalKind& edge_kind(std::size_t lower, std::size_t upper) const;

  std::vector<ResidualExtension> residuals(std::size_t lower, std::size_t upper) const;
  bool infra_integral(std::size_t lower, std::size_t upper) const;
  bool subintegral(std::size_t lower, std::size_t upper) const;

 private:
  void build();

  Extension ext_;
  ExtensionLattice lattice_;
  LatticeOptions options_;
  Subspace nil_;
  std::vector<LocalStructure> structures_;
  std::vector<MinimalKind> kinds_;
};

struct Census {
  std::size_t inert = 0;
  std::size_t decomposed = 0;
  std::size_t ramified = 0;
};

Census edge_census(const LatticeAnalysis& an);

/// Definitional scan: b ∈ S \ R, r ∈ R, b²-rb ∈ R and b³-rb² ∈ R force b ∈ R.
struct TScan {
  bool t_closed = true;
  std::uint64_t pairs = 0;
  /// (b, r) violating the implication.
  std::optional<std::pair<Vec, Vec>> witness;
};

/// nullopt when the number of pairs exceeds `budget`.
std::optional<TScan> t_closed_scan(const Algebra& a, const Subspace& r, const Subspace& s, std::uint64_t budget);

/// Every step of a longest maximal chain is inert.
bool t_closed_by_chain(const LatticeAnalysis& an);

struct TClosedResult {
  bool t_closed = true;
  /// False when the scan exceeded its budget and the chain route decided.
  bool by_scan = true;
  std::optional<TScan> scan;
  bool by_chain = true;
};

/// Runs both routes when the scan fits the budget; throws InvariantViolation
/// when they disagree.
TClosedResult is_t_closed(const LatticeAnalysis& an, std::uint64_t scan_budget = std::uint64_t{1} << 20);

/// Node index of the largest subintegral node over R.
std::size_t seminormalization(const LatticeAnalysis& an);

struct TClosure {
  std::size_t node = 0;
  /// Greatest node infra-integral over R.
  std::size_t via_infra_integral = 0;
  /// Least node B with every cover in [B,S] inert.
  std::size_t via_t_closed_above = 0;
  /// Climb from R along non-inert covers until none is left.
  std::size_t via_greedy_climb = 0;
};

/// Throws InvariantViolation when the three routes disagree.
TClosure t_closure(const LatticeAnalysis& an);

struct CanonicalDecomposition {
  std::size_t seminormalization = 0;
  std::size_t t_closure = 0;
  bool nested = false;
  bool lower_subintegral = false;
  bool middle_infra_integral = false;
  bool upper_t_closed = false;

  bool ok() const { return nested && lower_subintegral && middle_infra_integral && upper_t_closed; }
};

CanonicalDecomposition canonical_decomposition(const LatticeAnalysis& an);

struct LambdaReport {
  unsigned lambda = 0;
  /// Λ(S/ᵗR)
  unsigned lambda_over_t_closure = 0;
  bool t_closed = false;
  /// Only meaningful for t-closed extensions.
  std::size_t max_local_length = 0;
  std::size_t support_size = 0;
  std::size_t length = 0;

  bool consistent() const {
    if (lambda != lambda_over_t_closure) return false;
    if (!t_closed) return true;
    return lambda == max_local_length && length <= support_size * lambda;
  }
};

LambdaReport lambda_report(const LatticeAnalysis& an);

struct ChainVerification {
  std::vector<MinimalKindTag> kinds;
  bool all_non_inert = false;
  bool all_inert = false;
  bool infra_integral = false;
  bool t_closed = false;
  /// For a local base with all-inert steps: (R:S) = M and S local with maximal ideal M.
  std::optional<bool> quasi_local_conductor;

  bool consistent() const {
    return all_non_inert == infra_integral && all_inert == t_closed && quasi_local_conductor.value_or(true);
  }
};

/// `chain` is a bottom-to-top list of node indices joined by covers.
ChainVerification verify_chain_classification(const LatticeAnalysis& an, const std::vector<std::size_t>& chain);

struct AdditivityReport {
  std::size_t length = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool holds = false;
  /// The split at the seminormalization, checked only when no cover inside
  /// [⁺R,S] is ramified.
  bool seminormal_applicable = false;
  std::size_t seminormal_lower = 0;
  std::size_t seminormal_upper = 0;
  bool seminormal_holds = true;
};

/// Both sides are recomputed by enumerating the sub-intervals from scratch.
AdditivityReport length_additivity_check(const LatticeAnalysis& an);

}  // namespace ringlat
