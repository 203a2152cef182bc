#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/canonical.hpp"

namespace ringlat {

/// Smallest n >= 1 with M^n ⊆ C.
std::size_t nilpotency_index(const Algebra& a, const Subspace& m, const Subspace& c);

/// Filtration data of a local subintegral extension, computed in the reduced
/// pair R/C ⊆ S/C where C is the conductor. All subspaces below live in the
/// reduced algebra.
struct SubintegralLocalData {
  Extension reduced;
  /// The conductor of the original pair, in original coordinates.
  Subspace conductor;
  Subspace m;
  std::size_t n = 1;
  /// R_i = R + SM^i and M_i = M + SM^i for i = 0..n.
  std::vector<Subspace> r;
  std::vector<Subspace> mi;
  /// R + SM^2, also when n < 2.
  Subspace r2;
  /// L_R(M_i / M_{i+1}) for i = 1..n-1.
  std::vector<std::size_t> layer_lengths;
  std::size_t sm_over_m_length = 0;

  /// M is the conductor, so the reduced base is a field.
  bool field_case() const noexcept { return m.dim() == 0; }
};

/// Throws AlgebraError unless R is local, the extension is proper and subintegral.
SubintegralLocalData filtration_data(const Extension& ext);

struct FiltrationConditions {
  /// L_R(SM/M) = n - 1
  bool length_condition = true;
  /// every layer L_R(M_i/M_{i+1}) is 1
  bool layer_condition = true;
  /// [R, R_1] is chained
  bool chained_condition = true;

  bool agree() const noexcept {
    return length_condition == layer_condition && layer_condition == chained_condition;
  }
};

FiltrationConditions filtration_conditions(const SubintegralLocalData& data, const LatticeOptions& options = {});

struct FipResult {
  bool fip = true;
  /// Node index of the seminormalization in the analysed lattice.
  std::size_t seminormalization = 0;
  /// Failing maximal ideals of R ⊆ ⁺R with incomparable pairs, in S-coordinates.
  std::vector<ArithmeticFailure> failures;
};

/// R(X) ⊆ S(X) has FIP exactly when R ⊆ ⁺R is arithmetic.
FipResult nagata_has_fip(const LatticeAnalysis& an);

struct LocalCriterion {
  Subspace maximal_ideal;
  std::size_t n = 1;
  std::size_t sm_over_m_length = 0;
  bool r2_chained = true;
  bool holds = true;
};

struct FipCrosscheck {
  /// The extension is arithmetic.
  bool verdict_a = true;
  /// For every M in the support: [R_2, S] chained and L_R(SM/M) = n - 1.
  bool verdict_b = true;
  std::vector<LocalCriterion> locals;
};

/// Throws AlgebraError when the extension is not subintegral.
FipCrosscheck nagata_fip_subintegral_crosscheck(const Extension& ext, const LatticeOptions& options = {});

struct Criterion {
  std::string name;
  bool verdict = false;
};

struct NagataReport {
  bool fip = true;
  std::optional<std::size_t> cardinality;
  std::size_t length = 0;
  unsigned lambda = 0;
  std::vector<ArithmeticFailure> witnesses;
  std::vector<Criterion> criteria;
  bool criteria_agree = true;
  /// (quantity, transfer principle licensing it)
  std::vector<std::pair<std::string, std::string>> transfers;
  /// The values hold for R(X_1..X_n) ⊆ S(X_1..X_n) for every n.
  bool any_number_of_variables = true;
};

NagataReport nagata_report(const LatticeAnalysis& an);

}  // namespace ringlat
