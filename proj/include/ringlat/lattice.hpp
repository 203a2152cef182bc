#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ringlat/extension.hpp"

namespace ringlat {

struct LatticeOptions {
  std::size_t node_budget = 20000;
  /// Worker threads for the frontier expansion; 0 or 1 runs inline.
  unsigned threads = 1;
};

/// The interval [R,S] with its covering relation. Nodes are sorted by
/// dimension and then by echelon basis, so index order is a linear extension
/// of inclusion and node 0 is R.
class ExtensionLattice {
 public:
  ExtensionLattice(std::vector<Subspace> nodes, std::vector<std::pair<std::size_t, std::size_t>> covers);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Subspace>& nodes() const noexcept { return nodes_; }
  const Subspace& node(std::size_t i) const { return nodes_[i]; }
  /// Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return nodes_.size() - 1; }

  std::optional<std::size_t> index_of(const Subspace& s) const;
  /// Index of the cover (lower, upper) in covers(), if it is one.
  std::optional<std::size_t> cover_index(std::size_t lower, std::size_t upper) const;
  bool leq(std::size_t i, std::size_t j) const { return nodes_[j].contains(nodes_[i]); }

 private:
  std::vector<Subspace> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
};

/// Breadth-first adjoin-one-element closure from R. Throws BudgetExceeded
/// when more than options.node_budget nodes appear.
ExtensionLattice enumerate_interval(const Extension& ext, const LatticeOptions& options = {});

/// Every subspace between R and S that is closed under multiplication,
/// found by scanning all subspaces of S/R. `budget` caps the number of
/// subspaces scanned. Result sorted like ExtensionLattice nodes.
std::vector<Subspace> brute_force_interval(const Extension& ext, std::uint64_t budget = std::uint64_t{1} << 24);

/// Number of subspaces of F_q^k.
std::uint64_t subspace_count(unsigned q, std::size_t k);

/// The nodes of `lat` between lo and hi (inclusive) as a lattice of its own.
ExtensionLattice sub_lattice(const ExtensionLattice& lat, std::size_t lo, std::size_t hi);

struct LengthResult {
  std::size_t length = 0;
  /// A maximal chain of that length, as node indices bottom to top.
  std::vector<std::size_t> chain;
};

LengthResult interval_length(const ExtensionLattice& lat);

struct ChainedResult {
  bool chained = true;
  /// Two incomparable nodes when not chained.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ChainedResult is_chained(const ExtensionLattice& lat);

struct ArithmeticFailure {
  Subspace maximal_ideal;
  /// Incomparable pair lifted to [R,S].
  Subspace first;
  Subspace second;
};

struct ArithmeticResult {
  bool arithmetic = true;
  /// One entry per failing maximal ideal of the support.
  std::vector<ArithmeticFailure> failures;
};

ArithmeticResult is_arithmetic(const Extension& ext, const LatticeOptions& options = {});

/// Throws AlgebraError when t is not a node index.
bool is_pinched_at(const ExtensionLattice& lat, std::size_t t);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// T1 + T2 = T1T2 for every pair of nodes.
PairCheck is_delta_extension(const Extension& ext, const ExtensionLattice& lat);

/// Meet (intersection) and join (compositum) tables over node indices.
struct LatticeOps {
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
  std::size_t n = 0;

  std::size_t meet_of(std::size_t i, std::size_t j) const { return meet[i * n + j]; }
  std::size_t join_of(std::size_t i, std::size_t j) const { return join[i * n + j]; }
};

LatticeOps lattice_ops(const Algebra& a, const ExtensionLattice& lat);

struct DistributivityResult {
  bool distributive = true;
  /// (B, C, D) violating B∩(CD) = (B∩C)(B∩D) or B(C∩D) = BC∩BD.
  std::optional<std::array<std::size_t, 3>> counterexample;
};

/// Throws BudgetExceeded when size()^3 exceeds `triple_budget`.
DistributivityResult check_distributivity(const Algebra& a, const ExtensionLattice& lat,
                                          std::uint64_t triple_budget = std::uint64_t{1} << 27);

struct ChainList {
  std::vector<std::vector<std::size_t>> chains;
  bool truncated = false;
};

/// Depth-first enumeration of bottom-to-top cover paths, at most `budget`.
ChainList maximal_chains(const ExtensionLattice& lat, std::size_t budget = 10000);

/// Comparison of [R+J, S] with [R/(R∩J), S/J] under the projection.
struct QuotientCorrespondence {
  std::size_t upper_size = 0;
  std::size_t quotient_size = 0;
  /// The projection maps [R+J,S] onto the quotient interval injectively.
  bool bijective = false;
  bool preserves_order = false;
  bool reflects_order = false;

  bool holds() const { return upper_size == quotient_size && bijective && preserves_order && reflects_order; }
};

/// J must be a proper ideal of S.
QuotientCorrespondence quotient_correspondence(const Extension& ext, const Subspace& j,
                                               const LatticeOptions& options = {});

/// Compact basis summary of a node, e.g. "[1000,0010]".
std::string basis_label(const Subspace& s);

/// Hasse diagram in DOT, bottom to top. `edge_labels` runs parallel to covers().
std::string to_dot(const ExtensionLattice& lat, const std::vector<std::string>& edge_labels = {});

}  // namespace ringlat
