#include "ringlat/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "ringlat/errors.hpp"
#include "parallel.hpp"

namespace ringlat {

ExtensionLattice::ExtensionLattice(std::vector<Subspace> nodes,
                                   std::vector<std::pair<std::size_t, std::size_t>> covers)
    : nodes_(std::move(nodes)), covers_(std::move(covers)) {
  std::sort(covers_.begin(), covers_.end());
  up_.resize(nodes_.size());
  down_.resize(nodes_.size());
  for (const auto& [lo, hi] : covers_) {
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
}

std::optional<std::size_t> ExtensionLattice::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExtensionLattice::cover_index(std::size_t lower, std::size_t upper) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(lower, upper));
  if (it == covers_.end() || *it != std::make_pair(lower, upper)) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

namespace {

/// Calls f on one representative of every line in the quotient S/T: vectors
/// supported on T's free columns whose first nonzero entry is 1.
template <typename F>
void for_each_projective_rep(const Subspace& t, unsigned q, F&& f) {
  const auto cols = t.free_columns();
  const std::size_t k = cols.size();
  Vec v(t.ambient_dim(), 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[cols[lead]] = 1;
    const std::size_t tail = k - lead - 1;
    std::vector<unsigned> digits(tail, 0);
    while (true) {
      for (std::size_t j = 0; j < tail; ++j) v[cols[lead + 1 + j]] = static_cast<Scalar>(digits[j]);
      f(v);
      std::size_t pos = 0;
      while (pos < tail && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == tail) break;
    }
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::vector<Subspace> children_of(const Algebra& a, const Subspace& t) {
  std::vector<Subspace> out;
  std::unordered_set<Subspace, SubspaceHash> seen;
  for_each_projective_rep(t, a.field().order(), [&](const Vec& s) {
    const Vec gens[1] = {s};
    Subspace child = generated_subalgebra(a, t, gens).space();
    if (seen.insert(child).second) out.push_back(std::move(child));
  });
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionLattice finish(std::vector<Subspace> found, const std::vector<std::pair<std::size_t, std::size_t>>& raw) {
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return found[x] < found[y]; });
  std::vector<std::size_t> rank(found.size());
  std::vector<Subspace> nodes;
  nodes.reserve(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    nodes.push_back(std::move(found[order[i]]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  covers.reserve(raw.size());
  for (const auto& [lo, hi] : raw) covers.emplace_back(rank[lo], rank[hi]);
  return ExtensionLattice(std::move(nodes), std::move(covers));
}

}  // namespace

ExtensionLattice enumerate_interval(const Extension& ext, const LatticeOptions& options) {
  const Algebra& a = ext.algebra;
  std::vector<Subspace> found{ext.r()};
  std::unordered_map<Subspace, std::size_t, SubspaceHash> ids{{ext.r(), 0}};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    std::vector<std::vector<Subspace>> kids(frontier.size());
    detail::parallel_for(frontier.size(), options.threads,
                         [&](std::size_t i) { kids[i] = children_of(a, found[frontier[i]]); });

    std::vector<std::size_t> next_frontier;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const auto& children = kids[i];
      std::vector<std::size_t> child_ids;
      child_ids.reserve(children.size());
      for (const auto& c : children) {
        auto [it, inserted] = ids.emplace(c, found.size());
        if (inserted) {
          if (found.size() >= options.node_budget) {
            throw BudgetExceeded("interval enumeration exceeded the node budget of " +
                                 std::to_string(options.node_budget));
          }
          found.push_back(c);
          next_frontier.push_back(it->second);
        }
        child_ids.push_back(it->second);
      }
      // Upper covers of T are the minimal elements among the T[s].
      for (std::size_t x = 0; x < children.size(); ++x) {
        bool minimal = true;
        for (std::size_t y = 0; y < children.size() && minimal; ++y) {
          if (x != y && children[y].dim() < children[x].dim() && children[x].contains(children[y])) minimal = false;
        }
        if (minimal) covers.emplace_back(frontier[i], child_ids[x]);
      }
    }
    frontier = std::move(next_frontier);
  }
  return finish(std::move(found), covers);
}

std::uint64_t subspace_count(unsigned q, std::size_t k) {
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t free_entries = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (!(mask >> p & 1)) continue;
      for (std::size_t c = p + 1; c < k; ++c) {
        if (!(mask >> c & 1)) ++free_entries;
      }
    }
    total = saturating_add(total, saturating_pow(q, free_entries));
  }
  return total;
}

std::vector<Subspace> brute_force_interval(const Extension& ext, std::uint64_t budget) {
  const Algebra& a = ext.algebra;
  const unsigned q = a.field().order();
  const auto cols = ext.r().free_columns();
  const std::size_t k = cols.size();
  const std::uint64_t count = subspace_count(q, k);
  if (count > budget) {
    throw BudgetExceeded("brute-force scan needs " + std::to_string(count) + " subspaces, budget is " +
                         std::to_string(budget));
  }
  std::vector<Subspace> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t p = 0; p < k; ++p) {
      if (mask >> p & 1) pivots.push_back(p);
    }
    // Free slots of the echelon matrix: (row, column) right of the row's
    // pivot and outside the pivot set.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < k; ++c) {
        if (!(mask >> c & 1)) slots.emplace_back(r, c);
      }
    }
    std::vector<unsigned> digits(slots.size(), 0);
    while (true) {
      std::vector<Vec> rows(pivots.size(), Vec(a.dim(), 0));
      for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][cols[pivots[r]]] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        rows[slots[s].first][cols[slots[s].second]] = static_cast<Scalar>(digits[s]);
      }
      rows.insert(rows.end(), ext.r().basis().begin(), ext.r().basis().end());
      Subspace candidate = a.span(rows);
      if (a.is_closed(candidate)) out.push_back(std::move(candidate));
      std::size_t pos = 0;
      while (pos < slots.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == slots.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionLattice sub_lattice(const ExtensionLattice& lat, std::size_t lo, std::size_t hi) {
  if (!lat.leq(lo, hi)) throw AlgebraError("sub-lattice endpoints are not nested");
  std::vector<std::size_t> keep;
  std::vector<std::size_t> remap(lat.size(), lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.leq(lo, i) && lat.leq(i, hi)) {
      remap[i] = keep.size();
      keep.push_back(i);
    }
  }
  std::vector<Subspace> nodes;
  for (auto i : keep) nodes.push_back(lat.node(i));
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& [x, y] : lat.covers()) {
    if (remap[x] < lat.size() && remap[y] < lat.size()) covers.emplace_back(remap[x], remap[y]);
  }
  return ExtensionLattice(std::move(nodes), std::move(covers));
}

LengthResult interval_length(const ExtensionLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<std::size_t> best(n, 0);
  std::vector<std::size_t> pred(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    for (auto d : lat.lower_covers(i)) {
      if (pred[i] == n || best[d] + 1 > best[i]) {
        best[i] = best[d] + 1;
        pred[i] = d;
      }
    }
  }
  LengthResult r;
  r.length = best[lat.top()];
  for (std::size_t i = lat.top();; i = pred[i]) {
    r.chain.push_back(i);
    if (i == lat.bottom()) break;
  }
  std::reverse(r.chain.begin(), r.chain.end());
  return r;
}

ChainedResult is_chained(const ExtensionLattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& up = lat.upper_covers(i);
    if (up.size() >= 2) return ChainedResult{false, std::make_pair(up[0], up[1])};
  }
  return {};
}

ArithmeticResult is_arithmetic(const Extension& ext, const LatticeOptions& options) {
  ArithmeticResult result;
  for (const auto& m : support(ext)) {
    const LocalizedExtension loc = localize_extension(ext, m);
    const ExtensionLattice lat = enumerate_interval(loc.ext, options);
    const ChainedResult ch = is_chained(lat);
    if (!ch.chained) {
      result.arithmetic = false;
      result.failures.push_back(ArithmeticFailure{m, loc.lift(lat.node(ch.witness->first)),
                                                  loc.lift(lat.node(ch.witness->second))});
    }
  }
  return result;
}

bool is_pinched_at(const ExtensionLattice& lat, std::size_t t) {
  if (t >= lat.size()) throw AlgebraError("pinch point is not a node of the lattice");
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.leq(i, t) && !lat.leq(t, i)) return false;
  }
  return true;
}

PairCheck is_delta_extension(const Extension& ext, const ExtensionLattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (lat.leq(i, j)) continue;
      // The sum is inside the compositum, so they agree exactly when the sum
      // is already closed.
      if (!ext.algebra.is_closed(lat.node(i).sum(lat.node(j)))) return PairCheck{false, std::make_pair(i, j)};
    }
  }
  return {};
}

LatticeOps lattice_ops(const Algebra& a, const ExtensionLattice& lat) {
  LatticeOps ops;
  ops.n = lat.size();
  ops.meet.assign(ops.n * ops.n, 0);
  ops.join.assign(ops.n * ops.n, 0);
  for (std::size_t i = 0; i < ops.n; ++i) {
    for (std::size_t j = i; j < ops.n; ++j) {
      std::size_t m, jn;
      if (lat.leq(i, j)) {
        m = i;
        jn = j;
      } else {
        auto mi = lat.index_of(lat.node(i).intersect(lat.node(j)));
        auto ji = lat.index_of(generated_subalgebra(a, lat.node(i).sum(lat.node(j)), {}).space());
        if (!mi || !ji) throw InvariantViolation("interval-closure", "meet or join left the enumerated interval");
        m = *mi;
        jn = *ji;
      }
      ops.meet[i * ops.n + j] = ops.meet[j * ops.n + i] = m;
      ops.join[i * ops.n + j] = ops.join[j * ops.n + i] = jn;
    }
  }
  return ops;
}

DistributivityResult check_distributivity(const Algebra& a, const ExtensionLattice& lat,
                                          std::uint64_t triple_budget) {
  const std::uint64_t n = lat.size();
  if (n * n * n > triple_budget) {
    throw BudgetExceeded("distributivity scan over " + std::to_string(n) + " nodes exceeds the triple budget");
  }
  const LatticeOps ops = lattice_ops(a, lat);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = c + 1; d < n; ++d) {
        const bool first = ops.meet_of(b, ops.join_of(c, d)) == ops.join_of(ops.meet_of(b, c), ops.meet_of(b, d));
        const bool second = ops.join_of(b, ops.meet_of(c, d)) == ops.meet_of(ops.join_of(b, c), ops.join_of(b, d));
        if (!first || !second) return DistributivityResult{false, std::array<std::size_t, 3>{b, c, d}};
      }
    }
  }
  return {};
}

ChainList maximal_chains(const ExtensionLattice& lat, std::size_t budget) {
  ChainList out;
  std::vector<std::size_t> path{lat.bottom()};
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    if (v == lat.top()) {
      if (out.chains.size() >= budget) {
        out.truncated = true;
        return false;
      }
      out.chains.push_back(path);
      return true;
    }
    for (auto w : lat.upper_covers(v)) {
      path.push_back(w);
      const bool go_on = self(self, w);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, lat.bottom());
  return out;
}

QuotientCorrespondence quotient_correspondence(const Extension& ext, const Subspace& j,
                                               const LatticeOptions& options) {
  const Algebra& a = ext.algebra;
  const QuotientExtension qe = quotient_extension(ext, j);
  const Subspace lifted = ext.r().sum(j);
  const Extension upper_ext{a, Subalgebra::trusted(lifted)};
  const ExtensionLattice upper = enumerate_interval(upper_ext, options);
  const ExtensionLattice lower = enumerate_interval(qe.ext, options);
  QuotientCorrespondence qc;
  qc.upper_size = upper.size();
  qc.quotient_size = lower.size();
  std::vector<std::size_t> image;
  std::vector<bool> hit(lower.size(), false);
  qc.bijective = true;
  for (const auto& t : upper.nodes()) {
    const auto idx = lower.index_of(qe.quotient.project(t));
    if (!idx || hit[*idx]) {
      qc.bijective = false;
      image.push_back(lower.size());
      continue;
    }
    hit[*idx] = true;
    image.push_back(*idx);
  }
  qc.bijective = qc.bijective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  qc.preserves_order = qc.reflects_order = qc.bijective;
  if (!qc.bijective) return qc;
  for (std::size_t x = 0; x < upper.size(); ++x) {
    for (std::size_t y = 0; y < upper.size(); ++y) {
      const bool above = upper.leq(x, y);
      const bool below = lower.leq(image[x], image[y]);
      if (above && !below) qc.preserves_order = false;
      if (below && !above) qc.reflects_order = false;
    }
  }
  return qc;
}

std::string basis_label(const Subspace& s) {
  const bool wide = s.field() && s.field()->order() > 10;
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) os << ',';
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
      if (wide && c) os << '.';
      os << static_cast<unsigned>(s.basis()[r][c]);
    }
  }
  os << ']';
  return os.str();
}

std::string to_dot(const ExtensionLattice& lat, const std::vector<std::string>& edge_labels) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"" << i << ": dim " << lat.node(i).dim() << "\\n" << basis_label(lat.node(i))
       << "\"];\n";
  }
  for (std::size_t e = 0; e < lat.covers().size(); ++e) {
    const auto& [lo, hi] = lat.covers()[e];
    os << "  n" << lo << " -> n" << hi;
    if (e < edge_labels.size()) os << " [label=\"" << edge_labels[e] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ringlat
