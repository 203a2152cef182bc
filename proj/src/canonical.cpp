#include "ringlat/canonical.hpp"

#include <algorithm>
#include <limits>

#include "parallel.hpp"
#include "ringlat/errors.hpp"

namespace ringlat {

std::string kind_name(MinimalKindTag k) {
  switch (k) {
    case MinimalKindTag::Inert: return "inert";
    case MinimalKindTag::Decomposed: return "decomposed";
    case MinimalKindTag::Ramified: return "ramified";
  }
  return "?";
}

char kind_letter(MinimalKindTag k) {
  switch (k) {
    case MinimalKindTag::Inert: return 'I';
    case MinimalKindTag::Decomposed: return 'D';
    case MinimalKindTag::Ramified: return 'R';
  }
  return '?';
}

bool is_minimal_pair(const Algebra& a, const Subspace& t, const Subspace& u) {
  if (!u.contains(t) || u.dim() == t.dim()) return false;
  std::vector<Vec> complement;
  for (const auto& v : u.basis()) {
    Vec r = t.reduce(v);
    if (!vec::is_zero(r)) complement.push_back(std::move(r));
  }
  const Subspace c = a.span(complement);
  const std::size_t k = c.dim();
  const unsigned q = a.field().order();
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<unsigned> digits(k - lead - 1, 0);
    while (true) {
      Vec s = c.basis()[lead];
      for (std::size_t j = 0; j < digits.size(); ++j) {
        vec::axpy(a.field(), s, static_cast<Scalar>(digits[j]), c.basis()[lead + 1 + j]);
      }
      const Vec gens[1] = {s};
      if (!(generated_subalgebra(a, t, gens).space() == u)) return false;
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return true;
}

MinimalKind classify_minimal(const Algebra& a, const Subspace& t, const Subspace& u, bool verify_adjacent) {
  if (verify_adjacent && !is_minimal_pair(a, t, u)) {
    throw AlgebraError("classification requested for a pair that is not a minimal extension");
  }
  const Subspace nil = nilradical(a);
  return classify_minimal(a, t, u, local_structure(a, t, nil), local_structure(a, u, nil));
}

MinimalKind classify_minimal(const Algebra& a, const Subspace& t, const Subspace& u, const LocalStructure& lt,
                             const LocalStructure& lu) {
  MinimalKind mk{MinimalKindTag::Inert, conductor(a, t, u), {}, 0, {}};
  const Subspace& c = mk.conductor;
  const std::size_t idx = lt.index_of(c);
  if (idx == lt.size()) throw InvariantViolation("crucial-ideal", "conductor of a minimal pair is not maximal in the lower ring");
  mk.base_degree = lt.residue_degrees[idx];
  for (std::size_t j = 0; j < lu.size(); ++j) {
    if (lu.maximal_ideals[j].contains(c)) {
      mk.ideals_above.push_back(lu.maximal_ideals[j]);
      mk.upper_degrees.push_back(lu.residue_degrees[j]);
    }
  }
  const std::size_t dc = c.dim(), dt = t.dim(), du = u.dim();
  const std::size_t f = mk.base_degree;
  const auto& above = mk.ideals_above;

  const bool inert = above.size() == 1 && above[0] == c && (du - dc) % (dt - dc) == 0 &&
                     is_prime((du - dc) / (dt - dc));
  const bool decomposed = above.size() == 2 && above[0].intersect(above[1]) == c && mk.upper_degrees[0] == f &&
                          mk.upper_degrees[1] == f && du - dc == 2 * f;
  const bool ramified = above.size() == 1 && !(above[0] == c) && c.contains(a.product(above[0], above[0])) &&
                        du - dc == 2 * (dt - dc) && du - above[0].dim() == f;
  const int hits = int(inert) + int(decomposed) + int(ramified);
  if (hits != 1) {
    throw InvariantViolation("minimal-trichotomy", "a minimal pair matched " + std::to_string(hits) +
                                                       " of the inert/decomposed/ramified cases");
  }
  mk.kind = inert ? MinimalKindTag::Inert : decomposed ? MinimalKindTag::Decomposed : MinimalKindTag::Ramified;
  return mk;
}

Subspace crucial_ideal(const Algebra& a, const Subspace& t, const Subspace& u) {
  const LocalStructure lt = local_structure(a, t);
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    const Vec& e = lt.idempotents[i];
    std::vector<Vec> et, eu;
    for (const auto& v : t.basis()) et.push_back(a.mul(e, v));
    for (const auto& v : u.basis()) eu.push_back(a.mul(e, v));
    if (a.span(et).dim() != a.span(eu).dim()) hits.push_back(i);
  }
  if (hits.size() != 1) {
    throw InvariantViolation("crucial-ideal", "a minimal pair is locally proper at " + std::to_string(hits.size()) +
                                                  " maximal ideals");
  }
  const Subspace& m = lt.maximal_ideals[hits[0]];
  if (!(m == conductor(a, t, u))) throw InvariantViolation("crucial-ideal", "crucial ideal differs from the conductor");
  return m;
}

std::vector<ResidualExtension> residual_extensions(const Algebra&, const LocalStructure& lr,
                                                   const LocalStructure& lt) {
  std::vector<ResidualExtension> out;
  for (std::size_t j = 0; j < lt.size(); ++j) {
    const Subspace& q = lt.maximal_ideals[j];
    std::size_t below = lr.size();
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (q.contains(lr.maximal_ideals[i])) {
        below = i;
        break;
      }
    }
    if (below == lr.size()) throw InvariantViolation("lying-over", "a maximal ideal contracts to no maximal ideal");
    const std::size_t ft = lt.residue_degrees[j], fr = lr.residue_degrees[below];
    if (ft % fr != 0) throw InvariantViolation("lying-over", "residue degree does not divide");
    const std::size_t d = ft / fr;
    out.push_back(ResidualExtension{q, lr.maximal_ideals[below], d, prime_omega(d)});
  }
  return out;
}

std::vector<ResidualExtension> residual_extensions(const Algebra& a, const Subspace& r, const Subspace& t) {
  const Subspace nil = nilradical(a);
  return residual_extensions(a, local_structure(a, r, nil), local_structure(a, t, nil));
}

namespace {

bool all_degree_one(const std::vector<ResidualExtension>& res) {
  return std::all_of(res.begin(), res.end(), [](const ResidualExtension& x) { return x.degree == 1; });
}

bool spectrally_bijective(const std::vector<ResidualExtension>& res, std::size_t base_max_count) {
  std::vector<Subspace> seen;
  for (const auto& x : res) {
    if (std::find(seen.begin(), seen.end(), x.p) != seen.end()) return false;
    seen.push_back(x.p);
  }
  return seen.size() == base_max_count;
}

unsigned max_length(const std::vector<ResidualExtension>& res) {
  unsigned m = 0;
  for (const auto& x : res) m = std::max(m, x.length);
  return m;
}

}  // namespace

bool is_infra_integral(const Algebra& a, const Subspace& r, const Subspace& t) {
  return all_degree_one(residual_extensions(a, r, t));
}

bool is_subintegral(const Algebra& a, const Subspace& r, const Subspace& t) {
  const Subspace nil = nilradical(a);
  const LocalStructure lr = local_structure(a, r, nil);
  const auto res = residual_extensions(a, lr, local_structure(a, t, nil));
  return all_degree_one(res) && spectrally_bijective(res, lr.size());
}

bool is_infra_integral(const Extension& ext) { return is_infra_integral(ext.algebra, ext.r(), ext.algebra.full()); }
bool is_subintegral(const Extension& ext) { return is_subintegral(ext.algebra, ext.r(), ext.algebra.full()); }

unsigned lambda_invariant(const Algebra& a, const Subspace& r, const Subspace& t) {
  return max_length(residual_extensions(a, r, t));
}

unsigned lambda_invariant(const Extension& ext) { return lambda_invariant(ext.algebra, ext.r(), ext.algebra.full()); }

LatticeAnalysis::LatticeAnalysis(Extension ext, const LatticeOptions& options)
    : ext_(std::move(ext)), lattice_(enumerate_interval(ext_, options)), options_(options) {
  build();
}

LatticeAnalysis::LatticeAnalysis(Extension ext, ExtensionLattice lattice, const LatticeOptions& options)
    : ext_(std::move(ext)), lattice_(std::move(lattice)), options_(options) {
  build();
}

void LatticeAnalysis::build() {
  const Algebra& a = ext_.algebra;
  nil_ = nilradical(a);
  structures_.resize(lattice_.size());
  detail::parallel_for(lattice_.size(), options_.threads,
                       [&](std::size_t i) { structures_[i] = local_structure(a, lattice_.node(i), nil_); });
  const auto& covers = lattice_.covers();
  std::vector<std::optional<MinimalKind>> kinds(covers.size());
  detail::parallel_for(covers.size(), options_.threads, [&](std::size_t e) {
    const auto [lo, hi] = covers[e];
    kinds[e] = classify_minimal(a, lattice_.node(lo), lattice_.node(hi), structures_[lo], structures_[hi]);
  });
  kinds_.reserve(kinds.size());
  for (auto& k : kinds) kinds_.push_back(std::move(*k));
}

const MinimalKind& LatticeAnalysis::edge_kind(std::size_t lower, std::size_t upper) const {
  const auto idx = lattice_.cover_index(lower, upper);
  if (!idx) throw AlgebraError("node pair is not a cover of the lattice");
  return kinds_[*idx];
}

std::vector<ResidualExtension> LatticeAnalysis::residuals(std::size_t lower, std::size_t upper) const {
  return residual_extensions(ext_.algebra, structures_[lower], structures_[upper]);
}

bool LatticeAnalysis::infra_integral(std::size_t lower, std::size_t upper) const {
  return all_degree_one(residuals(lower, upper));
}

bool LatticeAnalysis::subintegral(std::size_t lower, std::size_t upper) const {
  const auto res = residuals(lower, upper);
  return all_degree_one(res) && spectrally_bijective(res, structures_[lower].size());
}

Census edge_census(const LatticeAnalysis& an) {
  Census c;
  for (const auto& k : an.edge_kinds()) {
    switch (k.kind) {
      case MinimalKindTag::Inert: ++c.inert; break;
      case MinimalKindTag::Decomposed: ++c.decomposed; break;
      case MinimalKindTag::Ramified: ++c.ramified; break;
    }
  }
  return c;
}

std::optional<TScan> t_closed_scan(const Algebra& a, const Subspace& r, const Subspace& s, std::uint64_t budget) {
  const unsigned q = a.field().order();
  const std::size_t ds = s.dim(), dr = r.dim();
  auto power = [&](std::size_t k) {
    long double v = 1;
    for (std::size_t i = 0; i < k; ++i) v *= q;
    return v;
  };
  const long double pairs = (power(ds) - power(dr)) * power(dr);
  if (pairs > static_cast<long double>(budget)) return std::nullopt;

  const FiniteField& F = a.field();
  TScan scan;
  std::vector<unsigned> bdig(ds, 0);
  std::vector<Vec> brt(dr), b2rt(dr);
  while (true) {
    Vec b(a.dim(), 0);
    for (std::size_t i = 0; i < ds; ++i) vec::axpy(F, b, static_cast<Scalar>(bdig[i]), s.basis()[i]);
    if (!r.contains(b)) {
      const Vec b2 = a.mul(b, b);
      const Vec b2n = r.reduce(b2);
      const Vec b3n = r.reduce(a.mul(b2, b));
      for (std::size_t j = 0; j < dr; ++j) {
        brt[j] = r.reduce(a.mul(b, r.basis()[j]));
        b2rt[j] = r.reduce(a.mul(b2, r.basis()[j]));
      }
      std::vector<unsigned> rdig(dr, 0);
      while (true) {
        ++scan.pairs;
        Vec x = b2n, y = b3n;
        for (std::size_t j = 0; j < dr; ++j) {
          if (!rdig[j]) continue;
          const Scalar c = F.neg(static_cast<Scalar>(rdig[j]));
          vec::axpy(F, x, c, brt[j]);
          vec::axpy(F, y, c, b2rt[j]);
        }
        if (vec::is_zero(x) && vec::is_zero(y)) {
          Vec rv(a.dim(), 0);
          for (std::size_t j = 0; j < dr; ++j) vec::axpy(F, rv, static_cast<Scalar>(rdig[j]), r.basis()[j]);
          scan.t_closed = false;
          scan.witness = std::make_pair(b, rv);
          return scan;
        }
        std::size_t pos = 0;
        while (pos < dr && ++rdig[pos] == q) rdig[pos++] = 0;
        if (pos == dr) break;
      }
    }
    std::size_t pos = 0;
    while (pos < ds && ++bdig[pos] == q) bdig[pos++] = 0;
    if (pos == ds) break;
  }
  return scan;
}

bool t_closed_by_chain(const LatticeAnalysis& an) {
  const auto chain = interval_length(an.lattice()).chain;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (an.edge_kind(chain[i], chain[i + 1]).kind != MinimalKindTag::Inert) return false;
  }
  return true;
}

TClosedResult is_t_closed(const LatticeAnalysis& an, std::uint64_t scan_budget) {
  TClosedResult res;
  res.by_chain = t_closed_by_chain(an);
  res.scan = t_closed_scan(an.algebra(), an.extension().r(), an.algebra().full(), scan_budget);
  if (res.scan) {
    if (res.scan->t_closed != res.by_chain) {
      throw InvariantViolation("t-closed-routes", "definitional scan and inert-chain criterion disagree");
    }
    res.t_closed = res.scan->t_closed;
  } else {
    res.by_scan = false;
    res.t_closed = res.by_chain;
  }
  return res;
}

namespace {

/// The greatest element of a down-closed-by-index candidate set, verified to
/// contain every other candidate.
std::size_t greatest_of(const ExtensionLattice& lat, const std::vector<std::size_t>& cands, const char* tag) {
  if (cands.empty()) throw InvariantViolation(tag, "no candidate node");
  const std::size_t best = cands.back();
  for (auto c : cands) {
    if (!lat.leq(c, best)) throw InvariantViolation(tag, "candidate nodes have no greatest element");
  }
  return best;
}

std::size_t least_of(const ExtensionLattice& lat, const std::vector<std::size_t>& cands, const char* tag) {
  if (cands.empty()) throw InvariantViolation(tag, "no candidate node");
  const std::size_t best = cands.front();
  for (auto c : cands) {
    if (!lat.leq(best, c)) throw InvariantViolation(tag, "candidate nodes have no least element");
  }
  return best;
}

/// good[B]: every cover inside [B,S] is inert.
std::vector<bool> inert_above(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  std::vector<bool> good(lat.size(), true);
  for (std::size_t i = lat.size(); i-- > 0;) {
    for (auto w : lat.upper_covers(i)) {
      if (!good[w] || an.edge_kind(i, w).kind != MinimalKindTag::Inert) {
        good[i] = false;
        break;
      }
    }
  }
  return good;
}

}  // namespace

std::size_t seminormalization(const LatticeAnalysis& an) {
  std::vector<std::size_t> cands;
  for (std::size_t i = 0; i < an.lattice().size(); ++i) {
    if (an.subintegral(an.lattice().bottom(), i)) cands.push_back(i);
  }
  return greatest_of(an.lattice(), cands, "seminormalization");
}

TClosure t_closure(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  TClosure tc;
  std::vector<std::size_t> infra;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (an.infra_integral(lat.bottom(), i)) infra.push_back(i);
  }
  tc.via_infra_integral = greatest_of(lat, infra, "t-closure");

  const auto good = inert_above(an);
  std::vector<std::size_t> closed;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (good[i]) closed.push_back(i);
  }
  tc.via_t_closed_above = least_of(lat, closed, "t-closure");

  std::size_t x = lat.bottom();
  for (bool moved = true; moved;) {
    moved = false;
    for (auto w : lat.upper_covers(x)) {
      if (an.edge_kind(x, w).kind != MinimalKindTag::Inert) {
        x = w;
        moved = true;
        break;
      }
    }
  }
  tc.via_greedy_climb = x;

  if (tc.via_infra_integral != tc.via_t_closed_above || tc.via_infra_integral != tc.via_greedy_climb) {
    throw InvariantViolation("t-closure", "greatest infra-integral node, least t-closed node and the non-inert "
                                          "climb disagree");
  }
  tc.node = tc.via_infra_integral;
  return tc;
}

CanonicalDecomposition canonical_decomposition(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  CanonicalDecomposition cd;
  cd.seminormalization = seminormalization(an);
  cd.t_closure = t_closure(an).node;
  cd.nested = lat.leq(lat.bottom(), cd.seminormalization) && lat.leq(cd.seminormalization, cd.t_closure) &&
              lat.leq(cd.t_closure, lat.top());
  cd.lower_subintegral = an.subintegral(lat.bottom(), cd.seminormalization);
  cd.middle_infra_integral = an.infra_integral(cd.seminormalization, cd.t_closure);
  const auto scan = t_closed_scan(an.algebra(), lat.node(cd.t_closure), an.algebra().full(), std::uint64_t{1} << 20);
  cd.upper_t_closed = scan ? scan->t_closed : inert_above(an)[cd.t_closure];
  return cd;
}

LambdaReport lambda_report(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  LambdaReport rep;
  rep.lambda = max_length(an.residuals(lat.bottom(), lat.top()));
  rep.lambda_over_t_closure = max_length(an.residuals(t_closure(an).node, lat.top()));
  rep.t_closed = is_t_closed(an).t_closed;
  rep.length = interval_length(lat).length;
  if (rep.t_closed) {
    const auto supp = support(an.extension());
    rep.support_size = supp.size();
    for (const auto& m : supp) {
      const LocalizedExtension loc = localize_extension(an.extension(), m);
      rep.max_local_length =
          std::max(rep.max_local_length, interval_length(enumerate_interval(loc.ext, an.options())).length);
    }
  }
  return rep;
}

ChainVerification verify_chain_classification(const LatticeAnalysis& an, const std::vector<std::size_t>& chain) {
  const auto& lat = an.lattice();
  ChainVerification v;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) v.kinds.push_back(an.edge_kind(chain[i], chain[i + 1]).kind);
  v.all_inert = std::all_of(v.kinds.begin(), v.kinds.end(), [](MinimalKindTag k) { return k == MinimalKindTag::Inert; });
  v.all_non_inert =
      std::none_of(v.kinds.begin(), v.kinds.end(), [](MinimalKindTag k) { return k == MinimalKindTag::Inert; });
  v.infra_integral = an.infra_integral(lat.bottom(), lat.top());
  v.t_closed = is_t_closed(an).t_closed;
  const LocalStructure& lr = an.structure(lat.bottom());
  if (lr.size() == 1 && v.all_inert && !an.extension().trivial()) {
    const Subspace& m = lr.maximal_ideals[0];
    const LocalStructure& ls = an.structure(lat.top());
    v.quasi_local_conductor = conductor(an.algebra(), an.extension().r(), an.algebra().full()) == m &&
                              ls.size() == 1 && ls.maximal_ideals[0] == m;
  }
  return v;
}

namespace {

std::size_t fresh_length(const LatticeAnalysis& an, std::size_t lo, std::size_t hi) {
  const auto& lat = an.lattice();
  const SubExtension sub = sub_extension(an.extension(), lat.node(lo), lat.node(hi));
  return interval_length(enumerate_interval(sub.ext, an.options())).length;
}

}  // namespace

AdditivityReport length_additivity_check(const LatticeAnalysis& an) {
  const auto& lat = an.lattice();
  AdditivityReport rep;
  rep.length = interval_length(lat).length;
  const std::size_t t = t_closure(an).node;
  rep.lower = fresh_length(an, lat.bottom(), t);
  rep.upper = fresh_length(an, t, lat.top());
  rep.holds = rep.length == rep.lower + rep.upper;

  const std::size_t s = seminormalization(an);
  rep.seminormal_applicable = true;
  for (std::size_t e = 0; e < lat.covers().size(); ++e) {
    const auto [lo, hi] = lat.covers()[e];
    if (lat.leq(s, lo) && an.edge_kinds()[e].kind == MinimalKindTag::Ramified) {
      rep.seminormal_applicable = false;
      break;
    }
  }
  if (rep.seminormal_applicable) {
    rep.seminormal_lower = fresh_length(an, lat.bottom(), s);
    rep.seminormal_upper = fresh_length(an, s, lat.top());
    rep.seminormal_holds = rep.length == rep.seminormal_lower + rep.seminormal_upper;
  }
  return rep;
}

}  // namespace ringlat
