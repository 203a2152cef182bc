// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/gen.hpp"
#include "ringlat/nagata.hpp"

using namespace ringlat;
using fx::v;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

std::vector<Extension> campaign(Shape shape, unsigned q, std::size_t max_dim, std::size_t count, std::uint64_t seed) {
  return random_extensions(GenSpec{seed, q, max_dim, shape, count});
}

void append(std::vector<Extension>& into, std::vector<Extension> more) {
  for (auto& e : more) into.push_back(std::move(e));
}

const std::vector<Shape> kShapes{Shape::LocalSubintegral, Shape::ProductOfLocals, Shape::FieldTower, Shape::Mixed};

/// Integral-extension corpus shared by the structural criteria.
const std::vector<Extension>& corpus() {
  static const std::vector<Extension> all = [] {
    std::vector<Extension> out;
    std::uint64_t seed = 5000;
    for (Shape s : kShapes) {
      append(out, campaign(s, 2, 5, 30, seed++));
      append(out, campaign(s, 3, 4, 15, seed++));
    }
    out.push_back(fx::example_y4());
    out.push_back(fx::example_y3());
    out.push_back(fx::tower_f64());
    out.push_back(fx::uniserial());
    out.push_back(fx::fat_layer());
    return out;
  }();
  return all;
}

/// Local subintegral instances, not reducing to a field, dim <= 5, q in {2,3}.
const std::vector<Extension>& subintegral_campaign() {
  static const std::vector<Extension> all = [] {
    std::vector<Extension> out;
    append(out, campaign(Shape::LocalSubintegral, 2, 5, 60, 7001));
    append(out, campaign(Shape::LocalSubintegral, 3, 5, 60, 7002));
    return out;
  }();
  return all;
}

/// Larger local subintegral instances where the filtration conditions can fail.
const std::vector<Extension>& subintegral_supplement() {
  static const std::vector<Extension> all = [] {
    std::vector<Extension> out;
    append(out, campaign(Shape::LocalSubintegral, 2, 7, 150, 7101));
    append(out, campaign(Shape::LocalSubintegral, 2, 6, 100, 7103));
    append(out, campaign(Shape::LocalSubintegral, 3, 7, 60, 7102));
    out.push_back(fx::uniserial());
    out.push_back(fx::fat_layer());
    return out;
  }();
  return all;
}

bool incomparable(const Subspace& a, const Subspace& b) { return !a.contains(b) && !b.contains(a); }

Outcome example_regression() {
  Outcome o;
  const auto t0 = Clock::now();
  const Extension e = fx::example_y4();
  const Algebra& t = e.algebra;
  const LatticeAnalysis an(e);
  o.require(is_subintegral(e), "K ⊆ T subintegral");
  const Subspace ky2 = generated_subalgebra(t, std::vector<Vec>{v({0, 0, 1, 0})}).space();
  const Subspace ky3 = generated_subalgebra(t, std::vector<Vec>{v({0, 0, 0, 1})}).space();
  o.require(an.lattice().index_of(ky2) && an.lattice().index_of(ky3), "K[y^2], K[y^3] are nodes");
  o.require(incomparable(ky2, ky3), "K[y^2], K[y^3] incomparable");
  o.require(!is_arithmetic(e).arithmetic, "not arithmetic");
  o.require(!nagata_has_fip(an).fip, "Nagata extension without FIP");
  const auto oracle = brute_force_interval(e);
  o.require(oracle.size() == 6 && an.lattice().size() == 6, "cardinality 6");
  o.require(interval_length(an.lattice()).length == 3, "length 3");
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime under 1 s");
  o.detail << "cardinality " << an.lattice().size() << ", length " << interval_length(an.lattice()).length
           << ", subintegral, K[y^2] || K[y^3], not arithmetic, no FIP, " << secs << " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t q2 = 0, q3 = 0, nodes = 0;
  std::uint64_t seed = 100;
  for (Shape s : kShapes) {
    for (std::size_t d = 2; d <= 4; ++d) {
      if (s == Shape::LocalSubintegral && d < 4) continue;
      for (const auto& e : campaign(s, 2, d, 25, seed++)) {
        const ExtensionLattice lat = enumerate_interval(e);
        o.require(brute_force_interval(e) == lat.nodes(), "q=2 " + shape_name(s) + " instance differs");
        ++q2;
        nodes += lat.size();
      }
    }
  }
  for (Shape s : kShapes) {
    for (const auto& e : campaign(s, 3, 4, 15, seed++)) {
      const ExtensionLattice lat = enumerate_interval(e);
      o.require(brute_force_interval(e) == lat.nodes(), "q=3 " + shape_name(s) + " instance differs");
      ++q3;
      nodes += lat.size();
    }
  }
  const double secs = seconds_since(t0);
  o.require(q3 >= 50, "at least 50 instances at q = 3");
  o.require(secs < 60.0, "runtime under 60 s");
  o.detail << q2 << " instances at q=2 (dim <= 4, all shapes), " << q3 << " at q=3, " << nodes << " nodes, " << secs
           << " s";
  return o;
}

Outcome tri_equivalence() {
  Outcome o;
  std::size_t used = 0, all_true = 0, all_false = 0;
  auto run = [&](const std::vector<Extension>& exts, std::size_t& count) {
    for (const auto& e : exts) {
      const SubintegralLocalData d = filtration_data(e);
      o.require(!d.field_case(), "campaign instance reduces to a field");
      o.require(d.reduced.algebra.dim() <= e.algebra.dim(), "reduced pair is a quotient");
      o.require(conductor(d.reduced.algebra, d.reduced.r(), d.reduced.algebra.full()).dim() == 0,
                "reduced conductor is zero");
      const FiltrationConditions c = filtration_conditions(d);
      o.require(c.agree(), "conditions disagree");
      ++count;
      if (c.length_condition && c.agree()) ++all_true;
      if (!c.length_condition && c.agree()) ++all_false;
    }
  };
  run(subintegral_campaign(), used);
  o.require(used >= 100, "at least 100 instances");
  const std::size_t main_true = all_true, main_false = all_false;
  std::size_t extra = 0;
  run(subintegral_supplement(), extra);
  o.require(all_false > 0, "some instance with all conditions false");
  o.detail << used << " instances at dim <= 5 (" << main_true << " all-true, " << main_false << " all-false); "
           << "supplement " << extra << " at dim <= 7 with fixtures (" << all_true - main_true << " all-true, "
           << all_false - main_false << " all-false)";
  return o;
}

Outcome criterion_agreement() {
  Outcome o;
  std::size_t n = 0, arith = 0;
  for (const auto* set : {&subintegral_campaign(), &subintegral_supplement()}) {
    for (const auto& e : *set) {
      const FipCrosscheck cc = nagata_fip_subintegral_crosscheck(e);
      o.require(cc.verdict_a == cc.verdict_b, "verdicts differ");
      ++n;
      arith += cc.verdict_a;
    }
  }
  o.detail << n << " instances, " << arith << " arithmetic, " << n - arith << " not";
  o.require(arith > 0 && arith < n, "both verdicts represented");
  return o;
}

Outcome length_additivity() {
  Outcome o;
  std::size_t n = 0, split = 0, nontrivial = 0;
  for (const auto& e : corpus()) {
    const LatticeAnalysis an(e);
    const AdditivityReport r = length_additivity_check(an);
    const ExtensionLattice& lat = an.lattice();
    const std::size_t tc = t_closure(an).node;
    const std::size_t lower = interval_length(enumerate_interval(sub_extension(e, e.r(), lat.node(tc)).ext)).length;
    const std::size_t upper =
        interval_length(enumerate_interval(sub_extension(e, lat.node(tc), e.algebra.full()).ext)).length;
    o.require(r.holds && r.length == lower + upper && interval_length(lat).length == r.length, "length not additive");
    if (r.seminormal_applicable) {
      o.require(r.seminormal_holds, "seminormal split not additive");
      ++split;
    }
    nontrivial += lower > 0 && upper > 0;
    ++n;
  }
  o.require(n >= 100, "at least 100 instances");
  o.detail << n << " instances, " << nontrivial << " with both parts proper, " << split
           << " also split at the seminormalization";
  return o;
}

Outcome lambda_consistency() {
  Outcome o;
  std::size_t n = 0, tclosed = 0;
  for (const auto& e : corpus()) {
    const LatticeAnalysis an(e);
    const LambdaReport r = lambda_report(an);
    const std::size_t tc = t_closure(an).node;
    const unsigned over_tc = lambda_invariant(e.algebra, an.lattice().node(tc), e.algebra.full());
    o.require(r.lambda == over_tc && r.lambda == r.lambda_over_t_closure, "lambda differs over the t-closure");
    if (r.t_closed) {
      ++tclosed;
      std::size_t local_max = 0, supp = 0;
      for (const auto& m : support(e)) {
        ++supp;
        local_max = std::max(local_max, interval_length(enumerate_interval(localize_extension(e, m).ext)).length);
      }
      o.require(r.lambda == local_max, "lambda is not the largest local length");
      o.require(interval_length(an.lattice()).length <= supp * r.lambda, "length exceeds |MSupp| lambda");
    }
    ++n;
  }
  o.detail << n << " instances, " << tclosed << " t-closed";
  o.require(tclosed > 0, "some t-closed instance");
  return o;
}

Outcome crucial_traces() {
  Outcome o;
  std::size_t n = 0, chains = 0;
  for (const auto& e : corpus()) {
    const LatticeAnalysis an(e);
    const ChainList cl = maximal_chains(an.lattice(), 5000);
    if (cl.chains.size() < 2) continue;
    o.require(!cl.truncated, "chain enumeration truncated");
    const auto supp = support(e);
    const std::set<Subspace> expected(supp.begin(), supp.end());
    for (const auto& c : cl.chains) {
      std::set<Subspace> traces;
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        traces.insert(crucial_ideal(e.algebra, an.lattice().node(c[i]), an.lattice().node(c[i + 1])).intersect(e.r()));
      }
      o.require(traces == expected, "trace set differs from the support");
    }
    ++n;
    chains += cl.chains.size();
  }
  o.detail << n << " instances with >= 2 maximal chains, " << chains << " chains";
  return o;
}

Outcome trichotomy() {
  Outcome o;
  std::size_t edges = 0;
  std::array<std::size_t, 3> counts{};
  for (const auto* set : {&corpus(), &subintegral_campaign()}) {
    for (const auto& e : *set) {
      const LatticeAnalysis an(e);
      const auto& covers = an.lattice().covers();
      for (std::size_t i = 0; i < covers.size(); ++i) {
        const auto [lo, hi] = covers[i];
        const MinimalKind k = classify_minimal(e.algebra, an.lattice().node(lo), an.lattice().node(hi), true);
        o.require(k.kind == an.edge_kinds()[i].kind, "edge classification not stable");
        ++counts[static_cast<std::size_t>(k.kind)];
        ++edges;
      }
      const Census c = edge_census(an);
      o.require((c.inert == 0) == is_infra_integral(e), "non-inert census vs infra-integral");
      o.require((c.decomposed + c.ramified == 0) == is_t_closed(an).t_closed, "inert census vs t-closed");
    }
  }
  o.detail << edges << " cover edges: " << counts[0] << " inert, " << counts[1] << " decomposed, " << counts[2]
           << " ramified";
  return o;
}

Outcome quotient_isomorphism() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& e : corpus()) {
    const Algebra& a = e.algebra;
    const Subspace nil = nilradical(a);
    std::vector<Subspace> ideals{nil, a.product(nil, nil), conductor(a, e.r(), a.full())};
    for (const auto& m : local_structure(a).maximal_ideals) ideals.push_back(m);
    std::set<Subspace> seen;
    for (const auto& j : ideals) {
      if (j.dim() == 0 || j.contains(a.one()) || !seen.insert(j).second) continue;
      const QuotientCorrespondence qc = quotient_correspondence(e, j);
      o.require(qc.upper_size == qc.quotient_size, "cardinalities differ");
      o.require(qc.bijective && qc.preserves_order && qc.reflects_order, "not an order isomorphism");
      ++pairs;
    }
  }
  o.require(pairs >= 20, "at least 20 pairs");
  o.detail << pairs << " (instance, nonzero ideal) pairs";
  return o;
}

bool modular(const ExtensionLattice& lat, const LatticeOps& ops) {
  for (std::size_t x = 0; x < lat.size(); ++x) {
    for (std::size_t y = 0; y < lat.size(); ++y) {
      for (std::size_t z = 0; z < lat.size(); ++z) {
        if (lat.leq(x, z) && ops.join_of(x, ops.meet_of(y, z)) != ops.meet_of(ops.join_of(x, y), z)) return false;
      }
    }
  }
  return true;
}

Outcome arithmetic_delta() {
  Outcome o;
  std::size_t arith = 0, n = 0;
  for (const auto* set : {&corpus(), &subintegral_campaign()}) {
    for (const auto& e : *set) {
      ++n;
      if (!is_arithmetic(e).arithmetic) continue;
      ++arith;
      const ExtensionLattice lat = enumerate_interval(e);
      o.require(is_delta_extension(e, lat).holds, "arithmetic but not a Delta-extension");
      o.require(check_distributivity(e.algebra, lat).distributive, "arithmetic but not distributive");
    }
  }
  const Extension f = fx::tower_f64();
  const ExtensionLattice lat = enumerate_interval(f);
  const LatticeOps ops = lattice_ops(f.algebra, lat);
  o.require(lat.size() == 4, "F64 lattice has 4 elements");
  o.require(modular(lat, ops), "F64 lattice modular");
  o.require(ops.join_of(1, 2) == lat.top() && ops.meet_of(1, 2) == lat.bottom(), "T1T2 = S and T1 ∩ T2 = R");
  o.require(!is_chained(lat).chained, "F64 lattice not chained");
  o.require(!is_delta_extension(f, lat).holds, "F64 Delta test false");
  o.require(check_distributivity(f.algebra, lat).distributive, "F64 lattice distributive");
  o.detail << arith << " of " << n << " instances arithmetic; F2 ⊆ F64: 4-element modular lattice, "
           << "not chained, Delta false";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example-regression", example_regression},
      {"oracle-equivalence", oracle_equivalence},
      {"filtration-tri-equivalence", tri_equivalence},
      {"fip-criterion-agreement", criterion_agreement},
      {"length-additivity", length_additivity},
      {"lambda-consistency", lambda_consistency},
      {"crucial-ideal-traces", crucial_traces},
      {"minimal-trichotomy", trichotomy},
      {"quotient-order-isomorphism", quotient_isomorphism},
      {"arithmetic-delta-distributive", arithmetic_delta},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("%s %2zu %-30s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), seconds_since(t0));
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
