#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ringlat/errors.hpp"

using namespace ringlat;
using fx::v;

TEST(Minimal, ThreeKinds) {
  const auto F = fx::gf(2);
  const Algebra split = make_product(fx::truncated(F, 1), fx::truncated(F, 1));
  const Algebra dual = fx::truncated(F, 2);
  const Algebra f4 = fx::f4();
  EXPECT_EQ(classify_minimal(split, prime_subring(split).space(), split.full()).kind, MinimalKindTag::Decomposed);
  EXPECT_EQ(classify_minimal(dual, prime_subring(dual).space(), dual.full()).kind, MinimalKindTag::Ramified);
  const MinimalKind inert = classify_minimal(f4, prime_subring(f4).space(), f4.full());
  EXPECT_EQ(inert.kind, MinimalKindTag::Inert);
  EXPECT_EQ(inert.conductor.dim(), 0u);
  EXPECT_EQ(inert.ideals_above.size(), 1u);
  EXPECT_EQ(kind_name(MinimalKindTag::Ramified), "ramified");
  EXPECT_EQ(kind_letter(MinimalKindTag::Decomposed), 'D');
}

TEST(Minimal, NonAdjacentPairRejected) {
  const Algebra t = fx::truncated(fx::gf(2), 4);
  EXPECT_FALSE(is_minimal_pair(t, prime_subring(t).space(), t.full()));
  EXPECT_THROW(classify_minimal(t, prime_subring(t).space(), t.full()), AlgebraError);
}

TEST(Minimal, CrucialIdealOfSplitExtension) {
  const Extension e = fx::with_base(make_product(fx::truncated(fx::gf(2), 1), fx::f4()), {v({1, 0, 0})});
  const Subspace m = crucial_ideal(e.algebra, e.r(), e.algebra.full());
  EXPECT_EQ(m, fx::span(e.algebra, {v({1, 0, 0})}));
}

TEST(Residual, SubintegralAndInfraIntegral) {
  EXPECT_TRUE(is_subintegral(fx::example_y4()));
  const Extension split = fx::over_prime(make_product(fx::truncated(fx::gf(2), 1), fx::truncated(fx::gf(2), 1)));
  EXPECT_TRUE(is_infra_integral(split));
  EXPECT_FALSE(is_subintegral(split));
  EXPECT_FALSE(is_infra_integral(fx::over_prime(fx::f4())));
}

TEST(Residual, Lambda) {
  EXPECT_EQ(lambda_invariant(fx::tower_f64()), 2u);
  EXPECT_EQ(lambda_invariant(fx::over_prime(make_product(fx::f4(), fx::f8()))), 1u);
  EXPECT_EQ(lambda_invariant(fx::example_y4()), 0u);
}

TEST(TClosed, ScanAndChain) {
  const Algebra f4 = fx::f4();
  const auto scan = t_closed_scan(f4, prime_subring(f4).space(), f4.full(), 1000);
  ASSERT_TRUE(scan);
  EXPECT_TRUE(scan->t_closed);
  EXPECT_EQ(scan->pairs, 4u);
  EXPECT_FALSE(t_closed_scan(f4, prime_subring(f4).space(), f4.full(), 2));

  const LatticeAnalysis y4(fx::example_y4());
  const auto s = t_closed_scan(y4.algebra(), y4.extension().r(), y4.algebra().full(), 1 << 20);
  ASSERT_TRUE(s);
  EXPECT_FALSE(s->t_closed);
  ASSERT_TRUE(s->witness);
  EXPECT_FALSE(y4.extension().r().contains(s->witness->first));
  EXPECT_FALSE(is_t_closed(y4).t_closed);

  const LatticeAnalysis tower(fx::over_prime(fx::f16()));
  const TClosedResult t = is_t_closed(tower);
  EXPECT_TRUE(t.t_closed);
  EXPECT_TRUE(t.by_scan);
  EXPECT_TRUE(t.by_chain);
}

TEST(Closures, Y4) {
  const LatticeAnalysis an(fx::example_y4());
  EXPECT_EQ(seminormalization(an), an.lattice().top());
  const TClosure tc = t_closure(an);
  EXPECT_EQ(tc.node, an.lattice().top());
  EXPECT_TRUE(canonical_decomposition(an).ok());
  const Census c = edge_census(an);
  EXPECT_EQ(c.ramified, 7u);
  EXPECT_EQ(c.inert + c.decomposed, 0u);
}

TEST(Closures, SeminormalizationOfNilpotentTimesField) {
  const Algebra s = make_product(fx::truncated(fx::gf(2), 3), fx::f4());
  const LatticeAnalysis an(fx::over_prime(s));
  const Subspace& sn = an.lattice().node(seminormalization(an));
  EXPECT_EQ(sn.dim(), 3u);
  EXPECT_TRUE(sn.contains(v({0, 1, 0, 0, 0})));
  EXPECT_TRUE(sn.contains(v({0, 0, 1, 0, 0})));
  EXPECT_TRUE(canonical_decomposition(an).ok());
}

TEST(Closures, TClosureOfSplitFields) {
  const Algebra s = make_product(fx::f4(), fx::f4());
  const LatticeAnalysis an(fx::over_prime(s));
  const TClosure tc = t_closure(an);
  EXPECT_EQ(an.lattice().node(tc.node), fx::span(s, {v({1, 0, 0, 0}), v({0, 0, 1, 0})}));
  EXPECT_EQ(tc.via_infra_integral, tc.via_t_closed_above);
  EXPECT_EQ(tc.via_greedy_climb, tc.node);
  EXPECT_EQ(seminormalization(an), an.lattice().bottom());
  const CanonicalDecomposition cd = canonical_decomposition(an);
  EXPECT_TRUE(cd.ok());
}

TEST(Chains, Classification) {
  const LatticeAnalysis y3(fx::example_y3());
  const ChainVerification cv = verify_chain_classification(y3, interval_length(y3.lattice()).chain);
  EXPECT_TRUE(cv.all_non_inert);
  EXPECT_TRUE(cv.infra_integral);
  EXPECT_TRUE(cv.consistent());

  const LatticeAnalysis tower(fx::over_prime(fx::f16()));
  const ChainVerification ct = verify_chain_classification(tower, interval_length(tower.lattice()).chain);
  EXPECT_TRUE(ct.all_inert);
  EXPECT_TRUE(ct.t_closed);
  EXPECT_TRUE(ct.consistent());
}

TEST(Chains, CrucialTracesAgreeAcrossChains) {
  for (const Extension& e : {fx::example_y4(), fx::tower_f64()}) {
    const LatticeAnalysis an(e);
    const auto chains = maximal_chains(an.lattice());
    ASSERT_GE(chains.chains.size(), 2u);
    const auto supp = support(e);
    for (const auto& c : chains.chains) {
      std::vector<Subspace> traces;
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Subspace t = crucial_ideal(e.algebra, an.lattice().node(c[i]), an.lattice().node(c[i + 1])).intersect(e.r());
        if (std::find(traces.begin(), traces.end(), t) == traces.end()) traces.push_back(t);
      }
      EXPECT_EQ(traces, supp);
    }
  }
}

TEST(Reports, LambdaAndAdditivity) {
  const LatticeAnalysis tower(fx::tower_f64());
  const LambdaReport lr = lambda_report(tower);
  EXPECT_EQ(lr.lambda, 2u);
  EXPECT_TRUE(lr.t_closed);
  EXPECT_EQ(lr.max_local_length, 2u);
  EXPECT_TRUE(lr.consistent());

  // infra-integral part below an inert top step
  const LatticeAnalysis mixed(fx::over_prime(make_product(fx::truncated(fx::gf(2), 3), fx::f4())));
  const AdditivityReport ar = length_additivity_check(mixed);
  EXPECT_TRUE(ar.holds);
  EXPECT_EQ(ar.length, ar.lower + ar.upper);
  EXPECT_GT(ar.upper, 0u);
  EXPECT_TRUE(lambda_report(mixed).consistent());
}
