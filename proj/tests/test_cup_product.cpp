#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "realtoric/cup_product.hpp"

using namespace realtoric;

namespace {

using Term = DegreeTwoClass::Term;

SchurVector sv(std::initializer_list<Partition> parts) {
  SchurVector v(parts.begin()->size());
  for (const auto& p : parts) v.add(p, 1);
  return v;
}

DegreeTwoClass single(const Term& t, const Rational& c = 1) {
  DegreeTwoClass x;
  x.add(t, c);
  return x;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

}  // namespace

TEST(NuClass, Normalization) {
  const NuClass a(2, 1);
  EXPECT_EQ(a.pair(), std::make_pair(1, 2));
  EXPECT_EQ(a.sign(), -1);
  EXPECT_EQ(a, NuClass(1, 2).negated());
  EXPECT_THROW(NuClass(3, 3), std::invalid_argument);
}

TEST(CupReduce, Examples) {
  EXPECT_EQ(cup_reduce(NuClass(2, 1), NuClass(3, 4)), single({{1, 2}, {3, 4}}, -1));
  EXPECT_TRUE(cup_reduce(NuClass(1, 2), NuClass(1, 3)).is_zero());
  EXPECT_TRUE(cup_reduce(NuClass(1, 2), NuClass(1, 2)).is_zero());
  EXPECT_TRUE(cup_reduce(NuClass(1, 2), NuClass(2, 1)).is_zero());
  EXPECT_TRUE(cup_reduce(NuClass(3, 1), NuClass(2, 3)).is_zero());
}

TEST(CupReduce, DegreeOneClassesAnticommute) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        for (int d = 1; d <= 5; ++d) {
          if (a == b || c == d) continue;
          DegreeTwoClass sum = cup_reduce(NuClass(a, b), NuClass(c, d));
          sum += cup_reduce(NuClass(c, d), NuClass(a, b));
          EXPECT_TRUE(sum.is_zero());
        }
}

TEST(Basis, ThreePairingsPerFourSubset) {
  for (int n = 2; n <= 10; ++n) {
    const auto basis = degree_two_basis(n);
    EXPECT_EQ(Integer(basis.size()), 3 * binomial(n, 4));
    EXPECT_EQ(std::set<Term>(basis.begin(), basis.end()).size(), basis.size());
    for (const auto& [p, q] : basis) {
      EXPECT_LT(p.first, p.second);
      EXPECT_LT(q.first, q.second);
      EXPECT_LT(p.first, q.first);
      EXPECT_EQ(std::set<int>({p.first, p.second, q.first, q.second}).size(), 4u);
    }
  }
}

TEST(SpanDimension, Examples) {
  EXPECT_EQ(cup_span_dimension(3), 0u);
  EXPECT_EQ(cup_span_dimension(4), 3u);
  EXPECT_LT(Integer(cup_span_dimension(4)), betti(4, 2));
  EXPECT_EQ(cup_span_dimension(6), 45u);
  EXPECT_EQ(betti(6, 2), 75);
}

TEST(SpanDimension, MatchesBasisCount) {
  for (int n = 2; n <= 10; ++n)
    EXPECT_EQ(Integer(cup_span_dimension(n)), 3 * binomial(n, 4)) << n;
}

TEST(Action, OnDegreeOne) {
  EXPECT_EQ(sn_act_on_nu(Permutation::identity(4), NuClass(2, 3)), NuClass(2, 3));
  const Permutation swap12({1, 0, 2});
  EXPECT_EQ(sn_act_on_nu(swap12, NuClass(1, 2)), NuClass(1, 2).negated());
  EXPECT_EQ(sn_act_on_nu(swap12, NuClass(1, 3)), NuClass(2, 3));
}

TEST(Action, IsAGroupAction) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 3;
    const Permutation v = random_permutation(n, rng), w = random_permutation(n, rng);
    std::vector<int> vw(n);
    for (int k = 0; k < n; ++k) vw[k] = v(w(k));
    const auto basis = degree_two_basis(n);
    const DegreeTwoClass x = single(basis[trial % basis.size()], 2);
    EXPECT_EQ(act(v, act(w, x)), act(Permutation(vw), x));
  }
}

TEST(Action, PermutesBasisUpToSignForFour) {
  const auto basis = degree_two_basis(4);
  const std::set<Term> terms(basis.begin(), basis.end());
  oracle::for_each_permutation(4, [&](const std::vector<int>& images) {
    const Permutation w(images);
    std::set<Term> hit;
    for (const auto& t : basis) {
      const DegreeTwoClass image = act(w, single(t));
      ASSERT_EQ(image.terms().size(), 1u);
      const auto& [u, c] = *image.terms().begin();
      EXPECT_TRUE(c == 1 || c == -1);
      EXPECT_TRUE(terms.count(u));
      hit.insert(u);
    }
    EXPECT_EQ(hit.size(), basis.size());
  });
}

TEST(Action, PreservesSpanAndRelations) {
  std::mt19937 rng(2);
  for (int n = 4; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const Permutation w = random_permutation(n, rng);
      std::uniform_int_distribution<int> label(1, n);
      int a = label(rng), b = label(rng), c = label(rng), d = label(rng);
      if (a == b || c == d) continue;
      // w(x y) = (w x)(w y), including products that reduce to zero.
      DegreeTwoClass lhs = act(w, cup_reduce(NuClass(a, b), NuClass(c, d)));
      DegreeTwoClass rhs = cup_reduce(sn_act_on_nu(w, NuClass(a, b)), sn_act_on_nu(w, NuClass(c, d)));
      EXPECT_EQ(lhs, rhs);
      EXPECT_TRUE(act(w, cup_reduce(NuClass(a, b), NuClass(a, c == a ? d : c))).is_zero());
    }
}

TEST(CAsRep, Examples) {
  EXPECT_EQ(C_as_rep(4), SchurVector::basis({2, 1, 1}));
  EXPECT_EQ(C_as_rep(5), sv({{3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}}));
  EXPECT_EQ(C_as_rep(6), sv({{4, 1, 1}, {3, 2, 1}, {3, 1, 1, 1}, {2, 2, 1, 1}}));
  EXPECT_THROW(C_as_rep(3), std::invalid_argument);
}

TEST(CAsRep, TwoRoutesAgree) {
  for (int n = 4; n <= 8; ++n) {
    const auto d = decompose(C_character(n));
    EXPECT_TRUE(d.integral);
    EXPECT_EQ(d.schur, C_as_rep(n)) << n;
  }
}

TEST(CAsRep, InducedFromYoungSubgroup) {
  // Ind(V_211 x 1) computed by the induced-character oracle.
  for (int n = 5; n <= 7; ++n) {
    const auto chi = oracle::induce(irreducible_character({2, 1, 1}), oracle::constant_character(n - 4));
    EXPECT_EQ(decompose(chi).schur, C_as_rep(n));
  }
}

TEST(CAsRep, DimensionAndPattern) {
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(C_as_rep(n).dimension(), Rational(3 * binomial(n, 4)));
  for (int n = 6; n <= 9; ++n) {
    const SchurVector expected = sv({{n - 2, 1, 1}, {n - 3, 2, 1}, {n - 3, 1, 1, 1}, {n - 4, 2, 1, 1}});
    EXPECT_EQ(C_as_rep(n), expected) << n;
  }
}

TEST(CCharacter, TransposesAndDoubleTranspositions) {
  // The double transposition (12)(34) acts on the three pairings of {1,2,3,4}
  // with trace -1; V_211 has the same value.
  const auto chi = C_character(4);
  EXPECT_EQ(chi(CycleType{Partition{2, 2}}), -1);
  EXPECT_EQ(chi(CycleType{Partition{1, 1, 1, 1}}), 3);
  for (const auto& mu : cycle_types_of(4))
    EXPECT_EQ(chi(mu), Rational(mn_character({2, 1, 1}, mu))) << mu.partition.str();
}

TEST(Branching, InfeasibleForFourSixSevenEight) {
  for (int n : {4, 6, 7, 8}) {
    const auto cert = branching_infeasibility(n);
    EXPECT_FALSE(cert.feasible) << n;
    EXPECT_TRUE(cert.witness.empty());
    EXPECT_EQ(cert.n, n);
  }
}

TEST(Branching, FiveExtendsAsAModule) {
  // The search finds V_3111 + V_222; confirm by restricting characters of
  // S_6 to S_5 (classes with a fixed point) and comparing with the trace of
  // the signed permutation action on the degree-2 basis.
  const auto cert = branching_infeasibility(5);
  ASSERT_TRUE(cert.feasible);
  std::map<Partition, int> witness(cert.witness.begin(), cert.witness.end());
  EXPECT_EQ(witness, (std::map<Partition, int>{{{3, 1, 1, 1}, 1}, {{2, 2, 2}, 1}}));
  const ClassFunction chi = C_character(5);
  for (const auto& mu : cycle_types_of(5)) {
    std::vector<int> parts = mu.partition.parts();
    parts.push_back(1);
    const CycleType lifted{Partition(parts)};
    const Integer restricted = mn_character({3, 1, 1, 1}, lifted) + mn_character({2, 2, 2}, lifted);
    EXPECT_EQ(Rational(restricted), chi(mu)) << mu.partition.str();
  }
}

TEST(Branching, SanityFeasibleTargets) {
  for (int n = 2; n <= 7; ++n) {
    const auto cert = branching_search(SchurVector::h(n));
    ASSERT_TRUE(cert.feasible);
    SchurVector sum(n);
    for (const auto& [lambda, c] : cert.witness) sum += Rational(c) * restrict(SchurVector::basis(lambda));
    EXPECT_EQ(sum, SchurVector::h(n));
  }
  const auto top = branching_search(restrict(SchurVector::h(6)));
  ASSERT_TRUE(top.feasible);
  ASSERT_EQ(top.witness.size(), 1u);
  EXPECT_EQ(top.witness[0].first, Partition{6});
  EXPECT_EQ(top.witness[0].second, 1);
}

TEST(Branching, WitnessReconstructsRestrictedModules) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (int n = 3; n <= 6; ++n) {
    SchurVector source(n + 1);
    for (const auto& p : partitions_of(n + 1)) source.add(p, coeff(rng));
    const SchurVector target = restrict(source);
    if (target.is_zero()) continue;
    const auto cert = branching_search(target);
    ASSERT_TRUE(cert.feasible);
    SchurVector sum(n);
    for (const auto& [lambda, c] : cert.witness) sum += Rational(c) * restrict(SchurVector::basis(lambda));
    EXPECT_EQ(sum, target);
  }
}

TEST(Branching, NonEffectiveTargetIsInfeasible) {
  EXPECT_FALSE(branching_search(-SchurVector::h(3)).feasible);
}
