#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "skewring/automorphisms.hpp"
#include "support.hpp"

using namespace skewring;
using skewring::testing::random_element;

namespace {

const PrimeModulus P3(3), P5(5), P7(7), P11(11), P13(13);
const std::array<PrimeModulus, 5> kPrimes{P3, P5, P7, P11, P13};

RingElement E(const PrimeModulus& p, std::int64_t a, std::int64_t b, std::int64_t c) { return {p, a, b, c}; }
AutomorphismId Id(int i) { return AutomorphismId(i); }

// Composition table obtained by brute-force comparison of theta_i(theta_j(z))
// with every theta_k(z) over all z, identical at p = 3, 5, 7, 11, 13.
constexpr int kExpectedTable[6][6] = {
    {1, 2, 3, 4, 5, 6}, {2, 1, 4, 3, 6, 5}, {3, 5, 6, 2, 4, 1},
    {4, 6, 5, 1, 3, 2}, {5, 3, 2, 6, 1, 4}, {6, 4, 1, 5, 2, 3},
};

}  // namespace

TEST(AutomorphismId, Range) {
  EXPECT_THROW(AutomorphismId(0), InvalidAutomorphismId);
  EXPECT_THROW(AutomorphismId(7), InvalidAutomorphismId);
  EXPECT_EQ(AutomorphismId::all().size(), 6u);
}

TEST(ThetaImageOfV, Examples) {
  for (const auto& p : kPrimes) {
    EXPECT_EQ(theta_image_of_v(Id(1), p), E(p, 0, 1, 0));
    EXPECT_EQ(theta_image_of_v(Id(2), p), E(p, 0, p.value() - 1, 0));
  }
  // 1 - (1/2)v - (3/2)v^2 with 1/2 = 3, 3/2 = 4 in F_5.
  EXPECT_EQ(theta_image_of_v(Id(3), P5), E(P5, 1, 2, 1));
}

TEST(ThetaImageOfV, MatchesListedImages) {
  for (const auto& p : kPrimes) {
    const std::int64_t h = p.half();
    EXPECT_EQ(theta_image_of_v(Id(3), p), E(p, 1, -h, -3 * h));
    EXPECT_EQ(theta_image_of_v(Id(4), p), E(p, 1, h, -3 * h));
    EXPECT_EQ(theta_image_of_v(Id(5), p), E(p, -1, h, 3 * h));
    EXPECT_EQ(theta_image_of_v(Id(6), p), E(p, -1, -h, 3 * h));
    std::set<RingElement> distinct;
    for (auto id : AutomorphismId::all()) distinct.insert(theta_image_of_v(id, p));
    EXPECT_EQ(distinct.size(), 6u);
  }
}

TEST(ThetaImageOfV, SatisfiesCubeEqualsItself) {
  for (const auto& p : kPrimes) {
    for (auto id : AutomorphismId::all()) {
      const auto t = theta_image_of_v(id, p);
      EXPECT_EQ(t * t * t, t);
    }
  }
}

TEST(ThetaApply, Examples) {
  for (const auto& z : all_elements(P7)) {
    EXPECT_EQ(theta_apply(Id(2), z), E(P7, z.a(), -static_cast<std::int64_t>(z.b()), z.c()));
  }
  // theta_3(v^2) = 1 + (1/2)v - (1/2)v^2.
  EXPECT_EQ(theta_apply(Id(3), E(P5, 0, 0, 1)), E(P5, 1, 3, 2));
  for (auto id : AutomorphismId::all()) EXPECT_EQ(theta_apply(id, E(P11, 7, 0, 0)), E(P11, 7, 0, 0));
}

TEST(ThetaApply, ImageOfVSquaredForTheta3) {
  for (const auto& p : kPrimes) {
    const std::int64_t h = p.half();
    const auto t = theta_image_of_v(Id(3), p);
    EXPECT_EQ(t * t, E(p, 1, h, -h));
    EXPECT_EQ(theta_apply(Id(3), E(p, 0, 0, 1)), E(p, 1, h, -h));
  }
}

TEST(ThetaApply, FixesScalars) {
  for (const auto& p : kPrimes) {
    for (auto id : AutomorphismId::all()) {
      for (Residue a = 0; a < p.value(); ++a) EXPECT_EQ(theta_apply(id, RingElement::scalar(p, a)), RingElement::scalar(p, a));
    }
  }
}

TEST(ThetaApplyViaImage, IdentityImage) {
  for (const auto& z : all_elements(P5)) EXPECT_EQ(theta_apply_via_image(RingElement::v(P5), z), z);
}

TEST(ThetaApplyViaImage, VSquaredIsNotInjective) {
  for (const auto& p : kPrimes) {
    const auto t = E(p, 0, 0, 1);
    EXPECT_EQ(theta_apply_via_image(t, RingElement::v(p)), E(p, 0, 0, 1));
    EXPECT_EQ(theta_apply_via_image(t, E(p, 0, 0, 1)), E(p, 0, 0, 1));
  }
}

TEST(ThetaApplyViaImage, AgreesWithClosedForms) {
  std::mt19937_64 rng(4);
  for (const auto& p : {P3, P5, P7}) {
    for (auto id : AutomorphismId::all()) {
      const auto t = theta_image_of_v(id, p);
      for (int i = 0; i < 10000; ++i) {
        const auto z = random_element(p, rng);
        ASSERT_EQ(theta_apply_via_image(t, z), theta_apply(id, z));
      }
    }
  }
}

TEST(ClosedForms, AreRingHomomorphismsExhaustiveAtThree) {
  const auto elements = all_elements(P3);
  for (auto id : AutomorphismId::all()) {
    for (const auto& z : elements) {
      for (const auto& w : elements) {
        ASSERT_EQ(theta_apply(id, z * w), theta_apply(id, z) * theta_apply(id, w));
        ASSERT_EQ(theta_apply(id, z + w), theta_apply(id, z) + theta_apply(id, w));
      }
    }
  }
}

TEST(ClosedForms, AreRingHomomorphismsSampled) {
  std::mt19937_64 rng(17);
  for (const auto& p : {P5, P7, P11, P13}) {
    for (auto id : AutomorphismId::all()) {
      for (int i = 0; i < 10000; ++i) {
        const auto z = random_element(p, rng), w = random_element(p, rng);
        ASSERT_EQ(theta_apply(id, z * w), theta_apply(id, z) * theta_apply(id, w));
        ASSERT_EQ(theta_apply(id, z + w), theta_apply(id, z) + theta_apply(id, w));
      }
    }
  }
}

TEST(ClosedForms, PreserveZeroDivisors) {
  for (auto id : AutomorphismId::all()) {
    for (const auto& z : all_elements(P3)) ASSERT_EQ(is_zero_divisor(theta_apply(id, z)), is_zero_divisor(z));
  }
  std::mt19937_64 rng(8);
  for (const auto& p : {P5, P7, P11, P13}) {
    for (auto id : AutomorphismId::all()) {
      for (int i = 0; i < 2000; ++i) {
        const auto z = random_element(p, rng);
        ASSERT_EQ(is_zero_divisor(theta_apply(id, z)), is_zero_divisor(z));
      }
    }
  }
}

TEST(EndomorphismCandidates, CensusIs27With21NonInjective) {
  for (const auto& p : kPrimes) {
    const auto candidates = enumerate_endomorphism_candidates(p);
    ASSERT_EQ(candidates.size(), 27u);
    EXPECT_TRUE(std::is_sorted(candidates.begin(), candidates.end(),
                               [](const auto& l, const auto& r) { return l.image_of_v < r.image_of_v; }));
    std::size_t non_injective = 0;
    for (const auto& c : candidates) {
      EXPECT_EQ(c.image_of_v * c.image_of_v * c.image_of_v, c.image_of_v);
      EXPECT_EQ(c.automorphism_id.has_value(), c.injective);
      EXPECT_EQ(c.witness.has_value(), !c.injective);
      if (c.injective) {
        EXPECT_EQ(theta_image_of_v(*c.automorphism_id, p), c.image_of_v);
      } else {
        ++non_injective;
        const auto& w = *c.witness;
        EXPECT_NE(w.first, w.second);
        EXPECT_EQ(theta_apply_via_image(c.image_of_v, w.first), theta_apply_via_image(c.image_of_v, w.second));
      }
    }
    EXPECT_EQ(non_injective, 21u);
  }
}

TEST(EndomorphismCandidates, BijectiveExactlyForCrtPermutations) {
  for (const auto& p : {P3, P5, P7}) {
    const auto minus_one = p.value() - 1;
    for (const auto& c : enumerate_endomorphism_candidates(p)) {
      const auto t = to_crt(c.image_of_v);
      std::array<Residue, 3> sorted{t.s0, t.s1, t.s2};
      std::sort(sorted.begin(), sorted.end());
      const bool permutation = sorted == std::array<Residue, 3>{0, 1, minus_one};
      EXPECT_EQ(c.injective, permutation);
    }
  }
}

TEST(EndomorphismCandidates, NamedNonInjectiveImagesArePresent) {
  for (const auto& p : kPrimes) {
    std::map<RingElement, bool> injective;
    for (const auto& c : enumerate_endomorphism_candidates(p)) injective.emplace(c.image_of_v, c.injective);
    const std::int64_t h = p.half();
    for (const auto& t : {E(p, 0, 0, 1), E(p, 0, 0, -1), E(p, 1, 0, -1), E(p, 1, h, -h), E(p, 0, h, h),
                          E(p, 0, h, -h), E(p, 0, -h, h), E(p, 0, -h, -h)}) {
      ASSERT_TRUE(injective.contains(t)) << t.a() << ',' << t.b() << ',' << t.c();
      EXPECT_FALSE(injective.at(t));
    }
  }
}

// Among candidates with constant term 1 that are zero divisors, z ranges over
// the roots of (z+1)(2z+1)(2z+3) and y = +-(z+1); with constant term -1 over
// the roots of (z-1)(2z-1)(2z-3) and y = +-(z-1).
TEST(EndomorphismCandidates, CubicRootsOfCaseAnalysis) {
  for (const auto& p : kPrimes) {
    const std::int64_t h = p.half();
    const auto one = 1u, minus_one = p.value() - 1;
    std::set<Residue> z_plus, z_minus;
    for (const auto& c : enumerate_endomorphism_candidates(p)) {
      const auto& t = c.image_of_v;
      if (!is_zero_divisor(t)) continue;
      const std::int64_t y = t.b(), z = t.c();
      if (t.a() == one) {
        z_plus.insert(t.c());
        EXPECT_EQ(p.reduce(4 * z * z % p.value() * z + 12 * z * z + 11 * z + 3), 0u);
        EXPECT_TRUE(p.reduce(y - z - 1) == 0 || p.reduce(y + z + 1) == 0);
      } else if (t.a() == minus_one) {
        z_minus.insert(t.c());
        EXPECT_EQ(p.reduce(4 * z * z % p.value() * z - 12 * z * z + 11 * z - 3), 0u);
        EXPECT_TRUE(p.reduce(y - z + 1) == 0 || p.reduce(y + z - 1) == 0);
      }
    }
    EXPECT_EQ(z_plus, (std::set<Residue>{p.reduce(-1), p.reduce(-h), p.reduce(-3 * h)}));
    EXPECT_EQ(z_minus, (std::set<Residue>{1u, p.reduce(h), p.reduce(3 * h)}));
  }
}

TEST(BruteForce, FindsExactlySixMatchingClosedForms) {
  for (const auto& p : kPrimes) {
    const auto found = enumerate_automorphisms_bruteforce(p);
    ASSERT_EQ(found.size(), 6u);
    std::vector<RingElement> expected;
    for (auto id : AutomorphismId::all()) expected.push_back(theta_image_of_v(id, p));
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < found.size(); ++i) {
      EXPECT_EQ(found[i].image_of_v, expected[i]);
      EXPECT_EQ(theta_image_of_v(found[i].id, p), found[i].image_of_v);
    }
  }
}

TEST(BruteForce, PlusMinusVAreIdsOneAndTwo) {
  std::set<int> ids;
  for (const auto& f : enumerate_automorphisms_bruteforce(P7)) {
    if (f.image_of_v == RingElement::v(P7) || f.image_of_v == -RingElement::v(P7)) ids.insert(f.id.value());
  }
  EXPECT_EQ(ids, (std::set<int>{1, 2}));
}

TEST(Compose, Examples) {
  for (auto j : AutomorphismId::all()) EXPECT_EQ(compose(Id(1), j, P5), j);
  EXPECT_EQ(compose(Id(2), Id(2), P5), Id(1));
  for (const auto& p : {P5, P7, P11}) EXPECT_EQ(compose(Id(3), Id(3), p), Id(6));
  // theta_3(theta_3(v)) = -1 - (1/2)v + (3/2)v^2 at p = 5.
  EXPECT_EQ(theta_apply(Id(3), theta_image_of_v(Id(3), P5)), E(P5, -1, -3, 4));
}

TEST(Compose, AgreesWithPointwiseComposition) {
  for (auto i : AutomorphismId::all()) {
    for (auto j : AutomorphismId::all()) {
      const auto k = compose(i, j, P5);
      for (const auto& z : all_elements(P5)) ASSERT_EQ(theta_apply(i, theta_apply(j, z)), theta_apply(k, z));
    }
  }
}

TEST(GroupTable, MatchesFrozenTableAtEveryPrime) {
  for (const auto& p : kPrimes) {
    const auto table = group_table(p);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) EXPECT_EQ(table.at(Id(i), Id(j)).value(), kExpectedTable[i - 1][j - 1]);
  }
}

TEST(GroupTable, IsSymmetricGroupOnThreeLetters) {
  const auto table = group_table(P5);
  for (auto i : AutomorphismId::all()) {
    EXPECT_EQ(table.at(Id(1), i), i);
    EXPECT_EQ(table.at(i, Id(1)), i);
    std::set<int> row, column;
    for (auto j : AutomorphismId::all()) {
      row.insert(table.at(i, j).value());
      column.insert(table.at(j, i).value());
    }
    EXPECT_EQ(row.size(), 6u);
    EXPECT_EQ(column.size(), 6u);
  }
  std::multiset<int> orders;
  for (auto id : AutomorphismId::all()) orders.insert(table.order(id));
  EXPECT_EQ(orders, (std::multiset<int>{1, 2, 2, 2, 3, 3}));
  EXPECT_EQ(table.order(Id(3)), 3);
  EXPECT_EQ(table.order(Id(6)), 3);
  EXPECT_EQ(table.order(Id(4)), 2);
  EXPECT_EQ(table.order(Id(5)), 2);
  EXPECT_EQ(table.inverse(Id(3)), Id(6));
  EXPECT_FALSE(table.is_abelian());
}

TEST(OntoWitness, Examples) {
  for (const auto& p : {P5, P7}) {
    EXPECT_EQ(onto_witness_theta3(0, 0, 0, p), RingElement::zero(p));
    EXPECT_EQ(onto_witness_theta3(1, 0, 0, p), RingElement::one(p));
  }
}

TEST(OntoWitness, IsPreimageUnderTheta3) {
  std::mt19937_64 rng(3);
  for (const auto& p : {P5, P7}) {
    for (int i = 0; i < 1000; ++i) {
      const auto target = random_element(p, rng);
      ASSERT_EQ(theta_apply(Id(3), onto_witness_theta3(target.a(), target.b(), target.c(), p)), target);
    }
  }
  for (const auto& z : all_elements(P3)) {
    ASSERT_EQ(theta_apply(Id(3), onto_witness_theta3(z.a(), z.b(), z.c(), P3)), z);
  }
}
