#include <gtest/gtest.h>

#include <random>

#include "tautilt/perm/group.hpp"

using namespace tautilt;

namespace {
PermutationGroup grp(std::size_t n, const std::string& gens) { return PermutationGroup(n, parse_generators(gens, n)); }
}  // namespace

TEST(CycleNotation, ParseAndPrint) {
  const auto p = parse_cycles("(1 2 3)(4 5)", 5);
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(parse_cycles(" ( 1  2 ) ", 3).to_cycle_string(), "(1 2)");
  EXPECT_EQ(parse_cycles("()", 4).to_cycle_string(), "()");
  // Right-to-left composition: (1 2)(2 3) sends 3 -> 2 -> 1.
  EXPECT_EQ(parse_cycles("(1 2)(2 3)", 3)(2), 0u);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("", 3), ParseError);
}

TEST(Closure, Examples) {
  EXPECT_EQ(grp(3, "(1 2), (1 2 3)").order(), 6u);
  EXPECT_EQ(grp(3, "(1 2 3)").order(), 3u);
  EXPECT_EQ(grp(4, "").order(), 1u);
  EXPECT_THROW(PermutationGroup(6, parse_generators("(1 2), (1 2 3 4 5 6)", 6), 100), OrderBudgetExceeded);
}

TEST(Closure, DeterministicOrderAndLagrange) {
  const auto a = grp(4, "(1 2 3 4), (1 2)");
  const auto b = grp(4, "(1 2 3 4), (1 2)");
  EXPECT_EQ(a.elements(), b.elements());
  EXPECT_TRUE(a.element(0).is_identity());
  for (const auto& h : two_generated_subgroups(4)) EXPECT_EQ(24 % h.order(), 0u);
}

TEST(ConjugacyClasses, Examples) {
  EXPECT_EQ(grp(3, "(1 2), (1 2 3)").conjugacy_classes().size(), 3u);
  EXPECT_EQ(grp(3, "(1 2 3)").conjugacy_classes().size(), 3u);
  EXPECT_EQ(grp(3, "").conjugacy_classes().size(), 1u);
  EXPECT_EQ(PermutationGroup::symmetric(5).conjugacy_classes().size(), 7u);
}

TEST(ConjugacyClasses, ClassEquation) {
  for (const auto& h : two_generated_subgroups(4)) {
    std::size_t total = 0;
    for (const auto& c : h.conjugacy_classes()) total += c.size();
    EXPECT_EQ(total, h.order());
  }
}

TEST(PRegularClasses, Examples) {
  const auto s3 = grp(3, "(1 2), (1 2 3)");
  EXPECT_EQ(s3.p_regular_class_count(3), 2u);
  EXPECT_EQ(s3.p_regular_class_count(5), 3u);
  EXPECT_EQ(grp(3, "(1 2 3)").p_regular_class_count(2), 3u);
  EXPECT_EQ(PermutationGroup::symmetric(5).p_regular_class_count(5), 6u);
}

TEST(PRegularClasses, EqualsClassCountForCoprimeP) {
  for (const auto& h : two_generated_subgroups(4))
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
      if (h.is_p_prime(p)) EXPECT_EQ(h.p_regular_class_count(p), h.conjugacy_classes().size());
}

TEST(Orbits, Examples) {
  using V = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(grp(3, "(1 2)").orbits(), (V{{0, 1}, {2}}));
  EXPECT_EQ(grp(3, "(1 2 3)").orbits(), (V{{0, 1, 2}}));
  EXPECT_EQ(grp(4, "").orbits(), (V{{0}, {1}, {2}, {3}}));
}

TEST(Orbits, SubgroupOrbitsRefine) {
  std::mt19937_64 rng(3);
  const auto subs = two_generated_subgroups(4);
  for (const auto& g : subs)
    for (const auto& h : subs) {
      bool sub = true;
      for (const auto& x : h.elements()) sub &= g.contains(x);
      if (!sub) continue;
      // Each orbit of h sits inside one orbit of g.
      for (const auto& o : h.orbits()) {
        std::size_t hits = 0;
        for (const auto& big : g.orbits())
          if (std::find(big.begin(), big.end(), o.front()) != big.end()) {
            for (auto x : o) EXPECT_NE(std::find(big.begin(), big.end(), x), big.end());
            ++hits;
          }
        EXPECT_EQ(hits, 1u);
      }
    }
}

TEST(HyperfocalRank, Examples) {
  EXPECT_EQ(grp(3, "(1 2 3)").hyperfocal_rank(2, 4).rank, 2u);
  EXPECT_EQ(grp(2, "(1 2)").hyperfocal_rank(3, 3).rank, 1u);
  EXPECT_EQ(grp(5, "").hyperfocal_rank(5, 25).rank, 0u + 5u - 5u);
  const auto r = grp(4, "(1 2)(3 4)").hyperfocal_rank(3, 2);
  EXPECT_TRUE(r.semisimple_case);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_THROW(grp(3, "(1 2)").hyperfocal_rank(2, 4), NotPPrimeGroup);
}

TEST(HyperfocalRank, RankPlusOrbitsIsN) {
  for (const auto& h : two_generated_subgroups(4))
    for (std::uint32_t p : {2u, 3u, 5u})
      if (h.is_p_prime(p)) {
        const auto r = h.hyperfocal_rank(p, p * 2ull);
        EXPECT_EQ(r.rank + r.orbit_count, 4u);
      }
}

TEST(SignAndIndex, Examples) {
  EXPECT_EQ(parse_cycles("(1 2)", 2).sign(), -1);
  EXPECT_EQ(Permutation::identity(3).sign(), 1);
  EXPECT_EQ(parse_cycles("(1 2 3)", 3).sign(), 1);
  EXPECT_EQ(grp(3, "(1 2 3)").index_in_symmetric(), 2u);
}

TEST(Subgroups, CountsUpToConjugacy) {
  EXPECT_EQ(up_to_conjugacy(two_generated_subgroups(3)).size(), 4u);
  EXPECT_EQ(two_generated_subgroups(4).size(), 30u);
  EXPECT_EQ(up_to_conjugacy(two_generated_subgroups(4)).size(), 11u);
}
