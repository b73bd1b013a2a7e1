#include <gtest/gtest.h>

#include <random>

#include "tautilt/screen/screen.hpp"

using namespace tautilt;

namespace {

PermutationGroup grp(std::size_t n, const std::string& gens) { return PermutationGroup(n, parse_generators(gens, n)); }
SymmetricIntegerMatrix sym(std::vector<std::vector<std::int64_t>> r) { return SymmetricIntegerMatrix(std::move(r)); }

}  // namespace

TEST(WeaklySymmetricScreen, Examples) {
  const auto a = weakly_symmetric_screen(sym({{3, 3}, {3, 3}}));
  EXPECT_EQ(a.verdict, ScreenOutcome::TauTiltingInfinite);
  EXPECT_FALSE(a.not_g_tame);
  EXPECT_EQ(*a.witness, (IntegerVector{1, -1}));
  const auto b = weakly_symmetric_screen(SymmetricIntegerMatrix::identity(2));
  EXPECT_EQ(b.verdict, ScreenOutcome::Inconclusive);
  EXPECT_FALSE(b.witness);
  const auto c = weakly_symmetric_screen(sym({{1, 2}, {2, 1}}));
  EXPECT_EQ(c.verdict, ScreenOutcome::NotGTame);
  EXPECT_TRUE(c.tau_tilting_infinite);
  EXPECT_TRUE(c.not_g_tame);
  EXPECT_LT(sgn(sym({{1, 2}, {2, 1}}).quadratic_value(*c.witness)), 0);
}

TEST(SelfinjectiveScreen, Examples) {
  const auto ones = sym({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto a = selfinjective_screen(ones, Permutation::identity(3));
  EXPECT_EQ(a.verdict, ScreenOutcome::TauTiltingInfinite);
  EXPECT_EQ(*a.witness, (IntegerVector{1, -1, 0}));
  EXPECT_EQ(selfinjective_screen(SymmetricIntegerMatrix::identity(2), parse_cycles("(1 2)", 2)).verdict,
            ScreenOutcome::Inconclusive);
  EXPECT_EQ(selfinjective_screen(sym({{1, 1}, {1, 1}}), parse_cycles("(1 2)", 2)).verdict, ScreenOutcome::Inconclusive);
  // Without folding the same matrix would be flagged.
  EXPECT_EQ(selfinjective_screen(sym({{1, 1}, {1, 1}}), Permutation::identity(2)).verdict,
            ScreenOutcome::TauTiltingInfinite);
}

TEST(SelfinjectiveScreen, FoldingIdentityAndWitnessValidity) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(-2, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 1 + trial % 4;
    std::vector<std::vector<std::int64_t>> r(t, std::vector<std::int64_t>(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i; j < t; ++j) r[i][j] = r[j][i] = e(rng);
    const SymmetricIntegerMatrix c(r);
    std::vector<std::uint16_t> img(t);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation nu(img);
    std::vector<std::vector<std::size_t>> orbits;
    const auto folded = fold(c, nu, &orbits);
    IntegerVector w(orbits.size());
    for (auto& x : w) x = e(rng);
    EXPECT_EQ(folded.quadratic_value(w), c.quadratic_value(unfold(w, orbits, t)));
    const auto v = selfinjective_screen(c, nu);
    if (v.witness) {
      EXPECT_LE(sgn(c.quadratic_value(*v.witness)), 0);
      EXPECT_TRUE(is_invariant(*v.witness, nu));
    }
  }
}

TEST(CartanFormula, Examples) {
  EXPECT_EQ(cartan_formula(3, grp(3, "(1 2 3)"), 2).matrix.rows(),
            (std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
  EXPECT_EQ(cartan_formula(2, grp(2, "(1 2)"), 3).matrix.rows(), (std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1}}));
  EXPECT_EQ(cartan_formula(3, grp(3, "(1 2), (1 2 3)"), 5).matrix.rows(),
            (std::vector<std::vector<std::int64_t>>{{1, 1, 2}, {1, 1, 2}, {2, 2, 4}}));
  EXPECT_EQ(cartan_formula(1, grp(1, ""), 2).matrix.rows(), (std::vector<std::vector<std::int64_t>>{{1}}));
  EXPECT_THROW(cartan_formula(3, grp(3, "(1 2)"), 2), NotPPrimeGroup);
}

TEST(CartanFormula, RankOneAndWeightedSumAndChopAgreement) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& h : up_to_conjugacy(two_generated_subgroups(n)))
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        if (!h.is_p_prime(p)) continue;
        const auto r = cartan_formula(n, h, p);
        EXPECT_EQ(signature(r.matrix).positive, 1u);
        EXPECT_EQ(signature(r.matrix).negative, 0u);
        std::int64_t weighted = 0, dsum = 0;
        for (std::size_t i = 0; i < r.dims.size(); ++i) {
          dsum += r.dims[i];
          for (std::size_t j = 0; j < r.dims.size(); ++j) weighted += r.dims[i] * r.dims[j] * r.matrix(i, j);
        }
        EXPECT_EQ(weighted, static_cast<std::int64_t>(factorial(n) * h.order()));
        std::int64_t total = 0;
        for (const auto& row : r.matrix.rows())
          for (auto x : row) total += x;
        EXPECT_EQ(total, static_cast<std::int64_t>(h.index_in_symmetric()) * dsum * dsum);
        if (n <= 3) EXPECT_EQ(cartan_via_chop(n, h, r).rows(), r.matrix.rows());
      }
}

TEST(Main0Witness, Examples) {
  const auto a = main0_witness(3, grp(3, "(1 2 3)"), 2);
  EXPECT_EQ(a.v, (IntegerVector{2, -2, 0}));
  const auto b = main0_witness(3, grp(3, "(1 2), (1 2 3)"), 5);
  EXPECT_EQ(b.v, (IntegerVector{2, 2, -2}));
  EXPECT_THROW(main0_witness(2, grp(2, ""), 2), NotApplicable);
}

TEST(Main0Witness, ScreenAcceptsWitnessDirection) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& h : up_to_conjugacy(two_generated_subgroups(n)))
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        if (!h.is_p_prime(p)) continue;
        const auto r = cartan_formula(n, h, p);
        if (r.simples.size() < std::min<std::size_t>(p, 3)) {
          EXPECT_THROW(main0_witness(r, p), NotApplicable);
          continue;
        }
        const auto w = main0_witness(r, p);
        EXPECT_EQ(sgn(r.matrix.quadratic_value(w.v)), 0);
        EXPECT_EQ(selfinjective_screen(r.matrix, nakayama_permutation(r)).verdict, ScreenOutcome::TauTiltingInfinite);
      }
}

TEST(Decide, Examples) {
  auto d1 = decide(3, 3, 2, grp(2, "(1 2)"));
  EXPECT_EQ(d1.verdict, Finiteness::Finite);
  EXPECT_EQ(d1.rule, "Thm-main2");
  EXPECT_EQ(d1.hyperfocal->rank, 1u);
  auto d2 = decide(2, 4, 3, grp(3, "(1 2 3)"));
  EXPECT_EQ(d2.verdict, Finiteness::Infinite);
  EXPECT_EQ(d2.rule, "Thm-main2");
  EXPECT_EQ(d2.hyperfocal->rank, 2u);
  EXPECT_EQ(d2.witness, (IntegerVector{2, -2, 0}));
  auto d3 = decide(2, 2, 3, grp(3, "(1 2 3)"));
  EXPECT_EQ(d3.verdict, Finiteness::Unknown);
  EXPECT_FALSE(d3.pl_ge_n);
  auto d4 = decide(5, 5, 5, PermutationGroup::symmetric(5));
  EXPECT_EQ(d4.verdict, Finiteness::Infinite);
  EXPECT_EQ(d4.rule, "Cor-main1");
  EXPECT_EQ(d4.ibr, 6u);
  auto d5 = decide(3, 2, 4, grp(4, "(1 2)(3 4)"));
  EXPECT_EQ(d5.verdict, Finiteness::Finite);
  EXPECT_EQ(d5.rule, "semisimple");
}

TEST(Decide, BelowThresholdRules) {
  const auto a = decide(3, 3, 4, grp(4, "(1 2)"));
  EXPECT_EQ(a.verdict, Finiteness::Finite);
  EXPECT_EQ(a.rule, "Prop-2.15a");
  EXPECT_FALSE(a.pl_ge_n);
  const auto b = decide(3, 3, 4, grp(4, "(1 2)(3 4)"));
  EXPECT_EQ(b.verdict, Finiteness::Unknown);
  EXPECT_EQ(b.rule, "unknown");
  const auto c = decide(2, 2, 3, grp(3, "(1 2)"));
  EXPECT_FALSE(c.p_prime_group);
  EXPECT_EQ(c.verdict, Finiteness::Unknown);
}

TEST(Decide, ExitCodesAreTotal) {
  EXPECT_EQ(exit_code(Finiteness::Finite), 0);
  EXPECT_EQ(exit_code(Finiteness::Infinite), 1);
  EXPECT_EQ(exit_code(Finiteness::Unknown), 2);
}
