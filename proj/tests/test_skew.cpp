#include <gtest/gtest.h>

#include <random>

#include "tautilt/skew/skew_algebra.hpp"

using namespace tautilt;

namespace {

PermutationGroup grp(std::size_t n, const std::string& gens) { return PermutationGroup(n, parse_generators(gens, n)); }

template <class F>
SkewVector<F> x_times(const SkewAlgebra<F>& a, const std::string& poly, std::size_t g) {
  const auto c = normal_form(parse_polynomial(poly, a.n()), a.field());
  return a.multiply(a.from_coinvariant(c), a.group_element(g));
}

}  // namespace

TEST(SkewMultiply, Examples) {
  const RationalField q;
  const SkewAlgebra<RationalField> a(2, grp(2, "(1 2)"), q);
  const std::size_t s = 1;  // the transposition
  EXPECT_TRUE(a.is_zero(a.multiply(x_times(a, "x1", s), x_times(a, "x1", s))));
  EXPECT_TRUE(a.equal(a.multiply(a.group_element(s), a.group_element(a.group().inverse_index(s))), a.one()));
  const SkewAlgebra<FiniteField> b(2, grp(2, "(1 2)"), FiniteField(2, 1));
  EXPECT_TRUE(b.equal(b.multiply(b.group_element(1), x_times(b, "x1", 0)), x_times(b, "x1", 1)));
}

TEST(SkewMultiply, DegreeZeroIsGroupAlgebraAndAssociative) {
  const FiniteField f5(5, 1);
  const SkewAlgebra<FiniteField> a(3, grp(3, "(1 2), (1 2 3)"), f5);
  const auto& h = a.group();
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j)
      EXPECT_TRUE(a.equal(a.multiply(a.group_element(i), a.group_element(j)), a.group_element(h.product_index(i, j))));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, a.dimension() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto x = a.basis_vector(pick(rng)), y = a.basis_vector(pick(rng)), z = a.basis_vector(pick(rng));
    EXPECT_TRUE(a.equal(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z))));
  }
}

TEST(SkewMultiply, GradingAndNilpotentPositivePart) {
  const FiniteField f2(2, 1);
  for (std::size_t n = 2; n <= 4; ++n) {
    const SkewAlgebra<FiniteField> a(n, PermutationGroup::symmetric(n), f2);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, a.dimension() - 1);
    for (int t = 0; t < 100; ++t) {
      const std::size_t i = pick(rng), j = pick(rng);
      EXPECT_TRUE(a.is_homogeneous(a.multiply(a.basis_vector(i), a.basis_vector(j)), a.degree_of(i) + a.degree_of(j)));
    }
    // Any product of top+1 positive-degree basis elements vanishes.
    std::vector<std::size_t> positive;
    for (std::size_t b = 0; b < a.dimension(); ++b)
      if (a.degree_of(b) > 0) positive.push_back(b);
    std::uniform_int_distribution<std::size_t> pp(0, positive.size() - 1);
    for (int t = 0; t < 20; ++t) {
      auto prod = a.basis_vector(positive[pp(rng)]);
      for (std::size_t k = 0; k < a.ring().top_degree(); ++k) prod = a.multiply(prod, a.basis_vector(positive[pp(rng)]));
      EXPECT_TRUE(a.is_zero(prod));
    }
  }
}

TEST(SkewMultiply, SignTwistOfDelta) {
  const RationalField q;
  for (std::size_t n = 2; n <= 4; ++n) {
    const SkewAlgebra<RationalField> a(n, PermutationGroup::symmetric(n), q);
    const auto delta = a.basis_vector(a.index(a.ring().delta_index(), 0));
    for (std::size_t s = 0; s < a.group().order(); ++s) {
      const auto lhs = a.multiply(a.group_element(s), delta);
      const auto rhs = a.scale(Rational(a.group().element(s).sign()), a.basis_vector(a.index(a.ring().delta_index(), s)));
      EXPECT_TRUE(a.equal(lhs, rhs));
    }
  }
}

TEST(Gram, Examples) {
  const auto c1 = gram_matrix(SkewAlgebra<FiniteField>(2, grp(2, "(1 2)"), FiniteField(2, 1)));
  EXPECT_EQ(c1.rank, 4u);
  EXPECT_TRUE(c1.nondegenerate);
  const auto c2 = gram_matrix(SkewAlgebra<FiniteField>(1, grp(1, ""), FiniteField(2, 1)));
  ASSERT_EQ(c2.matrix.rows(), 1u);
  EXPECT_EQ(c2.matrix(0, 0), 1u);
  const auto c3 = gram_matrix(SkewAlgebra<FiniteField>(3, grp(3, "(1 2 3)"), FiniteField(2, 1)), 3);
  EXPECT_EQ(c3.rank, 18u);
  EXPECT_TRUE(c3.nondegenerate);
  EXPECT_THROW(gram_matrix(SkewAlgebra<FiniteField>(3, grp(3, "(1 2 3)"), FiniteField(2, 1)), 1, 10), DimensionBudget);
}

TEST(Gram, MatchesPairingOfBasisVectors) {
  const SkewAlgebra<FiniteField> a(3, grp(3, "(1 2), (1 2 3)"), FiniteField(3, 1));
  const auto g = gram_matrix(a, 2);
  for (std::size_t i = 0; i < a.dimension(); i += 5)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      EXPECT_EQ(g.matrix(i, j), a.pairing(a.basis_vector(i), a.basis_vector(j)));
}

TEST(Gram, ThreadCountDoesNotChangeResult) {
  const SkewAlgebra<FiniteField> a(4, grp(4, "(1 2 3 4)"), FiniteField(3, 1));
  EXPECT_EQ(gram_matrix(a, 1).matrix, gram_matrix(a, 4).matrix);
}

TEST(Associativity, RandomTriples) {
  EXPECT_TRUE(associativity_check(SkewAlgebra<FiniteField>(2, grp(2, "(1 2)"), FiniteField(2, 1)), 1000));
  EXPECT_TRUE(associativity_check(SkewAlgebra<FiniteField>(3, grp(3, "(1 2 3)"), FiniteField(2, 1)), 1000));
  EXPECT_TRUE(associativity_check(SkewAlgebra<FiniteField>(3, grp(3, "(1 2), (1 2 3)"), FiniteField(5, 1)), 1000));
}

TEST(NondegeneracyWitness, PairsNonzero) {
  const RationalField q;
  const SkewAlgebra<RationalField> a(3, grp(3, "(1 2), (1 2 3)"), q);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, a.dimension() - 1);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int t = 0; t < 100; ++t) {
    auto x = a.zero();
    for (int k = 0; k < 4; ++k) x[pick(rng)] = c(rng);
    if (a.is_zero(x)) continue;
    EXPECT_NE(a.pairing(nondegeneracy_witness(a, x), x), 0);
  }
}

TEST(Projective, Examples) {
  const FiniteField f3(3, 1);
  const SkewAlgebra<FiniteField> a(2, grp(2, "(1 2)"), f3);
  const auto half = f3.inv(f3.from_int(2));
  const auto etriv = a.from_group_algebra({half, half});
  EXPECT_EQ(projective_of(a, etriv).dim(), 2u);
  EXPECT_EQ(projective_of(a, a.one()).dim(), 4u);
  EXPECT_THROW(projective_of(a, a.group_element(1)), NotIdempotent);

  const FiniteField f4(2, 2);
  const auto c3 = grp(3, "(1 2 3)");
  const SkewAlgebra<FiniteField> b(3, c3, f4);
  for (const auto& e : group_algebra_idempotents(c3, f4)) EXPECT_EQ(projective_of(b, b.from_group_algebra(e)).dim(), 6u);
}

TEST(Projective, DimensionsSumToAlgebraDimension) {
  for (const auto& h : up_to_conjugacy(two_generated_subgroups(3)))
    for (unsigned p : {2u, 3u, 5u}) {
      if (!h.is_abelian() || (!h.is_p_prime(p) && p_prime_part(h.order(), p) != 1)) continue;
      const auto f = splitting_field_for(h.exponent(), p);
      const SkewAlgebra<FiniteField> a(3, h, f);
      std::vector<SkewVector<FiniteField>> es;
      for (const auto& e : group_algebra_idempotents(h, f)) es.push_back(a.from_group_algebra(e));
      verify_idempotent_system(a, es);
      std::size_t total = 0;
      for (const auto& e : es) total += projective_of(a, e).dim();
      EXPECT_EQ(total, a.dimension());
    }
}

TEST(SocleType, Examples) {
  const FiniteField f3(3, 1);
  const auto s2 = grp(2, "(1 2)");
  const SkewAlgebra<FiniteField> a(2, s2, f3);
  const auto simples = simple_modules(s2, f3);
  ASSERT_EQ(simples.size(), 2u);
  const auto es = group_algebra_idempotents(s2, f3);
  EXPECT_EQ(socle_type(a, a.from_group_algebra(es[0]), simples).index, 1u);
  EXPECT_EQ(socle_type(a, a.from_group_algebra(es[1]), simples).index, 0u);
  const FiniteField f2(2, 1);
  const SkewAlgebra<FiniteField> b(2, s2, f2);
  EXPECT_THROW(socle_type(b, b.one(), simple_modules(s2, f2)), RadicalUnknown);
}

TEST(SocleType, AgreesWithSignTwist) {
  for (std::size_t n : {2u, 3u})
    for (const auto& h : up_to_conjugacy(two_generated_subgroups(n)))
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        if (!h.is_abelian() || !h.is_p_prime(p)) continue;
        const auto f = splitting_field_for(h.exponent(), p);
        const SkewAlgebra<FiniteField> a(n, h, f);
        const auto simples = simple_modules(h, f);
        const auto twist = sign_twist(simples, h);
        const auto es = group_algebra_idempotents(h, f);
        ASSERT_EQ(es.size(), simples.size());
        for (std::size_t i = 0; i < es.size(); ++i) {
          const auto label = socle_type(a, a.from_group_algebra(es[i]), simples);
          EXPECT_EQ(label.index, twist[i]);
          if (p == 2) EXPECT_EQ(label.index, i);
        }
      }
}

TEST(AsHModule, Examples) {
  const FiniteField f3(3, 1), f4(2, 2);
  const auto s2 = grp(2, "(1 2)");
  const auto c = coinvariant_module(2, s2, f3);
  ASSERT_EQ(c.generators().size(), 1u);
  EXPECT_EQ(c.dim(), 2u);
  const auto tw = coinvariant_tensor(2, s2, sign_module(s2, f3));
  EXPECT_EQ(tw.generators()[0], c.generators()[0].scaled(f3.from_int(-1)));
  const auto c3 = grp(3, "(1 2 3)");
  const auto m = coinvariant_module(3, c3, f4);
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_NO_THROW(MatModule::from_group(c3, f4, m.generators()));
}

TEST(Characters, CyclicAndKlein) {
  const FiniteField f4(2, 2), f3(3, 1);
  EXPECT_EQ(linear_characters(grp(3, "(1 2 3)"), f4).size(), 3u);
  EXPECT_EQ(linear_characters(grp(4, "(1 2), (3 4)"), f3).size(), 4u);
  EXPECT_THROW(group_algebra_idempotents(grp(3, "(1 2), (1 2 3)"), FiniteField(5, 1)), IdempotentsUnavailable);
  EXPECT_EQ(group_algebra_idempotents(grp(4, "(1 2), (3 4)"), FiniteField(2, 1)).size(), 1u);
}
