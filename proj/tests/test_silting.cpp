#include <gtest/gtest.h>

#include <set>

#include "support/silting_oracle.hpp"
#include "tautilt/silting/silting.hpp"

using namespace tautilt;

namespace {

const FiniteField F2(2, 1);

PermutationGroup grp(std::size_t n, const std::string& gens) { return PermutationGroup(n, parse_generators(gens, n)); }

BasedAlgebra a2_quiver() { return from_quiver(F2, 2, {{"a", 0, 1}}, {}, 4); }

BasedAlgebra two_cycle_algebra() { return from_quiver(F2, 2, {{"a", 0, 1}, {"b", 1, 0}}, {"a*b", "b*a"}, 4); }

}  // namespace

TEST(BasedAlgebra, QuiverExamples) {
  const auto dual = truncated_polynomial_algebra(F2, 2);
  EXPECT_EQ(dual.dimension(), 2u);
  EXPECT_EQ(dual.vertex_count(), 1u);
  const auto a2 = a2_quiver();
  EXPECT_EQ(a2.dimension(), 3u);
  EXPECT_EQ(a2.cartan_matrix(), (std::vector<std::vector<std::int64_t>>{{1, 0}, {1, 1}}));
  const auto rem = two_loop_counterexample_algebra(F2);
  EXPECT_EQ(rem.dimension(), 12u);
  EXPECT_EQ(rem.cartan_matrix(), (std::vector<std::vector<std::int64_t>>{{3, 3}, {3, 3}}));
  EXPECT_EQ(rem.radical_basis().size(), 10u);
}

TEST(BasedAlgebra, RelationSyntax) {
  const auto a = from_quiver(F2, 1, {{"x", 0, 0}, {"y", 0, 0}}, {"x*x", "y*y", "x*y = y*x"}, 6);
  EXPECT_EQ(a.dimension(), 4u);  // 1, x, y, xy
  EXPECT_THROW(from_quiver(F2, 1, {{"x", 0, 0}}, {"x*z"}, 4), ParseError);
  EXPECT_THROW(from_quiver(F2, 1, {{"x", 0, 0}}, {"x*x = "}, 4), ParseError);
  EXPECT_THROW(from_quiver(F2, 1, {{"x", 0, 0}}, {"x*x - x"}, 4), InvalidArgument);
  EXPECT_THROW(from_quiver(F2, 1, {{"x", 0, 0}}, {}, 5), InfiniteDimensional);
}

TEST(BasedAlgebra, GroupAndSkewAlgebras) {
  const auto c2 = from_group_algebra(grp(2, "(1 2)"), F2);
  EXPECT_EQ(c2.vertex_count(), 1u);
  const FiniteField f4(2, 2);
  const auto c3 = from_group_algebra(grp(3, "(1 2 3)"), f4);
  EXPECT_EQ(c3.vertex_count(), 3u);
  EXPECT_EQ(c3.cartan_matrix(), (std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto klein = from_group_algebra(grp(4, "(1 2)(3 4), (1 3)(2 4)"), F2);
  EXPECT_EQ(klein.vertex_count(), 1u);
  const auto skew = from_skew_coinvariant(3, grp(3, "(1 2 3)"), 2);
  EXPECT_EQ(skew.dimension(), 18u);
  EXPECT_EQ(skew.vertex_count(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(skew.corner_dim(i, j), 2u);
}

TEST(BasedAlgebra, RejectsBadInput) {
  // F2 x F2 with only the identity as idempotent: the corner is not local.
  std::vector<StructureConstant> mult{{0, 0, 0, 1}, {1, 1, 1, 1}};
  EXPECT_THROW(BasedAlgebra(F2, 2, {"u", "v"}, mult, {{1, 1}}), InvalidArgument);
  // F2[b]/(b^2 + b + 1) is local, but its residue field is larger than F2.
  std::vector<StructureConstant> f4{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  EXPECT_THROW(BasedAlgebra(F2, 2, {"1", "b"}, f4, {{1, 0}}), InvalidArgument);
  // c*(b*b) = c but (c*b)*b = 0.
  std::vector<StructureConstant> nonassoc{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 2, 1},
                                          {0, 2, 2, 1}, {2, 0, 2, 1}};
  EXPECT_THROW(BasedAlgebra(F2, 3, {"1", "b", "c"}, nonassoc, {{1, 0, 0}}), InvalidArgument);
  EXPECT_THROW(BasedAlgebra(F2, 1, {"1"}, {{0, 0, 0, 1}}, {{0}}), InvalidArgument);
}

TEST(Homotopy, StalkComplexes) {
  const auto a = two_loop_counterexample_algebra(F2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto pi = stalk_complex(a, i, false), pj = stalk_complex(a, j, false);
      const auto qi = stalk_complex(a, i, true), qj = stalk_complex(a, j, true);
      EXPECT_EQ(hom_in_homotopy(a, pi, pj, 0), a.corner_dim(i, j));
      EXPECT_EQ(hom_in_homotopy(a, pi, pj, 1), 0u);
      EXPECT_EQ(hom_in_homotopy(a, qi, pj, 1), a.corner_dim(i, j));
      EXPECT_EQ(hom_in_homotopy(a, pi, qj, -1), a.corner_dim(i, j));
      EXPECT_EQ(hom_in_homotopy(a, pi, qj, 1), 0u);
      EXPECT_EQ(hom_in_homotopy(a, pi, pj, 2), 0u);
    }
  EXPECT_TRUE(is_two_term_silting(a, regular_silting(a)));
  EXPECT_TRUE(is_two_term_silting(a, regular_silting(a, true)));
  EXPECT_FALSE(is_two_term_silting(a, {stalk_complex(a, 0, false), stalk_complex(a, 0, true)}));
  const auto other = a2_quiver();
  EXPECT_THROW(hom_in_homotopy(other, stalk_complex(a, 0, false), TwoTermComplex{BlockMap{{5}, {}, {{}}}}, 0),
               AlgebraMismatch);
}

TEST(Explore, MatchesBruteForceOracle) {
  const std::vector<std::pair<std::string, BasedAlgebra>> cases{
      {"dual numbers", truncated_polynomial_algebra(F2, 2)},
      {"A2", a2_quiver()},
      {"two-cycle", two_cycle_algebra()},
      {"Klein four", from_group_algebra(grp(4, "(1 2)(3 4), (1 3)(2 4)"), F2)},
      {"coinvariants n=2", from_skew_coinvariant(2, PermutationGroup(2, {}), 2)},
      {"F4 C3", from_group_algebra(grp(3, "(1 2 3)"), FiniteField(2, 2))},
  };
  const std::map<std::string, std::size_t> expected{{"dual numbers", 2}, {"A2", 5}, {"Klein four", 2},
                                                     {"coinvariants n=2", 2}, {"F4 C3", 8}, {"two-cycle", 6}};
  for (const auto& [name, a] : cases) {
    SCOPED_TRACE(name);
    const auto g = explore(a, 100);
    EXPECT_EQ(g.status, ExploreStatus::CompleteFinite);
    if (a.field().order() == 2) EXPECT_EQ(oracle::explored_keys(a, g), oracle::BruteForceSilting(a).silting_keys());
    if (expected.count(name)) EXPECT_EQ(g.objects.size(), expected.at(name));
  }
}

TEST(Explore, GraphIsRegularAndOrdered) {
  for (const auto& a : {a2_quiver(), two_cycle_algebra(), from_skew_coinvariant(3, grp(3, "(1 2 3)"), 2)}) {
    const auto g = explore(a, 30);
    const std::size_t t = a.vertex_count();
    std::vector<std::size_t> incoming(g.objects.size(), 0), outgoing(g.objects.size(), 0);
    for (const auto& e : g.edges) {
      ++incoming[e.to];
      ++outgoing[e.from];
      const auto& hi = g.objects[e.from];
      const auto& lo = g.objects[e.to];
      // T > mu(T): Hom(T, mu(T)[1]) = 0 while the reverse is nonzero.
      std::size_t forward = 0, backward = 0;
      for (const auto& x : hi)
        for (const auto& y : lo) {
          forward += hom_in_homotopy(a, x, y, 1);
          backward += hom_in_homotopy(a, y, x, 1);
        }
      EXPECT_EQ(forward, 0u);
      EXPECT_GT(backward, 0u);
    }
    for (std::size_t i = 0; i < g.objects.size(); ++i) {
      EXPECT_TRUE(is_two_term_silting(a, g.objects[i]));
      const auto st = support_tau_tilting_of(a, g.objects[i]);
      EXPECT_EQ(st.module_count() + st.projective_vertices.size(), t);
      if (g.status == ExploreStatus::CompleteFinite) {
        EXPECT_EQ(outgoing[i] + g.left_exits[i], t);
        EXPECT_EQ(outgoing[i] + incoming[i], t) << "object " << i;
      }
    }
  }
}

TEST(Mutation, RightUndoesLeft) {
  for (const auto& a : {a2_quiver(), two_cycle_algebra(), two_loop_counterexample_algebra(F2),
                        from_skew_coinvariant(3, grp(3, "(1 2 3)"), 2)}) {
    const auto g = explore(a, 4);
    for (const auto& e : g.edges) {
      const auto& lo = g.objects[e.to];
      const auto hi_key = g.key(a, e.from);
      // Find the summand of lo that is new and mutate back.
      bool undone = false;
      for (std::size_t i = 0; i < lo.size() && !undone; ++i) {
        try {
          const auto back = right_mutate(a, lo, i);
          undone = silting_key(a, back) == hi_key;
        } catch (const NotTwoTerm&) {
        }
      }
      EXPECT_TRUE(undone);
    }
  }
  const auto a = a2_quiver();
  const auto bottom = regular_silting(a, true);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_THROW(left_mutate(a, bottom, i), NotTwoTerm);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_THROW(right_mutate(a, regular_silting(a), i), NotTwoTerm);
}

TEST(Explore, SupportTauTiltingOfA2) {
  const auto a = a2_quiver();
  const auto g = explore(a, 10);
  std::set<std::pair<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>>> pairs;
  for (const auto& o : g.objects) {
    auto st = support_tau_tilting_of(a, o);
    std::sort(st.module_dimension_vectors.begin(), st.module_dimension_vectors.end());
    pairs.insert({st.module_dimension_vectors, st.projective_vertices});
  }
  // Vertex 1 is the source of the arrow: P_1 = (1,1), P_2 = S_2 = (0,1).
  using V = std::vector<std::vector<std::size_t>>;
  const std::set<std::pair<V, std::vector<std::size_t>>> expected{
      {V{{0, 1}, {1, 1}}, {}},  {V{{1, 0}, {1, 1}}, {}}, {V{{1, 0}}, {1}},
      {V{{0, 1}}, {0}},         {V{}, {0, 1}}};
  EXPECT_EQ(pairs, expected);
}

TEST(Explore, ThreadCountDoesNotChangeResult) {
  const auto a = from_skew_coinvariant(3, grp(3, "(1 2 3)"), 2);
  const auto g1 = explore(a, 40, 1);
  const auto g4 = explore(a, 40, 4);
  ASSERT_EQ(g1.objects.size(), g4.objects.size());
  EXPECT_EQ(g1.edges, g4.edges);
  for (std::size_t i = 0; i < g1.objects.size(); ++i) EXPECT_EQ(g1.key(a, i), g4.key(a, i));
}

TEST(Explore, BudgetIsRespected) {
  const auto a = two_loop_counterexample_algebra(F2);
  // g-vectors grow exponentially along both branches here, so keep it small.
  const auto g = explore(a, 5);
  EXPECT_EQ(g.status, ExploreStatus::BudgetExhausted);
  EXPECT_EQ(g.objects.size(), 5u);
  EXPECT_EQ(g.key(a, 4), (SiltingKey{{3, -1}, {8, -3}}));
  const auto small = explore(a2_quiver(), 3);
  EXPECT_EQ(small.status, ExploreStatus::BudgetExhausted);
  EXPECT_THROW(explore(a2_quiver(), 0), InvalidArgument);
}
