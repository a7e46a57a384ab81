#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "lol/abelian.hpp"
#include "lol/canonical.hpp"
#include "lol/character.hpp"
#include "lol/gf2group.hpp"
#include "lol/gmodule.hpp"
#include "lol/shape.hpp"
#include "lol/textio.hpp"

namespace lol {
namespace {

using test::F;

Mat I(const Ring& r, int n) { return Mat::identity(r, n); }
Mat E(const Ring& r, int n, int i, int j) { return Mat::unit(r, n, i, j); }

TEST(Subgroup, ClosureOrders) {
  EXPECT_EQ(unitriangular(F(2), 3).order(), 8u);
  EXPECT_EQ(general_linear(F(2), 3).order(), 168u);
  EXPECT_EQ(general_linear(F(3), 2).order(), 48u);
  EXPECT_EQ(general_linear(F(2, 2), 2).order(), 180u);
  EXPECT_EQ(general_linear(F(2), 4).order(), 20160u);
  EXPECT_EQ(upper_triangular(F(3), 2).order(), 12u);
  const Ring r = F(2);
  EXPECT_EQ(Subgroup::closure({I(r, 3) + E(r, 3, 1, 2) + E(r, 3, 2, 3)}).order(), 4u);
}

TEST(Subgroup, ClosureErrors) {
  const Ring r = F(2);
  EXPECT_THROW(Subgroup::closure({E(r, 2, 1, 2)}), Error);
  try {
    general_linear(r, 3);
    Subgroup::closure(general_linear(r, 3).generators(), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
  std::vector<Mat> not_closed{I(r, 2), I(r, 2) + E(r, 2, 1, 2), I(r, 2) + E(r, 2, 2, 1)};
  EXPECT_THROW(Subgroup::from_elements(not_closed), Error);
}

TEST(Subgroup, ElementsSortedAndIndexed) {
  const Subgroup g = general_linear(F(3), 2);
  for (std::size_t i = 0; i + 1 < g.order(); ++i) EXPECT_LT(g.element(i).key(), g.element(i + 1).key());
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index(g.element(i)), i);
  EXPECT_FALSE(g.contains(Mat::zero(F(3), 2, 2)));
}

TEST(Subgroup, LagrangeOnSubgroupsOfGL3) {
  const Ring r = F(2);
  const Subgroup g = general_linear(r, 3);
  for (std::size_t i = 0; i < g.order(); i += 7)
    for (std::size_t j = 0; j < g.order(); j += 11) {
      const Subgroup h = Subgroup::closure({g.element(i), g.element(j)});
      EXPECT_EQ(g.order() % h.order(), 0u);
      EXPECT_TRUE(h.is_subgroup_of(g));
    }
}

TEST(Subgroup, DerivedCenterNormal) {
  const Ring r = F(2);
  const Subgroup u = unitriangular(r, 3);
  const Subgroup z = Subgroup::closure({I(r, 3) + E(r, 3, 1, 3)});
  EXPECT_TRUE(u.derived().same_elements(z));
  EXPECT_TRUE(u.center().same_elements(z));
  EXPECT_TRUE(z.is_normal_in(u));
  EXPECT_FALSE(u.is_abelian());
  EXPECT_EQ(u.exponent(), 4);
  const Subgroup g = general_linear(r, 3);
  EXPECT_EQ(g.derived().order(), 168u);
  EXPECT_FALSE(u.is_normal_in(g));
  EXPECT_EQ(u.normalizer_in(g).order(), 8u);
  EXPECT_EQ(general_linear(F(3), 2).derived().order(), 24u);
}

TEST(Subgroup, ConjugateAndIntersect) {
  const Ring r = F(2);
  const Subgroup u = unitriangular(r, 3);
  const Mat w = permutation_matrix(r, parse_cycles("(13)", 3));
  const Subgroup l = u.conjugate(w);
  for (const Mat& x : l.elements())
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) EXPECT_EQ(x(i, j), 0);
  EXPECT_EQ(u.intersect(l).order(), 1u);
  EXPECT_EQ(join(u, l).order(), 168u);
}

TEST(Cosets, TransversalsPartition) {
  const Ring r = F(2);
  const Subgroup g = general_linear(r, 3);
  const Subgroup u = unitriangular(r, 3);
  const auto left = coset_reps(g, u);
  const auto right = right_coset_reps(g, u);
  ASSERT_EQ(left.size(), 21u);
  ASSERT_EQ(right.size(), 21u);
  std::set<std::string> seen;
  for (const Mat& x : left)
    for (const Mat& h : u.elements()) EXPECT_TRUE(seen.insert((x * h).key()).second);
  EXPECT_EQ(seen.size(), 168u);
  EXPECT_TRUE(left[0].is_identity());
  for (std::size_t i = 1; i < left.size(); ++i)
    for (const Mat& h : u.elements()) EXPECT_LE(left[i].key(), (left[i] * h).key());
  EXPECT_EQ(coset_reps(g, g).size(), 1u);
  EXPECT_TRUE(coset_reps(g, g)[0].is_identity());
  // Bruhat decomposition: one double coset per permutation.
  EXPECT_EQ(double_coset_reps(g, u, u).size(), 6u);
}

TEST(Cosets, Sylow) {
  const Ring r = F(2);
  const Subgroup g = general_linear(r, 3);
  const Subgroup u = unitriangular(r, 3);
  EXPECT_TRUE(is_sylow2(g, u));
  EXPECT_EQ(sylow2_count(g, u), 21u);
  EXPECT_FALSE(is_sylow2(g, Subgroup::closure({I(r, 3) + E(r, 3, 1, 2)})));
  const Subgroup odd = Subgroup::closure({companion(Poly(Field::make(2, 1), {1, 1, 0, 1}))});
  EXPECT_EQ(odd.order(), 7u);
  EXPECT_TRUE(is_sylow2(odd, Subgroup::trivial(r, 3)));
  EXPECT_THROW(is_sylow2(u, g), Error);
}

TEST(Abelian, Divisors) {
  const Ring r = F(2);
  EXPECT_EQ(abelianize(unitriangular(r, 5)).divisors, (std::vector<std::int64_t>{2, 2, 2, 2}));
  EXPECT_EQ(abelianize(unitriangular(r, 3)).divisors, (std::vector<std::int64_t>{2, 2}));
  EXPECT_TRUE(abelianize(general_linear(r, 3)).divisors.empty());
  EXPECT_EQ(abelianize(general_linear(F(3), 2)).divisors, (std::vector<std::int64_t>{2}));
  const Subgroup c = Subgroup::closure({I(r, 4) + E(r, 4, 1, 2) + E(r, 4, 2, 3) + E(r, 4, 3, 4)});
  const Subgroup z2 = Subgroup::closure({I(r, 4) + E(r, 4, 1, 4)});
  EXPECT_EQ(c.order(), 4u);
  EXPECT_EQ(abelianize(c).divisors, (std::vector<std::int64_t>{4}));
  // GL_1(F_4) x GL_1(F_3)-style product inside GL_2(F_4)... kept over F_2:
  const Subgroup u4 = unitriangular(F(2, 2), 2);
  EXPECT_EQ(abelianize(u4).divisors, (std::vector<std::int64_t>{2, 2}));
  (void)z2;
}

TEST(Abelian, CoordinatesAreAHomomorphism) {
  const Subgroup g = unitriangular(F(2), 4);
  const AbelianStructure ab = abelianize(g);
  EXPECT_EQ(ab.quotient_order() * static_cast<std::int64_t>(ab.derived.order()),
            static_cast<std::int64_t>(g.order()));
  for (const Mat& x : g.elements())
    for (const Mat& y : g.generators()) {
      const auto& cx = ab.coordinates(x);
      const auto& cy = ab.coordinates(y);
      const auto& cxy = ab.coordinates(x * y);
      for (std::size_t i = 0; i < ab.divisors.size(); ++i)
        EXPECT_EQ((cx[i] + cy[i]) % ab.divisors[i], cxy[i]);
    }
  for (const Mat& d : ab.derived.elements())
    for (std::int64_t c : ab.coordinates(d)) EXPECT_EQ(c, 0);
}

TEST(Centralizer, AgainstFilter) {
  const Ring r = F(2);
  const Subgroup g = general_linear(r, 3);
  for (const Mat& a : test::all_mats(r, 3)) {
    const Subgroup c = centralizer_of_matrix(a);
    EXPECT_TRUE(c.same_elements(centralizer_in(g, a))) << format_mat(a);
  }
}

TEST(Centralizer, PaperSizes) {
  const Ring r = F(2);
  const Mat j5 = jordan_block(r, 0, 5);
  const Subgroup ga = centralizer_of_matrix(j5);
  EXPECT_EQ(ga.order(), 16u);
  EXPECT_EQ(abelianize(ga).divisors, (std::vector<std::int64_t>{2, 8}));
  Mat d = Mat::zero(r, 5, 5);
  d(3, 3) = d(4, 4) = 1;
  EXPECT_EQ(centralizer_of_matrix(d).order(), 1008u);
  EXPECT_EQ(centralizer_of_matrix(E(r, 5, 1, 5)).order(), 21504u);
  EXPECT_EQ(centralizer_of_matrix(I(r, 3)).order(), 168u);
  EXPECT_THROW(centralizer_of_matrix(E(r, 5, 1, 5), 1000), Error);
}

TEST(Centralizer, OverLargerFields) {
  const Ring r = F(3);
  const Subgroup g = general_linear(r, 2);
  for (const Mat& a : test::all_mats(r, 2)) EXPECT_TRUE(centralizer_of_matrix(a).same_elements(centralizer_in(g, a)));
  const Ring f4 = F(2, 2);
  const Subgroup g4 = general_linear(f4, 2);
  for (int k = 0; k < 30; ++k) {
    const Mat a = test::random_mat(f4, 2, 2);
    EXPECT_TRUE(centralizer_of_matrix(a).same_elements(centralizer_in(g4, a)));
  }
}

TEST(Unitriangularize, Examples) {
  const Ring r = F(2);
  const Subgroup p = Subgroup::closure({permutation_matrix(r, parse_cycles("(12)", 2))});
  const Mat g = unitriangularize(p);
  const Subgroup u2 = unitriangular(r, 2);
  EXPECT_TRUE(p.conjugate(g).is_subgroup_of(u2));
  EXPECT_TRUE(unitriangular(r, 5).conjugate(unitriangularize(unitriangular(r, 5))).is_subgroup_of(unitriangular(r, 5)));
  EXPECT_THROW(unitriangularize(general_linear(r, 2)), Error);
}

TEST(Unitriangularize, RandomConjugatesOfPGroups) {
  for (auto [p, m, n] : {std::tuple{2u, 1u, 4}, std::tuple{3u, 1u, 3}, std::tuple{2u, 2u, 3}}) {
    const Ring r = F(p, m);
    const Subgroup u = unitriangular(r, n);
    for (int k = 0; k < 5; ++k) {
      const Mat x = test::random_invertible(r, n);
      const Subgroup pk = Subgroup::closure({x * u.element(3 * k + 1) * mat_inv(x), x * u.element(5 * k + 2) * mat_inv(x)});
      const Mat g = unitriangularize(pk);
      EXPECT_TRUE(pk.conjugate(g).is_subgroup_of(u));
    }
  }
}

TEST(GModule, FixedPoints) {
  const Ring r = F(2);
  const GModule m5 = GModule::full(r, 5);
  // On all of M_5 the identity is fixed too; the trace-zero part is E15 alone.
  const Subgroup u5 = unitriangular(r, 5);
  const auto fixed = m5.fixed_points(u5);
  ASSERT_EQ(fixed.size(), 2u);
  EXPECT_EQ(mat_rank(Mat::from_rows(r, {fixed[0].data(), fixed[1].data(), I(r, 5).data(), E(r, 5, 1, 5).data()})), 2);
  const auto fixed0 = GModule::trace_zero(r, 5).fixed_points(u5);
  ASSERT_EQ(fixed0.size(), 1u);
  EXPECT_EQ(fixed0[0], E(r, 5, 1, 5));
  EXPECT_EQ(GModule::trace_zero(F(3), 3).dimension(), 8);
  EXPECT_EQ(m5.fixed_points(Subgroup::trivial(r, 5)).size(), 25u);
  EXPECT_EQ(GModule::upper(r, 3).fixed_points(Subgroup::trivial(r, 3)).size(), 6u);
  // The scalars are the only invariants of GL_3.
  const auto scalars = GModule::full(r, 3).fixed_points(general_linear(r, 3));
  ASSERT_EQ(scalars.size(), 1u);
  EXPECT_TRUE(scalars[0].is_identity());
}

TEST(GModule, FrobeniusTwistedAction) {
  const Ring r = F(2, 2);
  const GModule m = GModule::full(r, 2);
  Mat g = I(r, 2);
  g(0, 1) = 2;  // the generator of F_4
  const Mat x = E(r, 2, 2, 2);
  // g^(2) has entry 2^2 = 3 above the diagonal.
  Mat t = I(r, 2);
  t(0, 1) = 3;
  EXPECT_EQ(m.act(g, x), t * x * mat_inv(t));
  for (int k = 0; k < 50; ++k) {
    const Mat a = test::random_invertible(r, 2), b = test::random_invertible(r, 2);
    const Mat y = test::random_mat(r, 2, 2);
    EXPECT_EQ(m.act(a * b, y), m.act(a, m.act(b, y)));
  }
}

TEST(GModule, NormMaps) {
  const Ring r = F(2);
  const GModule m = GModule::full(r, 5);
  // J_4(1) + J_1(0) with sigma = I + E15: the norm lands on E15.
  Mat a = jordan_block(r, 1, 5);
  a(3, 4) = 0;
  a(4, 4) = 0;
  const Mat sigma = I(r, 5) + E(r, 5, 1, 5), tau = I(r, 5) + E(r, 5, 2, 5);
  EXPECT_EQ(m.norm_cyclic(sigma, a), E(r, 5, 1, 5));
  EXPECT_TRUE(m.norm_cyclic(tau, E(r, 5, 1, 5)).is_zero());

  const Subgroup g = general_linear(r, 3);
  const Subgroup u = unitriangular(r, 3);
  const GModule m3 = GModule::full(r, 3);
  const Mat x = E(r, 3, 1, 3);
  EXPECT_EQ(m3.norm(g, g, I(r, 3)), I(r, 3));
  const Mat n = m3.norm(g, u, x);
  for (const Mat& h : g.generators()) EXPECT_EQ(m3.act(h, n), n);
  // Transitivity through U <= B <= G.
  const Subgroup mid = Subgroup::closure({I(r, 3) + E(r, 3, 1, 3), I(r, 3) + E(r, 3, 1, 2), I(r, 3) + E(r, 3, 2, 3),
                                          permutation_matrix(r, parse_cycles("(23)", 3))});
  ASSERT_TRUE(u.is_subgroup_of(mid));
  EXPECT_EQ(m3.norm(g, mid, m3.norm(mid, u, x)), n);
  EXPECT_THROW(m3.norm(g, u, E(r, 3, 2, 1)), Error);
}

TEST(Character, CoordinateCharacters) {
  const Ring r = F(2);
  const Subgroup u = unitriangular(r, 3);
  const Character u12 = coordinate_character(u, 1, 2);
  EXPECT_EQ(u12(I(r, 3) + E(r, 3, 1, 2)), Frac(1, 2));
  EXPECT_THROW(coordinate_character(u, 1, 3), Error);
  EXPECT_EQ(u12.kernel().order(), 4u);
  EXPECT_EQ(all_characters(u).size(), 4u);
  EXPECT_EQ(all_characters(unitriangular(r, 5)).size(), 16u);
}

TEST(Character, FromGeneratorsDetectsConflicts) {
  const Ring r = F(2);
  const Mat g = I(r, 3) + E(r, 3, 1, 2) + E(r, 3, 2, 3);
  const Subgroup c = Subgroup::closure({g});
  const Character v = Character::from_generators(c, {{g, Frac(1, 4)}});
  EXPECT_EQ(v(g * g), Frac(1, 2));
  EXPECT_THROW(Character::from_generators(c, {{g, Frac(1, 3)}}), Error);
}

TEST(Character, ExtensionCriterionMatchesSearch) {
  const Ring r = F(2);
  std::vector<Subgroup> overs{unitriangular(r, 3), unitriangular(F(2, 2), 2),
                              Subgroup::closure({I(r, 4) + E(r, 4, 1, 2) + E(r, 4, 2, 3) + E(r, 4, 3, 4),
                                                 I(r, 4) + E(r, 4, 1, 3), I(r, 4) + E(r, 4, 2, 4)})};
  int extendable = 0, blocked = 0;
  for (const Subgroup& k : overs)
    for (const Mat& h : k.elements()) {
      const Subgroup hs = Subgroup::closure(k.ring(), k.degree(), {h});
      for (const Character& u : all_characters(hs)) {
        const bool a = character_extends(u, k);
        EXPECT_EQ(a, character_extends_bruteforce(u, k));
        (a ? extendable : blocked)++;
      }
    }
  EXPECT_GT(extendable, 0);
  EXPECT_GT(blocked, 0);
  const Subgroup u3 = unitriangular(r, 3);
  const Subgroup z = Subgroup::closure({I(r, 3) + E(r, 3, 1, 3)});
  const Character faithful = Character::from_generators(z, {{I(r, 3) + E(r, 3, 1, 3), Frac(1, 2)}});
  EXPECT_FALSE(character_extends(faithful, u3));
}

TEST(Shape, Materialize) {
  const Ring r = F(2);
  EXPECT_TRUE(shape_group(r, "1,a,b;0,1,c;0,0,1").same_elements(unitriangular(r, 3)));
  EXPECT_EQ(shape_group(r, "*,*;*,*").order(), 6u);
  EXPECT_EQ(shape_group(r, "a+c,a,b;b,c,a+b;a,b,c").order(), 7u);
  EXPECT_EQ(shape_group(r, "a+b,a;a,b").order(), 3u);
  EXPECT_THROW(shape_group(r, "1,a;0,a"), Error);
  EXPECT_THROW(Shape::parse(r, "1,a;0"), Error);
  EXPECT_EQ(shape_group(F(3), "1,a;0,1").order(), 3u);
  const Shape s = Shape::parse(r, "1,a,b;0,1,a;0,0,1");
  EXPECT_TRUE(matches_shape(s, I(r, 3) + E(r, 3, 1, 2) + E(r, 3, 2, 3)));
  EXPECT_FALSE(matches_shape(s, I(r, 3) + E(r, 3, 1, 2)));
}

TEST(Gf2Group, AgreesWithGeneric) {
  for (int n = 2; n <= 4; ++n) {
    const auto g = gf2::Group::closure(gf2::gl_generators(n), n);
    EXPECT_EQ(g.order(), gf2::gl_order(n));
    const Subgroup generic = general_linear(F(2), n);
    for (const Mat& x : generic.elements()) EXPECT_TRUE(g.contains(gf2::from_mat(x)));
  }
  const auto gl3 = gf2::Group::closure(gf2::gl_generators(3), 3);
  EXPECT_TRUE(gl3.is_perfect());
  const Ring r = F(2);
  std::vector<gf2::Word> u;
  const Subgroup u4 = unitriangular(r, 4);
  for (const Mat& x : u4.generators()) u.push_back(gf2::from_mat(x));
  const auto ug = gf2::Group::closure(u, 4);
  EXPECT_EQ(ug.order(), 64u);
  EXPECT_EQ(ug.derived().order(), u4.derived().order());
  EXPECT_EQ(gf2::gl_order(5), 9'999'360u);
  const auto gl6 = gf2::Group::closure({gf2::gl_generators(6)[0]}, 6);
  EXPECT_EQ(gl6.order(), 2u);
}

}  // namespace
}  // namespace lol
