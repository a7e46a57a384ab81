#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lol/cohom.hpp"

namespace lol {
namespace {

using test::F;

Mat klein_block(const Ring& r, int n, const Mat& block) {
  Mat m = Mat::identity(r, n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, 2 + j) = block(i, j);
  return m;
}

BicyclicSpec klein_spec(int n) {
  const Ring r = F(2);
  const Mat s = Mat::from_ints(r, {{1, 0}, {0, 1}});
  const Mat t = Mat::from_ints(r, {{0, 1}, {1, 1}});
  return BicyclicSpec::make(klein_block(r, n, s), klein_block(r, n, t));
}

BicyclicSpec e1n_spec(const Ring& r, int n, std::int64_t x, std::int64_t y) {
  Mat rho = Mat::identity(r, n), mu = Mat::identity(r, n);
  rho(0, n - 1) = x;
  mu(0, n - 1) = y;
  return BicyclicSpec::make(rho, mu);
}

void expect_witness(const BicyclicSpec& z, const BicyclicTriple& x, const ObstructionResult& res) {
  ASSERT_TRUE(res.splits);
  ASSERT_TRUE(res.u && res.v);
  EXPECT_EQ(bicyclic_boundary(z, *res.u, *res.v), x);
}

TEST(Bicyclic, SpecValidation) {
  const Ring r = F(2);
  const Mat a = Mat::from_ints(r, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const Mat b = Mat::from_ints(r, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  EXPECT_THROW(BicyclicSpec::make(a, b), Error);
  EXPECT_THROW(BicyclicSpec::make(a, a), Error);  // <a, a> has 2 elements, not 4
  EXPECT_THROW(BicyclicSpec::make(a, Mat::identity(r, 3), 4, 1), Error);
  const auto z = BicyclicSpec::make(a, Mat::identity(r, 3));
  EXPECT_EQ(z.s, 2);
  EXPECT_EQ(z.t, 1);
}

TEST(Bicyclic, TripleOverF4) {
  const Ring r = F(2, 2);
  const std::int64_t x = 1, y = 2;
  const auto z = e1n_spec(r, 2, x, y);
  const auto tr = glift_triple(z, Variant::GLift);
  const auto fx = r.field();
  EXPECT_EQ(tr.a, Mat::unit(r, 2, 1, 2, fx->mul(x, x)));
  EXPECT_EQ(tr.b, Mat::unit(r, 2, 1, 2, fx->mul(y, y)));
  EXPECT_TRUE(tr.c.is_zero());
}

TEST(Bicyclic, TripleOfTrivialGroup) {
  const Ring r = F(3);
  const auto z = BicyclicSpec::make(Mat::identity(r, 2), Mat::identity(r, 2));
  const auto tr = glift_triple(z, Variant::GLift);
  EXPECT_TRUE(tr.a.is_zero() && tr.b.is_zero() && tr.c.is_zero());
}

TEST(Bicyclic, KleinTripleIsTheDisplayedBlocks) {
  const Ring r = F(2);
  const auto z = klein_spec(5);
  const auto tr = glift_triple(z, Variant::GLift);
  Mat s = Mat::zero(r, 5, 5), t = Mat::zero(r, 5, 5);
  s(0, 2) = s(1, 3) = 1;
  t(0, 3) = t(1, 2) = t(1, 3) = 1;
  EXPECT_EQ(tr.a, s);
  EXPECT_EQ(tr.b, t);
  EXPECT_TRUE(tr.c.is_zero());
}

TEST(Bicyclic, NonSplitExamples) {
  const Ring f4 = F(2, 2);
  for (int n : {2, 3})
    for (std::int64_t x = 1; x < 4; ++x)
      for (std::int64_t y = 1; y < 4; ++y) {
        if (x == y) continue;
        const auto z = e1n_spec(f4, n, x, y);
        const auto res = bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift);
        EXPECT_TRUE(res.cocycle_valid);
        EXPECT_FALSE(res.splits) << n << " " << x << " " << y;
        EXPECT_FALSE(res.certificate.empty());
      }
  for (int n : {4, 5}) {
    const auto z = klein_spec(n);
    EXPECT_FALSE(bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift).splits) << n;
  }
  const Ring f9 = F(3, 2);
  const auto z = e1n_spec(f9, 2, 1, 3);
  EXPECT_EQ(z.s, 3);
  EXPECT_FALSE(bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift).splits);
}

TEST(Bicyclic, DependentGeneratorsSplitOverF9) {
  // x = 1, y = 2 span the same F_3-line, so <rho, mu> is cyclic and fails the model.
  const Ring f9 = F(3, 2);
  EXPECT_THROW(e1n_spec(f9, 2, 1, 2), Error);
}

TEST(Bicyclic, ZeroTripleSplits) {
  const auto z = klein_spec(4);
  const Mat zero = Mat::zero(z.ring(), 4, 4);
  const BicyclicTriple x{zero, zero, zero};
  const auto res = bicyclic_split(z, x, Variant::GLift);
  expect_witness(z, x, res);
  EXPECT_TRUE(res.u->is_zero() && res.v->is_zero());
}

TEST(Bicyclic, RejectsNonCocycle) {
  const auto z = klein_spec(4);
  const Mat zero = Mat::zero(z.ring(), 4, 4);
  const BicyclicTriple x{Mat::unit(z.ring(), 4, 3, 1), zero, zero};
  EXPECT_FALSE(bicyclic_cocycle_failures(z, x, Variant::GLift).empty());
  EXPECT_THROW(bicyclic_split(z, x, Variant::GLift), Error);
}

TEST(Bicyclic, LiftIndependence) {
  const std::vector<BicyclicSpec> specs{klein_spec(4), e1n_spec(F(2, 2), 2, 1, 2), e1n_spec(F(3, 2), 2, 1, 3)};
  for (const auto& z : specs) {
    const Ring& r = z.ring();
    const int n = z.degree();
    const auto base = glift_triple(z, Variant::GLift);
    for (int trial = 0; trial < 100; ++trial) {
      const Mat u = test::random_mat(r, n, n), v = test::random_mat(r, n, n);
      const Mat rl = mat_inv(kernel_element(u)) * teichmuller_lift(z.rho);
      const Mat ml = kernel_element(v) * teichmuller_lift(z.mu);
      const auto moved = triple_from_lifts(z, rl, ml, Variant::GLift);
      EXPECT_TRUE(bicyclic_cocycle_failures(z, moved, Variant::GLift).empty());
      const BicyclicTriple diff{moved.a - base.a, moved.b - base.b, moved.c - base.c};
      const auto res = bicyclic_split(z, diff, Variant::GLift);
      expect_witness(z, diff, res);
      EXPECT_EQ(diff, bicyclic_boundary(z, u, v));
    }
  }
}

TEST(Bicyclic, BLiftWitnessIsGLiftWitness) {
  const Ring r = F(2);
  const Mat a = Mat::from_ints(r, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const Mat b = Mat::from_ints(r, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  const auto z = BicyclicSpec::make(a, b);
  const auto tb = glift_triple(z, Variant::BLift);
  const auto rb = bicyclic_split(z, tb, Variant::BLift);
  const auto rg = bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift);
  if (rb.splits) {
    expect_witness(z, tb, rb);
    EXPECT_TRUE(rg.splits);
  }
  EXPECT_THROW(glift_triple(BicyclicSpec::make(a.transpose(), Mat::identity(r, 3)), Variant::BLift), Error);
}

TEST(Cocycle, TrivialGroupGivesZeroTable) {
  const Ring r = F(2);
  const auto g = Subgroup::closure(r, 3, {});
  const auto c = glift_cocycle(g, Variant::GLift);
  ASSERT_EQ(c.table.size(), 1u);
  EXPECT_TRUE(c.table[0].is_zero());
  EXPECT_TRUE(generic_split(c).splits);
}

TEST(Cocycle, CyclicOrderTwoOverF2) {
  const Ring r = F(2);
  const Mat g = Mat::from_ints(r, {{1, 1}, {0, 1}});
  const auto grp = Subgroup::closure(r, 2, {g});
  const auto c = glift_cocycle(grp, Variant::GLift);
  // (1,0) + (1,0) = (0,1) in W_2(F_2) puts E12 in c(g, g).
  EXPECT_EQ(c(g, g), Mat::unit(r, 2, 1, 2));
  EXPECT_TRUE(is_normalized(c));
  EXPECT_FALSE(cocycle_failure(c).has_value());
  const auto res = generic_split(c);
  EXPECT_TRUE(res.splits);
  ASSERT_EQ(res.section.size(), 2u);
  EXPECT_EQ(res.section[grp.index(g)] * res.section[grp.index(g)], Mat::identity(res.section[0].ring(), 2));
}

TEST(Cocycle, ZeroTableSplitsWithZeroPhi) {
  const Ring r = F(3);
  const auto g = Subgroup::closure(r, 2, {Mat::from_ints(r, {{1, 1}, {0, 1}})});
  CocycleTable c{g, GModule::full(r, 2), std::vector<Mat>(9, Mat::zero(r, 2, 2)), {}};
  const auto res = generic_split(c);
  EXPECT_TRUE(res.splits);
  for (const Mat& m : res.phi) EXPECT_TRUE(m.is_zero());
}

TEST(Cocycle, BrokenTableIsRejected) {
  const Ring r = F(2);
  const auto g = Subgroup::closure(r, 2, {Mat::from_ints(r, {{1, 1}, {0, 1}})});
  CocycleTable c{g, GModule::full(r, 2), std::vector<Mat>(4, Mat::zero(r, 2, 2)), {}};
  c.table[1] = Mat::identity(r, 2);  // c(1, g) != 0 breaks the identity at (1, 1, g)
  EXPECT_TRUE(cocycle_failure(c).has_value());
  EXPECT_THROW(generic_split(c), Error);
}

TEST(Cocycle, KleinGroupDoesNotSplit) {
  const auto z = klein_spec(4);
  const auto g = Subgroup::closure(z.ring(), 4, {z.rho, z.mu});
  const auto c = glift_cocycle(g, Variant::GLift);
  EXPECT_FALSE(cocycle_failure(c).has_value());
  const auto res = generic_split(c);
  EXPECT_FALSE(res.splits);
  EXPECT_FALSE(res.certificate.empty());
}

TEST(Cocycle, BoundsAreEnforced) {
  const Ring r = F(2);
  EXPECT_THROW(glift_cocycle(general_linear(r, 3), Variant::GLift), Error);
  const auto u3 = unitriangular(r, 3);
  EXPECT_THROW(glift_cocycle(Subgroup::closure(r, 3, {Mat::from_ints(r, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})}),
                             Variant::BLift),
               Error);
  EXPECT_NO_THROW(glift_cocycle(u3, Variant::BLift));
}

// Both deciders on every bicyclic pair of a group.
int compare_on_pairs(const Subgroup& big, Variant v) {
  int compared = 0;
  for (const Mat& a : big.elements())
    for (const Mat& b : big.elements()) {
      if (a * b != b * a) continue;
      std::optional<BicyclicSpec> z;
      try {
        z = BicyclicSpec::make(a, b);
      } catch (const Error&) {
        continue;
      }
      const bool bic = bicyclic_split(*z, glift_triple(*z, v), v).splits;
      const auto g = Subgroup::closure(a.ring(), a.rows(), {a, b});
      const bool gen = generic_split(glift_cocycle(g, v)).splits;
      EXPECT_EQ(bic, gen) << a.key() << " " << b.key();
      ++compared;
    }
  return compared;
}

TEST(Cocycle, OracleEquivalenceU3F2) {
  const auto u3 = unitriangular(F(2), 3);
  EXPECT_GT(compare_on_pairs(u3, Variant::GLift), 0);
  EXPECT_GT(compare_on_pairs(u3, Variant::BLift), 0);
}

TEST(Cocycle, OracleEquivalenceU2F4) {
  const auto u2 = unitriangular(F(2, 2), 2);
  EXPECT_GT(compare_on_pairs(u2, Variant::GLift), 0);
}

TEST(CupCarry, OrderTwo) {
  const Ring r = F(2);
  const Mat s = Mat::from_ints(r, {{1, 1}, {0, 1}});
  const auto h = Subgroup::closure(r, 2, {s});
  const auto u = Character::from_generators(h, {{s, Frac(1, 2)}});
  const auto module = GModule::full(r, 2);
  const Mat a = Mat::unit(r, 2, 1, 2);
  const auto c = cup_carry_cocycle(u, a, module);
  const Mat e = Mat::identity(r, 2);
  EXPECT_EQ(c(s, s), a);
  EXPECT_TRUE(c(e, s).is_zero() && c(s, e).is_zero() && c(e, e).is_zero());
  EXPECT_FALSE(cocycle_failure(c).has_value());
  EXPECT_THROW(cup_carry_cocycle(u, Mat::unit(r, 2, 2, 1), module), Error);
  const auto zero = cup_carry_cocycle(Character::trivial(h), a, module);
  for (const Mat& m : zero.table) EXPECT_TRUE(m.is_zero());
}

TEST(CupCarry, EighthWraps) {
  const Ring r = F(2);
  Mat g = Mat::identity(r, 5);
  for (int i = 0; i + 1 < 5; ++i) g(i, i + 1) = 1;
  const auto h = Subgroup::closure(r, 5, {g});
  ASSERT_EQ(h.order(), 8u);
  const auto v = Character::from_generators(h, {{g, Frac(1, 8)}});
  const Mat a = Mat::unit(r, 5, 1, 5);
  const auto c = cup_carry_cocycle(v, a, GModule::full(r, 5));
  EXPECT_FALSE(cocycle_failure(c).has_value());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      EXPECT_EQ(c(g.pow(i), g.pow(j)).is_zero(), i + j < 8) << i << " " << j;
}

}  // namespace
}  // namespace lol
