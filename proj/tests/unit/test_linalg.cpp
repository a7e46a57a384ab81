#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "lol/affine.hpp"
#include "lol/canonical.hpp"
#include "lol/gf2.hpp"
#include "lol/textio.hpp"

namespace lol {
namespace {

using test::F;

TEST(Mat, TextRoundTrip) {
  Ring r = F(2, 2);
  Mat m = parse_mat(r, "1,2;0,3");
  EXPECT_EQ(m(0, 1), 2);
  EXPECT_EQ(format_mat(m), "1,2;0,3");
  Ring w = Ring::witt(Field::make(2, 2));
  Mat x = parse_mat(w, "(1,0),(2,3);(0,1),(1,1)");
  EXPECT_EQ(format_mat(x), "(1,0),(2,3);(0,1),(1,1)");
  EXPECT_EQ(parse_mat(Ring::integers(), "-1,1;0,1")(0, 0), -1);
  EXPECT_THROW(parse_mat(r, "1,2;3"), Error);
  EXPECT_THROW(parse_mat(r, "1,7;0,1"), Error);
}

TEST(Mat, InverseOverEveryRing) {
  std::vector<Ring> rings = {F(2), F(3), F(2, 2), F(3, 2), Ring::witt(Field::make(2, 1)),
                             Ring::witt(Field::make(2, 2)), Ring::witt(Field::make(3, 1)), Ring::zmod(4),
                             Ring::zmod(9), Ring::zmod(8)};
  for (const Ring& r : rings)
    for (int n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        Mat a = test::random_invertible(r, n);
        Mat b = mat_inv(a);
        EXPECT_TRUE((a * b).is_identity()) << r.name();
        EXPECT_TRUE((b * a).is_identity()) << r.name();
      }
}

TEST(Mat, IntegerInverseAndDeterminant) {
  Ring z = Ring::integers();
  Mat s1 = Mat::from_rows(z, {{-1, -1, 0}, {0, 1, 0}, {0, 0, -1}});
  EXPECT_EQ(mat_det(s1), 1);
  EXPECT_TRUE((s1 * mat_inv(s1)).is_identity());
  Mat m = Mat::from_rows(z, {{2, 1}, {7, 4}});
  EXPECT_EQ(mat_det(m), 1);
  EXPECT_EQ(mat_inv(m), Mat::from_rows(z, {{4, -1}, {-7, 2}}));
  Mat sing = Mat::from_rows(z, {{2, 0}, {0, 1}});
  EXPECT_EQ(mat_det(sing), 2);
  EXPECT_THROW(mat_inv(sing), Error);
}

TEST(Mat, DeterminantIsMultiplicative) {
  for (const Ring& r : {F(3), F(2, 2), Ring::zmod(9), Ring::witt(Field::make(2, 1))})
    for (int trial = 0; trial < 20; ++trial) {
      Mat a = test::random_mat(r, 4, 4), b = test::random_mat(r, 4, 4);
      EXPECT_EQ(mat_det(a * b), r.mul(mat_det(a), mat_det(b))) << r.name();
    }
}

TEST(Mat, SingularInverseThrows) {
  try {
    mat_inv(parse_mat(F(2), "1,1;1,1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  try {
    mat_inv(parse_mat(Ring::zmod(4), "2,1;0,2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}

TEST(Mat, DimensionAndRingMismatch) {
  EXPECT_THROW(Mat::identity(F(2), 2) * Mat::identity(F(2), 3), Error);
  EXPECT_THROW(Mat::identity(F(2), 2) + Mat::identity(F(3), 2), Error);
}

TEST(Mat, KernelPartRoundTrip) {
  Ring r = F(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Mat x = test::random_mat(r, 3, 3);
    EXPECT_EQ(kernel_part(kernel_element(x)), x);
  }
  try {
    kernel_part(teichmuller_lift(parse_mat(r, "1,1;0,1")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KernelEscape);
  }
}

TEST(Mat, KernelIsAbelianAndMatchesAddition) {
  // (I + iota(x))(I + iota(y)) = I + iota(x + y)
  Ring r = F(3);
  for (int trial = 0; trial < 20; ++trial) {
    Mat x = test::random_mat(r, 3, 3), y = test::random_mat(r, 3, 3);
    EXPECT_EQ(kernel_element(x) * kernel_element(y), kernel_element(x + y));
  }
}

TEST(Mat, BridgeMatricesIsMultiplicative) {
  for (std::int64_t n : {4, 9}) {
    Ring z = Ring::zmod(n);
    for (int trial = 0; trial < 20; ++trial) {
      Mat a = test::random_mat(z, 3, 3), b = test::random_mat(z, 3, 3);
      EXPECT_EQ(zp2_to_witt(a * b), zp2_to_witt(a) * zp2_to_witt(b));
      EXPECT_EQ(witt_to_zp2(zp2_to_witt(a)), a);
    }
  }
}

TEST(Mat, PermutationConvention) {
  // P e_j = e_{sigma(j)}, so P E_ij P^-1 = E_{sigma(i) sigma(j)}.
  Ring r = F(2);
  auto perm = parse_cycles("(2354)", 5);
  EXPECT_EQ(perm, (std::vector<int>{0, 2, 4, 1, 3}));
  Mat p = permutation_matrix(r, perm);
  Mat a = Mat::unit(r, 5, 1, 2) + Mat::unit(r, 5, 2, 3) + Mat::unit(r, 5, 4, 5);
  Mat b = Mat::unit(r, 5, 1, 3) + Mat::unit(r, 5, 3, 5) + Mat::unit(r, 5, 2, 4);
  EXPECT_EQ(p * a * mat_inv(p), b);
}

TEST(Gf2, AgreesWithGenericPath) {
  Ring r = F(2);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      Mat a = test::random_mat(r, n, n), b = test::random_mat(r, n, n);
      gf2::Word wa = gf2::from_mat(a), wb = gf2::from_mat(b);
      EXPECT_EQ(gf2::to_mat(gf2::mul(wa, wb, n), n), a * b);
      EXPECT_EQ(gf2::RightMul(wb, n)(wa), gf2::mul(wa, wb, n));
      EXPECT_EQ(gf2::rank(wa, n), mat_rank(a));
      EXPECT_EQ(gf2::expand(gf2::compact(wa, n), n), wa);
      auto inv = gf2::inverse(wa, n);
      EXPECT_EQ(inv.has_value(), mat_rank(a) == n);
      if (inv) EXPECT_EQ(gf2::to_mat(*inv, n), mat_inv(a));
    }
}

TEST(Modp, BitPackedAndGenericAgree) {
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 23, cols = 1 + (trial * 7) % 19;
    ModpMatrix a(2, rows, cols);
    for (auto& x : a.data) x = static_cast<std::uint8_t>(bit(test::rng()) & bit(test::rng()));
    std::vector<std::uint8_t> b(rows);
    for (auto& x : b) x = static_cast<std::uint8_t>(bit(test::rng()));
    ModpOptions generic;
    generic.force_generic = true;
    ModpSolution s1 = solve_modp(a, b), s2 = solve_modp(a, b, generic);
    ASSERT_EQ(s1.feasible, s2.feasible);
    EXPECT_EQ(s1.rank, s2.rank);
    EXPECT_EQ(s1.x, s2.x);
    EXPECT_EQ(s1.kernel, s2.kernel);
    if (!s1.feasible) {
      // y A = 0, y b = 1
      for (const auto* s : {&s1, &s2}) {
        unsigned yb = 0;
        for (int i = 0; i < rows; ++i) yb ^= s->certificate[i] & b[i];
        EXPECT_EQ(yb, 1u);
        for (int j = 0; j < cols; ++j) {
          unsigned ya = 0;
          for (int i = 0; i < rows; ++i) ya ^= s->certificate[i] & a.at(i, j);
          EXPECT_EQ(ya, 0u);
        }
      }
    }
  }
}

TEST(Affine, RandomFeasibleSystemsOverF9) {
  Ring r = F(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = test::random_mat(r, 3, 3), b = test::random_mat(r, 3, 3), x0 = test::random_mat(r, 3, 3);
    AffineSystem sys;
    sys.ring = r;
    sys.unknowns.push_back({3, 3, {}});
    LinearMap map = [a, b](const Mat& x) { return a * x + x * b; };
    sys.equations.push_back({"ax+xb", {{0, map}}, map(x0)});
    AffineResult res = solve_affine(sys);
    ASSERT_TRUE(res.feasible);
    EXPECT_TRUE(check_solution(sys, res.solution));
    for (const auto& k : res.kernel) EXPECT_TRUE(map(k[0]).is_zero());
  }
}

TEST(Affine, SupportRestrictsUnknowns) {
  Ring r = F(2);
  AffineSystem sys;
  sys.ring = r;
  sys.unknowns.push_back({2, 2, {{0, 0}, {0, 1}, {1, 1}}});
  sys.equations.push_back({"x", {{0, [](const Mat& x) { return x; }}}, parse_mat(r, "0,0;1,0")});
  AffineResult res = solve_affine(sys);
  EXPECT_FALSE(res.feasible);
  EXPECT_TRUE(check_certificate(sys, res.certificate));
}

TEST(Affine, AnticommutatorEquationHasNoSolution) {
  // T X + X T = I over M_2(F_2), T = [[0,1],[1,1]]
  Ring r = F(2);
  Mat t = parse_mat(r, "0,1;1,1");
  Mat id = Mat::identity(r, 2);
  int solutions = 0;
  for (const Mat& x : test::all_mats(r, 2)) solutions += (t * x + x * t == id);
  ASSERT_EQ(solutions, 0);

  AffineSystem sys;
  sys.ring = r;
  sys.unknowns.push_back({2, 2, {}});
  sys.equations.push_back({"tx+xt", {{0, [t](const Mat& x) { return t * x + x * t; }}}, id});
  AffineResult res = solve_affine(sys);
  EXPECT_FALSE(res.feasible);
  EXPECT_TRUE(check_certificate(sys, res.certificate));
}

TEST(Canonical, CayleyHamiltonAndMinimalPolynomial) {
  for (const Ring& r : {F(2), F(3), F(2, 2), F(3, 2)})
    for (int n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 30; ++trial) {
        Mat a = test::random_mat(r, n, n);
        SimilarityData d = similarity_data(a);
        EXPECT_EQ(d.charpoly.degree(), n);
        EXPECT_TRUE(poly_eval(d.charpoly, a).is_zero());
        EXPECT_TRUE(poly_eval(d.minpoly, a).is_zero());
        EXPECT_TRUE(divides(d.minpoly, d.charpoly));
        for (const auto& part : d.primary) {
          Poly smaller = divmod(d.minpoly, part.prime).first;
          EXPECT_FALSE(poly_eval(smaller, a).is_zero());
        }
        Poly prod = Poly::constant(r.field(), 1);
        for (std::size_t k = 0; k < d.invariant_factors.size(); ++k) {
          prod = prod * d.invariant_factors[k];
          if (k) EXPECT_TRUE(divides(d.invariant_factors[k - 1], d.invariant_factors[k]));
        }
        EXPECT_EQ(prod, d.charpoly);
        EXPECT_EQ(d.invariant_factors.back(), d.minpoly);
      }
}

TEST(Canonical, CompanionRecoversPolynomial) {
  FieldPtr f = Field::make(3, 2);
  std::uniform_int_distribution<unsigned> coef(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<unsigned> c(1 + trial % 6);
    for (auto& x : c) x = coef(test::rng());
    c.push_back(1);
    Poly g(f, c);
    EXPECT_EQ(char_poly(companion(g)), g);
    EXPECT_EQ(min_poly(companion(g)), g);
  }
}

void expect_round_trip(const Mat& a) {
  CanonicalForm cf = canonical_form(a);
  EXPECT_EQ(cf.conjugator * a * mat_inv(cf.conjugator), cf.form);
  CanonicalForm fr = canonical_form(a, FormKind::Frobenius);
  EXPECT_EQ(fr.conjugator * a * mat_inv(fr.conjugator), fr.form);
}

TEST(Canonical, RoundTripEverySmallMatrix) {
  for (const Mat& a : test::all_mats(F(2), 3)) expect_round_trip(a);
  for (const Mat& a : test::all_mats(F(3), 2)) expect_round_trip(a);
  for (const Mat& a : test::all_mats(F(2, 2), 2)) expect_round_trip(a);
}

TEST(Canonical, RoundTripRandomFiveByFive) {
  Ring r = F(2);
  for (int trial = 0; trial < 100000; ++trial) {
    Mat a = test::random_mat(r, 5, 5);
    CanonicalForm cf = canonical_form(a);
    ASSERT_EQ(cf.conjugator * a * mat_inv(cf.conjugator), cf.form);
  }
}

TEST(Canonical, JordanOrdering) {
  Ring r = F(2);
  Mat a = Mat::identity(r, 5) + Mat::unit(r, 5, 1, 5);
  CanonicalForm cf = canonical_form(a, FormKind::Jordan);
  EXPECT_EQ(cf.blocks, (std::vector<JordanBlock>{{1, 2}, {1, 1}, {1, 1}, {1, 1}}));
  Mat c(r, 5, 5);
  c(0, 1) = 1;
  c(2, 2) = 1;
  c(3, 3) = 1;
  c(3, 4) = 1;
  c(4, 4) = 1;
  EXPECT_EQ(canonical_form(c, FormKind::Jordan).blocks,
            (std::vector<JordanBlock>{{0, 2}, {1, 2}, {1, 1}}));
  EXPECT_THROW(canonical_form(companion(Poly(Field::make(2, 1), {1, 1, 1})), FormKind::Jordan), Error);
}

// Conjugacy classes by brute-force orbits under GL_n versus invariant factors.
void compare_with_orbits(const Ring& r, int n, std::size_t expected_classes) {
  auto all = test::all_mats(r, n);
  std::vector<Mat> gl;
  for (const Mat& g : all)
    if (is_invertible(g)) gl.push_back(g);
  std::map<std::string, int> orbit_of;
  int orbits = 0;
  for (const Mat& a : all) {
    if (orbit_of.count(a.key())) continue;
    for (const Mat& g : gl) orbit_of[(g * a * mat_inv(g)).key()] = orbits;
    ++orbits;
  }
  EXPECT_EQ(static_cast<std::size_t>(orbits), expected_classes);
  std::map<std::string, std::set<int>> by_signature;
  std::map<int, std::set<std::string>> sig_of_orbit;
  for (const Mat& a : all) {
    std::string sig;
    for (const auto& f : similarity_data(a).invariant_factors) sig += f.to_string() + "|";
    by_signature[sig].insert(orbit_of[a.key()]);
    sig_of_orbit[orbit_of[a.key()]].insert(sig);
  }
  for (const auto& [sig, os] : by_signature) EXPECT_EQ(os.size(), 1u) << sig;
  for (const auto& [o, sigs] : sig_of_orbit) EXPECT_EQ(sigs.size(), 1u);
  // Witnesses from the intertwiner solve.
  for (int trial = 0; trial < 50; ++trial) {
    const Mat& a = all[test::rng()() % all.size()];
    const Mat& g = gl[test::rng()() % gl.size()];
    Mat b = g * a * mat_inv(g);
    auto w = conjugating_matrix(a, b);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w * a * mat_inv(*w), b);
  }
}

TEST(Canonical, ConjugacyMatchesOrbitsM2F2) { compare_with_orbits(F(2), 2, 6); }
TEST(Canonical, ConjugacyMatchesOrbitsM3F2) { compare_with_orbits(F(2), 3, 14); }
TEST(Canonical, ConjugacyMatchesOrbitsM2F3) { compare_with_orbits(F(3), 2, 12); }

std::vector<gf2::Poly2> to_poly2(const std::vector<Poly>& fs) {
  std::vector<gf2::Poly2> out;
  for (const auto& f : fs) {
    gf2::Poly2 w = 0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) w |= static_cast<gf2::Poly2>(f.coeffs()[k]) << k;
    out.push_back(w);
  }
  return out;
}

TEST(Gf2, InvariantFactorsAgreeWithGenericPath) {
  for (const Mat& a : test::all_mats(F(2), 3))
    EXPECT_EQ(gf2::invariant_factors(gf2::from_mat(a), 3), to_poly2(similarity_data(a).invariant_factors));
  for (int trial = 0; trial < 3000; ++trial) {
    Mat a = test::random_mat(F(2), 5, 5);
    EXPECT_EQ(gf2::invariant_factors(gf2::from_mat(a), 5), to_poly2(similarity_data(a).invariant_factors));
  }
}

}  // namespace
}  // namespace lol
