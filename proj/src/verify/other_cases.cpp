// Classes of M5(F2) whose characteristic polynomial has an irreducible factor
// of degree 2 or 3 and is not square-free.

#include <set>

#include "fixtures.hpp"

namespace lol::verify {

namespace {

using namespace fx;

Poly px(std::vector<unsigned> c) { return Poly(f2().field(), std::move(c)); }
const Poly kX = px({0, 1});
const Poly kCubic = px({1, 1, 0, 1});  // x^3 + x + 1
const Poly kQuad = px({1, 1, 1});      // x^2 + x + 1

void polys(Recorder& rec, const Mat& a, const Poly& p, const Poly& q) {
  const auto d = similarity_data(a);
  rec.expect_eq("characteristic polynomial", p.to_string(), d.charpoly.to_string());
  rec.expect_eq("minimal polynomial", q.to_string(), d.minpoly.to_string());
}

Mat with(Mat a, const std::vector<std::pair<int, int>>& ones) {
  for (const auto& [i, j] : ones) a(i - 1, j - 1) = 1;
  return a;
}

const Mat& a_cubic() {
  static const Mat a = m5("0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,0,0;0,0,0,0,0");
  return a;
}
constexpr const char* kCubicStab = "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,d,e;0,0,0,f,g";
constexpr const char* kCubicStabNil = "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,1,d;0,0,0,0,1";

const Mat& a_quad() {
  static const Mat a = m5("0,1,0,0,0;1,1,0,0,0;0,0,0,0,0;0,0,0,0,0;0,0,0,0,0");
  return a;
}

// A unique 2-Sylow subgroup whose characters are handled inside U5.
// Cases reduced through U5 also check that P's characters are coordinate ones.
void unique_sylow(Recorder& rec, const Subgroup& ga, const Subgroup& p, bool via_u5 = true) {
  sylow(rec, "P", ga, p);
  rec.expect_eq("number of 2-Sylow subgroups", 1, sylow2_count(ga, p));
  if (via_u5) handled_by_u5(rec, "P", p);
}

void case_i(Recorder& rec) {
  polys(rec, a_cubic(), kCubic * kX * kX, kCubic * kX);
  const Subgroup ga = stabilizer(rec, "G_A", a_cubic(), kCubicStab);
  rec.expect_eq("|G_A| = 7 |GL2|", 42, ga.order());
  sylow(rec, "<I + E45>", ga, Subgroup::closure({I() + E(4, 5)}));
  handled_by_u5(rec, "<I + E45>", Subgroup::closure({I() + E(4, 5)}));
}

void case_ii(Recorder& rec) {
  const Mat a = with(a_cubic(), {{4, 5}});
  polys(rec, a, kCubic * kX * kX, kCubic * kX * kX);
  const Subgroup ga = stabilizer(rec, "G_A", a, kCubicStabNil);
  unique_sylow(rec, ga, Subgroup::closure({I() + E(4, 5)}));
}

void case_iii(Recorder& rec) {
  const Mat a = with(a_cubic(), {{4, 4}, {5, 5}});
  const Poly x1 = px({1, 1});
  polys(rec, a, kCubic * x1 * x1, kCubic * x1);
  stabilizer(rec, "G_A equals the stabilizer in (i)", a, kCubicStab);
}

void case_iv(Recorder& rec) {
  const Mat a = with(a_cubic(), {{4, 4}, {5, 5}, {4, 5}});
  const Poly x1 = px({1, 1});
  polys(rec, a, kCubic * x1 * x1, kCubic * x1 * x1);
  const Subgroup ga = stabilizer(rec, "G_A equals the stabilizer in (ii)", a, kCubicStabNil);
  unique_sylow(rec, ga, Subgroup::closure({I() + E(4, 5)}));
}

const char* const kGL2F4 = "a+b,a,c+d,c,0;a,b,c,d,0;e+f,e,g+h,g,0;e,f,g,h,0;0,0,0,0,1";
const char* const kQuadP = "1,0,c+d,c,0;0,1,c,d,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1";

void case_v(Recorder& rec) {
  const Mat a = m5("0,1,0,0,0;1,1,0,0,0;0,0,0,1,0;0,0,1,1,0;0,0,0,0,0");
  polys(rec, a, kQuad * kQuad * kX, kQuad * kX);
  const Subgroup ga = stabilizer(rec, "G_A", a, kGL2F4);
  rec.expect_eq("|G_A| = |GL2(F4)|", 180, ga.order());

  // Transitive on the 15 nonzero vectors of the first four coordinates.
  std::set<std::string> orbit;
  for (const Mat& g : ga.elements()) {
    std::string col;
    for (int i = 0; i < 5; ++i) col += static_cast<char>('0' + g(i, 1));
    orbit.insert(col);
  }
  rec.expect_eq("orbit of e2 has 15 vectors", 15, orbit.size());
  const Subgroup s = shape("1,0,c+d,c,0;0,1,c,d,0;0,0,g+h,g,0;0,0,g,h,0;0,0,0,0,1");
  const Subgroup fix = ga.filter([](const Mat& g) {
    for (int i = 0; i < 5; ++i)
      if (g(i, 1) != (i == 1 ? 1u : 0u)) return false;
    return true;
  });
  rec.expect("S is the stabilizer of e2 in G_A", fix.same_elements(s));
  rec.expect_eq("[G_A : S]", 15, ga.order() / s.order());

  const Subgroup p = shape(kQuadP);
  sylow(rec, "P in G_A", ga, p);
  sylow(rec, "P in S", s, p);
  coordinate_basis(rec, "P", p, {{1, 3}, {2, 3}});
  handled_by_u5(rec, "P", p);
}

void case_vi(Recorder& rec) {
  const Mat a = m5("0,1,1,0,0;1,1,0,1,0;0,0,0,1,0;0,0,1,1,0;0,0,0,0,0");
  polys(rec, a, kQuad * kQuad * kX, kQuad * kQuad * kX);
  const Subgroup ga = stabilizer(rec, "G_A", a, "a+b,a,c+d,c,0;a,b,c,d,0;0,0,a+b,a,0;0,0,a,b,0;0,0,0,0,1");
  unique_sylow(rec, ga, shape(kQuadP));
}

void case_vii(Recorder& rec) {
  const Mat a = with(a_quad(), {{5, 5}});
  polys(rec, a, kQuad * kX * kX * px({1, 1}), kQuad * kX * px({1, 1}));
  const Subgroup ga = stabilizer(rec, "G_A", a, "a+b,a,0,0,0;a,b,0,0,0;0,0,c,d,0;0,0,e,g,0;0,0,0,0,1");
  const Subgroup p = shape("1,0,0,0,0;0,1,0,0,0;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  // The GL2(F2) block has three 2-Sylow subgroups, so P is one of several.
  const std::size_t count = sylow2_count(ga, p);
  rec.note("sylow_count", count);
  rec.expect_eq("number of 2-Sylow subgroups", 3, count);
  handled_by_u5(rec, "P", p);
}

void case_viii(Recorder& rec) {
  const Mat a = with(a_quad(), {{3, 4}, {5, 5}});
  polys(rec, a, kQuad * kX * kX * px({1, 1}), kQuad * kX * kX * px({1, 1}));
  const Subgroup ga = stabilizer(rec, "G_A", a, "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1");
  unique_sylow(rec, ga, Subgroup::closure({I() + E(3, 4)}));
}

void case_ix(Recorder& rec) {
  const Mat a = with(a_quad(), {{3, 3}, {4, 4}, {5, 5}});
  const Poly x1 = px({1, 1});
  polys(rec, a, kQuad * x1 * x1 * x1, kQuad * x1);
  const Subgroup ga =
      stabilizer(rec, "G_A", a, "a+b,a,0,0,0;a,b,0,0,0;0,0,c,d,e;0,0,f,g,h;0,0,i,j,k");
  rec.expect_eq("|G_A| = 3 |GL3|", 504, ga.order());
  const auto ab = abelianize(ga);
  rec.expect("G_A^ab has odd order", ab.quotient_order() % 2 == 1, {{"divisors", ab.divisors}});
}

void case_x(Recorder& rec) {
  const Mat a = with(a_quad(), {{3, 3}, {4, 4}, {5, 5}, {3, 4}});
  const Poly x1 = px({1, 1});
  polys(rec, a, kQuad * x1 * x1 * x1, kQuad * x1 * x1);
  stabilizer(rec, "G_A", a, "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,d;0,0,0,1,0;0,0,0,e,1");
  const Mat b = conj(perm("(45)"), a);
  const Subgroup ga = stabilizer(rec, "after Pi(45)", b, "a+b,a,0,0,0;a,b,0,0,0;0,0,1,d,c;0,0,0,1,e;0,0,0,0,1");
  const Subgroup p = shape("1,0,0,0,0;0,1,0,0,0;0,0,1,d,c;0,0,0,1,e;0,0,0,0,1");
  unique_sylow(rec, ga, p);
  coordinate_basis(rec, "P", p, {{3, 4}, {4, 5}});
}

void case_xi(Recorder& rec) {
  const Mat a = with(a_quad(), {{3, 3}, {4, 4}, {5, 5}, {3, 4}, {4, 5}});
  const Poly x1 = px({1, 1});
  polys(rec, a, kQuad * x1 * x1 * x1, kQuad * x1 * x1 * x1);
  const Subgroup ga = stabilizer(rec, "G_A", a, "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1");
  const Subgroup p = shape("1,0,0,0,0;0,1,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1");
  unique_sylow(rec, ga, p, false);
  rec.expect_eq("G_A = Z/3 x Z/4", json({12, 1}), json({ga.order(), abelianize(ga).quotient_order() / 12}));
  const Subgroup k = shape("1,e,0,0,0;0,1,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1");
  const Mat sigma = I() + E(1, 2);
  semidirect(rec, "K = P x <sigma>", k, p, Subgroup::closure({sigma}));
  characters_extend(rec, "P to K", p, k);
  const Mat a1 = norm(rec, "N_sigma(A)", sigma, a, E(1, 1) + E(2, 2));
  rec.expect("N_sigma(A) is K-fixed", m5_full().is_fixed(k, a1));
  rec.expect("K lies in the stabilizer of N_sigma(A)", k.is_subgroup_of(centralizer_of_matrix(a1)));
  rec.expect("N_sigma(A) is diagonalizable", similarity_data(a1).diagonalizable);
}

}  // namespace

void add_other_checks(std::vector<CheckSpec>& out) {
  const std::vector<std::tuple<const char*, const char*, void (*)(Recorder&)>> cases{
      {"i", "(x^3+x+1)x^2: G_A = Z/7 x GL2, Sylow <I+E45>", case_i},
      {"ii", "(x^3+x+1)x^2 non-split nilpotent part: unique Sylow <I+E45>", case_ii},
      {"iii", "(x^3+x+1)(x+1)^2: same stabilizer as (i)", case_iii},
      {"iv", "(x^3+x+1)(x+1)^2 with J2(1): same stabilizer as (ii)", case_iv},
      {"v", "(x^2+x+1)^2 x: G_A = GL2(F4), transitive on nonzero vectors", case_v},
      {"vi", "(x^2+x+1)^2 x cyclic: unique Sylow", case_vi},
      {"vii", "x^2+x+1 with 0, 0, 1: Sylow of the GL2 block", case_vii},
      {"viii", "x^2+x+1 with J2(0), 1: unique Sylow <I+E34>", case_viii},
      {"ix", "x^2+x+1 with I3: abelianization of odd order", case_ix},
      {"x", "x^2+x+1 with J2(1)+J1(1): unique Sylow U3", case_x},
      {"xi", "x^2+x+1 with J3(1): N_sigma(A) is diagonalizable", case_xi},
  };
  for (const auto& [roman, summary, fn] : cases)
    out.push_back({std::string("C-lemma-other-") + roman, std::string("lemma-other (") + roman + ")", summary, false,
                   fn});
}

}  // namespace lol::verify
