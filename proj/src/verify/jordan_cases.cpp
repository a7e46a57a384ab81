// Split, non-diagonalizable classes of M5(F2) other than the 5x5 Jordan
// blocks, each with its stabilizer and the reduction that kills its cup
// products.

#include <algorithm>
#include <array>

#include "fixtures.hpp"
#include "lol/textio.hpp"
#include "lol/gf2group.hpp"

namespace lol::verify {

namespace {

using namespace fx;

struct Conjugated {
  Mat a;
  Subgroup g;
};

// Stabilizer of a as displayed, then of its Pi(cycles)-conjugate as displayed.
Conjugated after_permutation(Recorder& rec, const Mat& a, std::string_view before, std::string_view cycles,
                             std::optional<Mat> displayed_a, std::string_view after) {
  const Subgroup g0 = stabilizer(rec, "before conjugation", a, before);
  const Mat p = perm(cycles);
  const Mat b = displayed_a ? conjugated(rec, cycles, a, *displayed_a) : conj(p, a);
  const Subgroup g1 = stabilizer(rec, "after Pi" + std::string(cycles), b, after);
  rec.expect("Pi" + std::string(cycles) + " carries the stabilizer onto its conjugate",
             g0.conjugate(p).same_elements(g1));
  return {b, g1};
}

Subgroup gen(const std::vector<Mat>& gens) { return Subgroup::closure(gens); }

// K = <sigma, tau> x| H with N_sigma(A) = first and N_tau(first) = 0.
void klein_kills(Recorder& rec, const Subgroup& k, const Subgroup& h, const Mat& a, const Mat& sigma,
                 const Mat& tau, const Mat& first) {
  const Subgroup n = gen({sigma, tau});
  semidirect(rec, "K = <sigma, tau> x| H", k, n, h);
  characters_extend(rec, "H to K", h, k);
  const Mat m = norm(rec, "N_sigma(A)", sigma, a, first);
  norm(rec, "N_tau(N_sigma(A))", tau, m, Mat::zero(f2(), 5, 5));
  quotient_norm(rec, "N_{K/H}(A)", k, h, a, Mat::zero(f2(), 5, 5));
}

// The common tail of (ii) and (iii): K = G_A x| <sigma>, N_sigma(A) = E15,
// and the stabilizer L of E15 has no nonzero character at all: u12 and u45
// are not homomorphisms on L, and the GL3 block makes L perfect.
void e15_tail(Recorder& rec, const Subgroup& ga, const Subgroup& k, const Mat& a, const Mat& sigma) {
  semidirect(rec, "K = G_A x| <sigma>", k, ga, gen({sigma}));
  norm(rec, "N_sigma(A)", sigma, a, E(1, 5));
  quotient_norm(rec, "N_{K/G_A}(A)", k, ga, a, E(1, 5));
  rec.expect("K lies in L = G_E15", k.is_subgroup_of(l_e15()));
  const auto ab = abelianize(l_e15());
  rec.expect_eq("|L^ab|", 1, ab.quotient_order());
  rec.note("L_order", l_e15().order());
}

void case_ii(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{0, 4}, {0, 1}}), "1,a,b,c,d;0,1,a,b,0;0,0,1,a,0;0,0,0,1,0;0,0,0,e,1",
                                         "(45)", m5("0,1,0,0,0;0,0,1,0,0;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0"),
                                         "1,a,b,d,c;0,1,a,0,b;0,0,1,0,a;0,0,0,1,e;0,0,0,0,1");
  commutator_is(rec, I() + E(1, 5), I() + E(1, 4), I() + E(4, 5));
  divisors(rec, "G_A", ga, {2, 2, 4});

  // u: project to the top-left 3x3 corner, a power of c = I + E12 + E23.
  Mat c = Mat::identity(f2(), 3);
  c(0, 1) = c(1, 2) = 1;
  const auto corner_log = [c](const Mat& g) {
    Mat x(f2(), 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = g(i, j);
    Mat p = Mat::identity(f2(), 3);
    for (int k = 0; k < 4; ++k, p = p * c)
      if (p == x) return Frac(k, 4);
    throw Error(ErrorCode::NotHomomorphism, "corner is not a power of I + E12 + E23");
  };
  const Character u = Character::from_function(ga, corner_log);
  const Character u14 = coordinate_character(ga, 1, 4), u45 = coordinate_character(ga, 4, 5);
  const std::size_t span = character_span({u.values(), u14.values(), u45.values()});
  rec.expect_eq("u, u14, u45 give 16 distinct characters", 16, span);

  const Subgroup k = shape("1,a,b,d,c;0,1,a,0,f;0,0,1,0,a;0,0,0,1,e;0,0,0,0,1");
  rec.expect("u extends to K by the same formula", Character::from_function(k, corner_log).restrict_to(ga) == u);
  e15_tail(rec, ga, k, a, I() + E(2, 5));

  // u14 becomes u12 after a further permutation conjugation. As printed the
  // cycle is (243); with the convention fixed by the other cases it is (234).
  const std::string displayed = "1,d,a,b,c;0,1,0,0,e;0,0,1,a,b;0,0,0,1,a;0,0,0,0,1";
  const Subgroup target = shape(displayed);
  const bool printed = ga.conjugate(perm("(243)")).same_elements(target);
  rec.note("printed_cycle_243_matches", printed);
  const Mat p = perm("(234)");
  rec.expect("Pi(234) carries G_A onto the displayed group", ga.conjugate(p).same_elements(target));
  const Character u12 = coordinate_character(target, 1, 2);
  bool moved = true;
  for (const Mat& g : ga.elements()) moved = moved && u14(g) == u12(conj(p, g));
  rec.expect("u14 is carried to u12", moved);
}

void case_iii(Recorder& rec) {
  const auto [a, ga] = after_permutation(
      rec, jordan({{0, 3}, {0, 2}}), "1,a,b,c,d;0,1,a,0,c;0,0,1,0,0;0,e,f,1,g;0,0,e,0,1", "(2354)",
      m5("0,0,1,0,0;0,0,0,1,0;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0"), "1,c,a,d,b;0,1,e,h,f;0,0,1,c,a;0,0,0,1,e;0,0,0,0,1");
  const Subgroup d = ga.derived();
  const auto in_derived = [&](const Mat& x) {
    rec.expect("[G_A, G_A] contains " + format_mat(x), d.contains(x));
  };
  commutator_is(rec, I() + E(1, 4), I() + E(1, 2) + E(3, 4), I() + E(1, 3) + E(3, 5));
  commutator_is(rec, I() + E(2, 5), I() + E(2, 3) + E(4, 5), I() + E(1, 3) + E(3, 5));
  commutator_is(rec, I() + E(1, 5), I() + E(1, 4), I() + E(2, 3) + E(4, 5));
  // The last commutator is I + E13 + E24 + E35 only up to the factor
  // I + E14 + E15 + E25, which the first three already place in [G_A, G_A].
  commutator_is(rec, (I() + E(1, 3) + E(2, 4) + E(3, 5)) * (I() + E(1, 4) + E(1, 5) + E(2, 5)),
                I() + E(1, 2) + E(3, 4), I() + E(2, 3) + E(4, 5));
  for (const Mat& x : {I() + E(1, 4), I() + E(2, 5), I() + E(1, 5), I() + E(1, 3) + E(2, 4) + E(3, 5)}) in_derived(x);
  divisors(rec, "G_A", ga, {2, 2, 2});

  // (c, e, a + h + ce) read off the entries (1,2), (2,3), (1,3), (2,4).
  const auto third = [](const Mat& g) {
    return Frac(static_cast<std::int64_t>((g(0, 2) + g(1, 3) + g(0, 1) * g(1, 2)) % 2), 2);
  };
  const Character u = Character::from_function(ga, third);
  const Character u12 = coordinate_character(ga, 1, 2), u23 = coordinate_character(ga, 2, 3);
  bool injective = true;
  for (const Mat& g : ga.elements()) {
    const bool zero = u12(g).num == 0 && u23(g).num == 0 && u(g).num == 0;
    if (zero != d.contains(g)) injective = false;
  }
  rec.expect("g -> (c, e, a + h + ce) has kernel [G_A, G_A]", injective);

  const Subgroup k = shape("1,c,a,d,b;0,1,e,h,f;0,0,1,c,g;0,0,0,1,e;0,0,0,0,1");
  rec.expect("u extends to K by the same formula", Character::from_function(k, third).restrict_to(ga) == u);
  e15_tail(rec, ga, k, a, I() + E(3, 5));
}

void case_iv(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{0, 3}, {0, 1}, {0, 1}}),
                                         "1,a,b,c,d;0,1,a,0,0;0,0,1,0,0;0,0,e,f,g;0,0,h,i,j", "(35)", std::nullopt,
                                         "1,a,d,c,b;0,1,0,0,a;0,0,j,i,h;0,0,g,f,e;0,0,0,0,1");
  const Subgroup p = shape("1,a,d,c,b;0,1,0,0,a;0,0,1,i,h;0,0,0,1,e;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  commutator_is(rec, I() + E(1, 5), I() + E(1, 4), I() + E(4, 5));
  commutator_is(rec, I() + E(3, 5), I() + E(3, 4), I() + E(4, 5));
  commutator_is(rec, I() + E(1, 4), I() + E(1, 3), I() + E(3, 4));
  const auto ab = abelianize(ga);
  rec.note("G_A_abelianization", ab.divisors);
  divisors(rec, "P", p, {2, 2, 2, 2});
  coordinate_basis(rec, "P", p, {{1, 2}, {1, 3}, {3, 4}, {4, 5}});
  handled_by_u5(rec, "P", p);
}

void case_v(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{0, 2}, {0, 2}, {0, 1}}),
                                         "a,b,c,d,e;0,a,0,c,0;f,g,h,i,m;0,f,0,h,0;0,j,0,k,l", "(2453)",
                                         std::nullopt, "a,c,e,b,d;f,h,m,g,i;0,0,l,j,k;0,0,0,a,c;0,0,0,f,h");
  // As printed the (3,5) entry, which becomes (2,3), is 0; the set is then
  // not closed under products and has half the order of the stabilizer.
  const Subgroup p = shape("1,c,e,b,d;0,1,m,g,i;0,0,1,j,k;0,0,0,1,c;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  const Subgroup d = ga.derived();
  for (const Mat& x : {I() + E(1, 5), I() + E(1, 4), I() + E(2, 5), I() + E(3, 5)})
    rec.expect("[G_A, G_A] contains " + format_mat(x), d.contains(x));
  rec.note("G_A_abelianization", abelianize(ga).divisors);
  // With the (2,3) entry restored u13 and u24 are no longer homomorphisms
  // and P^ab drops to (Z/2)^3, spanned by u12, u23, u34.
  divisors(rec, "P", p, {2, 2, 2});
  coordinate_basis(rec, "P", p, {{1, 2}, {2, 3}, {3, 4}});
  handled_by_u5(rec, "P", p);
}

void case_vi(Recorder& rec) {
  const Mat a = jordan({{0, 2}, {0, 1}, {0, 1}, {0, 1}});
  // Printed as I + E15, which has the same stabilizer; the trace-zero
  // representative of this class is E15.
  rec.expect("A is conjugate to E15", conjugating_matrix(a, E(1, 5)).has_value());
  const Subgroup ga = stabilizer(rec, "G_E15", E(1, 5), "1,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,0,0,0,1");
  rec.expect("I + E15 has the same stabilizer", centralizer_of_matrix(I() + E(1, 5)).same_elements(ga));
  rec.expect("G_A contains U", u5().is_subgroup_of(ga));
  // u12 and u45 are not homomorphisms on G_A; its abelianization is trivial.
  rec.expect_eq("|G_A^ab|", 1, abelianize(ga).quotient_order());
}

void case_vii(Recorder& rec) {
  const Mat a = jordan({{1, 4}, {0, 1}});
  const Subgroup ga = stabilizer(rec, "G_A", a, "1,a,b,c,0;0,1,a,b,0;0,0,1,a,0;0,0,0,1,0;0,0,0,0,1");
  const Subgroup k = shape("1,a,b,c,d;0,1,a,b,e;0,0,1,a,0;0,0,0,1,0;0,0,0,0,1");
  const Mat sigma = I() + E(1, 5), tau = I() + E(2, 5);
  rec.expect("<sigma, tau> is normal in U", gen({sigma, tau}).is_normal_in(u5()));
  klein_kills(rec, k, ga, a, sigma, tau, E(1, 5));
}

void case_viii(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{1, 3}, {1, 1}, {0, 1}}),
                                         "1,a,b,c,0;0,1,a,0,0;0,0,1,0,0;0,0,d,1,0;0,0,0,0,1", "(34)",
                                         m5("1,1,0,0,0;0,1,0,1,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,0"),
                                         "1,a,c,b,0;0,1,0,a,0;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1");
  const Subgroup k = shape("1,a,c,b,e;0,1,0,a,f;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1");
  klein_kills(rec, k, ga, a, I() + E(1, 5), I() + E(2, 5), E(1, 5));
}

void case_ix(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{1, 2}, {1, 2}, {0, 1}}),
                                         "a,b,c,d,0;0,a,0,c,0;e,f,g,h,0;0,e,0,g,0;0,0,0,0,1", "(23)",
                                         m5("1,0,1,0,0;0,1,0,1,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,0"),
                                         "a,c,b,d,0;e,g,f,h,0;0,0,a,c,0;0,0,e,g,0;0,0,0,0,1");
  const Subgroup p = shape("1,c,b,d,0;0,1,f,h,0;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  const Subgroup k = shape("1,c,b,d,i;0,1,f,h,j;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1");
  klein_kills(rec, k, p, a, I() + E(1, 5), I() + E(2, 5), E(1, 5));
}

void case_x(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{1, 2}, {1, 1}, {1, 1}, {0, 1}}),
                                         "1,a,b,c,0;0,1,0,0,0;0,d,e,f,0;0,g,h,i,0;0,0,0,0,1", "(24)", std::nullopt,
                                         "1,c,b,a,0;0,i,h,g,0;0,f,e,d,0;0,0,0,1,0;0,0,0,0,1");
  const Subgroup p = shape("1,c,b,a,0;0,1,h,g,0;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  rec.expect("P is U4 in the top-left corner", p.same_elements(shape("1,*,*,*,0;0,1,*,*,0;0,0,1,*,0;0,0,0,1,0;0,0,0,0,1")));
  coordinate_basis(rec, "P", p, {{1, 2}, {2, 3}, {3, 4}});
  handled_by_u5(rec, "P", p);
}

// (xi) and (xii): the displayed K is not closed under products, since
// (XY)_24 = X_23 Y_34. The group K' = <H, sigma, tau> it generates carries
// the argument instead: characters of H extend and N_{K'/H}(A) = 0.
void generated_kills(Recorder& rec, const Subgroup& h, const Mat& a, std::string_view printed) {
  bool closed = true;
  try {
    shape(printed);
  } catch (const Error& e) {
    closed = e.code() != ErrorCode::NotAGroup;
  }
  rec.expect("the displayed K is not a group", !closed);
  const Mat sigma = I() + E(3, 4), tau = I() + E(3, 5);
  std::vector<Mat> gens = h.generators();
  gens.insert(gens.end(), {sigma, tau});
  const Subgroup k = gen(gens);
  rec.note("K_generated_order", k.order());
  characters_extend(rec, "H to K'", h, k);
  const Mat m = norm(rec, "N_tau(A)", tau, a, E(2, 5) + E(3, 5));
  norm(rec, "N_sigma(N_tau(A))", sigma, m, Mat::zero(f2(), 5, 5));
  quotient_norm(rec, "N_{K'/H}(A)", k, h, a, Mat::zero(f2(), 5, 5));
}

void case_xi(Recorder& rec) {
  const Mat a = jordan({{0, 3}, {1, 2}});
  const Subgroup ga = stabilizer(rec, "G_A", a, "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,1,c;0,0,0,0,1");
  generated_kills(rec, ga, a, "1,a,b,0,0;0,1,a,0,0;0,0,1,d,e;0,0,0,1,c;0,0,0,0,1");
}

void case_xii(Recorder& rec) {
  const Mat a = jordan({{0, 3}, {1, 1}, {1, 1}});
  const Subgroup ga = stabilizer(rec, "G_A", a, "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,c,d;0,0,0,e,f");
  const Subgroup p = shape("1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  generated_kills(rec, p, a, "1,a,b,0,0;0,1,a,0,0;0,0,1,e,g;0,0,0,1,d;0,0,0,0,1");
}

void case_xiii(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{0, 2}, {0, 1}, {1, 2}}),
                                         "1,a,b,0,0;0,1,0,0,0;0,c,1,0,0;0,0,0,1,d;0,0,0,0,1", "(23)", std::nullopt,
                                         "1,b,a,0,0;0,1,c,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1");
  coordinate_basis(rec, "G_A", ga, {{1, 2}, {2, 3}, {4, 5}});
  handled_by_u5(rec, "G_A", ga);
}

void case_xiv(Recorder& rec) {
  const auto [a, ga] = after_permutation(rec, jordan({{0, 2}, {0, 1}, {1, 1}, {1, 1}}),
                                         "1,b,c,0,0;0,1,0,0,0;0,d,1,0,0;0,0,0,e,f;0,0,0,g,h", "(23)", std::nullopt,
                                         "1,c,b,0,0;0,1,d,0,0;0,0,1,0,0;0,0,0,e,f;0,0,0,g,h");
  const Subgroup p = shape("1,c,b,0,0;0,1,d,0,0;0,0,1,0,0;0,0,0,1,f;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  coordinate_basis(rec, "P", p, {{1, 2}, {2, 3}, {4, 5}});
  handled_by_u5(rec, "P", p);
}

void case_xv(Recorder& rec) {
  const Mat a = jordan({{0, 1}, {0, 1}, {0, 1}, {1, 2}});
  const Subgroup ga = stabilizer(rec, "G_A", a, "a,b,c,0,0;d,e,f,0,0;g,h,i,0,0;0,0,0,1,j;0,0,0,0,1");
  const Subgroup p = shape("1,a,c,0,0;0,1,b,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1");
  sylow(rec, "P", ga, p);
  coordinate_basis(rec, "P", p, {{1, 2}, {2, 3}, {4, 5}});
  handled_by_u5(rec, "P", p);
}

// ---- the 5x5 Jordan block ----

Mat nil() { return jordan({{0, 5}}); }

const Subgroup& g_nil() {
  static const Subgroup g = centralizer_of_matrix(nil());
  return g;
}

const char* const kToeplitz = "1,a,b,c,d;0,1,a,b,c;0,0,1,a,b;0,0,0,1,a;0,0,0,0,1";
const char* const kKBlock = "1,a,b,d,f;0,1,a,c,e;0,0,1,a,c;0,0,0,1,a;0,0,0,0,1";

// rank(X - I) and whether (X - I)^2 = 0: the number of 2-blocks when the
// square vanishes.
std::pair<int, bool> two_blocks(const Mat& x) {
  const Mat d = x - I();
  return {mat_rank(d), (d * d).is_zero()};
}

void case_i(Recorder& rec) {
  // J5(0) and J5(1) have the same stabilizer; the class is treated on its own.
  const Subgroup g = stabilizer(rec, "G_A", nil(), kToeplitz);
  rec.expect("G_{J5(1)} = G_{J5(0)}", centralizer_of_matrix(I() + nil()).same_elements(g));
}

void jordan_block(Recorder& rec) {
  const Mat n = nil(), a = n;
  const Subgroup& ga = g_nil();
  stabilizer(rec, "G_N", n, kToeplitz);
  rec.expect_eq("|G_N|", 16, ga.order());
  divisors(rec, "G_N", ga, {2, 8});
  const Mat g8 = I() + n, g2 = I() + n.pow(3);
  rec.identity("I + N^3 = I + E14 + E25", I() + E(1, 4) + E(2, 5), g2);
  rec.expect_eq("orders of I + N and I + N^3", json({8, 2}), json({mat_order(g8), mat_order(g2)}));
  rec.expect("G_N = <I + N> x <I + N^3>", Subgroup::closure({g8}).intersect(Subgroup::closure({g2})).order() == 1 &&
                                              Subgroup::closure({g8, g2}).same_elements(ga));

  // u and v on the generators; together they give all 16 characters.
  const Character u = Character::from_generators(ga, {{g8, Frac(0, 1)}, {g2, Frac(1, 2)}});
  const Character v = Character::from_generators(ga, {{g8, Frac(1, 8)}, {g2, Frac(1, 2)}});
  rec.expect_eq("u(I+N), u(I+N^3), v(I+N), v(I+N^3)", json({"0", "1/2", "1/8", "1/2"}),
                json({u(g8).to_string(), u(g2).to_string(), v(g8).to_string(), v(g2).to_string()}));
  rec.expect_eq("u and v generate the character group", 16, character_span({u.values(), v.values()}));

  // u extends to K through the quotient by <I+E13, I+E14, I+E15>.
  const Subgroup k = shape(kKBlock);
  rec.expect("G_N lies in K", ga.is_subgroup_of(k));
  const Subgroup q = Subgroup::closure({I() + E(1, 3), I() + E(1, 4), I() + E(1, 5)});
  rec.expect("<I+E13, I+E14, I+E15> is normal in K", q.is_subgroup_of(k) && q.is_normal_in(k));
  rec.expect_eq("|K / Q|", 8, k.order() / q.order());
  rec.expect("K / Q is abelian", k.derived().is_subgroup_of(q));
  int coset_order = 1;
  for (Mat p = g8; !q.contains(p); p = p * g8) ++coset_order;
  rec.expect_eq("order of I + N modulo Q", 4, coset_order);
  rec.expect("I + N^3 is not in Q <I + N>", !join(q, Subgroup::closure({g8})).contains(g2));
  rec.expect("u extends to K", character_extends(u, k));
  rec.expect("v does not extend to K", !character_extends(v, k));

  const Mat sigma = I() + E(1, 4), tau = I() + E(1, 3);
  norm(rec, "N_sigma(A) = E15", sigma, a, E(1, 5));
  norm(rec, "N_tau(E15) = 0", tau, E(1, 5), Mat::zero(f2(), 5, 5));
  // G_N is not normal in K: nu moves I + N off G_N. The coset sum is still
  // well defined because A is G_N-fixed, and 1, mu, nu, mu nu represent it.
  rec.identity("nu (I + N) nu^-1 = I + N + E14", I() + n + E(1, 4), conj(tau, g8));
  rec.expect("G_N is not normal in K", !ga.contains(conj(tau, g8)) && !ga.is_normal_in(k));
  rec.expect_eq("|K : G_N|", 4, k.order() / ga.order());
  const std::vector<Mat> reps{I(), sigma, tau, sigma * tau};
  bool distinct = true;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) distinct = distinct && !ga.contains(mat_inv(reps[i]) * reps[j]);
  rec.expect("1, mu, nu, mu nu lie in K and represent K / G_N",
             distinct && std::all_of(reps.begin(), reps.end(), [&](const Mat& r) { return k.contains(r); }));
  Mat coset_sum = Mat::zero(f2(), 5, 5);
  for (const Mat& r : reps) coset_sum = coset_sum + conj(r, a);
  rec.identity("sum over 1, mu, nu, mu nu of r A r^-1 = N_nu(N_mu(A)) = 0", Mat::zero(f2(), 5, 5), coset_sum);
  quotient_norm(rec, "N_{K/G_A}(A) = N_nu(N_mu(A)) = 0", k, ga, a, Mat::zero(f2(), 5, 5));

  // Jordan types.
  const auto z = klein(5);
  const Mat zs = z.rho, zt = z.mu, zst = zs * zt;
  rec.expect_eq("I + N^4: one 2-block", json({1, true}), json(two_blocks(I() + n.pow(4))));
  for (const auto& [name, x] : std::vector<std::pair<std::string, Mat>>{{"sigma_Z", zs}, {"tau_Z", zt}, {"sigma_Z tau_Z", zst}})
    rec.expect_eq(name + ": two 2-blocks", json({2, true}), json(two_blocks(x)));
  const Mat target = I() + E(1, 2) + E(3, 4);
  const Mat rho = I() + n.pow(3) + n.pow(4);
  rec.expect("I + N^3 is conjugate to I + E12 + E34", conjugating_matrix(g2, target).has_value());
  rec.expect("I + N^3 + N^4 is conjugate to I + E12 + E34", conjugating_matrix(rho, target).has_value());
  bool into_z = false;
  for (const Mat& x : {I(), zs, zt, zst}) into_z = into_z || conjugating_matrix(I() + n.pow(4), x).has_value();
  rec.expect("I + N^4 is not conjugate into Z", !into_z);

  // The reduced double-coset ingredients through C = centralizer of rho.
  const Subgroup c = centralizer_of_matrix(rho);
  rec.expect("G_N and K lie in C", ga.is_subgroup_of(c) && k.is_subgroup_of(c));
  const Subgroup ga2 = ga.filter([](const Mat& g) { return (g * g).is_identity(); });
  rec.expect_eq("|G_N[2]| = |Z|", 4, ga2.order());
  for (const auto& [name, x, other] : std::vector<std::tuple<std::string, Mat, Mat>>{
           {"sigma_Z", zs, zt}, {"tau_Z", zt, zs}, {"sigma_Z tau_Z", zst, zs}}) {
    const auto g0 = conjugating_matrix(rho, x);
    if (!g0) {
      rec.fail("rho is not conjugate to " + name);
      continue;
    }
    rec.witness(conjugate_witness(*g0, rho, x));
    std::size_t fixed = 0;
    for (const Mat& h : c.elements()) {
      const Mat g = *g0 * h;
      if (ga.contains(mat_inv(g) * other * g)) ++fixed;
    }
    rec.expect_eq("fixed points of the other generator on S_" + name + " G_A / G_A", 0, fixed);
  }
  quotient_norm(rec, "N_{C/G_A}(A) = 0", c, ga, a, Mat::zero(f2(), 5, 5));
}

// Every g in GL5(F2), bit-packed: S_x = {g : g rho = x g}, the fixed-point
// freeness on S_x G_A / G_A, and the double cosets Z \ G / G_A.
void jordan_block_double_cosets(Recorder& rec) {
  using gf2::Word;
  const int n = 5;
  const Mat rho_m = I() + nil().pow(3) + nil().pow(4);
  const Word rho = gf2::from_mat(rho_m);
  const auto z = klein(5);
  const Word zs = gf2::from_mat(z.rho), zt = gf2::from_mat(z.mu), zst = gf2::mul(zs, zt, n);
  std::vector<gf2::RightMul> right;
  std::vector<Word> ga;
  for (const Mat& h : g_nil().elements()) {
    ga.push_back(gf2::from_mat(h));
    right.emplace_back(ga.back(), n);
  }
  const auto g = gf2::Group::closure(gf2::gl_generators(n), n, gf2::gl_order(n) + 1);
  rec.expect_eq("|GL5(F2)|", gf2::gl_order(n), g.order());
  const auto coset_key = [&](Word w) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& r : right) best = std::min(best, gf2::compact(r(w), n));
    return best;
  };
  const gf2::RightMul by_rho(rho, n);
  std::array<std::size_t, 3> s_size{}, fixed{};
  const std::array<Word, 3> xs{zs, zt, zst}, others{zt, zs, zs};
  std::size_t cosets = 0, double_cosets = 0, burnside = 0;
  for (Word w : g.elements()) {
    const Word wr = by_rho(w);
    for (int i = 0; i < 3; ++i)
      if (wr == gf2::mul(xs[i], w, n)) {
        ++s_size[i];
        const std::uint64_t k = coset_key(w);
        if (coset_key(gf2::mul(others[i], w, n)) == k) ++fixed[i];
      }
    const std::uint64_t k = coset_key(w);
    if (gf2::compact(w, n) != k) continue;
    ++cosets;
    std::uint64_t orbit_min = k;
    for (Word x : {zs, zt, zst}) {
      const std::uint64_t kx = coset_key(gf2::mul(x, w, n));
      orbit_min = std::min(orbit_min, kx);
      if (kx == k) ++burnside;
    }
    burnside += 1;  // the identity fixes every coset
    if (orbit_min == k) ++double_cosets;
  }
  const std::size_t c_order = centralizer_of_matrix(rho_m).order();
  rec.expect_eq("|G / G_A|", gf2::gl_order(n) / 16, cosets);
  rec.expect_eq("|Z \\ G / G_A| by orbit minima and by Burnside", double_cosets, burnside / 4);
  rec.note("double_cosets", double_cosets);
  for (int i = 0; i < 3; ++i) {
    rec.expect_eq("|S_x| = |C| for generator " + std::to_string(i), c_order, s_size[i]);
    rec.expect_eq("fixed points of the other generator, case " + std::to_string(i), 0, fixed[i]);
  }
}

}  // namespace

void add_jordan_checks(std::vector<CheckSpec>& out) {
  const std::vector<std::tuple<const char*, const char*, void (*)(Recorder&)>> cases{
      {"ii", "J4(0)+J1(0): K = G_A x| <I+E25>, then L = G_E15", case_ii},
      {"iii", "J3(0)+J2(0): commutators, (Z/2)^3 abelianization, K = G_A x| <I+E35>", case_iii},
      {"iv", "J3(0)+J1(0)+J1(0): Sylow P and its coordinate characters", case_iv},
      {"v", "J2(0)+J2(0)+J1(0): Sylow P and its coordinate characters", case_v},
      {"vi", "J2(0)+3J1(0): stabilizer of E15 contains U", case_vi},
      {"vii", "J4(1)+J1(0): N_tau(N_sigma(A)) = 0", case_vii},
      {"viii", "J3(1)+J1(1)+J1(0): N_tau(N_sigma(A)) = 0", case_viii},
      {"ix", "J2(1)+J2(1)+J1(0): N_tau(N_sigma(A)) = 0 over the Sylow", case_ix},
      {"x", "J2(1)+2J1(1)+J1(0): Sylow isomorphic to U4", case_x},
      {"xi", "J3(0)+J2(1): N_sigma(N_tau(A)) = 0", case_xi},
      {"xii", "J3(0)+2J1(1): as (xi) over the Sylow", case_xii},
      {"xiii", "J2(0)+J1(0)+J2(1): characters u12, u23, u45", case_xiii},
      {"xiv", "J2(0)+J1(0)+2J1(1): Sylow characters u12, u23, u45", case_xiv},
      {"xv", "3J1(0)+J2(1): Sylow characters u12, u23, u45", case_xv},
  };
  out.push_back({"C-lemma-jordan-i", "lemma-jordan (i)", "J5(0): stabilizer, handled by the Jordan block check", false,
                 case_i});
  for (const auto& [roman, summary, fn] : cases)
    out.push_back({std::string("C-lemma-jordan-") + roman, std::string("lemma-jordan (") + roman + ")", summary,
                   false, fn});
  out.push_back({"C-lemma-jordan-block", "lemma-jordan-block",
                 "G_N = Z/8 x Z/2, u extends to K, Jordan types, N_{K/G_A}(A) = 0, reduced double cosets", false,
                 jordan_block});
  out.push_back({"C-lemma-jordan-block-double-cosets", "lemma-jordan-block",
                 "all of GL5(F2): S_x = g0 C, fixed-point-free action, Z \\ G / G_A", true,
                 jordan_block_double_cosets});
}

}  // namespace lol::verify
