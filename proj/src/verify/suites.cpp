// Field and Witt arithmetic, the bicyclic obstructions, the splittings over
// Z/p^2, and the lemmas that reduce the case analysis to U5.

#include <random>
#include <set>

#include "fixtures.hpp"
#include "lol/textio.hpp"
#include "lol/gf2group.hpp"

namespace lol::verify {

namespace {

using namespace fx;

Ring fq(unsigned p, unsigned m) { return Ring::fq(Field::make(p, m)); }

constexpr const char* kU3Corner = "1,*,*,0,0;0,1,*,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1";

// ---- fields and Witt vectors ----

void field_laws(Recorder& rec) {
  for (const auto& [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const FieldPtr f = Field::make(p, m);
    const unsigned q = f->order();
    std::size_t bad = 0;
    for (unsigned x = 0; x < q; ++x) {
      if (x != 0 && f->mul(x, f->inv(x)) != 1) ++bad;
      if (f->add(x, f->neg(x)) != 0) ++bad;
      for (unsigned y = 0; y < q; ++y) {
        if (f->add(x, y) != f->add(y, x) || f->mul(x, y) != f->mul(y, x)) ++bad;
        if (f->frobenius(f->add(x, y)) != f->add(f->frobenius(x), f->frobenius(y))) ++bad;
        for (unsigned z = 0; z < q; ++z) {
          if (f->mul(x, f->add(y, z)) != f->add(f->mul(x, y), f->mul(x, z))) ++bad;
          if (f->mul(f->mul(x, y), z) != f->mul(x, f->mul(y, z))) ++bad;
          if (f->add(f->add(x, y), z) != f->add(x, f->add(y, z))) ++bad;
        }
      }
    }
    rec.expect_eq("field laws over " + f->name(), 0, bad);
    rec.expect("modulus of " + f->name() + " is irreducible", is_irreducible(Poly(Field::make(p, 1), f->modulus())));
  }
}

void witt_laws(Recorder& rec, unsigned p, unsigned m) {
  const FieldPtr fp = Field::make(p, m);
  const Field& f = *fp;
  const unsigned q = f.order();
  std::vector<W2> all;
  for (unsigned b = 0; b < q; ++b)
    for (unsigned a = 0; a < q; ++a) all.push_back({a, b});
  const W2 zero{0, 0}, one{1, 0};
  std::size_t bad = 0, triples = 0;
  for (const W2& u : all) {
    if (!(w2_add(f, u, zero) == u) || !(w2_mul(f, u, one) == u)) ++bad;
    if (!(w2_add(f, u, w2_neg(f, u)) == zero)) ++bad;
    if (w2_is_unit(u) && !(w2_mul(f, u, w2_inv(f, u)) == one)) ++bad;
    for (const W2& v : all) {
      if (!(w2_add(f, u, v) == w2_add(f, v, u)) || !(w2_mul(f, u, v) == w2_mul(f, v, u))) ++bad;
      for (const W2& w : all) {
        ++triples;
        if (!(w2_add(f, w2_add(f, u, v), w) == w2_add(f, u, w2_add(f, v, w)))) ++bad;
        if (!(w2_mul(f, w2_mul(f, u, v), w) == w2_mul(f, u, w2_mul(f, v, w)))) ++bad;
        if (!(w2_mul(f, u, w2_add(f, v, w)) == w2_add(f, w2_mul(f, u, v), w2_mul(f, u, w)))) ++bad;
      }
    }
  }
  rec.expect_eq("ring law failures over W2(" + f.name() + ")", 0, bad);
  rec.note("triples", triples);

  // p tau(x) = iota(x^p), as a repeated sum and as a product with p.
  std::size_t teich = 0;
  for (unsigned x = 0; x < q; ++x) {
    W2 sum = zero;
    for (unsigned i = 0; i < p; ++i) sum = w2_add(f, sum, W2{x, 0});
    const W2 want{0, f.pow(x, p)};
    if (!(sum == want) || !(w2_mul(f, w2_from_int(f, p), W2{x, 0}) == want)) ++teich;
  }
  rec.expect_eq("p tau(x) = iota(x^p) failures", 0, teich);
}

void witt_zp2(Recorder& rec) {
  for (unsigned p : {2u, 3u}) {
    const FieldPtr f = Field::make(p, 1);
    const std::int64_t n = p * p;
    std::size_t bad = 0;
    for (std::int64_t a = 0; a < n; ++a) {
      if (witt_to_zp2(zp2_to_witt(f, a)) != a) ++bad;
      for (std::int64_t b = 0; b < n; ++b) {
        if (!(zp2_to_witt(f, (a + b) % n) == zp2_to_witt(f, a) + zp2_to_witt(f, b))) ++bad;
        if (!(zp2_to_witt(f, a * b % n) == zp2_to_witt(f, a) * zp2_to_witt(f, b))) ++bad;
      }
    }
    rec.expect_eq("Z/" + std::to_string(n) + " -> W2(F" + std::to_string(p) + ") is a ring isomorphism", 0, bad);
  }
}

// n = 1: the Teichmuller lift is multiplicative and splits the reduction.
void teichmuller_section(Recorder& rec) {
  for (const auto& [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const FieldPtr fp = Field::make(p, m);
    const Field& f = *fp;
    std::size_t bad = 0;
    for (unsigned x = 1; x < f.order(); ++x)
      for (unsigned y = 1; y < f.order(); ++y)
        if (!(w2_mul(f, W2{x, 0}, W2{y, 0}) == W2{f.mul(x, y), 0})) ++bad;
    rec.expect_eq("tau is multiplicative on " + f.name() + "^x", 0, bad);
  }
}

// ---- bicyclic obstructions ----

bool verdict(Recorder& rec, const std::string& claim, const BicyclicSpec& z, Variant v, bool expect_split) {
  const BicyclicTriple x = glift_triple(z, v);
  const ObstructionResult r = bicyclic_split(z, x, v);
  rec.expect(claim, r.splits == expect_split,
             {{"splits", r.splits}, {"certificate_terms", r.certificate.size()}, {"rank", r.rank}});
  rec.witness(bicyclic_witness(z, v, x, r));
  return r.splits;
}

bool generic_verdict(const Subgroup& g, Variant v) { return generic_split(glift_cocycle(g, v)).splits; }

void restrict_k_bigger(Recorder& rec) {
  const Ring f4 = fq(2, 2);
  const FieldPtr& F = f4.field();
  // Both deciders on every ordered pair at n = 2, 3.
  for (int n : {2, 3})
    for (unsigned x = 1; x < 4; ++x)
      for (unsigned y = 1; y < 4; ++y) {
        if (x == y) continue;
        const auto z = e1n(f4, n, x, y);
        const std::string tag = "F4 n=" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y);
        verdict(rec, tag + " does not split", z, Variant::GLift, false);
        rec.expect(tag + ": generic solver agrees",
                   !generic_verdict(Subgroup::closure({z.rho, z.mu}), Variant::GLift));
      }
  const Ring f8 = fq(2, 3);
  std::size_t f8_split = 0, f8_cases = 0;
  for (int n : {2, 3})
    for (unsigned x = 1; x < 8; ++x)
      for (unsigned y = 1; y < 8; ++y) {
        if (x == y) continue;
        const auto z = e1n(f8, n, x, y);
        ++f8_cases;
        if (bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift).splits) ++f8_split;
      }
  rec.expect_eq("F8, n = 2, 3: pairs that split", 0, f8_split);
  rec.note("f8_pairs", f8_cases);

  // N_rho(U) for rho = I + x E12 acting through the Frobenius twist.
  const GModule m2 = GModule::full(f4, 2);
  std::size_t bad = 0;
  for (unsigned x = 1; x < 4; ++x) {
    const Mat rho = Mat::identity(f4, 2) + Mat::unit(f4, 2, 1, 2, x);
    const unsigned x2 = F->pow(x, 2), x4 = F->pow(x, 4);
    for (unsigned e = 0; e < 256; ++e) {
      const unsigned u11 = e & 3, u12 = (e >> 2) & 3, u21 = (e >> 4) & 3, u22 = (e >> 6) & 3;
      const Mat u = Mat::from_rows(f4, {{u11, u12}, {u21, u22}});
      const Scalar d = F->mul(x2, u21);
      const Scalar off = F->add(F->add(F->mul(x2, u11), F->mul(x4, u21)), F->mul(x2, u22));
      if (m2.norm_cyclic(rho, u) != Mat::from_rows(f4, {{d, off}, {0, d}})) ++bad;
    }
  }
  rec.expect_eq("N_rho(U) matches the displayed 2x2 formula on all of M2(F4)", 0, bad);

  // The corner projection and the embedding of GL2 into GLn.
  for (int n : {3, 4, 5}) {
    const auto embed = [n, &f4](const Mat& g) {
      Mat r = Mat::identity(f4, n);
      r(0, 0) = g(0, 0), r(0, n - 1) = g(0, 1), r(n - 1, 0) = g(1, 0), r(n - 1, n - 1) = g(1, 1);
      return r;
    };
    const auto corner = [n, &f4](const Mat& a) {
      return Mat::from_rows(f4, {{a(0, 0), a(0, n - 1)}, {a(n - 1, 0), a(n - 1, n - 1)}});
    };
    std::size_t fails = 0;
    const Subgroup gl2 = general_linear(f4, 2);
    for (unsigned e = 0; e < 256; ++e) {
      const Mat x = Mat::from_rows(f4, {{e & 3, (e >> 2) & 3}, {(e >> 4) & 3, (e >> 6) & 3}});
      if (corner(embed(x)) != x) ++fails;
    }
    for (const Mat& g : gl2.elements())
      for (const Mat& h : gl2.generators())
        if (embed(g * h) != embed(g) * embed(h)) ++fails;
    rec.expect_eq("n=" + std::to_string(n) + ": pi(iota(X)) = X and iota is multiplicative", 0, fails);
    for (unsigned x = 1; x < 4; ++x)
      for (unsigned y = 1; y < 4; ++y) {
        if (x == y) continue;
        const auto zn = e1n(f4, n, x, y), z2 = e1n(f4, 2, x, y);
        const auto tn = glift_triple(zn, Variant::GLift), t2 = glift_triple(z2, Variant::GLift);
        if (corner(tn.a) != t2.a || corner(tn.b) != t2.b || corner(tn.c) != t2.c) ++fails;
      }
    rec.expect_eq("n=" + std::to_string(n) + ": projected triple equals the 2x2 triple", 0, fails);
  }
}

void klein_f2(Recorder& rec) {
  for (int n : {4, 5}) {
    const auto z = klein(n);
    const auto t = glift_triple(z, Variant::GLift);
    Mat s = Mat::zero(f2(), n, n), tt = Mat::zero(f2(), n, n);
    s(0, 2) = s(1, 3) = 1;
    tt(0, 3) = tt(1, 2) = tt(1, 3) = 1;
    rec.expect("n=" + std::to_string(n) + ": triple is (S, T, 0) in the corner block",
               t.a == s && t.b == tt && t.c.is_zero());
    verdict(rec, "n=" + std::to_string(n) + ": Klein restriction does not split", z, Variant::GLift, false);
  }
  // T X + X T = I over M2(F2): no solution by exhaustion and by the solver.
  const Mat t = parse_mat(f2(), "0,1;1,1"), id = Mat::identity(f2(), 2);
  std::size_t solutions = 0;
  for (unsigned e = 0; e < 16; ++e) {
    const Mat x = Mat::from_rows(f2(), {{e & 1, (e >> 1) & 1}, {(e >> 2) & 1, (e >> 3) & 1}});
    if (t * x + x * t == id) ++solutions;
  }
  rec.expect_eq("TX + XT = I: solutions among the 16 matrices", 0, solutions);
  AffineSystem sys{f2(), {{2, 2, {}}}, {}};
  sys.equations.push_back({"TX+XT", {{0, [t](const Mat& x) { return t * x + x * t; }}}, id});
  const auto r = solve_affine(sys);
  rec.expect("TX + XT = I: solver infeasible with a valid certificate",
             !r.feasible && check_certificate(sys, r.certificate));
}

void lift_split_5(Recorder& rec) {
  const Ring f9 = fq(3, 2);
  const FieldPtr& F = f9.field();
  // Pairs independent over F3: y not in F3 x.
  std::size_t cases = 0;
  for (unsigned x : {1u, 3u})
    for (unsigned y = 1; y < 9; ++y) {
      if (y == x || y == F->mul(2, x)) continue;
      const auto z = e1n(f9, 2, x, y);
      verdict(rec, "F9 x=" + std::to_string(x) + " y=" + std::to_string(y) + " does not split", z, Variant::GLift,
              false);
      ++cases;
    }
  rec.note("pairs", cases);
  const auto z = e1n(f9, 2, 1, 3);
  rec.expect("generic solver agrees on x=1, y=3", !generic_verdict(Subgroup::closure({z.rho, z.mu}), Variant::GLift));

  // 3 (z, 0) = (0, z^3) and N_rho(U) = u21 x^6 E12.
  std::size_t bad = 0;
  for (unsigned c = 0; c < 9; ++c)
    if (!(w2_mul(*F, w2_from_int(*F, 3), W2{c, 0}) == W2{0, F->pow(c, 3)})) ++bad;
  rec.expect_eq("3 tau(z) = iota(z^3) failures", 0, bad);
  const GModule m2 = GModule::full(f9, 2);
  for (unsigned x = 1; x < 9; ++x) {
    const Mat rho = Mat::identity(f9, 2) + Mat::unit(f9, 2, 1, 2, x);
    for (unsigned e = 0; e < 6561; ++e) {
      const Mat u = Mat::from_rows(f9, {{e % 9, e / 9 % 9}, {e / 81 % 9, e / 729}});
      if (m2.norm_cyclic(rho, u) != Mat::unit(f9, 2, 1, 2, F->mul(u(1, 0), F->pow(x, 6)))) ++bad;
    }
  }
  rec.expect_eq("N_rho(U) = u21 x^6 E12 on all of M2(F9)", 0, bad);
  // (1,1) entry of (rho - 1) V - (mu - 1) U is x^3 v21 - y^3 u21.
  std::mt19937 gen(5);
  const Mat rho = z.rho, mu = z.mu;
  for (int trial = 0; trial < 2000; ++trial) {
    Mat u(f9, 2, 2), v(f9, 2, 2);
    for (int i = 0; i < 4; ++i) u(i / 2, i % 2) = gen() % 9, v(i / 2, i % 2) = gen() % 9;
    const Mat w = m2.act(rho, v) - v - (m2.act(mu, u) - u);
    const Scalar want = F->sub(F->mul(F->pow(1, 3), v(1, 0)), F->mul(F->pow(3, 3), u(1, 0)));
    if (w(0, 0) != want) ++bad;
  }
  rec.expect_eq("(1,1) entry of the mixed equation", 0, bad);
}

// Arbitrary lifts change the triple by a boundary.
void lift_independence(Recorder& rec) {
  std::mt19937 gen(11);
  std::vector<BicyclicSpec> specs{e1n(fq(2, 2), 2, 1, 2), klein(4), e1n(fq(3, 2), 2, 1, 3)};
  std::size_t bad = 0, trials = 0;
  for (const auto& z : specs) {
    const Ring& r = z.ring();
    const int n = z.degree();
    const Ring w = Ring::witt(r.field());
    const auto base = glift_triple(z, Variant::GLift);
    for (int k = 0; k < 30; ++k, ++trials) {
      Mat a(r, n, n), b(r, n, n);
      for (int i = 0; i < n * n; ++i) a(i / n, i % n) = gen() % r.size(), b(i / n, i % n) = gen() % r.size();
      const Mat rl = (Mat::identity(w, n) + iota_lift(a)) * teichmuller_lift(z.rho);
      const Mat ml = (Mat::identity(w, n) + iota_lift(b)) * teichmuller_lift(z.mu);
      const auto other = triple_from_lifts(z, rl, ml, Variant::GLift);
      const BicyclicTriple diff{other.a - base.a, other.b - base.b, other.c - base.c};
      if (!bicyclic_cocycle_failures(z, other, Variant::GLift).empty() ||
          !bicyclic_split(z, diff, Variant::GLift).splits)
        ++bad;
    }
  }
  rec.expect_eq("lift changes that are not boundaries", 0, bad);
  rec.note("trials", trials);
}

// Both deciders on every bicyclic subgroup of the listed groups.
void oracle_equivalence(Recorder& rec) {
  struct Source {
    std::string name;
    std::vector<Mat> elems;
  };
  std::vector<Source> sources{{"U3(F2)", unitriangular(f2(), 3).elements()},
                              {"U2(F4)", unitriangular(fq(2, 2), 2).elements()},
                              {"U2(F8)", unitriangular(fq(2, 3), 2).elements()}};
  std::size_t agree = 0, total = 0;
  json by_source = json::object();
  for (const auto& src : sources) {
    std::size_t local = 0;
    for (const Mat& a : src.elems)
      for (const Mat& b : src.elems) {
        if (a * b != b * a) continue;
        std::optional<BicyclicSpec> z;
        try {
          z = BicyclicSpec::make(a, b);
        } catch (const Error&) {
          continue;
        }
        for (Variant v : {Variant::GLift, Variant::BLift}) {
          const bool x = bicyclic_split(*z, glift_triple(*z, v), v).splits;
          const bool y = generic_verdict(Subgroup::closure({a, b}), v);
          ++total, ++local;
          if (x == y) ++agree;
        }
      }
    by_source[src.name] = local;
  }
  for (int n : {4, 5}) {
    const auto z = klein(n);
    for (Variant v : {Variant::GLift, Variant::BLift}) {
      ++total;
      if (bicyclic_split(z, glift_triple(z, v), v).splits == generic_verdict(Subgroup::closure({z.rho, z.mu}), v))
        ++agree;
    }
  }
  rec.expect_eq("verdict agreement", total, agree);
  rec.note("comparisons", by_source);
}

// ---- splittings over Z/p^2 and Z ----

Mat reduce_mod_p(const Mat& m, unsigned p) {
  return reduce_to(reduce_to(m, Ring::zmod(p)), Ring::fq(Field::make(p, 1)));
}

void run_splitting(Recorder& rec, const std::string& name) {
  for (const auto& c : splitting_cases())
    if (c.name.rfind(name, 0) == 0) splitting_check(rec, c);
}

// ---- reductions to U5 ----

const Subgroup& k_u5() {
  static const Subgroup k = shape("1,*,*,*,*;0,1,*,*,*;0,0,1,*,*;0,0,0,*,*;0,0,0,*,*");
  return k;
}
const Subgroup& k_u5_prime() {
  static const Subgroup k = shape("*,*,*,*,*;*,*,*,*,*;0,0,1,*,*;0,0,0,1,*;0,0,0,0,1");
  return k;
}

void u5_lemma(Recorder& rec) {
  rec.expect_eq("|U5|", 1024, u5().order());
  fixed_space(rec, "M^U in M5 is span{I, E15}", m5_full(), u5(), {I(), E(1, 5)});
  fixed_space(rec, "M^U in the trace-zero part is <E15>", m5_trace_zero(), u5(), {E(1, 5)});
  coordinate_basis(rec, "U", u5(), {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (const auto& [k, name, coords] :
       std::vector<std::tuple<const Subgroup*, std::string, std::vector<std::pair<int, int>>>>{
           {&k_u5(), "K", {{1, 2}, {2, 3}}}, {&k_u5_prime(), "K'", {{3, 4}, {4, 5}}}}) {
    rec.expect("U lies in " + name, u5().is_subgroup_of(*k));
    for (const auto& [i, j] : coords)
      rec.expect("u" + std::to_string(i) + std::to_string(j) + " extends to " + name,
                 character_extends(coordinate_character(u5(), i, j), *k));
    fixed_space(rec, "trace-zero part fixed by " + name + " is 0", m5_trace_zero(), *k, {});
    rec.expect("E15 is not fixed by " + name, !m5_full().is_fixed(*k, E(1, 5)));
  }
}

void cor_other_subgroups(Recorder& rec) {
  const auto kernel = [](int i) {
    return u5().filter([i](const Mat& g) { return g(i - 1, i) == 0; });
  };
  const Subgroup v2 = kernel(2), v3 = kernel(3);
  rec.expect_eq("|V2| = |V3| = 512", json({512, 512}), json({v2.order(), v3.order()}));
  fixed_space(rec, "trace-zero part fixed by V2 is <E15>", m5_trace_zero(), v2, {E(1, 5)});
  fixed_space(rec, "trace-zero part fixed by V3 is <E15>", m5_trace_zero(), v3, {E(1, 5)});
  for (const auto& [g, name, coords] : std::vector<std::tuple<const Subgroup*, std::string, std::vector<std::pair<int, int>>>>{
           {&v2, "V2", {{1, 3}, {2, 4}}}, {&v3, "V3", {{2, 4}, {3, 5}}}})
    for (const auto& [i, j] : coords) {
      bool ok = true;
      try {
        coordinate_character(*g, i, j);
      } catch (const Error&) {
        ok = false;
      }
      rec.expect("u" + std::to_string(i) + std::to_string(j) + " is a homomorphism on " + name, ok);
    }
}

// Every subgroup of U with a coordinate character u_{i,i+1}: the character
// extends to K or K', whose fixed trace-zero part is 0.
void cor_comes_from_u5(Recorder& rec) {
  const std::vector<Subgroup> samples{u5(), shape(kU3Corner), Subgroup::closure({I() + E(1, 2) + E(3, 4)}),
                                      Subgroup::closure({I() + E(4, 5), I() + E(2, 3) + E(1, 5)})};
  std::size_t bad = 0;
  for (const Subgroup& h : samples)
    for (int i = 1; i <= 4; ++i) {
      const Subgroup& k = i <= 2 ? k_u5() : k_u5_prime();
      try {
        if (!character_extends(coordinate_character(h, i, i + 1), k)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  rec.expect_eq("u_{i,i+1} failing to extend to K (i <= 2) or K' (i >= 3)", 0, bad);
}

void identity_5x5(Recorder& rec) {
  for (int n : {3, 4, 5}) {
    const auto g = gf2::Group::closure(gf2::gl_generators(n), n, gf2::gl_order(n) + 1);
    rec.expect_eq("|GL" + std::to_string(n) + "(F2)|", gf2::gl_order(n), g.order());
    rec.expect("GL" + std::to_string(n) + "(F2) is perfect", g.is_perfect());
  }
}

void diagonalizable(Recorder& rec) {
  // Up to A <-> I + A the trace-zero diagonal classes are 0, E55 and E44 + E55.
  const Subgroup g1 = stabilizer(rec, "G_E55", E(5, 5), "*,*,*,*,0;*,*,*,*,0;*,*,*,*,0;*,*,*,*,0;0,0,0,0,1");
  const Subgroup p1 = shape("1,*,*,*,0;0,1,*,*,0;0,0,1,*,0;0,0,0,1,0;0,0,0,0,1");
  sylow(rec, "U4 in G_E55", g1, p1);
  handled_by_u5(rec, "U4", p1);
  const Mat a = E(4, 4) + E(5, 5);
  const Subgroup g2 = stabilizer(rec, "G_A", a, "*,*,*,0,0;*,*,*,0,0;*,*,*,0,0;0,0,0,*,*;0,0,0,*,*");
  rec.expect_eq("|G_A| = |GL3| |GL2|", 1008, g2.order());
  const Subgroup p2 = shape("1,*,*,0,0;0,1,*,0,0;0,0,1,0,0;0,0,0,1,*;0,0,0,0,1");
  sylow(rec, "P", g2, p2);
  handled_by_u5(rec, "P", p2);
}

void cyclic(Recorder& rec) {
  std::size_t count = 0, bad = 0;
  for (const Poly& f : monic_polys(f2().field(), 5)) {
    const auto factors = poly_factor(f);
    if (!std::all_of(factors.begin(), factors.end(), [](const auto& pe) { return pe.second == 1; })) continue;
    ++count;
    std::int64_t expected = 1;
    for (const auto& [g, e] : factors) expected *= (std::int64_t{1} << g.degree()) - 1;
    const auto order = static_cast<std::int64_t>(centralizer_of_matrix(companion(f)).order());
    if (order != expected || order % 2 == 0) ++bad;
  }
  rec.expect_eq("square-free degree-5 polynomials", 16, count);
  rec.expect_eq("companions whose stabilizer is not the odd product of (2^deg - 1)", 0, bad);
}

void sylow_norm(Recorder& rec) {
  const Mat a = m5("0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,0,0;0,0,0,0,0");
  const Subgroup h = centralizer_of_matrix(a);
  const Subgroup p = Subgroup::closure({I() + E(4, 5)});
  sylow(rec, "P", h, p);
  quotient_norm(rec, "N_{H/P}(A) = A for odd index", h, p, a, a);
}

void restriction_kills(Recorder& rec) {
  const Ring f4 = fq(2, 2);
  std::vector<Mat> gens;
  for (unsigned w = 1; w < 4; ++w)
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}})
      gens.push_back(Mat::identity(f4, 3) + Mat::unit(f4, 3, i, j, w));
  const Subgroup h = Subgroup::closure(gens);
  rec.expect_eq("|H| = |W|^2 |<W.W>|", 64, h.order());
  const Subgroup z = h.filter([](const Mat& g) { return g(0, 1) == 0 && g(1, 2) == 0; });
  rec.expect("Z is the center of H", z.same_elements(h.center()));
  rec.expect("Z lies in [H, H]", z.is_subgroup_of(h.derived()));

  const GModule m3 = GModule::full(f4, 3);
  const auto elements_of = [&](const std::vector<Mat>& basis) {
    std::vector<Mat> out{m3.zero()};
    for (const Mat& b : basis) {
      std::vector<Mat> next;
      for (const Mat& m : out)
        for (unsigned c = 0; c < 4; ++c) next.push_back(m + b.scaled(c));
      out = std::move(next);
    }
    return out;
  };
  for (const auto& [name, i, j] : std::vector<std::tuple<std::string, int, int>>{{"12", 1, 2}, {"23", 2, 3}}) {
    for (unsigned y = 1; y < 4; ++y) {
      const Mat sy = Mat::identity(f4, 3) + Mat::unit(f4, 3, i, j, y);
      const auto basis = m3.fixed_points(Subgroup::closure({sy}));
      if (i == 1) {
        std::vector<Mat> displayed{Mat::unit(f4, 3, 1, 1) + Mat::unit(f4, 3, 2, 2), Mat::unit(f4, 3, 1, 2),
                                   Mat::unit(f4, 3, 1, 3), Mat::unit(f4, 3, 3, 2), Mat::unit(f4, 3, 3, 3)};
        fixed_space(rec, "M^{sigma12(" + std::to_string(y) + ")} is the displayed space", m3,
                    Subgroup::closure({sy}), displayed);
      }
      const auto fixed = elements_of(basis);
      for (unsigned x = 1; x < 4; ++x) {
        const Mat sx = Mat::identity(f4, 3) + Mat::unit(f4, 3, i, j, x);
        Mat first_bad = m3.zero();
        for (const Mat& m : fixed) {
          const Mat r = m3.norm_cyclic(sx, m);
          if (!r.is_zero()) {
            first_bad = r;
            break;
          }
        }
        rec.identity("N_sigma" + name + "(" + std::to_string(x) + ") kills M^sigma" + name + "(" + std::to_string(y) +
                         ") (" + std::to_string(fixed.size()) + " elements)",
                     m3.zero(), first_bad);
      }
    }
  }
}

}  // namespace

std::vector<SplittingCase> splitting_cases() {
  const Ring z4 = Ring::zmod(4), z9 = Ring::zmod(9), zz = Ring::integers();
  const Ring f3 = fq(3, 1);
  const Mat u12 = parse_mat(f2(), "1,1;0,1");
  const Mat u12_3 = parse_mat(f3, "1,1;0,1");
  const std::vector<std::vector<std::int64_t>> l2{{-1, 1}, {0, 1}}, l3{{1, 1}, {-3, -2}};
  const std::vector<std::vector<std::int64_t>> s1{{-1, -1, 0}, {0, 1, 0}, {0, 0, -1}},
      s2{{-1, 0, 0}, {2, 1, -1}, {0, 0, -1}};
  const Mat e12 = Mat::identity(f2(), 3) + Mat::unit(f2(), 3, 1, 2), e23 = Mat::identity(f2(), 3) + Mat::unit(f2(), 3, 2, 3);
  std::vector<SplittingCase> out;
  for (const Ring& r : {z4, zz}) {
    const std::string suffix = r == zz ? "-Z" : "";
    out.push_back({"ii" + suffix, r, {u12}, {Mat::from_ints(r, l2)}, 2, false});
    out.push_back({"iv" + suffix, r, {e12, e23}, {Mat::from_ints(r, s1), Mat::from_ints(r, s2)}, 8, true});
  }
  for (const Ring& r : {z9, zz})
    out.push_back({std::string("iii") + (r == zz ? "-Z" : ""), r, {u12_3}, {Mat::from_ints(r, l3)}, 3, false});
  return out;
}

void splitting_check(Recorder& rec, const SplittingCase& c) {
  const unsigned p = static_cast<unsigned>(c.sources.front().ring().field()->p());
  for (std::size_t i = 0; i < c.lifts.size(); ++i)
    rec.expect(c.name + ": lift " + std::to_string(i + 1) + " reduces to its source",
               reduce_mod_p(c.lifts[i], p) == c.sources[i]);
  const Subgroup up = Subgroup::closure(c.lifts, 4096);
  const Subgroup down = Subgroup::closure(c.sources);
  rec.expect_eq(c.name + ": order of the lifted closure", c.expected_order, up.order());
  rec.witness(order_witness(c.lifts, up.order()));
  std::set<std::string> images;
  bool inside = true;
  for (const Mat& g : up.elements()) {
    const Mat r = reduce_mod_p(g, p);
    images.insert(r.key());
    inside = inside && down.contains(r);
  }
  rec.expect(c.name + ": reduction is a bijection onto the closure of the sources",
             inside && images.size() == up.order() && up.order() == down.order(),
             {{"lifted", up.order()}, {"reduced", down.order()}});
  if (c.lifts.size() == 1) {
    const Mat x = c.lifts.front().pow(static_cast<std::int64_t>(c.expected_order));
    rec.identity(c.name + ": lift^" + std::to_string(c.expected_order) + " = I", Mat::identity(x.ring(), x.rows()), x);
    rec.witness(power_witness(c.lifts.front(), static_cast<std::int64_t>(c.expected_order), x));
  }
  if (c.check_u3_relations) {
    const Mat& s1 = c.lifts[0];
    const Mat& s2 = c.lifts[1];
    const Mat tau = commutator(s1, s2);
    const Mat id = Mat::identity(s1.ring(), s1.rows());
    const std::vector<std::pair<std::string, Mat>> rels{{"sigma1^2", s1 * s1},
                                                        {"sigma2^2", s2 * s2},
                                                        {"tau^2", tau * tau},
                                                        {"[sigma1, tau]", commutator(s1, tau)},
                                                        {"[sigma2, tau]", commutator(s2, tau)}};
    for (const auto& [name, m] : rels)
      if (!rec.identity(c.name + ": " + name + " = 1", id, m))
        throw Error(ErrorCode::RelationFailure, c.name + ": " + name + " is " + format_mat(m));
  }
}

void add_field_checks(std::vector<CheckSpec>& out) {
  out.push_back({"C-gfq-field-laws", "finite fields", "exhaustive field laws for F4, F8, F9, F5, F16", false, field_laws});
  out.push_back({"C-witt-ring-laws-F2", "length-2 Witt vectors", "all triples in W2(F2); 2 tau(x) = iota(x^2)", false,
                 [](Recorder& r) { witt_laws(r, 2, 1); }});
  out.push_back({"C-witt-ring-laws-F3", "length-2 Witt vectors", "all triples in W2(F3); 3 tau(x) = iota(x^3)", false,
                 [](Recorder& r) { witt_laws(r, 3, 1); }});
  out.push_back({"C-witt-ring-laws-F4", "length-2 Witt vectors", "all triples in W2(F4); 2 tau(x) = iota(x^2)", false,
                 [](Recorder& r) { witt_laws(r, 2, 2); }});
  out.push_back({"C-witt-zp2", "length-2 Witt vectors", "Z/4 = W2(F2) and Z/9 = W2(F3) as rings", false, witt_zp2});
}

void add_bicyclic_checks(std::vector<CheckSpec>& out) {
  out.push_back({"C-klein-cohomology", "klein-cohomology", "changing the lifts changes the triple by a boundary",
                 false, lift_independence});
  out.push_back({"C-restrict-k-bigger-f2", "restrict-k-bigger-f2",
                 "rho = I + xE1n, mu = I + yE1n over F4 and F8 do not split; 2x2 reduction", false,
                 restrict_k_bigger});
  out.push_back({"C-restriction-kills-negligible", "restriction-kills-negligible",
                 "H of order 64 over F4, its center, and the n-sigma-12/23 norm families", false, restriction_kills});
  out.push_back({"C-restrict-klein-f2", "restrict-klein-f2", "the Klein restriction at n = 4, 5 does not split",
                 false, klein_f2});
  out.push_back({"C-lift-split-i", "lift-split (i)", "Teichmuller lift is a multiplicative section", false,
                 teichmuller_section});
  out.push_back({"C-lift-split-F2", "lift-split (ii)", "[[-1,1],[0,1]] splits U2(F2) over Z/4 and Z", false,
                 [](Recorder& r) { run_splitting(r, "ii"); }});
  out.push_back({"C-lift-split-F3", "lift-split (iii)", "[[1,1],[-3,-2]] splits U2(F3) over Z/9 and Z", false,
                 [](Recorder& r) { run_splitting(r, "iii"); }});
  out.push_back({"C-lift-split-U3", "lift-split (iv)", "sigma1, sigma2 split U3(F2) over Z/4 and Z", false,
                 [](Recorder& r) { run_splitting(r, "iv"); }});
  out.push_back({"C-lift-split-5", "lift-split (5)", "F3-independent x, y over F9 do not split", false, lift_split_5});
  out.push_back({"C-lift-split-gl2", "lift-split", "GLift splits over all of GL2(F2) and GL2(F3)", false,
                 [](Recorder& r) {
                   for (unsigned p : {2u, 3u}) {
                     const auto g = general_linear(fq(p, 1), 2);
                     const auto res = generic_split(glift_cocycle(g, Variant::GLift));
                     r.expect("GL2(F" + std::to_string(p) + ") splits", res.splits, {{"order", g.order()}});
                   }
                 }});
  out.push_back({"C-oracle-equivalence", "klein-cohomology",
                 "bicyclic and generic deciders agree on U3(F2), U2(F4), U2(F8), Klein n = 4, 5", false,
                 oracle_equivalence});
}

void add_projection_checks(std::vector<CheckSpec>& out) {
  out.push_back({"C-sylow", "sylow", "norm over an odd-index Sylow subgroup is multiplication by the index", false,
                 sylow_norm});
  out.push_back({"C-u5", "u5", "fixed spaces of U5, K, K' and extension of the coordinate characters", false,
                 u5_lemma});
  out.push_back({"C-cor-comes-from-u5", "cor-comes-from-u5", "u_{i,i+1} on subgroups of U extend to K or K'", false,
                 cor_comes_from_u5});
  out.push_back({"C-cor-other-subgroups", "cor-other-subgroups", "V2, V3: fixed spaces and coordinate characters",
                 false, cor_other_subgroups});
  out.push_back({"C-identity-5x5", "identity-5x5", "GL3, GL4, GL5 over F2 are perfect", false, identity_5x5});
  out.push_back({"C-lemma-diagonalizable", "lemma-diagonalizable", "diagonal classes reduce to U5", false,
                 diagonalizable});
  out.push_back({"C-lemma-cyclic", "lemma-cyclic", "square-free p_A gives a stabilizer of odd order", false, cyclic});
}

}  // namespace lol::verify
