// One line per acceptance criterion: exact equalities and a wall-clock budget.
// Pass --heavy to include the full 2^25 class census in criterion 9.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "lol/abelian.hpp"
#include "lol/canonical.hpp"
#include "lol/gf2group.hpp"
#include "lol/group.hpp"
#include "lol/gmodule.hpp"
#include "lol/shape.hpp"
#include "lol/textio.hpp"
#include "lol/verify.hpp"
#include "lol/witt2.hpp"

using namespace lol;
using namespace lol::verify;

namespace {

struct Tally {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const Ring& f2() {
  static const Ring r = Ring::fq(Field::make(2, 1));
  return r;
}
Mat E(int i, int j) { return Mat::unit(f2(), 5, i, j); }
Mat I() { return Mat::identity(f2(), 5); }

const CheckSpec& spec(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCheck, id);
}

void checks_pass(Tally& t, const std::vector<std::string>& ids, bool heavy = false) {
  for (const auto& id : ids) {
    const auto r = run_check(spec(id), heavy);
    t.expect(r.status == Status::Pass, id + " " + status_name(r.status));
  }
}

// ---- 1 ----
void witt(Tally& t) {
  checks_pass(t, {"C-witt-ring-laws-F2", "C-witt-ring-laws-F3", "C-witt-ring-laws-F4"});
  for (const auto& [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const auto f = Field::make(p, m);
    for (unsigned x = 0; x < f->order(); ++x) {
      W2 sum{};
      for (unsigned k = 0; k < p; ++k) sum = w2_add(*f, sum, {x, 0});
      const W2 expected{0, f->pow(x, p)};
      t.expect(sum == expected, "p tau(x) = iota(x^p) in W2(F" + f->name() + ")");
      t.expect(w2_mul(*f, w2_from_int(*f, p), {x, 0}) == expected, "p * tau(x) as a product");
    }
  }
  const auto f4 = Field::make(2, 2);
  for (unsigned u = 0; u < 4; ++u)
    t.expect(w2_add(*f4, {u, 0}, {u, 0}) == W2{0, f4->mul(u, u)}, "(u,0) + (u,0) = (0,u^2)");
  const auto f9 = Field::make(3, 2);
  for (unsigned z = 0; z < 9; ++z)
    t.expect(w2_add(*f9, w2_add(*f9, {z, 0}, {z, 0}), {z, 0}) == W2{0, f9->pow(z, 3)}, "3(z,0) = (0,z^3)");
}

// ---- 2 ----
BicyclicSpec corner(const Ring& r, int n, Scalar x, Scalar y) {
  Mat rho = Mat::identity(r, n), mu = Mat::identity(r, n);
  rho(0, n - 1) = x;
  mu(0, n - 1) = y;
  return BicyclicSpec::make(rho, mu);
}

bool generic_splits(const BicyclicSpec& z) {
  return generic_split(glift_cocycle(Subgroup::closure({z.rho, z.mu}), Variant::GLift)).splits;
}

void restrict_f4(Tally& t) {
  checks_pass(t, {"C-restrict-k-bigger-f2"});
  const Ring f4 = Ring::fq(Field::make(2, 2));
  int pairs = 0;
  for (int n : {2, 3})
    for (Scalar x = 1; x < 4; ++x)
      for (Scalar y = 1; y < 4; ++y) {
        if (x == y) continue;
        const auto z = corner(f4, n, x, y);
        const bool b = bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift).splits;
        t.expect(!b, "F4 n=" + std::to_string(n) + " pair does not split");
        t.expect(b == generic_splits(z), "generic_split agrees");
        if (n == 2) ++pairs;
      }
  t.expect(pairs == 6, "six ordered pairs at n = 2");
}

// ---- 3 ----
void restrict_klein(Tally& t) {
  checks_pass(t, {"C-restrict-klein-f2"});
  for (int n : {4, 5}) {
    Mat s = Mat::identity(f2(), n), u = Mat::identity(f2(), n);
    s(0, 2) = s(1, 3) = 1;
    u(0, 3) = u(1, 2) = u(1, 3) = 1;
    const auto z = BicyclicSpec::make(s, u);
    t.expect(!bicyclic_split(z, glift_triple(z, Variant::GLift), Variant::GLift).splits,
             "Klein n=" + std::to_string(n) + " does not split");
  }
}

// ---- 4 ----
void lift_split(Tally& t) {
  checks_pass(t, {"C-lift-split-F2", "C-lift-split-F3", "C-lift-split-U3"});
  const Ring z4 = Ring::zmod(4), z9 = Ring::zmod(9);
  t.expect(Mat::from_ints(z4, {{-1, 1}, {0, 1}}).pow(2).is_identity(), "lift^2 = I over Z/4");
  t.expect(Mat::from_ints(z9, {{1, 1}, {6, 7}}).pow(3).is_identity(), "[[1,1],[6,7]]^3 = I mod 9");
  for (const auto& c : splitting_cases()) {
    Recorder rec;
    splitting_check(rec, c);
    t.expect(rec.passed(), "splitting case " + c.name);
    if (c.name.rfind("iv", 0) == 0) t.expect(c.expected_order == 8, "U3 closure has order 8");
  }
}

// ---- 5 ----
void lift_split_5(Tally& t) { checks_pass(t, {"C-lift-split-5"}); }

// ---- 6 ----
std::vector<std::int64_t> divisors_of(const Mat& a) { return abelianize(centralizer_of_matrix(a)).divisors; }

Mat jordan(const std::vector<int>& sizes) {
  std::vector<Mat> blocks;
  for (int s : sizes) blocks.push_back(jordan_block(f2(), 0, s));
  return block_diagonal(f2(), blocks);
}

void stabilizers(Tally& t) {
  const Subgroup g5 = centralizer_of_matrix(jordan({5}));
  t.expect(g5.order() == 16, "|G_J5(0)| = 16");
  t.expect(abelianize(g5).divisors == std::vector<std::int64_t>{2, 8}, "G_J5(0)^ab = (2,8)");
  t.expect(divisors_of(jordan({4, 1})) == std::vector<std::int64_t>{2, 2, 4}, "J4+J1: (2,2,4)");
  t.expect(divisors_of(jordan({3, 2})) == std::vector<std::int64_t>{2, 2, 2}, "J3+J2: (2,2,2)");
  const Subgroup u5 = unitriangular(f2(), 5);
  t.expect(abelianize(u5).divisors == std::vector<std::int64_t>{2, 2, 2, 2}, "U5^ab = (2,2,2,2)");
  const GModule m0 = GModule::trace_zero(f2(), 5);
  const auto fixed = m0.fixed_points(u5);
  t.expect(fixed.size() == 1 && fixed[0] == E(1, 5), "M^U5 = span{E15}");
  const Subgroup k = shape_group(f2(), "1,*,*,*,*;0,1,*,*,*;0,0,1,*,*;0,0,0,*,*;0,0,0,*,*");
  t.expect(m0.fixed_points(k).empty(), "M^K = 0");
  for (int n : {3, 4, 5}) {
    const auto g = gf2::Group::closure(gf2::gl_generators(n), n, gf2::gl_order(n) + 1);
    t.expect(g.order() == gf2::gl_order(n) && g.is_perfect(), "GL" + std::to_string(n) + "(F2) is perfect");
  }
}

// ---- 7 ----
void norms(Tally& t) {
  const CheckReport nv = norm_vanishing_suite(), jb = jordan_block_ingredients();
  t.expect(nv.status == Status::Pass, "norm_vanishing_suite passes");
  t.expect(jb.status == Status::Pass, "jordan_block_ingredients passes");
  t.expect(nv.identities + jb.identities >= 20, "at least 20 identities, got " +
                                                     std::to_string(nv.identities + jb.identities));
  const GModule m = GModule::full(f2(), 5);
  const Mat n = jordan({5}), a = I() + n, zero = Mat::zero(f2(), 5, 5);
  const Mat sigma = I() + E(1, 4), tau = I() + E(1, 3);
  t.expect(m.norm_cyclic(sigma, a) == E(1, 5), "N_sigma(A) = E15");
  t.expect(m.norm_cyclic(tau, E(1, 5)) == zero, "N_tau(E15) = 0");
  t.expect(commutator(I() + E(1, 4), I() + E(4, 5)) == I() + E(1, 5), "I + E15 = [I + E14, I + E45]");
  t.expect(m.norm_cyclic(tau, m.norm_cyclic(sigma, a)) == zero, "N_nu(N_mu(A)) = 0");
  const auto has_family = [&](const char* family) {
    return nv.evidence.dump().find(family) != std::string::npos;
  };
  t.expect(has_family("N_sigma12(") && has_family("N_sigma23("), "n-sigma-12/23 families present");
}

// ---- 8 ----
void oracle(Tally& t) { checks_pass(t, {"C-oracle-equivalence"}); }

// ---- 9 ----
void coverage(Tally& t, bool heavy) {
  const auto r = class_coverage_audit(false);
  t.expect(r.status == Status::Pass, "class coverage audit");
  checks_pass(t, {"C-catalog-closure"});
  if (heavy) t.expect(class_coverage_audit(true).status == Status::Pass, "2^25 census");
}

// ---- 10 ----
void gl5(Tally& t) {
  const auto g = gf2::Group::closure(gf2::gl_generators(5), 5, gf2::gl_order(5) + 1);
  t.expect(g.order() == 9999360, "|<generators>| = 9,999,360");
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  for (int i = 1; i < argc; ++i) heavy = heavy || std::strcmp(argv[i], "--heavy") == 0;

  struct Criterion {
    int id;
    const char* title;
    double budget_ms;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Witt ring laws on W2(F2), W2(F3), W2(F4)", 10e3, witt},
      {2, "restrict-k-bigger-f2: F4 pairs do not split", 1e3, restrict_f4},
      {3, "restrict-klein-f2: n = 4, 5 and TX + XT = I infeasible", 1e3, restrict_klein},
      {4, "lift-split (ii), (iii), (iv) over Z/p^2 and Z", 1e3, lift_split},
      {5, "lift-split (5): F9 independent pair does not split", 1e3, lift_split_5},
      {6, "stabilizer regressions", 60e3, stabilizers},
      {7, "norm and commutator identities", 5e3, norms},
      {8, "bicyclic and generic oracles agree", 30e3, oracle},
      {9, heavy ? "class coverage audit with 2^25 census" : "class coverage audit", heavy ? 600e3 : 60e3,
       [heavy](Tally& t) { coverage(t, heavy); }},
      {10, "GL5(F2) closure", 60e3, gl5},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.budget_ms) t.failures.push_back("over budget");
    const bool ok = t.failures.empty();
    failed += !ok;
    std::printf("criterion %2d  %s  %-58s %9.1f ms / %.0f ms\n", c.id, ok ? "PASS" : "FAIL", c.title, ms,
                c.budget_ms);
    for (const auto& f : t.failures) std::printf("      %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
