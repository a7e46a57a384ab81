// Similarity classes of M5(F2) and the case split that covers them.

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lol/gf2.hpp"
#include "lol/gf2group.hpp"

namespace lol::verify {

bool ClassSignature::operator<(const ClassSignature& o) const {
  if (trace != o.trace) return trace < o.trace;
  return std::lexicographical_compare(invariant_factors.begin(), invariant_factors.end(), o.invariant_factors.begin(),
                                      o.invariant_factors.end());
}

std::string ClassSignature::to_string() const {
  std::string s;
  for (const Poly& f : invariant_factors) s += (s.empty() ? "" : " | ") + f.to_string();
  return s;
}

ClassSignature signature(const Mat& a) {
  ClassSignature s;
  s.invariant_factors = similarity_data(a).invariant_factors;
  const FieldPtr& f = a.ring().field();
  unsigned t = 0;
  for (int i = 0; i < a.rows(); ++i) t = f->add(t, static_cast<unsigned>(a(i, i)));
  s.trace = t;
  return s;
}

namespace {

using namespace fx;

void chains(const Poly& prev, int remaining, std::vector<Poly>& cur, std::vector<std::vector<Poly>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int d = std::max(prev.degree(), 1); d <= remaining; ++d)
    for (const Poly& g : monic_polys(prev.field(), d)) {
      if (!divides(prev, g)) continue;
      cur.push_back(g);
      chains(g, remaining - d, cur, out);
      cur.pop_back();
    }
}

// Trace from the characteristic polynomial: the coefficient of x^(n-1).
unsigned trace_of(const std::vector<Poly>& factors, int n) {
  Poly p = Poly::constant(factors.front().field(), 1);
  for (const Poly& f : factors) p = p * f;
  return p.coeff(static_cast<std::size_t>(n - 1));
}

}  // namespace

std::vector<ClassSignature> all_signatures(int n) {
  std::vector<std::vector<Poly>> out;
  std::vector<Poly> cur;
  chains(Poly::constant(f2().field(), 1), n, cur, out);
  std::vector<ClassSignature> sigs;
  for (auto& c : out) sigs.push_back({c, trace_of(c, n)});  // -x^(n-1) coefficient equals it in char 2
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

Mat rational_form(const ClassSignature& s) {
  std::vector<Mat> blocks;
  for (const Poly& f : s.invariant_factors) blocks.push_back(companion(f));
  return block_diagonal(f2(), blocks);
}

namespace {

using Key = std::vector<gf2::Poly2>;

gf2::Poly2 mask(const Poly& f) {
  gf2::Poly2 m = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i]) m |= gf2::Poly2{1} << i;
  return m;
}

Key key_of(const ClassSignature& s) {
  Key k;
  for (const Poly& f : s.invariant_factors) k.push_back(mask(f));
  return k;
}

// Centralizer order in GL5(F2) of a matrix with these invariant factors:
// for each irreducible phi with elementary divisor exponents lambda and
// q = 2^deg phi, q^(sum lambda'_i^2) prod_i prod_{k <= m_i} (1 - q^-k).
std::uint64_t centralizer_order(const ClassSignature& s) {
  std::map<std::vector<unsigned>, std::vector<int>> parts;  // phi -> exponents
  std::map<std::vector<unsigned>, int> degree;
  for (const Poly& f : s.invariant_factors)
    for (const auto& [phi, e] : poly_factor(f)) {
      parts[phi.coeffs()].push_back(static_cast<int>(e));
      degree[phi.coeffs()] = phi.degree();
    }
  std::uint64_t total = 1;
  for (auto& [phi, lambda] : parts) {
    const std::uint64_t q = std::uint64_t{1} << degree[phi];
    std::sort(lambda.rbegin(), lambda.rend());
    int exponent = 0;
    for (int i = 1; i <= lambda.front(); ++i) {
      const int conj = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [i](int l) { return l >= i; }));
      exponent += conj * conj;
    }
    std::map<int, int> mult;
    for (int l : lambda) ++mult[l];
    std::uint64_t factor = 1;
    for (const auto& [part, m] : mult)
      for (int k = 1; k <= m; ++k) {
        std::uint64_t qk = 1;
        for (int j = 0; j < k; ++j) qk *= q;
        factor *= qk - 1;
        exponent -= k;  // (1 - q^-k) = (q^k - 1) / q^k
      }
    for (int j = 0; j < exponent; ++j) factor *= q;
    total *= factor;
  }
  return total;
}

bool is_diagonalizable(const ClassSignature& s) {
  const Poly& q = s.invariant_factors.back();
  const FieldPtr f = q.field();
  return q == Poly(f, {0, 1}) || q == Poly(f, {1, 1}) || q == Poly(f, {0, 1, 1});
}

bool is_squarefree(const ClassSignature& s) {
  if (s.invariant_factors.size() != 1) return false;
  for (const auto& [phi, e] : poly_factor(s.invariant_factors.front()))
    if (e > 1) return false;
  return true;
}

struct Representative {
  std::string case_id;
  Mat a;
  gf2::Poly2 p, q;  // claimed characteristic and minimal polynomials
};

gf2::Poly2 pmul(std::initializer_list<gf2::Poly2> fs) {
  gf2::Poly2 r = 1;
  for (auto f : fs) r = gf2::poly_mul(r, f);
  return r;
}

// The split cases by Jordan blocks, the others by their displayed matrices.
std::vector<Representative> representatives() {
  constexpr gf2::Poly2 X = 0b10, X1 = 0b11, C = 0b1011, Q = 0b111;
  std::vector<Representative> out;
  const std::vector<std::pair<const char*, std::vector<std::pair<unsigned, int>>>> split{
      {"i", {{0, 5}}},
      {"ii", {{0, 4}, {0, 1}}},
      {"iii", {{0, 3}, {0, 2}}},
      {"iv", {{0, 3}, {0, 1}, {0, 1}}},
      {"v", {{0, 2}, {0, 2}, {0, 1}}},
      {"vi", {{0, 2}, {0, 1}, {0, 1}, {0, 1}}},
      {"vii", {{1, 4}, {0, 1}}},
      {"viii", {{1, 3}, {1, 1}, {0, 1}}},
      {"ix", {{1, 2}, {1, 2}, {0, 1}}},
      {"x", {{1, 2}, {1, 1}, {1, 1}, {0, 1}}},
      {"xi", {{0, 3}, {1, 2}}},
      {"xii", {{0, 3}, {1, 1}, {1, 1}}},
      {"xiii", {{0, 2}, {0, 1}, {1, 2}}},
      {"xiv", {{0, 2}, {0, 1}, {1, 1}, {1, 1}}},
      {"xv", {{0, 1}, {0, 1}, {0, 1}, {1, 2}}},
  };
  for (const auto& [id, blocks] : split) {
    gf2::Poly2 p = 1;
    int top0 = 0, top1 = 0;
    for (const auto& [l, r] : blocks) {
      for (int k = 0; k < r; ++k) p = gf2::poly_mul(p, l ? X1 : X);
      (l ? top1 : top0) = std::max(l ? top1 : top0, r);
    }
    gf2::Poly2 q = 1;
    for (int k = 0; k < top0; ++k) q = gf2::poly_mul(q, X);
    for (int k = 0; k < top1; ++k) q = gf2::poly_mul(q, X1);
    out.push_back({std::string(id) == "i" ? "C-lemma-jordan-block" : std::string("C-lemma-jordan-") + id,
                   jordan(blocks), p, q});
  }
  const std::string cubic = "0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;", quad = "0,1,0,0,0;1,1,0,0,0;";
  const std::vector<std::tuple<const char*, std::string, gf2::Poly2, gf2::Poly2>> other{
      {"i", cubic + "0,0,0,0,0;0,0,0,0,0", pmul({C, X, X}), pmul({C, X})},
      {"ii", cubic + "0,0,0,0,1;0,0,0,0,0", pmul({C, X, X}), pmul({C, X, X})},
      {"iii", cubic + "0,0,0,1,0;0,0,0,0,1", pmul({C, X1, X1}), pmul({C, X1})},
      {"iv", cubic + "0,0,0,1,1;0,0,0,0,1", pmul({C, X1, X1}), pmul({C, X1, X1})},
      {"v", quad + "0,0,0,1,0;0,0,1,1,0;0,0,0,0,0", pmul({Q, Q, X}), pmul({Q, X})},
      {"vi", "0,1,1,0,0;1,1,0,1,0;0,0,0,1,0;0,0,1,1,0;0,0,0,0,0", pmul({Q, Q, X}), pmul({Q, Q, X})},
      {"vii", quad + "0,0,0,0,0;0,0,0,0,0;0,0,0,0,1", pmul({Q, X, X, X1}), pmul({Q, X, X1})},
      {"viii", quad + "0,0,0,1,0;0,0,0,0,0;0,0,0,0,1", pmul({Q, X, X, X1}), pmul({Q, X, X, X1})},
      {"ix", quad + "0,0,1,0,0;0,0,0,1,0;0,0,0,0,1", pmul({Q, X1, X1, X1}), pmul({Q, X1})},
      {"x", quad + "0,0,1,1,0;0,0,0,1,0;0,0,0,0,1", pmul({Q, X1, X1, X1}), pmul({Q, X1, X1})},
      {"xi", quad + "0,0,1,1,0;0,0,0,1,1;0,0,0,0,1", pmul({Q, X1, X1, X1}), pmul({Q, X1, X1, X1})},
  };
  for (const auto& [id, text, p, q] : other) out.push_back({std::string("C-lemma-other-") + id, m5(text), p, q});
  return out;
}

Key gf2_key(gf2::Word w) { return gf2::invariant_factors(w, 5); }

void coverage(Recorder& rec) {
  const auto sigs = all_signatures(5);
  rec.expect_eq("number of similarity classes of M5(F2)", 74, sigs.size());

  // Chains, and agreement of the two invariant-factor routines on each form.
  std::size_t bad_forms = 0;
  std::set<Key> constructed;
  for (const auto& s : sigs) {
    constructed.insert(key_of(s));
    const Mat a = rational_form(s);
    if (!(signature(a) == s) || gf2_key(gf2::from_mat(a)) != key_of(s)) ++bad_forms;
  }
  rec.expect_eq("rational forms whose computed signature differs", 0, bad_forms);

  // Order-formula oracle: the class sizes add up to 2^25.
  const std::uint64_t gl5 = gf2::gl_order(5);
  std::uint64_t total = 0;
  bool exact = true;
  for (const auto& s : sigs) {
    const std::uint64_t c = centralizer_order(s);
    exact = exact && gl5 % c == 0;
    total += gl5 / c;
  }
  rec.expect("centralizer orders divide |GL5|", exact);
  rec.expect_eq("sum of class sizes", std::uint64_t{1} << 25, total);

  // Sampling oracle.
  std::mt19937_64 gen(2025);
  std::set<Key> seen;
  std::size_t missing = 0;
  for (int i = 0; i < 1000000; ++i) {
    const Key k = gf2_key(gf2::expand(gen() & ((std::uint64_t{1} << 25) - 1), 5));
    if (seen.insert(k).second && !constructed.count(k)) ++missing;
  }
  rec.expect_eq("sampled signatures missing from the constructed list", 0, missing);
  rec.note("sampled_distinct", seen.size());

  // Representatives: claimed (p_A, q_A), and the partition up to A <-> I + A.
  std::map<Key, std::string> owner;
  std::size_t bad_claims = 0;
  for (const auto& r : representatives()) {
    const auto d = similarity_data(r.a);
    if (mask(d.charpoly) != r.p || mask(d.minpoly) != r.q) {
      ++bad_claims;
      rec.fail(r.case_id + ": (p_A, q_A) differ from the claim");
    }
    for (const Mat& m : {r.a, I() + r.a}) {
      const Key k = key_of(signature(m));
      if (owner.count(k) && owner[k] != r.case_id) rec.fail(r.case_id + " shares a class with " + owner[k]);
      owner[k] = r.case_id;
    }
  }
  rec.expect_eq("representatives whose (p_A, q_A) differ from the claim", 0, bad_claims);

  std::map<std::string, int> category;
  std::size_t uncovered = 0, overlaps = 0;
  for (const auto& s : sigs) {
    const Key k = key_of(s);
    std::vector<std::string> hits;
    if (is_diagonalizable(s)) hits.push_back("C-lemma-diagonalizable");
    if (is_squarefree(s)) hits.push_back("C-lemma-cyclic");
    if (owner.count(k)) hits.push_back(owner[k]);
    if (hits.empty()) {
      ++uncovered;
      rec.fail("no case covers " + s.to_string());
    } else if (hits.size() > 1) {
      ++overlaps;
    } else {
      ++category[hits.front().rfind("C-lemma-jordan", 0) == 0 ? "jordan"
                 : hits.front().rfind("C-lemma-other", 0) == 0 ? "other"
                                                                 : hits.front()];
    }
  }
  rec.expect_eq("uncovered signatures", 0, uncovered);
  rec.expect_eq("signatures in more than one case", 0, overlaps);
  rec.expect_eq("class counts: diagonalizable, square-free, split, other", json({6, 16, 30, 22}),
                json({category["C-lemma-diagonalizable"], category["C-lemma-cyclic"], category["jordan"],
                      category["other"]}));

  // The worked example of the split cases.
  const auto d = similarity_data(jordan({{0, 3}, {0, 2}}));
  rec.expect_eq("J3(0)+J2(0) has (p_A, q_A) = (x^5, x^3)", json({0b100000, 0b1000}),
                json({mask(d.charpoly), mask(d.minpoly)}));
}

void census(Recorder& rec) {
  const auto sigs = all_signatures(5);
  std::map<Key, std::uint64_t> expected;
  const std::uint64_t gl5 = gf2::gl_order(5);
  for (const auto& s : sigs) expected[key_of(s)] = gl5 / centralizer_order(s);
  std::map<Key, std::uint64_t> counted;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << 25); ++c) ++counted[gf2_key(gf2::expand(c, 5))];
  rec.expect_eq("distinct signatures over all 2^25 matrices", expected.size(), counted.size());
  std::size_t mismatched = 0;
  for (const auto& [k, n] : counted)
    if (!expected.count(k) || expected[k] != n) ++mismatched;
  rec.expect_eq("classes whose size differs from |GL5| / |centralizer|", 0, mismatched);
}

// Every lemma and case the argument relies on has a check.
void catalog_closure(Recorder& rec) {
  std::vector<std::string> known{"restrict-k-bigger-f2", "restriction-kills-negligible", "sylow", "u5",
                                 "cor-comes-from-u5", "cor-other-subgroups", "identity-5x5", "all-phi-but-one-vanish",
                                 "lemma-diagonalizable", "lemma-cyclic", "restrict-klein-f2", "lemma-jordan-block",
                                 "klein-cohomology", "lift-split (i)", "lift-split (ii)", "lift-split (iii)",
                                 "lift-split (iv)", "lift-split (5)"};
  for (const char* r : {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv"})
    known.push_back(std::string("lemma-jordan (") + r + ")");
  for (const char* r : {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"})
    known.push_back(std::string("lemma-other (") + r + ")");
  std::set<std::string> anchors;
  for (const auto& c : catalog()) anchors.insert(c.anchor);
  std::vector<std::string> missing;
  for (const auto& k : known)
    if (!anchors.count(k)) missing.push_back(k);
  rec.expect("every known case has a check", missing.empty(), {{"missing", missing}, {"known", known.size()}});
}

}  // namespace

CheckReport class_coverage_audit(bool with_census) {
  if (with_census)
    return run_check({"C-class-census", "all-phi-but-one-vanish", "", true, census}, true);
  return run_check({"C-class-coverage-audit", "all-phi-but-one-vanish", "", false, coverage}, false);
}

void add_audit_checks(std::vector<CheckSpec>& out) {
  out.push_back({"C-class-coverage-audit", "all-phi-but-one-vanish",
                 "74 classes, order-formula and sampling oracles, partition into the named cases", false, coverage});
  out.push_back({"C-class-census", "all-phi-but-one-vanish", "signature of every matrix in M5(F2)", true, census});
  out.push_back({"C-catalog-closure", "catalog", "every lemma and case of the reduction has a check", false,
                 catalog_closure});
}

}  // namespace lol::verify
