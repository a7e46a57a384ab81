#include "fixtures.hpp"

#include <algorithm>
#include <set>

#include "lol/textio.hpp"

namespace lol::verify::fx {

const Ring& f2() {
  static const Ring r = Ring::fq(Field::make(2, 1));
  return r;
}

Mat E(int i, int j, int n) { return Mat::unit(f2(), n, i, j); }
Mat I(int n) { return Mat::identity(f2(), n); }
Mat m5(std::string_view text) { return parse_mat(f2(), text); }

Mat jordan(const std::vector<std::pair<unsigned, int>>& blocks) {
  std::vector<Mat> parts;
  for (const auto& [lambda, r] : blocks) parts.push_back(jordan_block(f2(), lambda, r));
  return block_diagonal(f2(), parts);
}

Mat perm(std::string_view cycles, int n) { return permutation_matrix(f2(), parse_cycles(cycles, n)); }
Mat conj(const Mat& g, const Mat& a) { return g * a * mat_inv(g); }
Subgroup shape(std::string_view text) { return shape_group(f2(), text); }

const Subgroup& u5() {
  static const Subgroup u = unitriangular(f2(), 5);
  return u;
}

const Subgroup& l_e15() {
  static const Subgroup l = shape("1,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,0,0,0,1");
  return l;
}

const GModule& m5_full() {
  static const GModule m = GModule::full(f2(), 5);
  return m;
}

const GModule& m5_trace_zero() {
  static const GModule m = GModule::trace_zero(f2(), 5);
  return m;
}

BicyclicSpec klein(int n) {
  Mat s = I(n), t = I(n);
  s(0, 2) = s(1, 3) = 1;
  t(0, 3) = t(1, 2) = t(1, 3) = 1;
  return BicyclicSpec::make(s, t);
}

BicyclicSpec e1n(const Ring& fq, int n, Scalar x, Scalar y) {
  Mat rho = Mat::identity(fq, n), mu = Mat::identity(fq, n);
  rho(0, n - 1) = x;
  mu(0, n - 1) = y;
  return BicyclicSpec::make(rho, mu);
}

Subgroup stabilizer(Recorder& rec, const std::string& name, const Mat& a, std::string_view displayed) {
  const Subgroup g = centralizer_of_matrix(a);
  const Subgroup d = shape(displayed);
  rec.expect(name + ": stabilizer equals the displayed group", g.same_elements(d),
             {{"computed_order", g.order()}, {"displayed_order", d.order()}});
  return g;
}

Mat conjugated(Recorder& rec, std::string_view cycles, const Mat& a, const Mat& displayed) {
  const Mat p = perm(cycles);
  const Mat b = conj(p, a);
  rec.identity("Pi" + std::string(cycles) + " conjugate of A", displayed, b);
  rec.witness(conjugate_witness(p, a, b));
  return b;
}

void sylow(Recorder& rec, const std::string& name, const Subgroup& g, const Subgroup& p) {
  rec.expect(name + " is a 2-Sylow subgroup", is_sylow2(g, p), {{"group_order", g.order()}, {"p_order", p.order()}});
}

void semidirect(Recorder& rec, const std::string& name, const Subgroup& k, const Subgroup& normal,
                const Subgroup& complement) {
  const bool inside = normal.is_subgroup_of(k) && complement.is_subgroup_of(k);
  const bool is_normal = inside && normal.is_normal_in(k);
  const bool trivial = normal.intersect(complement).order() == 1;
  const bool orders = k.order() == normal.order() * complement.order();
  rec.expect(name + " is a semidirect product", inside && is_normal && trivial && orders,
             {{"normal", is_normal},
              {"trivial_intersection", trivial},
              {"orders", {k.order(), normal.order(), complement.order()}}});
}

Mat norm(Recorder& rec, const std::string& claim, const Mat& g, const Mat& m, const Mat& expected) {
  const Mat r = m5_full().norm_cyclic(g, m);
  rec.identity(claim, expected, r);
  rec.witness(norm_witness(g, m, r));
  return r;
}

Mat quotient_norm(Recorder& rec, const std::string& claim, const Subgroup& big, const Subgroup& sub, const Mat& m,
                  const Mat& expected) {
  const Mat r = GModule::full(m.ring(), m.rows()).norm(big, sub, m);
  rec.identity(claim, expected, r);
  return r;
}

void commutator_is(Recorder& rec, const Mat& expected, const Mat& a, const Mat& b) {
  const Mat c = commutator(a, b);
  rec.identity(format_mat(expected) + " = [" + format_mat(a) + ", " + format_mat(b) + "]", expected, c);
  rec.witness(commutator_witness(a, b, c));
}

void divisors(Recorder& rec, const std::string& name, const Subgroup& g, const std::vector<std::int64_t>& expected) {
  rec.expect_eq(name + " abelianization divisors", expected, abelianize(g).divisors);
}

namespace {

std::string coord_name(int i, int j) { return "u" + std::to_string(i) + std::to_string(j); }

std::vector<Frac> sum(const std::vector<Frac>& a, const std::vector<Frac>& b) {
  std::vector<Frac> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Subgroup of value vectors generated by gens under pointwise addition.
std::set<std::vector<Frac>, bool (*)(const std::vector<Frac>&, const std::vector<Frac>&)> span_of(
    const std::vector<std::vector<Frac>>& gens, std::size_t n) {
  auto less = +[](const std::vector<Frac>& a, const std::vector<Frac>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Frac& x, const Frac& y) {
      return x.num * y.den < y.num * x.den;
    });
  };
  std::set<std::vector<Frac>, decltype(less)> out(less);
  std::vector<std::vector<Frac>> todo{std::vector<Frac>(n, Frac(0, 1))};
  out.insert(todo.front());
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto next = sum(cur, g);
      if (out.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

void coordinate_basis(Recorder& rec, const std::string& name, const Subgroup& g,
                      const std::vector<std::pair<int, int>>& coords) {
  std::vector<std::vector<Frac>> values;
  std::string names;
  for (const auto& [i, j] : coords) {
    names += (names.empty() ? "" : ", ") + coord_name(i, j);
    try {
      values.push_back(coordinate_character(g, i, j).values());
    } catch (const Error&) {
      rec.fail(name + ": " + coord_name(i, j) + " is not a homomorphism");
      return;
    }
  }
  const auto ab = abelianize(g);
  const auto span = span_of(values, g.order());
  const auto expected = std::int64_t{1} << coords.size();
  rec.expect(name + ": characters are spanned by " + names,
             static_cast<std::int64_t>(span.size()) == expected && ab.quotient_order() == expected &&
                 std::all_of(ab.divisors.begin(), ab.divisors.end(), [](std::int64_t d) { return d == 2; }),
             {{"span", span.size()}, {"abelianization", ab.divisors}});
}

void characters_extend(Recorder& rec, const std::string& name, const Subgroup& h, const Subgroup& k) {
  const auto chars = all_characters(h);
  std::size_t bad = 0;
  for (const auto& u : chars)
    if (!character_extends(u, k)) ++bad;
  rec.expect(name + ": every character extends", bad == 0, {{"characters", chars.size()}, {"not_extending", bad}});
}

void handled_by_u5(Recorder& rec, const std::string& name, const Subgroup& p) {
  if (!p.is_subgroup_of(u5())) {
    rec.fail(name + " is not unitriangular");
    return;
  }
  const auto in_kernel = [&](int i) {
    return std::all_of(p.elements().begin(), p.elements().end(), [&](const Mat& g) { return g(i - 1, i) == 0; });
  };
  std::vector<std::pair<int, int>> used{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  if (in_kernel(2)) used.insert(used.end(), {{1, 3}, {2, 4}});
  if (in_kernel(3)) used.insert(used.end(), {{2, 4}, {3, 5}});
  std::vector<std::vector<Frac>> gens;
  std::string names;
  for (const auto& [i, j] : used) {
    gens.push_back(coordinate_character(p, i, j).values());
    names += (names.empty() ? "" : ",") + coord_name(i, j);
  }
  const auto span = span_of(gens, p.order());
  const auto all = all_characters(p);
  rec.expect(name + ": every character is a sum of " + names, span.size() == all.size(),
             {{"span", span.size()}, {"characters", all.size()}});
}

void fixed_space(Recorder& rec, const std::string& name, const GModule& module, const Subgroup& g,
                 const std::vector<Mat>& expected_span) {
  const auto fixed = module.fixed_points(g);
  const int n = module.degree();
  const auto rank_of = [&](const std::vector<Mat>& ms) {
    if (ms.empty()) return 0;
    Mat rows(module.ring(), static_cast<int>(ms.size()), n * n);
    for (std::size_t r = 0; r < ms.size(); ++r)
      for (int k = 0; k < n * n; ++k) rows(static_cast<int>(r), k) = ms[r](k / n, k % n);
    return mat_rank(rows);
  };
  std::vector<Mat> both = fixed;
  both.insert(both.end(), expected_span.begin(), expected_span.end());
  const int rf = rank_of(fixed), re = rank_of(expected_span), rb = rank_of(both);
  rec.expect(name, rf == re && rb == rf, {{"fixed_dimension", rf}, {"expected_dimension", re}});
}

std::size_t character_span(const std::vector<std::vector<Frac>>& gens) {
  return gens.empty() ? 1 : span_of(gens, gens.front().size()).size();
}

json poly_list(const std::vector<Poly>& ps) {
  json j = json::array();
  for (const auto& p : ps) j.push_back(p.to_string());
  return j;
}

}  // namespace lol::verify::fx
