#include "lol/character.hpp"

#include <deque>
#include <numeric>

#include "lol/abelian.hpp"

namespace lol {

Frac::Frac(std::int64_t n, std::int64_t d) {
  if (d <= 0) throw Error(ErrorCode::DivisionByZero, "fraction needs a positive denominator");
  n %= d;
  if (n < 0) n += d;
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Frac::to_string() const { return num == 0 ? "0" : std::to_string(num) + "/" + std::to_string(den); }

Character Character::from_function(const Subgroup& h, const std::function<Frac(const Mat&)>& u) {
  Character c;
  c.h_ = h;
  c.values_.reserve(h.order());
  for (const Mat& g : h.elements()) c.values_.push_back(u(g));
  for (std::size_t i = 0; i < h.order(); ++i)
    for (const Mat& s : h.generators())
      if (c.values_[h.index(h.element(i) * s)] != c.values_[i] + c(s))
        throw Error(ErrorCode::NotHomomorphism, "values are not additive on ");
  return c;
}

Character Character::from_generators(const Subgroup& h, const std::vector<std::pair<Mat, Frac>>& values) {
  Character c;
  c.h_ = h;
  c.values_.assign(h.order(), Frac());
  std::vector<char> set(h.order(), 0);
  const std::size_t e = h.index(Mat::identity(h.ring(), h.degree()));
  set[e] = 1;
  std::deque<std::size_t> queue{e};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& [g, v] : values) {
      const std::size_t j = h.index(h.element(i) * g);
      const Frac val = c.values_[i] + v;
      if (!set[j]) {
        set[j] = 1;
        c.values_[j] = val;
        queue.push_back(j);
      } else if (c.values_[j] != val) {
        throw Error(ErrorCode::NotHomomorphism, "generator values are inconsistent");
      }
    }
  }
  for (char s : set)
    if (!s) throw Error(ErrorCode::NotHomomorphism, "values do not cover the group");
  return c;
}

Character Character::trivial(const Subgroup& h) {
  Character c;
  c.h_ = h;
  c.values_.assign(h.order(), Frac());
  return c;
}

bool Character::is_trivial() const {
  for (const Frac& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

Subgroup Character::kernel() const {
  return h_.filter([&](const Mat& g) { return (*this)(g).is_zero(); });
}

Character Character::restrict_to(const Subgroup& sub) const {
  if (!sub.is_subgroup_of(h_)) throw Error(ErrorCode::NotSubgroup, "restriction to a non-subgroup");
  Character c;
  c.h_ = sub;
  for (const Mat& g : sub.elements()) c.values_.push_back((*this)(g));
  return c;
}

Character coordinate_character(const Subgroup& h, int i, int j) {
  if (h.ring().kind() != RingKind::Fq || h.ring().field()->order() != 2)
    throw Error(ErrorCode::NotPrimeField, "coordinate characters are defined over F_2");
  return Character::from_function(h, [&](const Mat& g) { return Frac(g(i - 1, j - 1), 2); });
}

bool character_extends(const Character& u, const Subgroup& k) {
  const Subgroup& h = u.domain();
  if (!h.is_subgroup_of(k)) throw Error(ErrorCode::NotSubgroup, "character domain is not inside k");
  const Subgroup d = k.derived();
  for (const Mat& g : h.elements())
    if (d.contains(g) && !u(g).is_zero()) return false;
  return true;
}

bool character_extends_bruteforce(const Character& u, const Subgroup& k) {
  const Subgroup& h = u.domain();
  if (!h.is_subgroup_of(k)) throw Error(ErrorCode::NotSubgroup, "character domain is not inside k");
  if (k.order() > 64) throw Error(ErrorCode::BoundExceeded, "brute-force extension search limited to order 64");
  const auto gens = greedy_generators(k.elements(), k.ring(), k.degree());
  std::vector<std::int64_t> orders;
  for (const Mat& g : gens) orders.push_back(mat_order(g));
  std::vector<std::int64_t> c(gens.size(), 0);
  for (;;) {
    std::vector<std::pair<Mat, Frac>> values;
    for (std::size_t i = 0; i < gens.size(); ++i) values.emplace_back(gens[i], Frac(c[i], orders[i]));
    try {
      Character ext = Character::from_generators(k, values);
      bool agrees = true;
      for (const Mat& g : h.elements())
        if (ext(g) != u(g)) {
          agrees = false;
          break;
        }
      if (agrees) return true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotHomomorphism) throw;
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++c[i] < orders[i]) break;
      c[i] = 0;
    }
    if (i == gens.size()) return false;
  }
}

std::vector<Character> all_characters(const Subgroup& g) {
  const AbelianStructure ab = abelianize(g);
  const std::size_t r = ab.divisors.size();
  std::vector<Character> out;
  std::vector<std::int64_t> a(r, 0);
  for (;;) {
    out.push_back(Character::from_function(g, [&](const Mat& x) {
      const auto& c = ab.coordinates(x);
      Frac v;
      for (std::size_t i = 0; i < r; ++i) v = v + Frac(a[i] * c[i], ab.divisors[i]);
      return v;
    }));
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (++a[i] < ab.divisors[i]) break;
      a[i] = 0;
    }
    if (i == r) return out;
  }
}

}  // namespace lol
