#pragma once

// Homomorphisms from a finite matrix group to Q/Z.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lol/group.hpp"

namespace lol {

// A class in Q/Z, kept as num/den with 0 <= num < den and gcd 1.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d);
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-() const { return Frac(-num, den); }
  bool is_zero() const { return num == 0; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  std::string to_string() const;
};

class Character {
 public:
  // Checks u(gh) = u(g) + u(h) for every element g and generator h.
  static Character from_function(const Subgroup& h, const std::function<Frac(const Mat&)>& u);
  // Extends the given values multiplicatively; conflicts throw NotHomomorphism.
  static Character from_generators(const Subgroup& h, const std::vector<std::pair<Mat, Frac>>& values);
  static Character trivial(const Subgroup& h);

  const Subgroup& domain() const { return h_; }
  Frac operator()(const Mat& g) const { return values_[h_.index(g)]; }
  const std::vector<Frac>& values() const { return values_; }
  bool is_trivial() const;
  Subgroup kernel() const;
  Character restrict_to(const Subgroup& sub) const;
  bool operator==(const Character& o) const { return h_.same_elements(o.h_) && values_ == o.values_; }

 private:
  Subgroup h_;
  std::vector<Frac> values_;  // aligned with h_.elements()
};

// u_ij(g) = g_ij / 2 over F_2; NotHomomorphism when it is not one on h.
Character coordinate_character(const Subgroup& h, int i, int j);

// Whether u extends to a homomorphism on k >= h: exactly when u vanishes on
// h intersected with [k, k].
bool character_extends(const Character& u, const Subgroup& k);
// Search over assignments on generators of k; |k| <= 64.
bool character_extends_bruteforce(const Character& u, const Subgroup& k);

// Every homomorphism to Q/Z, through the abelianization.
std::vector<Character> all_characters(const Subgroup& g);

}  // namespace lol
