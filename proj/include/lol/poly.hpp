#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lol/gfq.hpp"

namespace lol {

// Polynomial over F_q, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr f, std::vector<unsigned> coeffs);
  static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
  static Poly constant(FieldPtr f, unsigned c) { return Poly(std::move(f), {c}); }
  static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }
  // x - a
  static Poly linear(const FieldPtr& f, unsigned root);

  const FieldPtr& field() const { return f_; }
  const std::vector<unsigned>& coeffs() const { return c_; }
  unsigned coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  unsigned lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(unsigned s) const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  unsigned eval(unsigned x) const;
  // Substitute x -> x + a.
  Poly shifted(unsigned a) const;

  bool operator==(const Poly& o) const { return same_field(f_, o.f_) && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Degree first, then coefficients from the top.
  bool operator<(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<unsigned> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic polynomials of exactly this degree in increasing code order.
std::vector<Poly> monic_polys(const FieldPtr& f, int degree);
bool is_irreducible(const Poly& f);
std::vector<Poly> monic_irreducibles(const FieldPtr& f, int degree);

inline constexpr int kMaxFactorDegree = 8;

// Monic irreducible factors with multiplicities, sorted. Throws ZeroPolynomial
// and DegreeTooLarge.
std::vector<std::pair<Poly, unsigned>> poly_factor(const Poly& f);

}  // namespace lol
