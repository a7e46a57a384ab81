#include <algorithm>
#include <sstream>

#include "lol/poly.hpp"

namespace lol {

Poly::Poly(FieldPtr f, std::vector<unsigned> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::linear(const FieldPtr& f, unsigned root) { return Poly(f, {f->neg(root), 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(f_, o.f_);
  std::vector<unsigned> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(f_, o.f_);
  std::vector<unsigned> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(f_, o.f_);
  if (c_.empty() || o.c_.empty()) return zero(f_);
  std::vector<unsigned> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return Poly(f_, std::move(r));
}

Poly Poly::scaled(unsigned s) const {
  std::vector<unsigned> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s);
  return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero");
  return scaled(f_->inv(c_.back()));
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(f_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

unsigned Poly::eval(unsigned x) const {
  unsigned r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::shifted(unsigned a) const {
  Poly r = zero(f_);
  Poly base = Poly(f_, {a, 1});
  for (std::size_t i = c_.size(); i-- > 0;) r = r * base + constant(f_, c_[i]);
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    bool show_coeff = c_[i] != 1 || i == 0;
    if (show_coeff) {
      if (f_->m() > 1) os << "[" << c_[i] << "]";
      else os << c_[i];
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldPtr& f = a.field();
  std::vector<unsigned> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const unsigned inv_lead = f->inv(b.lead());
  std::vector<unsigned> q(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    unsigned t = f->mul(r[i], inv_lead);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f->sub(r[i - db + j], f->mul(t, bc[j]));
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

std::vector<Poly> monic_polys(const FieldPtr& f, int degree) {
  const unsigned q = f->order();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= q;
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<unsigned> c(degree + 1);
    std::uint64_t v = code;
    for (int i = 0; i < degree; ++i) {
      c[i] = static_cast<unsigned>(v % q);
      v /= q;
    }
    c[degree] = 1;
    out.emplace_back(f, std::move(c));
  }
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const Poly& g : monic_polys(f.field(), d))
      if (divides(g, f)) return false;
  return true;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& f, int degree) {
  std::vector<Poly> out;
  for (Poly& g : monic_polys(f, degree))
    if (is_irreducible(g)) out.push_back(std::move(g));
  return out;
}

std::vector<std::pair<Poly, unsigned>> poly_factor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero");
  if (f.degree() > kMaxFactorDegree)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(f.degree()));
  Poly rest = f.monic();
  std::vector<std::pair<Poly, unsigned>> out;
  // Candidates in increasing degree: the first divisor found has no smaller
  // factor left, so it is irreducible.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& g : monic_polys(f.field(), d)) {
      if (2 * d > rest.degree()) break;
      unsigned mult = 0;
      for (;;) {
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& [g, mult] : out)
      if (g == rest) {
        ++mult;
        merged = true;
      }
    if (!merged) out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace lol
