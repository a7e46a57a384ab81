#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "lol/gfq.hpp"

namespace lol {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NotPrimeField: return "NotPrimeField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::KernelEscape: return "KernelEscape";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotFixedBySubgroup: return "NotFixedBySubgroup";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotBicyclic: return "NotBicyclic";
    case ErrorCode::NotInModule: return "NotInModule";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::WrongOrders: return "WrongOrders";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::RelationFailure: return "RelationFailure";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Raw = std::vector<unsigned>;

void raw_trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Raw raw_mod(Raw a, const Raw& b, unsigned p) {
  raw_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    raw_trim(a);
  }
  return a;
}

bool raw_irreducible(const Raw& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      Raw g(d + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (raw_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Raw default_modulus(unsigned p, unsigned m) {
  static const std::map<std::pair<unsigned, unsigned>, Raw> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
  };
  if (m == 1) return {0, 1};
  if (auto it = table.find({p, m}); it != table.end()) return it->second;
  // Outside the table: the monic irreducible with the smallest code.
  unsigned count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    Raw g(m + 1, 0);
    unsigned c = code;
    for (unsigned i = 0; i < m; ++i) {
      g[i] = c % p;
      c /= p;
    }
    g[m] = 1;
    if (raw_irreducible(g, p)) return g;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible found");
}

}  // namespace

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);

  std::vector<Raw> digits(q_);
  for (unsigned x = 0; x < q_; ++x) digits[x] = coeffs(x);

  for (unsigned x = 0; x < q_; ++x) {
    Raw nx(m_);
    for (unsigned i = 0; i < m_; ++i) nx[i] = (p_ - digits[x][i]) % p_;
    neg_[x] = static_cast<std::uint8_t>(from_coeffs(nx));
    for (unsigned y = 0; y < q_; ++y) {
      Raw s(m_);
      for (unsigned i = 0; i < m_; ++i) s[i] = (digits[x][i] + digits[y][i]) % p_;
      add_[x * q_ + y] = static_cast<std::uint8_t>(from_coeffs(s));
      Raw prod(2 * m_, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j)
          prod[i + j] = (prod[i + j] + digits[x][i] * digits[y][j]) % p_;
      Raw r = (m_ == 1) ? Raw{prod[0]} : raw_mod(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[x * q_ + y] = static_cast<std::uint8_t>(from_coeffs(r));
    }
  }
  for (unsigned x = 1; x < q_; ++x)
    for (unsigned y = 1; y < q_; ++y)
      if (mul(x, y) == 1) inv_[x] = static_cast<std::uint8_t>(y);
  for (unsigned x = 0; x < q_; ++x) frob_[x] = static_cast<std::uint8_t>(pow(x, p_));
  // Phi(x, y) = sum_{0<i<p} (binom(p, i) / p) x^i y^{p-i}.
  std::vector<unsigned> phi(p_, 0);
  // binom(p, i) / p = (p-1)! / (i! (p-i)!), evaluated mod p.
  auto fact = [&](unsigned n) {
    std::uint64_t r = 1;
    for (unsigned k = 2; k <= n; ++k) r = r * k % p_;
    return r;
  };
  auto inv_mod = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p_ - 2;
    for (; e; e >>= 1, a = a * a % p_)
      if (e & 1) r = r * a % p_;
    return r;
  };
  for (unsigned i = 1; i < p_; ++i)
    phi[i] = static_cast<unsigned>(fact(p_ - 1) * inv_mod(fact(i) * fact(p_ - i) % p_) % p_);
  carry_.resize(q_ * q_);
  for (unsigned x = 0; x < q_; ++x)
    for (unsigned y = 0; y < q_; ++y) {
      unsigned r = 0;
      for (unsigned i = 1; i < p_; ++i)
        r = add(r, mul(from_int(phi[i]), mul(pow(x, i), pow(y, p_ - i))));
      carry_[x * q_ + y] = static_cast<std::uint8_t>(r);
    }
  for (unsigned g = 1; g < q_; ++g) {
    unsigned order = 1;
    for (unsigned y = g; y != 1; y = mul(y, g)) ++order;
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

FieldPtr Field::make(unsigned p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (m == 0) throw Error(ErrorCode::UnsupportedSize, "degree 0");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::UnsupportedSize, std::to_string(p) + "^" + std::to_string(m));
  }
  return make(p, m, default_modulus(p, m));
}

FieldPtr Field::make(unsigned p, unsigned m, const std::vector<unsigned>& modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::UnsupportedSize, std::to_string(p) + "^" + std::to_string(m));
  }
  if (m == 0 || modulus.size() != m + 1 || modulus.back() != 1)
    throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree m");
  for (unsigned c : modulus)
    if (c >= p) throw Error(ErrorCode::ReducibleModulus, "coefficient out of range");
  if (!raw_irreducible(modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");

  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, Raw>, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, m, modulus);
  if (auto it = registry.find(key); it != registry.end()) return it->second;
  FieldPtr f(new Field(p, m, modulus));
  registry.emplace(key, f);
  return f;
}

FieldPtr Field::parse(std::string_view spec) {
  auto parse_uint = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    return v;
  };
  auto caret = spec.find('^');
  if (caret == std::string_view::npos) return make(parse_uint(spec), 1);
  return make(parse_uint(spec.substr(0, caret)), parse_uint(spec.substr(caret + 1)));
}

std::string Field::name() const { return std::to_string(p_) + "^" + std::to_string(m_); }

unsigned Field::inv(unsigned x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + name());
  return inv_[x];
}

unsigned Field::pow(unsigned x, std::uint64_t e) const {
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

unsigned Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<unsigned>(r);
}

std::vector<unsigned> Field::coeffs(unsigned code) const {
  std::vector<unsigned> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

unsigned Field::from_coeffs(const std::vector<unsigned>& c) const {
  unsigned code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return code;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b))
    throw Error(ErrorCode::FieldMismatch,
                (a ? a->name() : "?") + " vs " + (b ? b->name() : "?"));
}

FqElem::FqElem(FieldPtr f, unsigned code) : f_(std::move(f)), c_(code) {
  if (!f_ || code >= f_->order()) throw Error(ErrorCode::ParseError, "element code out of range");
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same_field(f_, o.f_);
  return {f_, f_->add(c_, o.c_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  require_same_field(f_, o.f_);
  return {f_, f_->sub(c_, o.c_)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  require_same_field(f_, o.f_);
  return {f_, f_->mul(c_, o.c_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  require_same_field(f_, o.f_);
  return {f_, f_->div(c_, o.c_)};
}
FqElem FqElem::operator-() const { return {f_, f_->neg(c_)}; }
FqElem FqElem::inv() const { return {f_, f_->inv(c_)}; }
FqElem FqElem::pow(std::uint64_t e) const { return {f_, f_->pow(c_, e)}; }
FqElem FqElem::frobenius() const { return {f_, f_->frobenius(c_)}; }

}  // namespace lol
