#include <charconv>
#include <numeric>

#include "lol/ring.hpp"

namespace lol {

Ring Ring::fq(FieldPtr f) {
  Ring r;
  r.kind_ = RingKind::Fq;
  r.f_ = std::move(f);
  return r;
}

Ring Ring::witt(FieldPtr f) {
  Ring r;
  r.kind_ = RingKind::W2;
  r.f_ = std::move(f);
  return r;
}

Ring Ring::zmod(std::int64_t n) {
  if (n < 2 || n > (std::int64_t{1} << 31))
    throw Error(ErrorCode::UnsupportedSize, "Z/" + std::to_string(n));
  Ring r;
  r.kind_ = RingKind::ZN;
  r.n_ = n;
  return r;
}

Ring Ring::integers() { return Ring(); }

Ring Ring::parse(std::string_view s) {
  if (s == "Z") return integers();
  if (s.rfind("Z/", 0) == 0) {
    std::int64_t n = 0;
    auto body = s.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw Error(ErrorCode::ParseError, "bad ring '" + std::string(s) + "'");
    return zmod(n);
  }
  if (s.rfind("W2(", 0) == 0 && s.back() == ')') return witt(Field::parse(s.substr(3, s.size() - 4)));
  if (s.rfind("F", 0) == 0) return fq(Field::parse(s.substr(1)));
  return fq(Field::parse(s));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Fq: return "F" + f_->name();
    case RingKind::W2: return "W2(" + f_->name() + ")";
    case RingKind::ZN: return "Z/" + std::to_string(n_);
    case RingKind::Z: return "Z";
  }
  return "?";
}

std::int64_t Ring::size() const {
  switch (kind_) {
    case RingKind::Fq: return f_->order();
    case RingKind::W2: return static_cast<std::int64_t>(f_->order()) * f_->order();
    case RingKind::ZN: return n_;
    case RingKind::Z: return 0;
  }
  return 0;
}

Scalar Ring::from_int(std::int64_t v) const {
  switch (kind_) {
    case RingKind::Fq: return f_->from_int(v);
    case RingKind::W2: return encode(w2_from_int(*f_, v));
    case RingKind::ZN: { Scalar r = v % n_; return r < 0 ? r + n_ : r; }
    case RingKind::Z: return v;
  }
  return 0;
}

Scalar Ring::neg(Scalar x) const {
  switch (kind_) {
    case RingKind::Fq: return f_->neg(static_cast<unsigned>(x));
    case RingKind::ZN: return x == 0 ? 0 : n_ - x;
    case RingKind::Z: return checked_mul(x, -1);
    case RingKind::W2: return encode(w2_neg(*f_, decode(x)));
  }
  return 0;
}

bool Ring::is_unit(Scalar x) const {
  switch (kind_) {
    case RingKind::Fq: return x != 0;
    case RingKind::ZN: return std::gcd(x, n_) == 1;
    case RingKind::Z: return x == 1 || x == -1;
    case RingKind::W2: return decode(x).a != 0;
  }
  return false;
}

Scalar Ring::inv(Scalar x) const {
  if (!is_unit(x)) throw Error(ErrorCode::NonUnit, format(x) + " in " + name());
  switch (kind_) {
    case RingKind::Fq: return f_->inv(static_cast<unsigned>(x));
    case RingKind::ZN: {
      // Extended Euclid.
      std::int64_t a = x, b = n_, u = 1, v = 0;
      while (b) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        u -= t * v;
        std::swap(u, v);
      }
      return from_int(u);
    }
    case RingKind::Z: return x;
    case RingKind::W2: return encode(w2_inv(*f_, decode(x)));
  }
  return 0;
}

std::string Ring::format(Scalar x) const {
  if (kind_ == RingKind::W2) {
    W2 w = decode(x);
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
  }
  return std::to_string(x);
}

Scalar Ring::parse_scalar(std::string_view s) const {
  auto trim = [](std::string_view t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
    return t;
  };
  auto to_int = [&](std::string_view t) {
    t = trim(t);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw Error(ErrorCode::ParseError, "bad scalar '" + std::string(s) + "'");
    return v;
  };
  s = trim(s);
  if (kind_ == RingKind::W2) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
      throw Error(ErrorCode::ParseError, "Witt entry must be (a,b): '" + std::string(s) + "'");
    auto inner = s.substr(1, s.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "Witt entry must be (a,b)");
    std::int64_t a = to_int(inner.substr(0, comma)), b = to_int(inner.substr(comma + 1));
    const std::int64_t q = f_->order();
    if (a < 0 || a >= q || b < 0 || b >= q) throw Error(ErrorCode::ParseError, "Witt coordinate out of range");
    return encode({static_cast<unsigned>(a), static_cast<unsigned>(b)});
  }
  std::int64_t v = to_int(s);
  if (kind_ == RingKind::Fq && (v < 0 || v >= static_cast<std::int64_t>(f_->order())))
    throw Error(ErrorCode::ParseError, "field code out of range: " + std::string(s));
  if (kind_ == RingKind::Fq || kind_ == RingKind::Z) return v;
  return from_int(v);
}

bool Ring::operator==(const Ring& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::Fq:
    case RingKind::W2: return same_field(f_, o.f_);
    case RingKind::ZN: return n_ == o.n_;
    case RingKind::Z: return true;
  }
  return false;
}

Scalar Ring::checked_add(Scalar x, Scalar y) {
  Scalar r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::UnsupportedSize, "integer overflow");
  return r;
}

Scalar Ring::checked_mul(Scalar x, Scalar y) {
  Scalar r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::UnsupportedSize, "integer overflow");
  return r;
}

}  // namespace lol
