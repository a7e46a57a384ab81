#pragma once

// Coefficient rings for matrices. Every element is an int64 code:
//   F_q     code in [0, q)
//   W_2(F_q) a + q*b
//   Z/N     residue in [0, N)
//   Z       the integer itself

#include <cstdint>
#include <string>
#include <string_view>

#include "lol/gfq.hpp"
#include "lol/witt2.hpp"

namespace lol {

using Scalar = std::int64_t;

enum class RingKind { Fq, W2, ZN, Z };

class Ring {
 public:
  Ring() = default;
  static Ring fq(FieldPtr f);
  static Ring witt(FieldPtr f);
  static Ring zmod(std::int64_t n);
  static Ring integers();
  // "F2^2", "W2(2^2)", "Z/4", "Z"
  static Ring parse(std::string_view s);

  RingKind kind() const { return kind_; }
  const FieldPtr& field() const { return f_; }
  std::int64_t modulus() const { return n_; }
  bool is_field() const { return kind_ == RingKind::Fq; }
  std::string name() const;
  // Number of elements; 0 for Z.
  std::int64_t size() const;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(std::int64_t v) const;

  Scalar add(Scalar x, Scalar y) const {
    switch (kind_) {
      case RingKind::Fq: return f_->add(static_cast<unsigned>(x), static_cast<unsigned>(y));
      case RingKind::ZN: { Scalar s = x + y; return s >= n_ ? s - n_ : s; }
      case RingKind::Z: return checked_add(x, y);
      case RingKind::W2: return encode(w2_add(*f_, decode(x), decode(y)));
    }
    return 0;
  }
  Scalar mul(Scalar x, Scalar y) const {
    switch (kind_) {
      case RingKind::Fq: return f_->mul(static_cast<unsigned>(x), static_cast<unsigned>(y));
      case RingKind::ZN: return x * y % n_;
      case RingKind::Z: return checked_mul(x, y);
      case RingKind::W2: return encode(w2_mul(*f_, decode(x), decode(y)));
    }
    return 0;
  }
  Scalar neg(Scalar x) const;
  Scalar sub(Scalar x, Scalar y) const { return add(x, neg(y)); }
  bool is_unit(Scalar x) const;
  Scalar inv(Scalar x) const;

  W2 decode(Scalar x) const {
    const auto q = static_cast<Scalar>(f_->order());
    return {static_cast<unsigned>(x % q), static_cast<unsigned>(x / q)};
  }
  Scalar encode(W2 w) const { return static_cast<Scalar>(w.a) + static_cast<Scalar>(f_->order()) * w.b; }

  std::string format(Scalar x) const;
  Scalar parse_scalar(std::string_view s) const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  static Scalar checked_add(Scalar x, Scalar y);
  static Scalar checked_mul(Scalar x, Scalar y);

  RingKind kind_ = RingKind::Z;
  FieldPtr f_;
  std::int64_t n_ = 0;
};

}  // namespace lol
