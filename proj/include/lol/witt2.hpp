#pragma once

// Length-2 Witt vectors over F_q. Encoded in the matrix layer as a + q*b.

#include "lol/gfq.hpp"

namespace lol {

// Phi(x, y) = sum_{0<i<p} (binom(p, i) / p) x^i y^{p-i}, the carry in the
// second Witt coordinate of a sum.
unsigned witt_carry(const Field& f, unsigned x, unsigned y);

struct W2 {
  unsigned a = 0;
  unsigned b = 0;
  bool operator==(const W2&) const = default;
};

W2 w2_add(const Field& f, W2 u, W2 v);
W2 w2_neg(const Field& f, W2 u);
W2 w2_sub(const Field& f, W2 u, W2 v);
W2 w2_mul(const Field& f, W2 u, W2 v);
bool w2_is_unit(W2 u);
W2 w2_inv(const Field& f, W2 u);
W2 w2_from_int(const Field& f, std::int64_t n);

class W2Elem {
 public:
  W2Elem() = default;
  W2Elem(FieldPtr f, unsigned a, unsigned b);

  static W2Elem teichmuller(const FqElem& x);
  static W2Elem iota(const FqElem& x);

  const FieldPtr& field() const { return f_; }
  unsigned a() const { return v_.a; }
  unsigned b() const { return v_.b; }
  W2 raw() const { return v_; }
  FqElem pi() const { return FqElem(f_, v_.a); }
  bool is_unit() const { return w2_is_unit(v_); }

  W2Elem operator+(const W2Elem& o) const;
  W2Elem operator-(const W2Elem& o) const;
  W2Elem operator*(const W2Elem& o) const;
  W2Elem operator-() const;
  W2Elem inv() const;

  bool operator==(const W2Elem& o) const { return same_field(f_, o.f_) && v_ == o.v_; }

 private:
  FieldPtr f_;
  W2 v_;
};

// Z/p^2 -> W_2(F_p), n -> n * (1, 0). Throws NotPrimeField for m > 1.
W2Elem zp2_to_witt(const FieldPtr& fp, std::int64_t n);
std::int64_t witt_to_zp2(const W2Elem& w);

}  // namespace lol
