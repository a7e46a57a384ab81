#include "lol/witt2.hpp"

namespace lol {

unsigned witt_carry(const Field& f, unsigned x, unsigned y) { return f.witt_carry(x, y); }

W2 w2_add(const Field& f, W2 u, W2 v) {
  return {f.add(u.a, v.a), f.sub(f.add(u.b, v.b), f.witt_carry(u.a, v.a))};
}

W2 w2_neg(const Field& f, W2 u) {
  unsigned na = f.neg(u.a);
  return {na, f.add(f.neg(u.b), f.witt_carry(u.a, na))};
}

W2 w2_sub(const Field& f, W2 u, W2 v) { return w2_add(f, u, w2_neg(f, v)); }

W2 w2_mul(const Field& f, W2 u, W2 v) {
  const unsigned p = f.p();
  return {f.mul(u.a, v.a), f.add(f.mul(f.pow(u.a, p), v.b), f.mul(f.pow(v.a, p), u.b))};
}

bool w2_is_unit(W2 u) { return u.a != 0; }

W2 w2_inv(const Field& f, W2 u) {
  if (u.a == 0) throw Error(ErrorCode::NonUnit, "Witt vector with zero first coordinate");
  const unsigned ia = f.inv(u.a);
  // (a, b)(a^-1, c) = (1, a^p c + a^-p b) forces c = -b a^{-2p}.
  return {ia, f.neg(f.mul(u.b, f.pow(ia, 2 * f.p())))};
}

W2 w2_from_int(const Field& f, std::int64_t n) {
  W2 r{0, 0};
  W2 step{1, 0};
  bool negative = n < 0;
  std::uint64_t k = negative ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  k %= static_cast<std::uint64_t>(f.p()) * f.p();
  for (std::uint64_t i = 0; i < k; ++i) r = w2_add(f, r, step);
  return negative ? w2_neg(f, r) : r;
}

W2Elem::W2Elem(FieldPtr f, unsigned a, unsigned b) : f_(std::move(f)), v_{a, b} {
  if (!f_ || a >= f_->order() || b >= f_->order())
    throw Error(ErrorCode::ParseError, "Witt coordinate out of range");
}

W2Elem W2Elem::teichmuller(const FqElem& x) { return W2Elem(x.field(), x.code(), 0); }
W2Elem W2Elem::iota(const FqElem& x) { return W2Elem(x.field(), 0, x.code()); }

W2Elem W2Elem::operator+(const W2Elem& o) const {
  require_same_field(f_, o.f_);
  W2 r = w2_add(*f_, v_, o.v_);
  return W2Elem(f_, r.a, r.b);
}
W2Elem W2Elem::operator-(const W2Elem& o) const {
  require_same_field(f_, o.f_);
  W2 r = w2_sub(*f_, v_, o.v_);
  return W2Elem(f_, r.a, r.b);
}
W2Elem W2Elem::operator*(const W2Elem& o) const {
  require_same_field(f_, o.f_);
  W2 r = w2_mul(*f_, v_, o.v_);
  return W2Elem(f_, r.a, r.b);
}
W2Elem W2Elem::operator-() const {
  W2 r = w2_neg(*f_, v_);
  return W2Elem(f_, r.a, r.b);
}
W2Elem W2Elem::inv() const {
  W2 r = w2_inv(*f_, v_);
  return W2Elem(f_, r.a, r.b);
}

W2Elem zp2_to_witt(const FieldPtr& fp, std::int64_t n) {
  if (fp->m() != 1) throw Error(ErrorCode::NotPrimeField, "bridge needs F_p, got F_" + fp->name());
  W2 r = w2_from_int(*fp, n);
  return W2Elem(fp, r.a, r.b);
}

std::int64_t witt_to_zp2(const W2Elem& w) {
  const FieldPtr& fp = w.field();
  if (fp->m() != 1) throw Error(ErrorCode::NotPrimeField, "bridge needs F_p, got F_" + fp->name());
  const std::int64_t n = static_cast<std::int64_t>(fp->p()) * fp->p();
  W2 acc{0, 0};
  for (std::int64_t k = 0; k < n; ++k) {
    if (acc == w.raw()) return k;
    acc = w2_add(*fp, acc, W2{1, 0});
  }
  throw Error(ErrorCode::ParseError, "Witt vector outside the image of Z/p^2");
}

}  // namespace lol
