#pragma once

// Small finite fields F_{p^m}. Elements are integer codes: the coefficient
// vector of the polynomial representative read as base-p digits, constant
// term least significant.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lol/error.hpp"

namespace lol {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Largest supported field order. Operation tables are q x q.
inline constexpr unsigned kMaxFieldOrder = 256;

bool is_prime(std::uint64_t n);

class Field {
 public:
  // Uses the built-in modulus table for (p, m); prime fields for m == 1.
  static FieldPtr make(unsigned p, unsigned m);
  // Explicit monic modulus, coefficients low to high (length m + 1).
  static FieldPtr make(unsigned p, unsigned m, const std::vector<unsigned>& modulus);
  // "p^m" or "p".
  static FieldPtr parse(std::string_view spec);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  std::string name() const;

  unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
  unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
  unsigned neg(unsigned x) const { return neg_[x]; }
  unsigned sub(unsigned x, unsigned y) const { return add_[x * q_ + neg_[y]]; }
  unsigned inv(unsigned x) const;
  unsigned div(unsigned x, unsigned y) const { return mul(x, inv(y)); }
  unsigned pow(unsigned x, std::uint64_t e) const;
  unsigned frobenius(unsigned x) const { return frob_[x]; }
  // Second-coordinate carry of length-2 Witt addition, tabulated.
  unsigned witt_carry(unsigned x, unsigned y) const { return carry_[x * q_ + y]; }

  // Image of an integer in the prime subfield.
  unsigned from_int(std::int64_t v) const;
  std::vector<unsigned> coeffs(unsigned code) const;
  unsigned from_coeffs(const std::vector<unsigned>& c) const;
  // Generator of the multiplicative group (smallest code).
  unsigned primitive() const { return primitive_; }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned p_, m_, q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, carry_;
  std::vector<std::uint8_t> neg_, inv_, frob_;
  unsigned primitive_ = 1;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

class FqElem {
 public:
  FqElem() = default;
  FqElem(FieldPtr f, unsigned code);

  const FieldPtr& field() const { return f_; }
  unsigned code() const { return c_; }
  bool is_zero() const { return c_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const;
  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  FqElem frobenius() const;

  bool operator==(const FqElem& o) const { return same_field(f_, o.f_) && c_ == o.c_; }

 private:
  FieldPtr f_;
  unsigned c_ = 0;
};

}  // namespace lol
