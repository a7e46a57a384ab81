#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lol/witt2.hpp"

namespace lol {
namespace {

std::vector<W2Elem> all_elements(const FieldPtr& f) {
  std::vector<W2Elem> out;
  for (unsigned a = 0; a < f->order(); ++a)
    for (unsigned b = 0; b < f->order(); ++b) out.emplace_back(f, a, b);
  return out;
}

class WittRingLaws : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(WittRingLaws, Exhaustive) {
  auto [p, m] = GetParam();
  FieldPtr f = Field::make(p, m);
  auto all = all_elements(f);
  W2Elem zero(f, 0, 0), one(f, 1, 0);
  for (const auto& x : all) {
    EXPECT_EQ(x + zero, x);
    EXPECT_EQ(x * one, x);
    EXPECT_EQ(x + (-x), zero);
    EXPECT_EQ(x - x, zero);
    if (x.is_unit()) EXPECT_EQ(x * x.inv(), one);
    for (const auto& y : all) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (const auto& z : all) {
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, WittRingLaws,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(3u, 1u), std::make_pair(2u, 2u),
                                           std::make_pair(2u, 3u), std::make_pair(3u, 2u)));

TEST(Witt, CharacteristicIsPSquared) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    FieldPtr f = Field::make(p, m);
    for (unsigned x = 0; x < f->order(); ++x) {
      // p * tau(x) = iota(x^p)
      W2Elem t = W2Elem::teichmuller(FqElem(f, x));
      W2Elem sum(f, 0, 0);
      for (unsigned k = 0; k < p; ++k) sum = sum + t;
      EXPECT_EQ(sum, W2Elem::iota(FqElem(f, f->frobenius(x))));
      // p^2 kills everything.
      W2Elem big(f, 0, 0), e(f, x, f->mul(x, x));
      for (unsigned k = 0; k < p * p; ++k) big = big + e;
      EXPECT_EQ(big, W2Elem(f, 0, 0));
    }
  }
}

TEST(Witt, StructureMaps) {
  FieldPtr f = Field::make(2, 2);
  for (unsigned x = 0; x < 4; ++x)
    for (unsigned y = 0; y < 4; ++y) {
      FqElem a(f, x), b(f, y);
      EXPECT_EQ(W2Elem::teichmuller(a) * W2Elem::teichmuller(b), W2Elem::teichmuller(a * b));
      EXPECT_EQ(W2Elem::iota(a) + W2Elem::iota(b), W2Elem::iota(a + b));
      EXPECT_EQ(W2Elem::iota(a) * W2Elem::iota(b), W2Elem(f, 0, 0));
      for (const auto& u : all_elements(f))
        for (const auto& v : all_elements(f)) {
          EXPECT_EQ((u + v).pi(), u.pi() + v.pi());
          EXPECT_EQ((u * v).pi(), u.pi() * v.pi());
        }
    }
}

TEST(Witt, UnitCount) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    FieldPtr f = Field::make(p, m);
    unsigned units = 0;
    for (const auto& x : all_elements(f)) units += x.is_unit();
    EXPECT_EQ(units, f->order() * (f->order() - 1));
  }
}

TEST(Witt, NonUnitInverseThrows) {
  FieldPtr f = Field::make(3, 1);
  try {
    W2Elem(f, 0, 2).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnit);
  }
}

TEST(Witt, BridgeHandComputedValues) {
  FieldPtr f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  EXPECT_EQ(zp2_to_witt(f2, 1), W2Elem(f2, 1, 0));
  EXPECT_EQ(zp2_to_witt(f2, 2), W2Elem(f2, 0, 1));
  EXPECT_EQ(zp2_to_witt(f2, 3), W2Elem(f2, 1, 1));
  EXPECT_EQ(zp2_to_witt(f3, 2), W2Elem(f3, 2, 1));
  EXPECT_EQ(zp2_to_witt(f3, 3), W2Elem(f3, 0, 1));
}

TEST(Witt, BridgeIsRingIsomorphism) {
  for (unsigned p : {2u, 3u, 5u}) {
    FieldPtr f = Field::make(p, 1);
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
    std::vector<bool> hit(n, false);
    for (std::int64_t x = 0; x < n; ++x) {
      W2Elem wx = zp2_to_witt(f, x);
      EXPECT_EQ(witt_to_zp2(wx), x);
      hit[wx.a() + p * wx.b()] = true;
      for (std::int64_t y = 0; y < n; ++y) {
        W2Elem wy = zp2_to_witt(f, y);
        EXPECT_EQ(zp2_to_witt(f, (x + y) % n), wx + wy);
        EXPECT_EQ(zp2_to_witt(f, (x * y) % n), wx * wy);
      }
    }
    for (bool h : hit) EXPECT_TRUE(h);
  }
}

TEST(Witt, BridgeRejectsExtensionFields) {
  try {
    zp2_to_witt(Field::make(2, 2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrimeField);
  }
}

}  // namespace
}  // namespace lol
