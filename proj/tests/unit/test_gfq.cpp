#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lol/poly.hpp"

namespace lol {
namespace {

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1},
                                                                  {2, 2}, {2, 3}, {3, 2}, {2, 4}};

TEST(Field, AxiomsHoldExhaustively) {
  for (auto [p, m] : kSmallFields) {
    FieldPtr f = Field::make(p, m);
    const unsigned q = f->order();
    for (unsigned x = 0; x < q; ++x) {
      EXPECT_EQ(f->add(x, 0), x);
      EXPECT_EQ(f->mul(x, 1), x);
      EXPECT_EQ(f->add(x, f->neg(x)), 0u);
      if (x) EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
      EXPECT_EQ(f->pow(x, q), x);
      for (unsigned y = 0; y < q; ++y) {
        EXPECT_EQ(f->add(x, y), f->add(y, x));
        EXPECT_EQ(f->mul(x, y), f->mul(y, x));
        EXPECT_EQ(f->frobenius(f->add(x, y)), f->add(f->frobenius(x), f->frobenius(y)));
        for (unsigned z = 0; z < q; ++z) {
          ASSERT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
          ASSERT_EQ(f->add(f->add(x, y), z), f->add(x, f->add(y, z)));
          ASSERT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
        }
      }
    }
  }
}

TEST(Field, ModulusTableRelations) {
  // The generator x has code p; its defining relation fixes one product.
  EXPECT_EQ(Field::make(2, 2)->mul(2, 2), 3u);  // x^2 = x + 1
  EXPECT_EQ(Field::make(2, 3)->mul(2, 4), 3u);  // x^3 = x + 1
  EXPECT_EQ(Field::make(3, 2)->mul(3, 3), 2u);  // x^2 = -1
  EXPECT_EQ(Field::make(2, 4)->mul(2, 8), 3u);  // x^4 = x + 1
  EXPECT_EQ(Field::make(2, 2)->modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(Field::make(3, 2)->modulus(), (std::vector<unsigned>{1, 0, 1}));
}

TEST(Field, MultiplicativeGroupIsCyclic) {
  for (auto [p, m] : kSmallFields) {
    FieldPtr f = Field::make(p, m);
    std::vector<bool> seen(f->order(), false);
    unsigned x = 1;
    for (unsigned k = 0; k + 1 < f->order(); ++k) {
      EXPECT_FALSE(seen[x]);
      seen[x] = true;
      x = f->mul(x, f->primitive());
    }
    EXPECT_EQ(x, 1u);
  }
}

TEST(Field, ParseAndCache) {
  EXPECT_EQ(Field::parse("2^2"), Field::make(2, 2));
  EXPECT_EQ(Field::parse("3")->order(), 3u);
  EXPECT_EQ(Field::parse("2^4")->name(), "2^4");
}

TEST(Field, Errors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  EXPECT_EQ(code_of([] { Field::make(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { Field::make(2, 9); }), ErrorCode::UnsupportedSize);
  EXPECT_EQ(code_of([] { Field::make(2, 2, {1, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { Field::make(2, 2)->inv(0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { FqElem(Field::make(2, 2), 1) + FqElem(Field::make(3, 1), 1); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(code_of([] { Field::parse("two"); }), ErrorCode::ParseError);
}

TEST(Field, ElementWrapper) {
  FieldPtr f = Field::make(2, 2);
  FqElem g(f, 2);
  EXPECT_EQ(g * g, g + FqElem(f, 1));
  EXPECT_EQ(g.pow(3), FqElem(f, 1));
  EXPECT_EQ(g.inv() * g, FqElem(f, 1));
  EXPECT_EQ(g.frobenius(), g * g);
}

// Necklace count of monic irreducibles of degree d over F_q.
unsigned long necklace(unsigned long q, int d) {
  auto mobius = [](int n) {
    int mu = 1;
    for (int p = 2; p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    return mu;
  };
  long total = 0;
  for (int k = 1; k <= d; ++k)
    if (d % k == 0) {
      long pw = 1;
      for (int i = 0; i < d / k; ++i) pw *= static_cast<long>(q);
      total += mobius(k) * pw;
    }
  return static_cast<unsigned long>(total / d);
}

TEST(Poly, IrreducibleCountsMatchNecklaceFormula) {
  FieldPtr f2 = Field::make(2, 1);
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(monic_irreducibles(f2, d).size(), necklace(2, d)) << d;
  EXPECT_EQ(monic_irreducibles(Field::make(3, 1), 2).size(), 3u);
  EXPECT_EQ(monic_irreducibles(Field::make(2, 2), 2).size(), necklace(4, 2));
  EXPECT_EQ(monic_irreducibles(Field::make(3, 2), 2).size(), necklace(9, 2));
}

TEST(Poly, DivmodAndGcd) {
  FieldPtr f = Field::make(3, 1);
  Poly a(f, {1, 0, 1, 1});  // x^3 + x^2 + 1
  Poly b(f, {1, 1});        // x + 1, coprime to a
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  Poly g = gcd(a * b, b * b);
  EXPECT_EQ(g, b);
}

TEST(Poly, FactorKnownCases) {
  FieldPtr f = Field::make(2, 1);
  // x^4 + x = x (x + 1) (x^2 + x + 1)
  auto fac = poly_factor(Poly(f, {0, 1, 0, 0, 1}));
  ASSERT_EQ(fac.size(), 3u);
  EXPECT_EQ(fac[0].first, Poly(f, {0, 1}));
  EXPECT_EQ(fac[1].first, Poly(f, {1, 1}));
  EXPECT_EQ(fac[2].first, Poly(f, {1, 1, 1}));
  // (x^3 + x + 1) x^2
  auto fac2 = poly_factor(Poly(f, {0, 0, 1, 1, 0, 1}));
  ASSERT_EQ(fac2.size(), 2u);
  EXPECT_EQ(fac2[0], std::make_pair(Poly(f, {0, 1}), 2u));
  EXPECT_EQ(fac2[1], std::make_pair(Poly(f, {1, 1, 0, 1}), 1u));
}

TEST(Poly, FactorRandomRoundTrip) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    FieldPtr f = Field::make(p, m);
    std::uniform_int_distribution<unsigned> coef(0, f->order() - 1);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<unsigned> c(deg(test::rng()) + 1);
      for (auto& x : c) x = coef(test::rng());
      c.back() = 1;
      Poly g(f, c);
      Poly prod = Poly::constant(f, 1);
      for (auto& [h, e] : poly_factor(g)) {
        EXPECT_TRUE(h.is_monic());
        EXPECT_TRUE(is_irreducible(h));
        prod = prod * h.pow(e);
      }
      EXPECT_EQ(prod, g);
    }
  }
}

TEST(Poly, FactorErrors) {
  FieldPtr f = Field::make(2, 1);
  EXPECT_THROW(poly_factor(Poly::zero(f)), Error);
  try {
    poly_factor(Poly(f, std::vector<unsigned>(10, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
  }
}

TEST(Poly, ShiftIsSubstitution) {
  FieldPtr f = Field::make(2, 1);
  Poly g(f, {1, 1, 0, 1});  // x^3 + x + 1
  EXPECT_EQ(g.shifted(1), Poly(f, {1, 0, 1, 1}));  // (x+1)^3 + (x+1) + 1 = x^3 + x^2 + 1
}

}  // namespace
}  // namespace lol
