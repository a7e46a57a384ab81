#pragma once

// Bit-packed matrices over F_2 for n <= 8: one 64-bit word, row i in byte i,
// entry (i, j) at bit 8i + j.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lol/mat.hpp"

namespace lol::gf2 {

using Word = std::uint64_t;

inline constexpr int kMaxDim = 8;

Word identity(int n);
Word from_mat(const Mat& m);
Mat to_mat(Word w, int n);
Word mul(Word a, Word b, int n);
inline Word add(Word a, Word b) { return a ^ b; }
int rank(Word a, int n);
std::optional<Word> inverse(Word a, int n);
Word pow(Word a, std::uint64_t e, int n);
// n*n bits, row-major.
std::uint64_t compact(Word a, int n);
Word expand(std::uint64_t c, int n);

// Right multiplication by a fixed matrix as one table lookup per row.
class RightMul {
 public:
  RightMul(Word b, int n);
  Word operator()(Word a) const {
    Word r = 0;
    for (int i = 0; i < n_; ++i) r |= Word{table_[(a >> (8 * i)) & 0xff]} << (8 * i);
    return r;
  }

 private:
  int n_;
  std::array<std::uint8_t, 256> table_{};
};

// Polynomials over F_2 as bit masks, bit k = coefficient of x^k.
using Poly2 = std::uint32_t;
int degree(Poly2 f);
Poly2 poly_mul(Poly2 a, Poly2 b);
Poly2 poly_mod(Poly2 a, Poly2 b);
// Monic irreducibles of degree 1..max_degree, increasing.
const std::vector<Poly2>& irreducibles(int max_degree);
Word poly_eval(Poly2 f, Word a, int n);

// Invariant factors f_1 | ... | f_r, computed from kernel dimensions of
// powers of phi(a) for each irreducible phi.
std::vector<Poly2> invariant_factors(Word a, int n);

}  // namespace lol::gf2
