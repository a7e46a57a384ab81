#pragma once

#include <optional>
#include <vector>

#include "lol/mat.hpp"
#include "lol/poly.hpp"

namespace lol {

Poly char_poly(const Mat& a);
Poly min_poly(const Mat& a);
Mat poly_eval(const Poly& f, const Mat& a);

// One irreducible factor of the characteristic polynomial and the sizes of
// its primary blocks, largest first.
struct PrimaryPart {
  Poly prime;
  std::vector<int> partition;
};

struct SimilarityData {
  Poly charpoly;
  Poly minpoly;
  std::vector<PrimaryPart> primary;
  // f_1 | f_2 | ... | f_r, all of positive degree.
  std::vector<Poly> invariant_factors;
  bool split = false;
  bool diagonalizable = false;
};

SimilarityData similarity_data(const Mat& a);

Mat companion(const Poly& f);
Mat block_diagonal(const Ring& r, const std::vector<Mat>& blocks);
Mat jordan_block(const Ring& r, unsigned eigenvalue, int size);

enum class FormKind { Jordan, Frobenius };

struct JordanBlock {
  unsigned eigenvalue;
  int size;
  bool operator==(const JordanBlock&) const = default;
};

struct CanonicalForm {
  FormKind kind;
  Mat form;
  // conjugator * a * conjugator^-1 == form
  Mat conjugator;
  std::vector<JordanBlock> blocks;  // Jordan only: eigenvalue ascending, size descending
  std::vector<Poly> invariant_factors;
};

// Jordan form needs a split characteristic polynomial.
CanonicalForm canonical_form(const Mat& a, FormKind kind);
// Jordan when split, Frobenius otherwise.
CanonicalForm canonical_form(const Mat& a);

// g with g a g^-1 == b, if the two are similar.
std::optional<Mat> conjugating_matrix(const Mat& a, const Mat& b);

// An invertible element of the F_p-span of basis, searched deterministically.
std::optional<Mat> invertible_in_span(const std::vector<Mat>& basis);

}  // namespace lol
