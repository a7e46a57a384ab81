#pragma once

// Affine systems in matrix unknowns over F_q, solved in F_p coordinates:
// each unknown entry (i, j) contributes m coordinates, one per power of the
// field generator.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lol/mat.hpp"
#include "lol/modp.hpp"

namespace lol {

struct UnknownSpec {
  int rows = 0, cols = 0;
  // Allowed (i, j) positions, 0-based. Empty means every entry.
  std::vector<std::pair<int, int>> support;
};

using LinearMap = std::function<Mat(const Mat&)>;

struct AffineEquation {
  std::string label;
  std::vector<std::pair<int, LinearMap>> terms;  // (unknown index, map)
  Mat rhs;
};

struct AffineSystem {
  Ring ring;  // must be F_q
  std::vector<UnknownSpec> unknowns;
  std::vector<AffineEquation> equations;
};

// A linear functional on equation coordinates that kills every column and
// not the right-hand side.
struct CertificateTerm {
  int equation, row, col;
  unsigned power;  // F_p coordinate index
  unsigned coeff;
};

struct AffineResult {
  bool feasible = false;
  std::vector<Mat> solution;
  std::vector<std::vector<Mat>> kernel;  // F_p basis of the homogeneous solutions
  std::vector<CertificateTerm> certificate;
  int unknown_coords = 0;
  int equation_coords = 0;
  int rank = 0;
};

AffineResult solve_affine(const AffineSystem& sys, ModpOptions opts = {});

// Substitute a candidate solution into every equation.
bool check_solution(const AffineSystem& sys, const std::vector<Mat>& x);
// Re-derive y A = 0 and y b != 0 from the system's linear maps.
bool check_certificate(const AffineSystem& sys, const std::vector<CertificateTerm>& cert);

// F_p coordinates of a matrix over F_q, row-major then by power.
std::vector<std::uint8_t> fp_coords(const Mat& m);

}  // namespace lol
