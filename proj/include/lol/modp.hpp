#pragma once

// Dense linear algebra over F_p. Rows are byte vectors; p = 2 switches to a
// bit-packed elimination with the same results.

#include <cstdint>
#include <vector>

namespace lol {

struct ModpMatrix {
  unsigned p = 2;
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> data;  // row-major

  ModpMatrix() = default;
  ModpMatrix(unsigned p_, int r, int c) : p(p_), rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::uint8_t& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::uint8_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

struct ModpSolution {
  bool feasible = false;
  int rank = 0;
  std::vector<std::uint8_t> x;                     // particular solution, free variables zero
  std::vector<std::vector<std::uint8_t>> kernel;   // basis, one vector per free column
  std::vector<std::uint8_t> certificate;           // y with y A = 0, y b != 0
};

struct ModpOptions {
  bool kernel = true;
  bool certificate = true;
  bool force_generic = false;  // bypass the p = 2 bit-packed path
};

ModpSolution solve_modp(const ModpMatrix& a, const std::vector<std::uint8_t>& b, ModpOptions opts = {});
int rank_modp(const ModpMatrix& a);

}  // namespace lol
