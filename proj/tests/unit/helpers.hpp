#pragma once

#include <random>

#include "lol/mat.hpp"

namespace lol::test {

inline Ring F(unsigned p, unsigned m = 1) { return Ring::fq(Field::make(p, m)); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline Mat random_mat(const Ring& r, int rows, int cols) {
  std::uniform_int_distribution<std::int64_t> d(0, r.size() - 1);
  Mat m(r, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng());
  return m;
}

inline Mat random_invertible(const Ring& r, int n) {
  for (;;) {
    Mat m = random_mat(r, n, n);
    if (is_invertible(m)) return m;
  }
}

// Every n x n matrix over a finite ring, in counting order.
inline std::vector<Mat> all_mats(const Ring& r, int n) {
  const std::int64_t q = r.size();
  std::int64_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= q;
  std::vector<Mat> out;
  out.reserve(total);
  for (std::int64_t code = 0; code < total; ++code) {
    Mat m(r, n, n);
    std::int64_t c = code;
    for (int k = 0; k < n * n; ++k) {
      m(k / n, k % n) = c % q;
      c /= q;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace lol::test
