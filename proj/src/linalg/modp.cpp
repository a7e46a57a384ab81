#include <algorithm>

#include "lol/error.hpp"
#include "lol/modp.hpp"

namespace lol {

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1, e = p - 2;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

ModpSolution solve_generic(const ModpMatrix& a, const std::vector<std::uint8_t>& b, const ModpOptions& opts) {
  const unsigned p = a.p;
  const int n = a.rows, m = a.cols;
  const int extra = opts.certificate ? n : 0;
  const int width = m + 1 + extra;
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(width, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) rows[i][j] = a.at(i, j) % p;
    rows[i][m] = b[i] % p;
    if (opts.certificate) rows[i][m + 1 + i] = 1;
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    const unsigned s = inv_mod(rows[r][c], p);
    for (int j = c; j < width; ++j) rows[r][j] = rows[r][j] * s % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned t = rows[i][c];
      for (int j = c; j < width; ++j) rows[i][j] = (rows[i][j] + (p - t) * rows[r][j]) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  ModpSolution sol;
  sol.rank = r;
  for (int i = r; i < n; ++i)
    if (rows[i][m] != 0) {
      sol.feasible = false;
      if (opts.certificate) {
        sol.certificate.resize(n);
        for (int k = 0; k < n; ++k) sol.certificate[k] = static_cast<std::uint8_t>(rows[i][m + 1 + k]);
      }
      return sol;
    }
  sol.feasible = true;
  sol.x.assign(m, 0);
  for (int k = 0; k < r; ++k) sol.x[pivot_col[k]] = static_cast<std::uint8_t>(rows[k][m]);
  if (opts.kernel) {
    std::vector<char> is_pivot(m, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int f = 0; f < m; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint8_t> v(m, 0);
      v[f] = 1;
      for (int k = 0; k < r; ++k) v[pivot_col[k]] = static_cast<std::uint8_t>((p - rows[k][f]) % p);
      sol.kernel.push_back(std::move(v));
    }
  }
  return sol;
}

ModpSolution solve_gf2(const ModpMatrix& a, const std::vector<std::uint8_t>& b, const ModpOptions& opts) {
  const int n = a.rows, m = a.cols;
  const int extra = opts.certificate ? n : 0;
  const int width = m + 1 + extra;
  const int words = (width + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * words, 0);
  auto row = [&](int i) { return bits.data() + static_cast<std::size_t>(i) * words; };
  auto get = [&](int i, int j) { return (row(i)[j >> 6] >> (j & 63)) & 1u; };
  auto set = [&](int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j)
      if (a.at(i, j) & 1) set(i, j);
    if (b[i] & 1) set(i, m);
    if (opts.certificate) set(i, m + 1 + i);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(row(piv), row(piv) + words, row(r));
    const int w0 = c >> 6;
    for (int i = 0; i < n; ++i) {
      if (i == r || !get(i, c)) continue;
      std::uint64_t* dst = row(i);
      const std::uint64_t* src = row(r);
      for (int w = w0; w < words; ++w) dst[w] ^= src[w];
    }
    pivot_col.push_back(c);
    ++r;
  }
  ModpSolution sol;
  sol.rank = r;
  for (int i = r; i < n; ++i)
    if (get(i, m)) {
      sol.feasible = false;
      if (opts.certificate) {
        sol.certificate.resize(n);
        for (int k = 0; k < n; ++k) sol.certificate[k] = static_cast<std::uint8_t>(get(i, m + 1 + k));
      }
      return sol;
    }
  sol.feasible = true;
  sol.x.assign(m, 0);
  for (int k = 0; k < r; ++k) sol.x[pivot_col[k]] = static_cast<std::uint8_t>(get(k, m));
  if (opts.kernel) {
    std::vector<char> is_pivot(m, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int f = 0; f < m; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint8_t> v(m, 0);
      v[f] = 1;
      for (int k = 0; k < r; ++k) v[pivot_col[k]] = static_cast<std::uint8_t>(get(k, f));
      sol.kernel.push_back(std::move(v));
    }
  }
  return sol;
}

}  // namespace

ModpSolution solve_modp(const ModpMatrix& a, const std::vector<std::uint8_t>& b, ModpOptions opts) {
  if (static_cast<int>(b.size()) != a.rows) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  if (a.p < 2 || a.p > 255) throw Error(ErrorCode::UnsupportedSize, "prime out of range");
  if (a.p == 2 && !opts.force_generic) return solve_gf2(a, b, opts);
  return solve_generic(a, b, opts);
}

int rank_modp(const ModpMatrix& a) {
  ModpOptions opts;
  opts.kernel = false;
  opts.certificate = false;
  return solve_modp(a, std::vector<std::uint8_t>(a.rows, 0), opts).rank;
}

}  // namespace lol
