#include <algorithm>

#include "lol/affine.hpp"
#include "lol/gf2.hpp"
#include "lol/group.hpp"

namespace lol {

namespace {

bool is_scalar(const Mat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j ? a(i, j) != 0 : a(i, i) != a(0, 0)) return false;
  return true;
}

bool unit_fast(const Mat& x) {
  if (x.ring().field()->order() == 2 && x.rows() <= gf2::kMaxDim)
    return gf2::rank(gf2::from_mat(x), x.rows()) == x.rows();
  return is_invertible(x);
}

}  // namespace

Subgroup centralizer_of_matrix(const Mat& a, std::size_t candidate_bound) {
  if (!a.ring().is_field()) throw Error(ErrorCode::NotPrimeField, "centralizer needs a field");
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  const Ring& r = a.ring();
  const int n = a.rows();
  if (is_scalar(a)) return general_linear(r, n);

  AffineSystem sys{r, {UnknownSpec{n, n, {}}}, {}};
  sys.equations.push_back(
      {"XA=AX", {{0, [a](const Mat& x) { return x * a - a * x; }}}, Mat::zero(r, n, n)});
  AffineResult res = solve_affine(sys);
  std::vector<Mat> basis;
  for (const auto& k : res.kernel) basis.push_back(k[0]);

  const unsigned p = r.field()->p();
  double space = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) space *= p;
  if (space > static_cast<double>(candidate_bound))
    throw Error(ErrorCode::BoundExceeded, "commutant has " + std::to_string(basis.size()) + " F_p dimensions");

  // Walk every F_p combination as a base-p counter, updating the sum in place.
  std::vector<unsigned> digits(basis.size(), 0);
  Mat x = Mat::zero(r, n, n);
  std::vector<Mat> units;
  for (;;) {
    if (unit_fast(x)) units.push_back(x);
    std::size_t k = 0;
    while (k < basis.size()) {
      x = x + basis[k];
      if (++digits[k] < p) break;
      digits[k] = 0;  // p additions wrapped back to the old value
      ++k;
    }
    if (k == basis.size()) break;
  }
  return Subgroup::from_elements(std::move(units));
}

Subgroup centralizer_in(const Subgroup& g, const Mat& x) {
  return g.filter([&](const Mat& h) { return h * x == x * h; });
}

Mat unitriangularize(const Subgroup& p) {
  const Ring& r = p.ring();
  if (!r.is_field()) throw Error(ErrorCode::NotPrimeField, "unitriangularize needs a field");
  const unsigned ch = r.field()->p();
  std::size_t order = p.order();
  while (order % ch == 0) order /= ch;
  if (order != 1) throw Error(ErrorCode::NotPGroup, "group order is not a power of the characteristic");

  const int n = p.degree();
  const auto& gens = p.generators();
  std::vector<Mat> flag;  // column vectors b_1, b_2, ...
  while (static_cast<int>(flag.size()) < n) {
    // Unknowns: v (n entries) and, per generator, coefficients w_g with
    // (g - 1) v = sum_k w_g[k] b_k.
    const int w = static_cast<int>(flag.size());
    const int cols = n + static_cast<int>(gens.size()) * w;
    Mat sys = Mat::zero(r, std::max<int>(1, n * static_cast<int>(gens.size())), cols);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Mat d = gens[gi] - Mat::identity(r, n);
      for (int i = 0; i < n; ++i) {
        const int row = static_cast<int>(gi) * n + i;
        for (int j = 0; j < n; ++j) sys(row, j) = d(i, j);
        for (int k = 0; k < w; ++k) sys(row, n + static_cast<int>(gi) * w + k) = r.neg(flag[k](i, 0));
      }
    }
    bool found = false;
    for (const Mat& sol : nullspace(sys)) {
      Mat v = Mat::zero(r, n, 1);
      for (int i = 0; i < n; ++i) v(i, 0) = sol(i, 0);
      Mat span = Mat::zero(r, n, w + 1);
      for (int k = 0; k < w; ++k)
        for (int i = 0; i < n; ++i) span(i, k) = flag[k](i, 0);
      for (int i = 0; i < n; ++i) span(i, w) = v(i, 0);
      if (mat_rank(span) == w + 1) {
        flag.push_back(v);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::NotPGroup, "no common fixed vector in the quotient");
  }
  Mat b = Mat::zero(r, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) b(i, k) = flag[k](i, 0);
  return mat_inv(b);
}

}  // namespace lol
