#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lol/ring.hpp"

namespace lol {

// Dense matrix over a Ring. Indices are 0-based; the E(i, j) helpers take
// 1-based indices to match how the fixtures are written.
class Mat {
 public:
  Mat() = default;
  Mat(Ring r, int rows, int cols);

  static Mat identity(const Ring& r, int n);
  static Mat zero(const Ring& r, int rows, int cols) { return Mat(r, rows, cols); }
  // v * E_{ij}, 1-based.
  static Mat unit(const Ring& r, int n, int i, int j, Scalar v = 1);
  // Entries given as ring codes.
  static Mat from_rows(const Ring& r, const std::vector<std::vector<Scalar>>& rows);
  // Entries given as integers, mapped through Ring::from_int.
  static Mat from_ints(const Ring& r, const std::vector<std::vector<std::int64_t>>& rows);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Scalar operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  Scalar& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Scalar>& data() const { return e_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Scalar s) const;
  Mat pow(std::int64_t e) const;
  Mat transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const { return key() < o.key(); }

  // Canonical byte encoding: entries row-major, one byte each when the ring
  // has at most 256 elements, else 8 bytes in an order-preserving layout.
  std::string key() const;

 private:
  Ring ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

void require_same_shape(const Mat& a, const Mat& b);

Mat mat_inv(const Mat& a);
bool is_invertible(const Mat& a);
Scalar mat_det(const Mat& a);
// Rank over a field.
int mat_rank(const Mat& a);
// Basis of the right kernel over a field, as column vectors.
std::vector<Mat> nullspace(const Mat& a);
Mat commutator(const Mat& a, const Mat& b);
// Entrywise Frobenius x -> x^p over F_q.
Mat frobenius_twist(const Mat& a);
std::int64_t mat_order(const Mat& a, std::int64_t bound = 1 << 20);

// Change of coefficients.
Mat teichmuller_lift(const Mat& a);           // F_q -> W_2(F_q), x -> (x, 0)
Mat iota_lift(const Mat& a);                  // F_q -> W_2(F_q), x -> (0, x)
Mat reduce_witt(const Mat& a);                // W_2(F_q) -> F_q
Mat reduce_to(const Mat& a, const Ring& target);  // Z -> Z/N, Z/N -> Z/M (M | N), Z/p -> F_p
Mat integer_lift(const Mat& a);               // symmetric representatives in Z
Mat zp2_to_witt(const Mat& a);                // Z/p^2 -> W_2(F_p)
Mat witt_to_zp2(const Mat& a);
// X with a = I + iota(X); throws KernelEscape.
Mat kernel_part(const Mat& a);
// I + iota(X) over W_2.
Mat kernel_element(const Mat& x);

// Permutation matrix P with P e_j = e_{perm[j]}, 0-based.
Mat permutation_matrix(const Ring& r, const std::vector<int>& perm);
// Cycle notation such as "(2354)" or "(45)(13)", 1-based; several cycles are
// applied left to right.
std::vector<int> parse_cycles(std::string_view s, int n);

}  // namespace lol
