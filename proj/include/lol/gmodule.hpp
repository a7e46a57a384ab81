#pragma once

// M_n(F_q), the upper triangular T_n(F_q) or the trace-zero M^0, with
// GL_n(F_q) acting by g . m = g^(p) m (g^(p))^-1 (g^(p) the entrywise
// Frobenius twist).

#include <utility>
#include <vector>

#include "lol/group.hpp"

namespace lol {

class GModule {
 public:
  static GModule full(const Ring& fq, int n);
  static GModule upper(const Ring& fq, int n);
  static GModule trace_zero(const Ring& fq, int n);

  const Ring& ring() const { return ring_; }
  int degree() const { return n_; }
  enum class Kind { Full, Upper, TraceZero };
  Kind kind() const { return kind_; }
  // F_q basis: matrix units row-major; for trace zero the diagonal part is
  // E_ii - E_nn.
  const std::vector<Mat>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  bool contains(const Mat& m) const;
  void require(const Mat& m) const;  // throws NotInModule
  Mat act(const Mat& g, const Mat& m) const;
  Mat zero() const { return Mat::zero(ring_, n_, n_); }

  // F_q basis of the elements fixed by every generator of s.
  std::vector<Mat> fixed_points(const Subgroup& s) const;
  bool is_fixed(const Subgroup& s, const Mat& m) const;
  // 1 + g + ... + g^(k-1) applied to m, k the order of g.
  Mat norm_cyclic(const Mat& g, const Mat& m) const;
  // Sum of r . m over left coset representatives r of sub in big; m must be
  // fixed by sub. The sum is recomputed on a second, seeded transversal and
  // the two must agree.
  Mat norm(const Subgroup& big, const Subgroup& sub, const Mat& m) const;

 private:
  GModule(Ring r, int n, Kind kind);
  Ring ring_;
  int n_ = 0;
  Kind kind_ = Kind::Full;
  std::vector<Mat> basis_;
};

}  // namespace lol
