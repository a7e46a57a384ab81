#include "lol/gmodule.hpp"

#include <random>

namespace lol {

GModule::GModule(Ring r, int n, Kind kind) : ring_(std::move(r)), n_(n), kind_(kind) {
  if (!ring_.is_field()) throw Error(ErrorCode::NotPrimeField, "module coefficients must be a field");
  for (int i = 1; i <= n; ++i)
    for (int j = kind == Kind::Upper ? i : 1; j <= n; ++j) {
      if (kind == Kind::TraceZero && i == j) {
        if (i < n) basis_.push_back(Mat::unit(ring_, n, i, i) - Mat::unit(ring_, n, n, n));
        continue;
      }
      basis_.push_back(Mat::unit(ring_, n, i, j));
    }
}

GModule GModule::full(const Ring& fq, int n) { return GModule(fq, n, Kind::Full); }
GModule GModule::upper(const Ring& fq, int n) { return GModule(fq, n, Kind::Upper); }
GModule GModule::trace_zero(const Ring& fq, int n) { return GModule(fq, n, Kind::TraceZero); }

bool GModule::contains(const Mat& m) const {
  if (m.ring() != ring_ || m.rows() != n_ || m.cols() != n_) return false;
  if (kind_ == Kind::Upper)
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < i; ++j)
        if (m(i, j) != 0) return false;
  if (kind_ == Kind::TraceZero) {
    Scalar t = 0;
    for (int i = 0; i < n_; ++i) t = ring_.add(t, m(i, i));
    if (t != 0) return false;
  }
  return true;
}

void GModule::require(const Mat& m) const {
  if (!contains(m)) throw Error(ErrorCode::NotInModule, "matrix is not in the module");
}

Mat GModule::act(const Mat& g, const Mat& m) const {
  Mat t = frobenius_twist(g);
  return t * m * mat_inv(t);
}

std::vector<Mat> GModule::fixed_points(const Subgroup& s) const {
  const auto& gens = s.generators();
  const int d = dimension();
  if (gens.empty()) return basis_;
  Mat sys = Mat::zero(ring_, n_ * n_ * static_cast<int>(gens.size()), d);
  const auto& units = basis_;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Mat t = frobenius_twist(gens[gi]);
    Mat ti = mat_inv(t);
    for (int c = 0; c < d; ++c) {
      Mat diff = t * units[c] * ti - units[c];
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) sys(static_cast<int>(gi) * n_ * n_ + i * n_ + j, c) = diff(i, j);
    }
  }
  std::vector<Mat> out;
  for (const Mat& v : nullspace(sys)) {
    Mat m = zero();
    for (int c = 0; c < d; ++c) m = m + units[c].scaled(v(c, 0));
    out.push_back(m);
  }
  return out;
}

bool GModule::is_fixed(const Subgroup& s, const Mat& m) const {
  for (const Mat& g : s.generators())
    if (act(g, m) != m) return false;
  return true;
}

Mat GModule::norm_cyclic(const Mat& g, const Mat& m) const {
  require(m);
  Mat t = frobenius_twist(g);
  Mat ti = mat_inv(t);
  Mat sum = zero();
  Mat x = m;
  for (std::int64_t k = mat_order(g); k > 0; --k) {
    sum = sum + x;
    x = t * x * ti;
  }
  return sum;
}

Mat GModule::norm(const Subgroup& big, const Subgroup& sub, const Mat& m) const {
  require(m);
  if (!sub.is_subgroup_of(big)) throw Error(ErrorCode::NotSubgroup, "norm needs sub <= big");
  if (!is_fixed(sub, m)) throw Error(ErrorCode::NotFixedBySubgroup, "element is not fixed by the subgroup");
  const auto reps = coset_reps(big, sub);
  Mat a = zero();
  for (const Mat& r : reps) a = a + act(r, m);
  std::mt19937_64 rng(0x5eedc0de);
  std::uniform_int_distribution<std::size_t> pick(0, sub.order() - 1);
  Mat b = zero();
  for (const Mat& r : reps) b = b + act(r * sub.element(pick(rng)), m);
  if (a != b) throw Error(ErrorCode::NotFixedBySubgroup, "norm depends on the transversal");
  return a;
}

}  // namespace lol
