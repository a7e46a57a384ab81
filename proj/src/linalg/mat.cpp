#include <algorithm>
#include <numeric>

#include "lol/mat.hpp"

namespace lol {

Mat::Mat(Ring r, int rows, int cols) : ring_(std::move(r)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::DimensionMismatch, "negative dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Mat Mat::identity(const Ring& r, int n) {
  Mat m(r, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(const Ring& r, int n, int i, int j, Scalar v) {
  if (i < 1 || j < 1 || i > n || j > n) throw Error(ErrorCode::DimensionMismatch, "unit index out of range");
  Mat m(r, n, n);
  m(i - 1, j - 1) = v;
  return m;
}

Mat Mat::from_rows(const Ring& r, const std::vector<std::vector<Scalar>>& rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_ints(const Ring& r, const std::vector<std::vector<std::int64_t>>& rows) {
  Mat m = from_rows(r, rows);
  for (auto& x : m.e_) x = r.from_int(x);
  return m;
}

void require_same_shape(const Mat& a, const Mat& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::FieldMismatch, a.ring().name() + " vs " + b.ring().name());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
}

Mat Mat::operator+(const Mat& o) const {
  require_same_shape(*this, o);
  Mat r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.add(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_shape(*this, o);
  Mat r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.sub(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (ring_ != o.ring_) throw Error(ErrorCode::FieldMismatch, ring_.name() + " vs " + o.ring_.name());
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  Mat r(ring_, rows_, o.cols_);
  if (ring_.kind() == RingKind::Fq) {
    const Field& f = *ring_.field();
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const auto a = static_cast<unsigned>((*this)(i, k));
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r(i, j) = f.add(static_cast<unsigned>(r(i, j)), f.mul(a, static_cast<unsigned>(o(k, j))));
      }
    return r;
  }
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = ring_.add(r(i, j), ring_.mul(a, o(k, j)));
    }
  return r;
}

Mat Mat::operator-() const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.neg(e_[k]);
  return r;
}

Mat Mat::scaled(Scalar s) const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.mul(s, e_[k]);
  return r;
}

Mat Mat::pow(std::int64_t e) const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  Mat base = e < 0 ? mat_inv(*this) : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Mat r = identity(ring_, rows_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Scalar x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && e_ == o.e_;
}

std::string Mat::key() const {
  std::string k;
  const std::int64_t size = ring_.size();
  if (size > 0 && size <= 256) {
    k.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) k[i] = static_cast<char>(e_[i]);
    return k;
  }
  k.resize(e_.size() * 8);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    auto u = static_cast<std::uint64_t>(e_[i]) ^ (std::uint64_t{1} << 63);
    for (int b = 0; b < 8; ++b) k[i * 8 + b] = static_cast<char>((u >> (56 - 8 * b)) & 0xff);
  }
  return k;
}

namespace {

void require_square(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
}

// Gauss-Jordan over a field; throws Singular.
Mat field_inverse(const Mat& a) {
  const Ring& r = a.ring();
  const int n = a.rows();
  Mat m = a, inv = Mat::identity(r, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error(ErrorCode::Singular, "matrix is singular over " + r.name());
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Scalar s = r.inv(m(c, c));
    for (int j = 0; j < n; ++j) {
      m(c, j) = r.mul(s, m(c, j));
      inv(c, j) = r.mul(s, inv(c, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Scalar t = m(i, c);
      for (int j = 0; j < n; ++j) {
        m(i, j) = r.sub(m(i, j), r.mul(t, m(c, j)));
        inv(i, j) = r.sub(inv(i, j), r.mul(t, inv(c, j)));
      }
    }
  }
  return inv;
}

// p with n = p^k, or 0.
std::int64_t prime_power_base(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  return n;
}

// Inverse modulo a prime via Gauss-Jordan, entries in [0, prime).
Mat inverse_mod_prime(const Mat& a, std::int64_t prime) {
  Ring rp = Ring::zmod(prime);
  Mat m(rp, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = rp.from_int(a(i, j));
  return field_inverse(m);
}

// One or more steps B -> B (2I - A B) starting from an inverse modulo the
// maximal ideal, until A B = I.
Mat newton_inverse(const Mat& a, Mat b) {
  const Ring& r = a.ring();
  const int n = a.rows();
  const Mat two = Mat::identity(r, n).scaled(r.from_int(2));
  for (int step = 0; step < 64; ++step) {
    Mat ab = a * b;
    if (ab.is_identity()) return b;
    b = b * (two - ab);
  }
  throw Error(ErrorCode::NotInvertible, "correction step did not converge");
}

}  // namespace

Mat mat_inv(const Mat& a) {
  require_square(a);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Fq: return field_inverse(a);
    case RingKind::W2: {
      Mat red = reduce_witt(a);
      Mat b0;
      try {
        b0 = field_inverse(red);
      } catch (const Error&) {
        throw Error(ErrorCode::NotInvertible, "reduction is singular");
      }
      return newton_inverse(a, teichmuller_lift(b0));
    }
    case RingKind::ZN: {
      const std::int64_t p = prime_power_base(r.modulus());
      if (p == 0) throw Error(ErrorCode::UnsupportedSize, "inverse over Z/N needs N a prime power");
      Mat b0;
      try {
        b0 = inverse_mod_prime(a, p);
      } catch (const Error&) {
        throw Error(ErrorCode::NotInvertible, "reduction mod " + std::to_string(p) + " is singular");
      }
      Mat b(r, a.rows(), a.cols());
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) b(i, j) = b0(i, j);
      return newton_inverse(a, b);
    }
    case RingKind::Z: {
      const Scalar d = mat_det(a);
      if (d != 1 && d != -1) throw Error(ErrorCode::NotInvertible, "determinant " + std::to_string(d));
      const std::int64_t prime = 2147483647;
      Mat bp = inverse_mod_prime(a, prime);
      Mat b(r, a.rows(), a.cols());
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) b(i, j) = bp(i, j) > prime / 2 ? bp(i, j) - prime : bp(i, j);
      if (!(a * b).is_identity()) throw Error(ErrorCode::UnsupportedSize, "integer inverse entries too large");
      return b;
    }
  }
  throw Error(ErrorCode::NotInvertible, "unknown ring");
}

bool is_invertible(const Mat& a) {
  if (!a.is_square()) return false;
  switch (a.ring().kind()) {
    case RingKind::Fq: return mat_rank(a) == a.rows();
    case RingKind::W2: return mat_rank(reduce_witt(a)) == a.rows();
    case RingKind::ZN:
    case RingKind::Z:
      try {
        mat_inv(a);
        return true;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotInvertible) return false;
        throw;
      }
  }
  return false;
}

Scalar mat_det(const Mat& a) {
  require_square(a);
  const Ring& r = a.ring();
  const int n = a.rows();
  if (r.kind() == RingKind::Fq) {
    Mat m = a;
    Scalar det = 1;
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int i = c; i < n; ++i)
        if (m(i, c) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      if (piv != c) {
        for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
        det = r.neg(det);
      }
      det = r.mul(det, m(c, c));
      const Scalar s = r.inv(m(c, c));
      for (int i = c + 1; i < n; ++i) {
        if (m(i, c) == 0) continue;
        const Scalar t = r.mul(m(i, c), s);
        for (int j = c; j < n; ++j) m(i, j) = r.sub(m(i, j), r.mul(t, m(c, j)));
      }
    }
    return det;
  }
  if (r.kind() == RingKind::Z) {
    // Bareiss fraction-free elimination.
    std::vector<__int128> m(a.data().begin(), a.data().end());
    auto at = [&](int i, int j) -> __int128& { return m[static_cast<std::size_t>(i) * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (at(k, k) == 0) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
          if (at(i, k) != 0) {
            piv = i;
            break;
          }
        if (piv < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        at(i, k) = 0;
      }
      prev = at(k, k);
    }
    return static_cast<Scalar>(sign * (n ? at(n - 1, n - 1) : 1));
  }
  // Leibniz expansion over the remaining commutative rings.
  if (n > 8) throw Error(ErrorCode::UnsupportedSize, "determinant over " + r.name() + " needs n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = 1;
    for (int i = 0; i < n && term != 0; ++i) term = r.mul(term, a(i, perm[i]));
    det = (inversions % 2) ? r.sub(det, term) : r.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

int mat_rank(const Mat& a) {
  const Ring& r = a.ring();
  if (!r.is_field()) throw Error(ErrorCode::UnsupportedSize, "rank needs a field, got " + r.name());
  Mat m = a;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    const Scalar s = r.inv(m(rank, c));
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Scalar t = r.mul(m(i, c), s);
      for (int j = c; j < m.cols(); ++j) m(i, j) = r.sub(m(i, j), r.mul(t, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::vector<Mat> nullspace(const Mat& a) {
  const Ring& r = a.ring();
  if (!r.is_field()) throw Error(ErrorCode::UnsupportedSize, "nullspace needs a field, got " + r.name());
  Mat m = a;
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    const Scalar s = r.inv(m(rank, c));
    for (int j = 0; j < m.cols(); ++j) m(rank, j) = r.mul(s, m(rank, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, c) == 0) continue;
      const Scalar t = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = r.sub(m(i, j), r.mul(t, m(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Mat> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Mat v(r, m.cols(), 1);
    v(f, 0) = 1;
    for (int k = 0; k < rank; ++k) v(pivots[k], 0) = r.neg(m(k, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b * mat_inv(a) * mat_inv(b); }

Mat frobenius_twist(const Mat& a) {
  if (a.ring().kind() != RingKind::Fq) throw Error(ErrorCode::FieldMismatch, "Frobenius twist needs F_q");
  const Field& f = *a.ring().field();
  Mat r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = f.frobenius(static_cast<unsigned>(a(i, j)));
  return r;
}

std::int64_t mat_order(const Mat& a, std::int64_t bound) {
  require_square(a);
  Mat x = a;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = x * a;
  }
  throw Error(ErrorCode::BoundExceeded, "element order above " + std::to_string(bound));
}

Mat teichmuller_lift(const Mat& a) {
  if (a.ring().kind() != RingKind::Fq) throw Error(ErrorCode::FieldMismatch, "lift needs F_q");
  Ring w = Ring::witt(a.ring().field());
  Mat r(w, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = w.encode({static_cast<unsigned>(a(i, j)), 0});
  return r;
}

Mat iota_lift(const Mat& a) {
  if (a.ring().kind() != RingKind::Fq) throw Error(ErrorCode::FieldMismatch, "lift needs F_q");
  Ring w = Ring::witt(a.ring().field());
  Mat r(w, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = w.encode({0, static_cast<unsigned>(a(i, j))});
  return r;
}

Mat reduce_witt(const Mat& a) {
  if (a.ring().kind() != RingKind::W2) throw Error(ErrorCode::FieldMismatch, "reduction needs W_2");
  Ring f = Ring::fq(a.ring().field());
  Mat r(f, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a.ring().decode(a(i, j)).a;
  return r;
}

Mat reduce_to(const Mat& a, const Ring& target) {
  const Ring& src = a.ring();
  bool ok = false;
  if (src.kind() == RingKind::Z) ok = target.kind() == RingKind::ZN || (target.is_field() && target.field()->m() == 1);
  if (src.kind() == RingKind::ZN) {
    if (target.kind() == RingKind::ZN) ok = src.modulus() % target.modulus() == 0;
    if (target.is_field()) ok = target.field()->m() == 1 && src.modulus() % target.field()->p() == 0;
  }
  if (src.kind() == RingKind::W2 && target.is_field()) return reduce_witt(a);
  if (!ok) throw Error(ErrorCode::FieldMismatch, "cannot reduce " + src.name() + " to " + target.name());
  Mat r(target, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = target.from_int(a(i, j));
  return r;
}

Mat integer_lift(const Mat& a) {
  const Ring& src = a.ring();
  std::int64_t n = 0;
  if (src.kind() == RingKind::ZN) n = src.modulus();
  else if (src.is_field() && src.field()->m() == 1) n = src.field()->p();
  else throw Error(ErrorCode::FieldMismatch, "integer lift needs Z/N or F_p");
  Mat r(Ring::integers(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) > n / 2 ? a(i, j) - n : a(i, j);
  return r;
}

Mat zp2_to_witt(const Mat& a) {
  const Ring& src = a.ring();
  if (src.kind() != RingKind::ZN) throw Error(ErrorCode::FieldMismatch, "bridge needs Z/p^2");
  const std::int64_t n = src.modulus();
  std::int64_t p = 2;
  while (p * p < n) ++p;
  if (p * p != n || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::NotPrimeField, "modulus is not p^2");
  FieldPtr fp = Field::make(static_cast<unsigned>(p), 1);
  Ring w = Ring::witt(fp);
  std::vector<Scalar> table(n);
  W2 acc{0, 0};
  for (std::int64_t k = 0; k < n; ++k) {
    table[k] = w.encode(acc);
    acc = w2_add(*fp, acc, W2{1, 0});
  }
  Mat r(w, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = table[a(i, j)];
  return r;
}

Mat witt_to_zp2(const Mat& a) {
  const Ring& src = a.ring();
  if (src.kind() != RingKind::W2 || src.field()->m() != 1)
    throw Error(ErrorCode::NotPrimeField, "bridge needs W_2(F_p)");
  const FieldPtr& fp = src.field();
  const std::int64_t n = static_cast<std::int64_t>(fp->p()) * fp->p();
  std::vector<std::int64_t> back(n);
  W2 acc{0, 0};
  for (std::int64_t k = 0; k < n; ++k) {
    back[src.encode(acc)] = k;
    acc = w2_add(*fp, acc, W2{1, 0});
  }
  Ring z = Ring::zmod(n);
  Mat r(z, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = back[a(i, j)];
  return r;
}

Mat kernel_part(const Mat& a) {
  const Ring& w = a.ring();
  if (w.kind() != RingKind::W2) throw Error(ErrorCode::FieldMismatch, "kernel part needs W_2");
  require_square(a);
  Mat x(Ring::fq(w.field()), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      W2 e = w.decode(a(i, j));
      if (e.a != (i == j ? 1u : 0u)) throw Error(ErrorCode::KernelEscape, "matrix does not reduce to the identity");
      x(i, j) = e.b;
    }
  return x;
}

Mat kernel_element(const Mat& x) { return Mat::identity(Ring::witt(x.ring().field()), x.rows()) + iota_lift(x); }

Mat permutation_matrix(const Ring& r, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat m(r, n, n);
  for (int j = 0; j < n; ++j) m(perm[j], j) = 1;
  return m;
}

std::vector<int> parse_cycles(std::string_view s, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw Error(ErrorCode::ParseError, "cycle must start with '('");
    auto close = s.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unclosed cycle");
    std::vector<int> cyc;
    for (std::size_t k = pos + 1; k < close; ++k) {
      char c = s[k];
      if (c == ' ' || c == ',') continue;
      if (c < '1' || c > '9' || c - '0' > n) throw Error(ErrorCode::ParseError, "bad cycle entry");
      cyc.push_back(c - '1');
    }
    std::vector<int> step(n);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) step[cyc[k]] = cyc[(k + 1) % cyc.size()];
    // Left to right: earlier cycles act first.
    for (int i = 0; i < n; ++i) perm[i] = step[perm[i]];
    pos = close + 1;
  }
  return perm;
}

}  // namespace lol
