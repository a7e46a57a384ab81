#include <algorithm>
#include <random>

#include "lol/affine.hpp"
#include "lol/canonical.hpp"

namespace lol {

namespace {

void require_field_square(const Mat& a) {
  if (!a.ring().is_field()) throw Error(ErrorCode::FieldMismatch, "needs a matrix over F_q");
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "needs a square matrix");
  if (a.rows() > kMaxFactorDegree) throw Error(ErrorCode::DegreeTooLarge, "matrix size above 8");
}

// Upper Hessenberg form by elementary similarities.
Mat hessenberg(Mat h) {
  const Ring& r = h.ring();
  const int n = h.rows();
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (h(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    const Scalar s = r.inv(h(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      if (h(i, c) == 0) continue;
      const Scalar t = r.mul(h(i, c), s);
      for (int j = 0; j < n; ++j) h(i, j) = r.sub(h(i, j), r.mul(t, h(c + 1, j)));
      for (int k = 0; k < n; ++k) h(k, c + 1) = r.add(h(k, c + 1), r.mul(t, h(k, i)));
    }
  }
  return h;
}

}  // namespace

Poly char_poly(const Mat& a) {
  require_field_square(a);
  const FieldPtr& f = a.ring().field();
  const Ring& r = a.ring();
  const int n = a.rows();
  Mat h = hessenberg(a);
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p;
  p.push_back(Poly::constant(f, 1));
  for (int m = 0; m < n; ++m) {
    Poly next = (Poly::x(f) - Poly::constant(f, static_cast<unsigned>(h(m, m)))) * p[m];
    Scalar prod = 1;
    for (int i = m - 1; i >= 0; --i) {
      prod = r.mul(prod, h(i + 1, i));
      Scalar coef = r.mul(h(i, m), prod);
      if (coef != 0) next = next - p[i].scaled(static_cast<unsigned>(coef));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Mat poly_eval(const Poly& f, const Mat& a) {
  if (!a.ring().is_field()) throw Error(ErrorCode::FieldMismatch, "poly_eval needs F_q");
  require_same_field(f.field(), a.ring().field());
  const int n = a.rows();
  Mat acc = Mat::zero(a.ring(), n, n);
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (int k = 0; k < n; ++k) acc(k, k) = a.ring().add(acc(k, k), c[i]);
  }
  return acc;
}

SimilarityData similarity_data(const Mat& a) {
  require_field_square(a);
  const int n = a.rows();
  const FieldPtr& f = a.ring().field();
  SimilarityData d;
  d.charpoly = char_poly(a);
  d.split = true;
  d.minpoly = Poly::constant(f, 1);
  std::size_t longest = 0;
  for (auto& [prime, mult] : poly_factor(d.charpoly)) {
    const int deg = prime.degree();
    if (deg > 1) d.split = false;
    Mat b = poly_eval(prime, a);
    Mat power = b;
    std::vector<int> ker{0};
    for (unsigned j = 1; j <= mult; ++j) {
      ker.push_back(n - mat_rank(power));
      if (ker.back() == ker[j - 1]) break;
      power = power * b;
    }
    // Blocks of size >= j: (ker_j - ker_{j-1}) / deg.
    std::vector<int> at_least;
    for (std::size_t j = 1; j < ker.size(); ++j) {
      int c = (ker[j] - ker[j - 1]) / deg;
      if (c == 0) break;
      at_least.push_back(c);
    }
    PrimaryPart part{prime, {}};
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int k = 0; k < at_least[j] - next; ++k) part.partition.push_back(static_cast<int>(j + 1));
    }
    std::sort(part.partition.rbegin(), part.partition.rend());
    d.minpoly = d.minpoly * prime.pow(static_cast<unsigned>(part.partition.front()));
    longest = std::max(longest, part.partition.size());
    d.primary.push_back(std::move(part));
  }
  d.diagonalizable = d.split;
  for (const auto& part : d.primary)
    if (part.partition.front() > 1) d.diagonalizable = false;
  // Invariant factors: the k-th largest block of every prime goes to f_{r-k}.
  d.invariant_factors.assign(longest, Poly::constant(f, 1));
  for (const auto& part : d.primary)
    for (std::size_t k = 0; k < part.partition.size(); ++k)
      d.invariant_factors[longest - 1 - k] =
          d.invariant_factors[longest - 1 - k] * part.prime.pow(static_cast<unsigned>(part.partition[k]));
  return d;
}

Poly min_poly(const Mat& a) { return similarity_data(a).minpoly; }

Mat companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::ZeroPolynomial, "companion needs monic, degree >= 1");
  const int d = f.degree();
  Ring r = Ring::fq(f.field());
  Mat c(r, d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = r.neg(f.coeff(i));
  return c;
}

Mat jordan_block(const Ring& r, unsigned eigenvalue, int size) {
  Mat j(r, size, size);
  for (int i = 0; i < size; ++i) {
    j(i, i) = eigenvalue;
    if (i + 1 < size) j(i, i + 1) = 1;
  }
  return j;
}

std::optional<Mat> invertible_in_span(const std::vector<Mat>& basis) {
  if (basis.empty()) return std::nullopt;
  const Ring& r = basis.front().ring();
  const unsigned p = r.field()->p();
  const std::size_t d = basis.size();
  auto combo = [&](const std::vector<unsigned>& c) {
    Mat m = Mat::zero(r, basis[0].rows(), basis[0].cols());
    for (std::size_t k = 0; k < d; ++k)
      if (c[k]) m = m + basis[k].scaled(r.from_int(c[k]));
    return m;
  };
  // Small spans are searched exhaustively in counting order, larger ones by a
  // fixed-seed random walk; both are reproducible.
  double total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= p;
  if (total <= 4096) {
    std::vector<unsigned> c(d, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < d && ++c[k] == p) c[k++] = 0;
      if (k == d) break;
      Mat m = combo(c);
      if (mat_rank(m) == m.rows()) return m;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eedc0deULL);
  std::uniform_int_distribution<unsigned> coin(0, p - 1);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<unsigned> c(d);
    for (auto& x : c) x = coin(rng);
    Mat m = combo(c);
    if (mat_rank(m) == m.rows()) return m;
  }
  return std::nullopt;
}

namespace {

// Invertible g with g a = b g.
std::optional<Mat> intertwiner(const Mat& a, const Mat& b) {
  AffineSystem sys;
  sys.ring = a.ring();
  sys.unknowns.push_back({a.rows(), a.cols(), {}});
  sys.equations.push_back({"g a - b g", {{0, [&](const Mat& g) { return g * a - b * g; }}}, Mat::zero(a.ring(), a.rows(), a.cols())});
  ModpOptions opts;
  opts.certificate = false;
  AffineResult res = solve_affine(sys, opts);
  std::vector<Mat> basis;
  for (auto& k : res.kernel) basis.push_back(std::move(k[0]));
  return invertible_in_span(basis);
}

}  // namespace

Mat block_diagonal(const Ring& r, const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat m(r, n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

CanonicalForm canonical_form(const Mat& a, FormKind kind) {
  SimilarityData d = similarity_data(a);
  CanonicalForm cf;
  cf.kind = kind;
  cf.invariant_factors = d.invariant_factors;
  std::vector<Mat> blocks;
  if (kind == FormKind::Jordan) {
    if (!d.split) throw Error(ErrorCode::FieldMismatch, "characteristic polynomial does not split");
    for (const auto& part : d.primary) {
      const unsigned lambda = a.ring().field()->neg(part.prime.coeff(0));
      for (int s : part.partition) cf.blocks.push_back({lambda, s});
    }
    std::sort(cf.blocks.begin(), cf.blocks.end(), [](const JordanBlock& x, const JordanBlock& y) {
      return x.eigenvalue != y.eigenvalue ? x.eigenvalue < y.eigenvalue : x.size > y.size;
    });
    for (const auto& b : cf.blocks) blocks.push_back(jordan_block(a.ring(), b.eigenvalue, b.size));
  } else {
    for (const auto& f : d.invariant_factors) blocks.push_back(companion(f));
  }
  cf.form = block_diagonal(a.ring(), blocks);
  auto g = intertwiner(a, cf.form);
  if (!g) throw Error(ErrorCode::Singular, "no invertible intertwiner found");
  cf.conjugator = *g;
  if (cf.conjugator * a * mat_inv(cf.conjugator) != cf.form)
    throw Error(ErrorCode::Singular, "conjugator failed verification");
  return cf;
}

CanonicalForm canonical_form(const Mat& a) {
  SimilarityData d = similarity_data(a);
  return canonical_form(a, d.split ? FormKind::Jordan : FormKind::Frobenius);
}

std::optional<Mat> conjugating_matrix(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  if (similarity_data(a).invariant_factors != similarity_data(b).invariant_factors) return std::nullopt;
  auto g = intertwiner(a, b);
  if (!g || *g * a * mat_inv(*g) != b) throw Error(ErrorCode::Singular, "similar but no conjugator found");
  return g;
}

}  // namespace lol
