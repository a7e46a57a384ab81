#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lol/group.hpp"

namespace lol {

std::size_t max_group_order() {
  if (const char* env = std::getenv("LOL_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(ErrorCode::ConfigError, "LOL_MAX_GROUP must be a positive integer");
  }
  return kDefaultMaxGroupOrder;
}

Subgroup Subgroup::finish(Ring r, int n, std::vector<Mat> gens, std::vector<Mat> elems) {
  std::sort(elems.begin(), elems.end(), [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
  auto d = std::make_shared<Data>();
  d->ring = std::move(r);
  d->n = n;
  d->gens = std::move(gens);
  d->elems = std::move(elems);
  d->index.reserve(d->elems.size() * 2);
  for (std::size_t i = 0; i < d->elems.size(); ++i) d->index.emplace(d->elems[i].key(), i);
  Subgroup s;
  s.d_ = std::move(d);
  return s;
}

Subgroup Subgroup::closure(const Ring& r, int n, const std::vector<Mat>& gens, std::size_t bound) {
  std::vector<Mat> kept;
  for (const Mat& g : gens) {
    if (g.ring() != r || g.rows() != n || g.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "generator of the wrong shape or ring");
    if (!is_invertible(g)) throw Error(ErrorCode::NotInvertible, "generator is not invertible");
    if (!g.is_identity()) kept.push_back(g);
  }
  std::vector<Mat> elems{Mat::identity(r, n)};
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(elems[0].key(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Mat& g : kept) {
      Mat x = elems[i] * g;
      if (seen.emplace(x.key(), elems.size()).second) {
        elems.push_back(std::move(x));
        if (elems.size() > bound)
          throw Error(ErrorCode::BoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  return finish(r, n, std::move(kept), std::move(elems));
}

Subgroup Subgroup::closure(const std::vector<Mat>& gens, std::size_t bound) {
  if (gens.empty()) throw Error(ErrorCode::DimensionMismatch, "closure of no generators needs a ring and size");
  return closure(gens[0].ring(), gens[0].rows(), gens, bound);
}

Subgroup Subgroup::trivial(const Ring& r, int n) { return closure(r, n, {}); }

std::vector<Mat> greedy_generators(const std::vector<Mat>& elems, const Ring& r, int n) {
  std::vector<Mat> gens;
  Subgroup span = Subgroup::trivial(r, n);
  for (const Mat& g : elems) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = Subgroup::closure(r, n, gens);
    if (span.order() > elems.size()) break;
  }
  return gens;
}

Subgroup Subgroup::from_elements(std::vector<Mat> elems) {
  if (elems.empty()) throw Error(ErrorCode::NotAGroup, "empty set");
  const Ring r = elems[0].ring();
  const int n = elems[0].rows();
  std::sort(elems.begin(), elems.end(), [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (const Mat& g : elems)
    if (!is_invertible(g)) throw Error(ErrorCode::NotAGroup, "contains a singular matrix");
  auto gens = greedy_generators(elems, r, n);
  Subgroup s = [&] {
    try {
      return closure(r, n, gens, elems.size());
    } catch (const Error&) {
      throw Error(ErrorCode::NotAGroup, "set is not closed under products");
    }
  }();
  if (s.order() != elems.size()) throw Error(ErrorCode::NotAGroup, "set is not closed under products");
  for (const Mat& g : elems)
    if (!s.contains(g)) throw Error(ErrorCode::NotAGroup, "set is not closed under products");
  return s;
}

bool Subgroup::contains(const Mat& g) const { return index_of(g).has_value(); }

std::optional<std::size_t> Subgroup::index_of(const Mat& g) const {
  if (!d_ || g.ring() != d_->ring || g.rows() != d_->n || g.cols() != d_->n) return std::nullopt;
  auto it = d_->index.find(g.key());
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Subgroup::index(const Mat& g) const {
  auto i = index_of(g);
  if (!i) throw Error(ErrorCode::NotSubgroup, "element not in the group");
  return *i;
}

bool Subgroup::is_subgroup_of(const Subgroup& big) const {
  if (ring() != big.ring() || degree() != big.degree()) return false;
  for (const Mat& g : generators())
    if (!big.contains(g)) return false;
  return true;
}

bool Subgroup::is_normal_in(const Subgroup& big) const {
  if (!is_subgroup_of(big)) return false;
  for (const Mat& g : big.generators()) {
    Mat gi = mat_inv(g);
    for (const Mat& h : generators())
      if (!contains(g * h * gi)) return false;
  }
  return true;
}

bool Subgroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

bool Subgroup::same_elements(const Subgroup& o) const {
  if (order() != o.order() || ring() != o.ring() || degree() != o.degree()) return false;
  for (const Mat& g : o.elements())
    if (!contains(g)) return false;
  return true;
}

std::int64_t Subgroup::exponent() const {
  std::int64_t e = 1;
  for (const Mat& g : elements()) e = std::lcm(e, mat_order(g));
  return e;
}

Subgroup Subgroup::filter(const std::function<bool(const Mat&)>& pred) const {
  std::vector<Mat> keep;
  for (const Mat& g : elements())
    if (pred(g)) keep.push_back(g);
  return from_elements(std::move(keep));
}

Subgroup Subgroup::center() const {
  return filter([&](const Mat& x) {
    for (const Mat& g : generators())
      if (g * x != x * g) return false;
    return true;
  });
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
  return filter([&](const Mat& x) { return o.contains(x); });
}

Subgroup Subgroup::conjugate(const Mat& g) const {
  Mat gi = mat_inv(g);
  std::vector<Mat> gens;
  for (const Mat& h : generators()) gens.push_back(g * h * gi);
  return closure(ring(), degree(), gens);
}

Subgroup Subgroup::normalizer_in(const Subgroup& big) const {
  return big.filter([&](const Mat& g) {
    Mat gi = mat_inv(g);
    for (const Mat& h : generators())
      if (!contains(g * h * gi)) return false;
    return true;
  });
}

Subgroup Subgroup::derived() const {
  // Normal closure of the commutators of generators.
  std::vector<Mat> dgens;
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Mat c = commutator(gs[i], gs[j]);
      if (!c.is_identity()) dgens.push_back(std::move(c));
    }
  Subgroup d = closure(ring(), degree(), dgens);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Mat& g : gs) {
      Mat gi = mat_inv(g);
      for (std::size_t k = 0; k < dgens.size(); ++k) {
        Mat c = g * dgens[k] * gi;
        if (!d.contains(c)) {
          dgens.push_back(std::move(c));
          d = closure(ring(), degree(), dgens);
          changed = true;
        }
      }
    }
  }
  return d;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Mat> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::closure(a.ring(), a.degree(), gens);
}

namespace {

std::vector<Scalar> fp_basis(const Ring& fq) {
  std::vector<Scalar> basis;
  Scalar code = 1;
  for (unsigned t = 0; t < fq.field()->m(); ++t) {
    basis.push_back(code);
    code *= fq.field()->p();
  }
  return basis;
}

}  // namespace

Subgroup general_linear(const Ring& fq, int n) {
  std::vector<Mat> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        for (Scalar c : fp_basis(fq)) gens.push_back(Mat::identity(fq, n) + Mat::unit(fq, n, i, j, c));
  if (fq.field()->order() > 2) {
    Mat d = Mat::identity(fq, n);
    d(0, 0) = fq.field()->primitive();
    gens.push_back(d);
  }
  return Subgroup::closure(fq, n, gens);
}

Subgroup unitriangular(const Ring& fq, int n) {
  std::vector<Mat> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (Scalar c : fp_basis(fq)) gens.push_back(Mat::identity(fq, n) + Mat::unit(fq, n, i, j, c));
  return Subgroup::closure(fq, n, gens);
}

Subgroup upper_triangular(const Ring& fq, int n) {
  std::vector<Mat> gens = unitriangular(fq, n).generators();
  if (fq.field()->order() > 2)
    for (int i = 0; i < n; ++i) {
      Mat d = Mat::identity(fq, n);
      d(i, i) = fq.field()->primitive();
      gens.push_back(d);
    }
  return Subgroup::closure(fq, n, gens);
}

}  // namespace lol
