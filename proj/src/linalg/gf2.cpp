#include <algorithm>
#include <mutex>

#include "lol/gf2.hpp"

namespace lol::gf2 {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) throw Error(ErrorCode::UnsupportedSize, "bit-packed path needs 1 <= n <= 8");
}

std::uint8_t row(Word a, int i) { return static_cast<std::uint8_t>((a >> (8 * i)) & 0xff); }

}  // namespace

Word identity(int n) {
  check_dim(n);
  Word w = 0;
  for (int i = 0; i < n; ++i) w |= Word{1} << (8 * i + i);
  return w;
}

Word from_mat(const Mat& m) {
  const Ring& r = m.ring();
  if (!r.is_field() || r.field()->order() != 2) throw Error(ErrorCode::FieldMismatch, "bit-packed path needs F_2");
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "square matrix expected");
  check_dim(m.rows());
  Word w = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j)) w |= Word{1} << (8 * i + j);
  return w;
}

Mat to_mat(Word w, int n) {
  check_dim(n);
  Mat m(Ring::fq(Field::make(2, 1)), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (w >> (8 * i + j)) & 1;
  return m;
}

Word mul(Word a, Word b, int n) {
  Word r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint8_t ar = row(a, i), acc = 0;
    for (int j = 0; ar; ++j, ar >>= 1)
      if (ar & 1) acc ^= row(b, j);
    r |= Word{acc} << (8 * i);
  }
  return r;
}

int rank(Word a, int n) {
  std::array<std::uint8_t, 8> rows{};
  for (int i = 0; i < n; ++i) rows[i] = row(a, i);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if ((rows[i] >> c) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    for (int i = 0; i < n; ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::optional<Word> inverse(Word a, int n) {
  std::array<std::uint8_t, 8> rows{}, inv{};
  for (int i = 0; i < n; ++i) {
    rows[i] = row(a, i);
    inv[i] = static_cast<std::uint8_t>(1u << i);
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if ((rows[i] >> c) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(rows[piv], rows[c]);
    std::swap(inv[piv], inv[c]);
    for (int i = 0; i < n; ++i)
      if (i != c && ((rows[i] >> c) & 1)) {
        rows[i] ^= rows[c];
        inv[i] ^= inv[c];
      }
  }
  Word w = 0;
  for (int i = 0; i < n; ++i) w |= Word{inv[i]} << (8 * i);
  return w;
}

Word pow(Word a, std::uint64_t e, int n) {
  Word r = identity(n);
  while (e) {
    if (e & 1) r = mul(r, a, n);
    a = mul(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint64_t compact(Word a, int n) {
  std::uint64_t c = 0;
  for (int i = 0; i < n; ++i) c |= std::uint64_t{row(a, i)} << (n * i);
  return c;
}

Word expand(std::uint64_t c, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  Word w = 0;
  for (int i = 0; i < n; ++i) w |= ((c >> (n * i)) & mask) << (8 * i);
  return w;
}

RightMul::RightMul(Word b, int n) : n_(n) {
  for (unsigned r = 0; r < 256; ++r) {
    std::uint8_t acc = 0;
    for (int j = 0; j < 8; ++j)
      if ((r >> j) & 1) acc ^= row(b, j);
    table_[r] = acc;
  }
}

int degree(Poly2 f) { return f ? 31 - __builtin_clz(f) : -1; }

Poly2 poly_mul(Poly2 a, Poly2 b) {
  Poly2 r = 0;
  for (; b; b >>= 1, a <<= 1)
    if (b & 1) r ^= a;
  return r;
}

Poly2 poly_mod(Poly2 a, Poly2 b) {
  const int db = degree(b);
  if (db < 0) throw Error(ErrorCode::DivisionByZero, "polynomial modulo zero");
  for (int d = degree(a); d >= db; d = degree(a)) a ^= b << (d - db);
  return a;
}

const std::vector<Poly2>& irreducibles(int max_degree) {
  static const std::vector<Poly2> all = [] {
    std::vector<Poly2> out;
    for (Poly2 f = 2; f < (1u << 9); ++f) {
      bool irreducible = true;
      for (Poly2 g : out) {
        if (2 * degree(g) > degree(f)) break;
        if (poly_mod(f, g) == 0) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) out.push_back(f);
    }
    return out;
  }();
  static std::array<std::vector<Poly2>, 9> by_bound;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int d = 0; d <= 8; ++d)
      for (Poly2 g : all)
        if (degree(g) <= d) by_bound[d].push_back(g);
  });
  return by_bound[std::clamp(max_degree, 0, 8)];
}

Word poly_eval(Poly2 f, Word a, int n) {
  Word acc = 0;
  const Word id = identity(n);
  for (int k = degree(f); k >= 0; --k) {
    acc = mul(acc, a, n);
    if ((f >> k) & 1) acc ^= id;
  }
  return acc;
}

std::vector<Poly2> invariant_factors(Word a, int n) {
  check_dim(n);
  std::vector<std::pair<Poly2, std::vector<int>>> parts;
  int covered = 0;
  std::size_t longest = 0;
  for (Poly2 phi : irreducibles(n)) {
    if (covered == n) break;
    const int d = degree(phi);
    if (d > n - covered) continue;
    const Word b = poly_eval(phi, a, n);
    int prev = 0;
    Word power = b;
    std::vector<int> at_least;
    for (int j = 1; j <= n / d; ++j) {
      const int ker = n - rank(power, n);
      if (ker == prev) break;
      at_least.push_back((ker - prev) / d);
      prev = ker;
      power = mul(power, b, n);
    }
    if (at_least.empty()) continue;
    covered += prev;
    std::vector<int> partition;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int k = 0; k < at_least[j] - next; ++k) partition.push_back(static_cast<int>(j + 1));
    }
    std::sort(partition.rbegin(), partition.rend());
    longest = std::max(longest, partition.size());
    parts.emplace_back(phi, std::move(partition));
  }
  if (covered != n) throw Error(ErrorCode::Singular, "primary decomposition does not cover the space");
  std::vector<Poly2> inv(longest, 1);
  for (const auto& [phi, partition] : parts)
    for (std::size_t k = 0; k < partition.size(); ++k)
      for (int e = 0; e < partition[k]; ++e) inv[longest - 1 - k] = poly_mul(inv[longest - 1 - k], phi);
  return inv;
}

}  // namespace lol::gf2
