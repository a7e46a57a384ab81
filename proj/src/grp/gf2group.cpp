#include "lol/gf2group.hpp"

#include <algorithm>
#include <unordered_set>

namespace lol::gf2 {

namespace {

constexpr int kBitmapMaxDim = 5;

Word commutator(Word a, Word b, int n) {
  return mul(mul(*inverse(a, n), *inverse(b, n), n), mul(a, b, n), n);
}

}  // namespace

Group Group::closure(const std::vector<Word>& gens, int n, std::size_t bound) {
  if (n < 1 || n > kMaxDim) throw Error(ErrorCode::UnsupportedSize, "bit-packed groups need 1 <= n <= 8");
  auto d = std::make_shared<Data>();
  d->n = n;
  const Word one = identity(n);
  for (Word g : gens) {
    if (rank(g, n) != n) throw Error(ErrorCode::NotInvertible, "generator is not invertible");
    if (g != one) d->gens.push_back(g);
  }
  std::vector<RightMul> right;
  for (Word g : d->gens) right.emplace_back(g, n);

  auto& elems = d->elems;
  elems.push_back(one);
  auto grow = [&](auto&& insert) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const RightMul& r : right) {
        const Word x = r(elems[i]);
        if (insert(x)) {
          elems.push_back(x);
          if (elems.size() > bound)
            throw Error(ErrorCode::BoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
        }
      }
  };
  if (n <= kBitmapMaxDim) {
    d->bitmap.assign(((std::uint64_t{1} << (n * n)) + 63) / 64, 0);
    auto& bm = d->bitmap;
    auto insert = [&](Word x) {
      const std::uint64_t c = compact(x, n);
      const std::uint64_t bit = std::uint64_t{1} << (c & 63);
      if (bm[c >> 6] & bit) return false;
      bm[c >> 6] |= bit;
      return true;
    };
    insert(one);
    grow(insert);
    // Read the bitmap back in code order: sorted for free.
    elems.clear();
    for (std::size_t w = 0; w < bm.size(); ++w)
      for (std::uint64_t bits = bm[w]; bits; bits &= bits - 1)
        elems.push_back(expand(w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits)), n));
  } else {
    std::unordered_set<Word> seen{one};
    grow([&](Word x) { return seen.insert(x).second; });
    std::sort(elems.begin(), elems.end(), [n](Word a, Word b) { return compact(a, n) < compact(b, n); });
  }
  Group out;
  out.d_ = std::move(d);
  return out;
}

bool Group::contains(Word w) const {
  const int n = d_->n;
  if (!d_->bitmap.empty()) {
    const std::uint64_t c = compact(w, n);
    return (d_->bitmap[c >> 6] >> (c & 63)) & 1;
  }
  return std::binary_search(d_->elems.begin(), d_->elems.end(), w,
                            [n](Word a, Word b) { return compact(a, n) < compact(b, n); });
}

Group Group::derived() const {
  const int n = degree();
  const auto& gs = generators();
  std::vector<Word> dgens;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) dgens.push_back(commutator(gs[i], gs[j], n));
  Group d = closure(dgens, n);
  for (bool changed = true; changed && d.order() < order();) {
    changed = false;
    for (Word g : gs) {
      const Word gi = *inverse(g, n);
      for (std::size_t k = 0; k < dgens.size() && d.order() < order(); ++k) {
        const Word c = mul(mul(g, dgens[k], n), gi, n);
        if (!d.contains(c)) {
          dgens.push_back(c);
          d = closure(dgens, n);
          changed = true;
        }
      }
    }
  }
  return d;
}

std::vector<Word> gl_generators(int n) {
  Word t = identity(n);
  if (n >= 2) t |= Word{1} << 1;  // entry (0, 1)
  Word c = 0;
  for (int j = 0; j < n; ++j) {
    const int i = (j + 1) % n;
    c |= Word{1} << (8 * i + j);
  }
  return {t, c};
}

std::uint64_t gl_order(int n) {
  std::uint64_t order = 1;
  const std::uint64_t q = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i) order *= q - (std::uint64_t{1} << i);
  return order;
}

}  // namespace lol::gf2
