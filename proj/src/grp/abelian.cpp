#include "lol/abelian.hpp"

#include <algorithm>

namespace lol {

namespace {

inline constexpr std::size_t kMaxAbelianize = 1'000'000;

}  // namespace

CyclicDecomposition decompose_abelian(std::size_t m, std::size_t identity,
                                      const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  CyclicDecomposition out;
  std::vector<char> in_span(m, 0);
  std::vector<std::size_t> span{identity};
  in_span[identity] = 1;

  auto order_mod_span = [&](std::size_t x) {
    std::int64_t k = 1;
    for (std::size_t y = x; !in_span[y]; y = mul(y, x)) ++k;
    return k;
  };
  auto order = [&](std::size_t x) {
    std::int64_t k = 1;
    for (std::size_t y = x; y != identity; y = mul(y, x)) ++k;
    return k;
  };

  while (span.size() < m) {
    std::size_t best = identity;
    std::int64_t best_order = 1;
    for (std::size_t x = 0; x < m; ++x) {
      if (in_span[x]) continue;
      std::int64_t k = order_mod_span(x);
      if (k > best_order) best_order = k, best = x;
    }
    // The span so far is a direct summand, so the coset best + span holds an
    // element whose order equals its order modulo the span.
    std::size_t pick = m;
    for (std::size_t s : span) {
      std::size_t z = mul(best, s);
      if (order(z) == best_order) {
        pick = z;
        break;
      }
    }
    if (pick == m) throw Error(ErrorCode::NotAGroup, "abelian decomposition failed; group is not abelian");
    out.orders.push_back(best_order);
    out.generators.push_back(pick);
    std::vector<std::size_t> grown;
    grown.reserve(span.size() * static_cast<std::size_t>(best_order));
    std::size_t power = identity;
    for (std::int64_t k = 0; k < best_order; ++k) {
      for (std::size_t s : span) grown.push_back(mul(s, power));
      power = mul(power, pick);
    }
    std::fill(in_span.begin(), in_span.end(), 0);
    for (std::size_t x : grown) {
      if (in_span[x]) throw Error(ErrorCode::NotAGroup, "cyclic factors overlap");
      in_span[x] = 1;
    }
    span = std::move(grown);
  }

  // Coordinates: enumerate sum c_i g_i in mixed radix.
  const std::size_t r = out.orders.size();
  out.coords.assign(m, {});
  std::vector<std::int64_t> c(r, 0);
  std::vector<char> hit(m, 0);
  for (std::size_t count = 0; count < m; ++count) {
    std::size_t x = identity;
    for (std::size_t i = 0; i < r; ++i)
      for (std::int64_t k = 0; k < c[i]; ++k) x = mul(x, out.generators[i]);
    if (hit[x]) throw Error(ErrorCode::NotAGroup, "coordinates are not unique");
    hit[x] = 1;
    out.coords[x] = c;
    for (std::size_t i = 0; i < r; ++i) {
      if (++c[i] < out.orders[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

std::int64_t AbelianStructure::quotient_order() const {
  std::int64_t m = 1;
  for (std::int64_t d : divisors) m *= d;
  return m;
}

AbelianStructure abelianize(const Subgroup& g) {
  if (g.order() > kMaxAbelianize) throw Error(ErrorCode::BoundExceeded, "abelianization limited to 10^6 elements");
  AbelianStructure out;
  out.group = g;
  out.derived = g.derived();
  const Subgroup& d = out.derived;

  // Label the cosets gD in sorted order.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), kNone);
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (label[i] != kNone) continue;
    const std::size_t id = rep.size();
    rep.push_back(i);
    for (const Mat& h : d.elements()) label[g.index(g.element(i) * h)] = id;
  }
  const std::size_t m = rep.size();
  auto mul = [&](std::size_t a, std::size_t b) { return label[g.index(g.element(rep[a]) * g.element(rep[b]))]; };
  const std::size_t identity = label[g.index(Mat::identity(g.ring(), g.degree()))];

  CyclicDecomposition cd = decompose_abelian(m, identity, mul);
  const std::size_t r = cd.orders.size();
  // Reverse into an ascending divisibility chain.
  for (std::size_t i = r; i-- > 0;) {
    out.divisors.push_back(cd.orders[i]);
    out.basis.push_back(g.element(rep[cd.generators[i]]));
  }
  out.coords.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& c = cd.coords[label[i]];
    out.coords[i].assign(c.rbegin(), c.rend());
  }
  return out;
}

}  // namespace lol
