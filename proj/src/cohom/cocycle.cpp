#include <algorithm>

#include "lol/cohom.hpp"

namespace lol {

namespace {

bool upper_triangular(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Twisted conjugation by each element, with the twist and its inverse cached.
struct Actions {
  std::vector<Mat> twist, twist_inv;
  explicit Actions(const Subgroup& g) {
    for (const Mat& x : g.elements()) {
      twist.push_back(frobenius_twist(x));
      twist_inv.push_back(mat_inv(twist.back()));
    }
  }
  Mat act(std::size_t i, const Mat& m) const { return twist[i] * m * twist_inv[i]; }
};

void require_small(const Subgroup& g) {
  if (g.order() > kMaxCocycleGroup)
    throw Error(ErrorCode::BoundExceeded, "cocycle tables are limited to groups of order 64");
}

}  // namespace

CocycleTable glift_cocycle(const Subgroup& g, Variant v) {
  require_small(g);
  if (v == Variant::BLift)
    for (const Mat& x : g.generators())
      if (!upper_triangular(x)) throw Error(ErrorCode::NotTriangular, "BLift needs an upper triangular group");
  CocycleTable c{g, variant_module(g.ring(), g.degree(), v), {}, {}};
  const std::size_t n = g.order();
  for (const Mat& x : g.elements()) c.lifts.push_back(teichmuller_lift(x));
  std::vector<Mat> inv_lifts;
  for (const Mat& l : c.lifts) inv_lifts.push_back(mat_inv(l));
  c.table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = g.index(g.element(i) * g.element(j));
      Mat x = kernel_part(c.lifts[i] * c.lifts[j] * inv_lifts[k]);
      c.module.require(x);
      c.table.push_back(std::move(x));
    }
  return c;
}

CocycleTable cup_carry_cocycle(const Character& u, const Mat& a, const GModule& module) {
  const Subgroup& h = u.domain();
  require_small(h);
  module.require(a);
  if (!module.is_fixed(h, a)) throw Error(ErrorCode::NotFixedBySubgroup, "a is not fixed by the domain of u");
  CocycleTable c{h, module, {}, {}};
  const std::size_t n = h.order();
  const Mat zero = module.zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Frac x = u.values()[i], y = u.values()[j];
      // Representatives lie in [0, 1), so the sum wraps at most once.
      const bool carry = x.num * y.den + y.num * x.den >= x.den * y.den;
      c.table.push_back(carry ? a : zero);
    }
  return c;
}

std::optional<std::string> cocycle_failure(const CocycleTable& c) {
  const Subgroup& g = c.group;
  const std::size_t n = g.order();
  const Actions act(g);
  std::vector<std::size_t> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = g.index(g.element(i) * g.element(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Mat lhs = act.act(i, c.at(j, k)) + c.at(i, prod[j * n + k]);
        const Mat rhs = c.at(prod[i * n + j], k) + c.at(i, j);
        if (lhs != rhs)
          return "cocycle identity fails at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k) + ")";
      }
  return std::nullopt;
}

bool is_normalized(const CocycleTable& c) {
  const std::size_t e = c.group.index(Mat::identity(c.group.ring(), c.group.degree()));
  for (std::size_t i = 0; i < c.group.order(); ++i)
    if (!c.at(e, i).is_zero() || !c.at(i, e).is_zero()) return false;
  return true;
}

ObstructionResult generic_split(const CocycleTable& c) {
  const Subgroup& g = c.group;
  require_small(g);
  const int fp_dim = c.module.dimension() * static_cast<int>(g.ring().field()->m());
  if (fp_dim > kMaxCocycleDim) throw Error(ErrorCode::BoundExceeded, "module dimension above 32 over F_p");
  if (auto bad = cocycle_failure(c)) throw Error(ErrorCode::NotACocycle, *bad);

  const std::size_t n = g.order();
  const int deg = g.degree();
  const Actions act(g);
  const std::size_t e = g.index(Mat::identity(g.ring(), deg));

  // Every pair for small tables. Otherwise h runs over 1 and the generators:
  // a normalized cocycle that is a coboundary on those pairs is one
  // everywhere, since c - d(phi) then satisfies c'(g, hk) = c'(g, h).
  std::vector<std::size_t> hs;
  if (n * n * static_cast<std::size_t>(fp_dim) <= 20000) {
    for (std::size_t j = 0; j < n; ++j) hs.push_back(j);
  } else {
    hs.push_back(e);
    for (const Mat& s : g.generators()) hs.push_back(g.index(s));
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  }

  UnknownSpec unknown{deg, deg, {}};
  if (c.module.kind() == GModule::Kind::Upper)
    for (int i = 0; i < deg; ++i)
      for (int j = i; j < deg; ++j) unknown.support.emplace_back(i, j);
  AffineSystem sys{g.ring(), std::vector<UnknownSpec>(n, unknown), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : hs) {
      const std::size_t k = g.index(g.element(i) * g.element(j));
      const Mat t = act.twist[i], ti = act.twist_inv[i];
      sys.equations.push_back({"c(" + std::to_string(i) + "," + std::to_string(j) + ")",
                               {{static_cast<int>(j), [t, ti](const Mat& m) { return t * m * ti; }},
                                {static_cast<int>(k), [](const Mat& m) { return -m; }},
                                {static_cast<int>(i), [](const Mat& m) { return m; }}},
                               c.at(i, j)});
    }
  const AffineResult res = solve_affine(sys);
  ObstructionResult out;
  out.cocycle_valid = true;
  out.splits = res.feasible;
  out.unknown_coords = res.unknown_coords;
  out.equation_coords = res.equation_coords;
  out.rank = res.rank;
  if (!res.feasible) {
    out.certificate = res.certificate;
    if (!check_certificate(sys, out.certificate))
      throw Error(ErrorCode::KernelEscape, "infeasibility certificate failed re-check");
    return out;
  }
  out.phi = res.solution;
  // Witness checks on every pair, not only the solved ones.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = g.index(g.element(i) * g.element(j));
      if (act.act(i, out.phi[j]) - out.phi[k] + out.phi[i] != c.at(i, j))
        throw Error(ErrorCode::KernelEscape, "1-cochain fails on a pair outside the solved set");
    }
  if (!c.lifts.empty()) {
    for (std::size_t i = 0; i < n; ++i) out.section.push_back(kernel_element(-out.phi[i]) * c.lifts[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = g.index(g.element(i) * g.element(j));
        if (out.section[i] * out.section[j] != out.section[k])
          throw Error(ErrorCode::KernelEscape, "corrected section is not a homomorphism");
      }
  }
  return out;
}

}  // namespace lol
