#include "lol/cohom.hpp"

namespace lol {

GModule variant_module(const Ring& fq, int n, Variant v) {
  return v == Variant::BLift ? GModule::upper(fq, n) : GModule::full(fq, n);
}

const char* variant_name(Variant v) { return v == Variant::BLift ? "blift" : "glift"; }

namespace {

bool upper_triangular(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Module action of g on m, and the operators built from it.
struct Ops {
  GModule mod;
  Mat rho, mu;
  std::int64_t s, t;

  Mat act(const Mat& g, const Mat& m) const { return mod.act(g, m); }
  Mat norm(const Mat& g, std::int64_t k, const Mat& m) const {
    Mat sum = mod.zero(), x = m;
    for (std::int64_t i = 0; i < k; ++i) {
      sum = sum + x;
      x = act(g, x);
    }
    return sum;
  }
  Mat n_rho(const Mat& m) const { return norm(rho, s, m); }
  Mat n_mu(const Mat& m) const { return norm(mu, t, m); }
  Mat rho_minus_1(const Mat& m) const { return act(rho, m) - m; }
  Mat mu_minus_1(const Mat& m) const { return act(mu, m) - m; }
};

Ops ops(const BicyclicSpec& z, Variant v) {
  return Ops{variant_module(z.ring(), z.degree(), v), z.rho, z.mu, z.s, z.t};
}

}  // namespace

BicyclicSpec BicyclicSpec::make(const Mat& rho, const Mat& mu) {
  return make(rho, mu, mat_order(rho), mat_order(mu));
}

BicyclicSpec BicyclicSpec::make(const Mat& rho, const Mat& mu, std::int64_t s, std::int64_t t) {
  if (!rho.ring().is_field() || rho.ring() != mu.ring() || !rho.is_square() || rho.rows() != mu.rows())
    throw Error(ErrorCode::DimensionMismatch, "rho and mu must be square over the same field");
  if (rho * mu != mu * rho) throw Error(ErrorCode::NotCommuting, "rho and mu do not commute");
  if (mat_order(rho) != s || mat_order(mu) != t)
    throw Error(ErrorCode::WrongOrders, "given orders are not the exact orders of rho and mu");
  const Subgroup z = Subgroup::closure(rho.ring(), rho.rows(), {rho, mu});
  if (static_cast<std::int64_t>(z.order()) != s * t)
    throw Error(ErrorCode::NotBicyclic, "<rho, mu> is smaller than Z/s x Z/t");
  return BicyclicSpec{rho, mu, s, t};
}

BicyclicTriple triple_from_lifts(const BicyclicSpec& z, const Mat& rho_lift, const Mat& mu_lift, Variant v) {
  if (reduce_witt(rho_lift) != z.rho || reduce_witt(mu_lift) != z.mu)
    throw Error(ErrorCode::KernelEscape, "lifts do not reduce to rho and mu");
  if (v == Variant::BLift && (!upper_triangular(z.rho) || !upper_triangular(z.mu)))
    throw Error(ErrorCode::NotTriangular, "BLift needs upper triangular rho and mu");
  BicyclicTriple x{kernel_part(mat_inv(rho_lift.pow(z.s))), kernel_part(mu_lift.pow(z.t)),
                   kernel_part(commutator(rho_lift, mu_lift))};
  if (v == Variant::BLift) {
    const GModule t = GModule::upper(z.ring(), z.degree());
    if (!t.contains(x.a) || !t.contains(x.b) || !t.contains(x.c))
      throw Error(ErrorCode::KernelEscape, "triple left the upper triangular module");
  }
  return x;
}

BicyclicTriple glift_triple(const BicyclicSpec& z, Variant v) {
  if (v == Variant::BLift && (!upper_triangular(z.rho) || !upper_triangular(z.mu)))
    throw Error(ErrorCode::NotTriangular, "BLift needs upper triangular rho and mu");
  return triple_from_lifts(z, teichmuller_lift(z.rho), teichmuller_lift(z.mu), v);
}

std::vector<std::string> bicyclic_cocycle_failures(const BicyclicSpec& z, const BicyclicTriple& x, Variant v) {
  const Ops o = ops(z, v);
  std::vector<std::string> bad;
  if (!o.mod.contains(x.a) || !o.mod.contains(x.b) || !o.mod.contains(x.c)) bad.push_back("triple not in module");
  if (o.act(z.rho, x.a) != x.a) bad.push_back("rho(a) = a");
  if (o.act(z.mu, x.b) != x.b) bad.push_back("mu(b) = b");
  if (o.n_rho(x.c) != o.mu_minus_1(x.a)) bad.push_back("N_rho(c) = (mu-1)a");
  if (o.n_mu(x.c) != o.rho_minus_1(x.b)) bad.push_back("N_mu(c) = (rho-1)b");
  return bad;
}

BicyclicTriple bicyclic_boundary(const BicyclicSpec& z, const Mat& u, const Mat& v) {
  const Ops o = ops(z, Variant::GLift);
  return {o.n_rho(u), o.n_mu(v), o.rho_minus_1(v) + o.mu_minus_1(u)};
}

BicyclicTriple operator+(const BicyclicTriple& x, const BicyclicTriple& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

AffineSystem bicyclic_system(const BicyclicSpec& z, const BicyclicTriple& x, Variant v) {
  const Ops o = ops(z, v);
  const int n = z.degree();
  UnknownSpec unknown{n, n, {}};
  if (v == Variant::BLift)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) unknown.support.emplace_back(i, j);
  AffineSystem sys{z.ring(), {unknown, unknown}, {}};
  sys.equations.push_back({"N_rho(u) = a", {{0, [o](const Mat& m) { return o.n_rho(m); }}}, x.a});
  sys.equations.push_back({"N_mu(v) = b", {{1, [o](const Mat& m) { return o.n_mu(m); }}}, x.b});
  sys.equations.push_back({"(rho-1)v + (mu-1)u = c",
                           {{1, [o](const Mat& m) { return o.rho_minus_1(m); }},
                            {0, [o](const Mat& m) { return o.mu_minus_1(m); }}},
                           x.c});
  return sys;
}

ObstructionResult bicyclic_split(const BicyclicSpec& z, const BicyclicTriple& x, Variant v) {
  const auto bad = bicyclic_cocycle_failures(z, x, v);
  if (!bad.empty()) throw Error(ErrorCode::NotACocycle, "triple fails " + bad.front());
  const AffineSystem sys = bicyclic_system(z, x, v);
  const AffineResult res = solve_affine(sys);
  ObstructionResult out;
  out.cocycle_valid = true;
  out.splits = res.feasible;
  out.unknown_coords = res.unknown_coords;
  out.equation_coords = res.equation_coords;
  out.rank = res.rank;
  if (res.feasible) {
    out.u = res.solution[0];
    out.v = res.solution[1];
    if (!(bicyclic_boundary(z, *out.u, *out.v) == x))
      throw Error(ErrorCode::KernelEscape, "bicyclic witness failed re-substitution");
  } else {
    out.certificate = res.certificate;
    if (!check_certificate(sys, out.certificate))
      throw Error(ErrorCode::KernelEscape, "infeasibility certificate failed re-check");
  }
  return out;
}

}  // namespace lol
