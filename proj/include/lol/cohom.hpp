#pragma once

// Lifting obstructions for GL_n(W_2(k)) -> GL_n(k) (GLift) and its upper
// triangular analogue (BLift). The kernel M is written additively and sits
// in GL_n(W_2(k)) as I + iota(M).
//
// Two independent deciders:
//  * bicyclic: for Z = <rho, mu> with rho^s = mu^t = [rho, mu] = 1, the class
//    is the triple (rho~^-s, mu~^t, [rho~, mu~]) modulo the boundary triples
//    (N_rho(u), N_mu(v), (rho - 1) v + (mu - 1) u);
//  * generic: a full 2-cocycle table c(g, h) on a small group, split by
//    solving c = d(phi) for a 1-cochain phi.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lol/affine.hpp"
#include "lol/character.hpp"
#include "lol/gmodule.hpp"
#include "lol/group.hpp"

namespace lol {

enum class Variant { GLift, BLift };

GModule variant_module(const Ring& fq, int n, Variant v);
const char* variant_name(Variant v);

struct BicyclicSpec {
  Mat rho, mu;
  std::int64_t s = 1, t = 1;

  // Orders are computed; throws NotCommuting, and NotBicyclic when
  // <rho, mu> has fewer than s * t elements.
  static BicyclicSpec make(const Mat& rho, const Mat& mu);
  // Checks the given orders are the exact orders (WrongOrders).
  static BicyclicSpec make(const Mat& rho, const Mat& mu, std::int64_t s, std::int64_t t);
  const Ring& ring() const { return rho.ring(); }
  int degree() const { return rho.rows(); }
};

struct BicyclicTriple {
  Mat a, b, c;
  bool operator==(const BicyclicTriple& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Teichmuller lifts of rho and mu.
BicyclicTriple glift_triple(const BicyclicSpec& z, Variant v);
// The triple for arbitrary lifts over W_2(k) of rho and mu.
BicyclicTriple triple_from_lifts(const BicyclicSpec& z, const Mat& rho_lift, const Mat& mu_lift, Variant v);

// Which of the four cocycle equations fail; empty when (a, b, c) is in Z^2.
std::vector<std::string> bicyclic_cocycle_failures(const BicyclicSpec& z, const BicyclicTriple& x, Variant v);
BicyclicTriple bicyclic_boundary(const BicyclicSpec& z, const Mat& u, const Mat& v);
BicyclicTriple operator+(const BicyclicTriple& x, const BicyclicTriple& y);

struct ObstructionResult {
  bool cocycle_valid = false;
  bool splits = false;
  // Bicyclic witness: (u, v) with boundary(u, v) = triple.
  std::optional<Mat> u, v;
  // Generic witness: phi and the corrected section, indexed like the group.
  std::vector<Mat> phi;
  std::vector<Mat> section;
  // When infeasible: y with y A = 0 and y b != 0 on the solver's equations.
  std::vector<CertificateTerm> certificate;
  int unknown_coords = 0;
  int equation_coords = 0;
  int rank = 0;
};

// The affine system (N_rho(u), N_mu(v), (rho - 1) v + (mu - 1) u) = triple.
AffineSystem bicyclic_system(const BicyclicSpec& z, const BicyclicTriple& x, Variant v);
// Throws NotACocycle when the triple fails the Z^2 equations.
ObstructionResult bicyclic_split(const BicyclicSpec& z, const BicyclicTriple& x, Variant v);

struct CocycleTable {
  Subgroup group;
  GModule module;
  std::vector<Mat> table;  // c(g_i, g_j) at i * |G| + j
  // Section over W_2 the table was read from, when there is one.
  std::vector<Mat> lifts;

  const Mat& at(std::size_t i, std::size_t j) const { return table[i * group.order() + j]; }
  const Mat& operator()(const Mat& g, const Mat& h) const { return at(group.index(g), group.index(h)); }
};

inline constexpr std::size_t kMaxCocycleGroup = 64;
inline constexpr int kMaxCocycleDim = 32;

// c(g, h) = kernel part of tau(g) tau(h) tau(gh)^-1, tau the Teichmuller
// section. BLift needs an upper triangular group.
CocycleTable glift_cocycle(const Subgroup& g, Variant v);
// (g, h) -> carry(u; g, h) a, the integer u~(g) + u~(h) - u~(gh) with
// representatives in [0, 1). a must be fixed by the domain of u.
CocycleTable cup_carry_cocycle(const Character& u, const Mat& a, const GModule& module);
// First failing triple of the identity g.c(h,k) - c(gh,k) + c(g,hk) - c(g,h) = 0.
std::optional<std::string> cocycle_failure(const CocycleTable& c);
bool is_normalized(const CocycleTable& c);
// Solves c(g, h) = g.phi(h) - phi(gh) + phi(g). With lifts present the
// section g -> (I - iota(phi(g))) tau(g) is checked to be a homomorphism on
// every pair; otherwise phi is substituted back on every pair.
ObstructionResult generic_split(const CocycleTable& c);

}  // namespace lol
