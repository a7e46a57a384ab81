#pragma once

// Shared matrices, groups and claim helpers for the check catalog. Indices in
// E(i, j) are 1-based; shapes use the pattern syntax of shape.hpp.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lol/abelian.hpp"
#include "lol/canonical.hpp"
#include "lol/shape.hpp"
#include "lol/verify.hpp"

namespace lol::verify::fx {

const Ring& f2();
Mat E(int i, int j, int n = 5);
Mat I(int n = 5);
Mat m5(std::string_view text);
// Direct sum of Jordan blocks J_r(lambda), given as (lambda, r).
Mat jordan(const std::vector<std::pair<unsigned, int>>& blocks);
Mat perm(std::string_view cycles, int n = 5);
Mat conj(const Mat& g, const Mat& a);
Subgroup shape(std::string_view text);

const Subgroup& u5();
// Stabilizer of E15: first column e1 and last row e5.
const Subgroup& l_e15();
const GModule& m5_full();
const GModule& m5_trace_zero();

// The Klein group generated by [[I, S], [0, I]] and [[I, T], [0, I]] with
// S = I and T = [[0, 1], [1, 1]], padded by an identity block.
BicyclicSpec klein(int n);
// rho = I + x E_1n, mu = I + y E_1n.
BicyclicSpec e1n(const Ring& fq, int n, Scalar x, Scalar y);

// Claim helpers. Each records its claim and returns the computed object.
Subgroup stabilizer(Recorder& rec, const std::string& name, const Mat& a, std::string_view displayed);
Mat conjugated(Recorder& rec, std::string_view cycles, const Mat& a, const Mat& displayed);
void sylow(Recorder& rec, const std::string& name, const Subgroup& g, const Subgroup& p);
void semidirect(Recorder& rec, const std::string& name, const Subgroup& k, const Subgroup& normal,
                const Subgroup& complement);
Mat norm(Recorder& rec, const std::string& claim, const Mat& g, const Mat& m, const Mat& expected);
Mat quotient_norm(Recorder& rec, const std::string& claim, const Subgroup& big, const Subgroup& sub, const Mat& m,
                  const Mat& expected);
void commutator_is(Recorder& rec, const Mat& expected, const Mat& a, const Mat& b);
void divisors(Recorder& rec, const std::string& name, const Subgroup& g, const std::vector<std::int64_t>& expected);
// The listed coordinate characters are homomorphisms on g and give an
// isomorphism from g^ab onto (Z/2)^k.
void coordinate_basis(Recorder& rec, const std::string& name, const Subgroup& g,
                      const std::vector<std::pair<int, int>>& coords);
// Every character of h extends to k.
void characters_extend(Recorder& rec, const std::string& name, const Subgroup& h, const Subgroup& k);
// Every character of p (inside U5) is a sum of characters the projection
// formula lemmas dispose of: u_{i,i+1}, u13 and u24 when p lies in ker u23,
// u24 and u35 when p lies in ker u34.
void handled_by_u5(Recorder& rec, const std::string& name, const Subgroup& p);
void fixed_space(Recorder& rec, const std::string& name, const GModule& module, const Subgroup& g,
                 const std::vector<Mat>& expected_span);

// Number of characters in the group generated by the given value vectors.
std::size_t character_span(const std::vector<std::vector<Frac>>& gens);

json poly_list(const std::vector<Poly>& ps);

}  // namespace lol::verify::fx
