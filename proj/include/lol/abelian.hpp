#pragma once

// Abelianization G / [G, G] as a product of cyclic groups.

#include <cstdint>
#include <functional>
#include <vector>

#include "lol/group.hpp"

namespace lol {

struct AbelianStructure {
  Subgroup group;
  Subgroup derived;
  // d_1 | d_2 | ... | d_r, all > 1.
  std::vector<std::int64_t> divisors;
  // Elements of G whose images generate the cyclic factors, matching divisors.
  std::vector<Mat> basis;
  // Per element index of G: its residues modulo the divisors.
  std::vector<std::vector<std::int64_t>> coords;

  std::int64_t quotient_order() const;
  const std::vector<std::int64_t>& coordinates(const Mat& g) const { return coords[group.index(g)]; }
};

// Bounded by max_group_order() like closure; |G| above 10^6 throws BoundExceeded.
AbelianStructure abelianize(const Subgroup& g);

// Cyclic group orders: repeatedly split off an element of maximal order.
// `mul` and `identity` describe a finite abelian group on ids 0..m-1.
struct CyclicDecomposition {
  std::vector<std::int64_t> orders;  // descending
  std::vector<std::size_t> generators;
  std::vector<std::vector<std::int64_t>> coords;  // per id, aligned with orders
};
CyclicDecomposition decompose_abelian(std::size_t m, std::size_t identity,
                                      const std::function<std::size_t(std::size_t, std::size_t)>& mul);

}  // namespace lol
