#pragma once

// Groups written as a matrix pattern with free parameters, e.g. the upper
// unitriangular 3x3 group "1,a,b;0,1,c;0,0,1". Entries are sums of terms;
// a term is a field element code, a product of letters, or "*" (a fresh
// parameter). Every assignment of field values to the parameters is tried
// and the invertible results are collected.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lol/group.hpp"

namespace lol {

struct Shape {
  Ring ring;
  int n = 0;
  std::vector<std::string> params;  // letters sorted, then "*1", "*2", ...
  // entry -> sum of terms; term -> (constant code, parameter indices multiplied)
  struct Term {
    Scalar constant = 1;
    std::vector<int> factors;
  };
  std::vector<std::vector<std::vector<Term>>> entries;

  static Shape parse(const Ring& fq, std::string_view text);
  Mat evaluate(const std::vector<Scalar>& values) const;
  // Every invertible evaluation, deduplicated and sorted.
  std::vector<Mat> invertible_points(std::size_t candidate_bound = std::size_t{1} << 22) const;
};

// The invertible points of the shape; throws NotAGroup if they are not closed.
Subgroup shape_group(const Ring& fq, std::string_view text);
// Whether g matches the shape for some parameter values.
bool matches_shape(const Shape& s, const Mat& g);

}  // namespace lol
