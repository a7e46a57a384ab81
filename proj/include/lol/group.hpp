#pragma once

// Finite matrix groups, enumerated by breadth-first closure. Elements are kept
// sorted by their canonical encoding, so every derived choice (coset
// representatives, generating sets) is deterministic.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lol/mat.hpp"

namespace lol {

inline constexpr std::size_t kDefaultMaxGroupOrder = 20'000'000;

// kDefaultMaxGroupOrder unless LOL_MAX_GROUP is set.
std::size_t max_group_order();

class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup closure(const Ring& r, int n, const std::vector<Mat>& gens,
                          std::size_t bound = max_group_order());
  static Subgroup closure(const std::vector<Mat>& gens, std::size_t bound = max_group_order());
  // Validates that the set is a group; generators are a greedy generating set.
  static Subgroup from_elements(std::vector<Mat> elems);
  static Subgroup trivial(const Ring& r, int n);

  const Ring& ring() const { return d_->ring; }
  int degree() const { return d_->n; }
  std::size_t order() const { return d_->elems.size(); }
  const std::vector<Mat>& elements() const { return d_->elems; }
  const std::vector<Mat>& generators() const { return d_->gens; }
  const Mat& element(std::size_t i) const { return d_->elems[i]; }

  bool contains(const Mat& g) const;
  std::optional<std::size_t> index_of(const Mat& g) const;
  std::size_t index(const Mat& g) const;  // throws NotSubgroup

  bool is_subgroup_of(const Subgroup& big) const;
  bool is_normal_in(const Subgroup& big) const;
  bool is_abelian() const;
  bool same_elements(const Subgroup& o) const;
  std::int64_t exponent() const;

  Subgroup center() const;
  Subgroup derived() const;
  Subgroup intersect(const Subgroup& o) const;
  Subgroup conjugate(const Mat& g) const;  // g H g^-1
  // Elements satisfying pred; must form a subgroup.
  Subgroup filter(const std::function<bool(const Mat&)>& pred) const;
  Subgroup normalizer_in(const Subgroup& big) const;

 private:
  struct Data {
    Ring ring;
    int n = 0;
    std::vector<Mat> gens;
    std::vector<Mat> elems;
    std::unordered_map<std::string, std::size_t> index;
  };
  static Subgroup finish(Ring r, int n, std::vector<Mat> gens, std::vector<Mat> elems);

  std::shared_ptr<const Data> d_;
};

Subgroup join(const Subgroup& a, const Subgroup& b);
// Greedy: walk the elements in order and keep those outside the span so far.
std::vector<Mat> greedy_generators(const std::vector<Mat>& elems, const Ring& r, int n);

Subgroup general_linear(const Ring& fq, int n);
Subgroup unitriangular(const Ring& fq, int n);
Subgroup upper_triangular(const Ring& fq, int n);

// Left cosets gH. H itself is represented by I, every other coset by its
// element of least encoding.
std::vector<Mat> coset_reps(const Subgroup& big, const Subgroup& sub);
std::vector<Mat> right_coset_reps(const Subgroup& big, const Subgroup& sub);
// Double cosets L g R.
std::vector<Mat> double_coset_reps(const Subgroup& big, const Subgroup& left, const Subgroup& right);

bool is_sylow2(const Subgroup& g, const Subgroup& p);
// Number of Sylow 2-subgroups, via the normalizer of p.
std::size_t sylow2_count(const Subgroup& g, const Subgroup& p);

// Invertible matrices commuting with a, by solving X a = a X and keeping the
// invertible solutions.
Subgroup centralizer_of_matrix(const Mat& a, std::size_t candidate_bound = std::size_t{1} << 22);
Subgroup centralizer_in(const Subgroup& g, const Mat& x);

// g with g P g^-1 inside the upper unitriangular group; P must be a p-group.
Mat unitriangularize(const Subgroup& p);

}  // namespace lol
