#include <deque>

#include "lol/group.hpp"

namespace lol {

namespace {

void require_sub(const Subgroup& big, const Subgroup& sub) {
  if (!sub.is_subgroup_of(big)) throw Error(ErrorCode::NotSubgroup, "not a subgroup of the ambient group");
}

// Orbits of big's elements under the moves x -> l x (l in left) and
// x -> x r (r in right). The orbit of the identity comes first and is
// represented by it; every other orbit by its least element, which is the
// first one met when scanning in sorted order.
std::vector<Mat> orbit_reps(const Subgroup& big, const std::vector<Mat>& left, const std::vector<Mat>& right) {
  std::vector<char> seen(big.order(), 0);
  std::vector<Mat> reps;
  std::deque<std::size_t> queue;
  const std::size_t one = big.index(Mat::identity(big.ring(), big.degree()));
  for (std::size_t step = 0; step <= big.order(); ++step) {
    const std::size_t i = step == 0 ? one : step - 1;
    if (seen[i]) continue;
    reps.push_back(big.element(i));
    seen[i] = 1;
    queue.push_back(i);
    while (!queue.empty()) {
      const Mat x = big.element(queue.front());
      queue.pop_front();
      auto visit = [&](const Mat& y) {
        std::size_t j = big.index(y);
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      };
      for (const Mat& l : left) visit(l * x);
      for (const Mat& r : right) visit(x * r);
    }
  }
  return reps;
}

}  // namespace

std::vector<Mat> coset_reps(const Subgroup& big, const Subgroup& sub) {
  require_sub(big, sub);
  return orbit_reps(big, {}, sub.generators());
}

std::vector<Mat> right_coset_reps(const Subgroup& big, const Subgroup& sub) {
  require_sub(big, sub);
  return orbit_reps(big, sub.generators(), {});
}

std::vector<Mat> double_coset_reps(const Subgroup& big, const Subgroup& left, const Subgroup& right) {
  require_sub(big, left);
  require_sub(big, right);
  return orbit_reps(big, left.generators(), right.generators());
}

bool is_sylow2(const Subgroup& g, const Subgroup& p) {
  require_sub(g, p);
  std::size_t order = p.order();
  if ((order & (order - 1)) != 0) return false;
  return (g.order() / order) % 2 == 1;
}

std::size_t sylow2_count(const Subgroup& g, const Subgroup& p) {
  if (!is_sylow2(g, p)) throw Error(ErrorCode::NotSubgroup, "not a Sylow 2-subgroup");
  return g.order() / p.normalizer_in(g).order();
}

}  // namespace lol
