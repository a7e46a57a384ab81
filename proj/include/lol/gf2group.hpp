#pragma once

// Matrix groups over F_2 stored as bit-packed words. For n <= 5 membership is
// a bitmap over the 2^(n*n) compact codes, which is what makes the closure of
// GL_5(F_2) (about 10^7 elements) cheap.

#include <cstddef>
#include <memory>
#include <vector>

#include "lol/gf2.hpp"
#include "lol/group.hpp"

namespace lol::gf2 {

class Group {
 public:
  static Group closure(const std::vector<Word>& gens, int n, std::size_t bound = max_group_order());

  int degree() const { return d_->n; }
  std::size_t order() const { return d_->elems.size(); }
  const std::vector<Word>& generators() const { return d_->gens; }
  // Sorted by compact code.
  const std::vector<Word>& elements() const { return d_->elems; }
  bool contains(Word w) const;

  // Normal closure of the commutators of generators; stops early once it
  // reaches the whole group.
  Group derived() const;
  bool is_perfect() const { return derived().order() == order(); }

 private:
  struct Data {
    int n = 0;
    std::vector<Word> gens;
    std::vector<Word> elems;
    std::vector<std::uint64_t> bitmap;  // n <= 5
  };
  std::shared_ptr<const Data> d_;
};

// I + E_12 and the cyclic permutation e_j -> e_{j+1}.
std::vector<Word> gl_generators(int n);
// |GL_n(F_2)| from the product formula.
std::uint64_t gl_order(int n);

}  // namespace lol::gf2
