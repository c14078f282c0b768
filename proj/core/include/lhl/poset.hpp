#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lhl/inversion.hpp"
#include "lhl/permutation.hpp"

namespace lhl {

// Subsets of [n] as bitmasks: bit i-1 stands for element i.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxPosetSize = 20;

// A naturally labeled partial order on [n], generated by the given relations
// (which need not be covers). Every generating pair (a, b) must have a < b.
class Poset {
 public:
  Poset(std::size_t n, const std::vector<std::pair<int, int>>& relations);

  static Poset antichain(std::size_t n);
  static Poset chain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  // a <= b in the order (reflexive).
  bool leq(int a, int b) const;
  bool less(int a, int b) const { return a != b && leq(a, b); }

  // The Hasse diagram, sorted.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
  // Strict relations a < b, sorted.
  std::vector<std::pair<int, int>> relations() const;

  ElementMask up_set(int a) const { return up_[static_cast<std::size_t>(a) - 1]; }
  ElementMask down_set(int a) const { return down_[static_cast<std::size_t>(a) - 1]; }
  ElementMask full_mask() const noexcept { return n_ == 0 ? 0 : (~ElementMask{0} >> (64 - n_)); }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  bool is_filter(ElementMask f) const;
  // All up-closed subsets, ascending by (size, mask).
  std::vector<ElementMask> order_filters() const;

  // Each extension lists the elements of [n] in an order compatible with P.
  std::vector<Permutation> linear_extensions() const;
  std::size_t linear_extension_count() const;

  // Every principal down-set of a maximal element is graded.
  bool is_ranked() const;
  // rank(i) for i in [n]; throws NotRanked.
  std::vector<int> rank_function() const;

  // Induced order on the elements in keep, relabeled increasingly onto [|keep|].
  Poset induced(ElementMask keep) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  std::size_t n_;
  std::vector<ElementMask> up_;    // up_[a-1]: all b with a <= b
  std::vector<ElementMask> down_;  // down_[a-1]: all b with b <= a
  std::vector<std::pair<int, int>> covers_;
};

// s_i = rank(i) + 1. Throws NotRanked.
SSequence rank_sequence(const Poset& p);

// Every naturally labeled poset on [n] (labeled, so isomorphic copies repeat).
std::vector<Poset> naturally_labeled_posets(std::size_t n);
// One naturally labeled representative per isomorphism class, in a fixed order.
std::vector<Poset> nonisomorphic_posets(std::size_t n);

}  // namespace lhl
