#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lhl/inversion.hpp"
#include "lhl/polynomial.hpp"
#include "lhl/poset.hpp"
#include "lhl/simplex.hpp"

namespace lhl {

// O(P, s) = { x : 0 <= x_i <= s_i, x_i / s_i <= x_j / s_j whenever i <= j in P }.
class OrderPolytope {
 public:
  OrderPolytope(Poset poset, SSequence s);

  const Poset& poset() const noexcept { return poset_; }
  const SSequence& s() const noexcept { return s_; }
  std::size_t dimension() const noexcept { return poset_.size(); }

  // Membership of an integer point in the t-th dilate.
  bool contains(const std::vector<std::int64_t>& x, std::int64_t t = 1) const;

 private:
  Poset poset_;
  SSequence s_;
};

inline constexpr std::int64_t kDefaultEhrhartCap = 100'000'000;

// |tO cap Z^n| by depth-first search along the natural labeling.
BigInt count_dilate_points(const OrderPolytope& o, std::int64_t t);
// Same count by scanning the whole box; throws TooLarge past cap.
BigInt count_dilate_points_naive(const OrderPolytope& o, std::int64_t t,
                                 std::int64_t cap = kDefaultEhrhartCap);

// h* from L(0), ..., L(n). Throws TooLarge when prod (n s_i + 1) exceeds cap.
IntPolynomial ehrhart_hstar(const OrderPolytope& o, std::int64_t cap = kDefaultEhrhartCap);

}  // namespace lhl
