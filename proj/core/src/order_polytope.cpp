#include "lhl/order_polytope.hpp"

#include <string>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {

OrderPolytope::OrderPolytope(Poset poset, SSequence s) : poset_(std::move(poset)), s_(std::move(s)) {
  if (s_.size() != poset_.size()) {
    throw Error(ErrorKind::InvalidArgument, "s must have one entry per poset element");
  }
}

bool OrderPolytope::contains(const std::vector<std::int64_t>& x, std::int64_t t) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i - 1] < 0 || x[i - 1] > t * s_(i)) return false;
  }
  for (const auto& [a, b] : poset_.covers()) {
    const auto i = static_cast<std::size_t>(a);
    const auto j = static_cast<std::size_t>(b);
    if (s_(j) * x[i - 1] > s_(i) * x[j - 1]) return false;
  }
  return true;
}

BigInt count_dilate_points(const OrderPolytope& o, std::int64_t t) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "dilation factor must be nonnegative");
  const std::size_t n = o.dimension();
  if (n == 0) return 1;
  const SSequence& s = o.s();
  // Lower covers of each element; labels form a linear extension, so they are
  // assigned before the element itself.
  std::vector<std::vector<std::size_t>> below(n + 1);
  for (const auto& [a, b] : o.poset().covers()) below[static_cast<std::size_t>(b)].push_back(static_cast<std::size_t>(a));
  std::vector<std::int64_t> x(n + 1, 0);
  std::int64_t count = 0;
  auto lower_bound = [&](std::size_t j) {
    std::int64_t lo = 0;
    for (const std::size_t i : below[j]) {
      // x_j >= ceil(s_j x_i / s_i).
      const std::int64_t num = s(j) * x[i];
      lo = std::max(lo, (num + s(i) - 1) / s(i));
    }
    return lo;
  };
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    const std::int64_t lo = lower_bound(j);
    const std::int64_t hi = t * s(j);
    if (lo > hi) return;
    if (j == n) {
      count += hi - lo + 1;
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[j] = v;
      self(self, j + 1);
    }
  };
  recurse(recurse, 1);
  return BigInt(static_cast<long>(count));
}

BigInt count_dilate_points_naive(const OrderPolytope& o, std::int64_t t, std::int64_t cap) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "dilation factor must be nonnegative");
  const std::size_t n = o.dimension();
  BigInt box = 1;
  for (std::size_t i = 1; i <= n; ++i) box *= t * o.s()(i) + 1;
  if (box > cap) throw Error(ErrorKind::TooLarge, "box scan exceeds cap " + std::to_string(cap));
  std::vector<std::int64_t> x(n, 0);
  std::int64_t count = 0;
  while (true) {
    if (o.contains(x, t)) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++x[i] <= t * o.s()(i + 1)) break;
      x[i] = 0;
    }
    if (i == n) break;
  }
  return BigInt(static_cast<long>(count));
}

IntPolynomial ehrhart_hstar(const OrderPolytope& o, std::int64_t cap) {
  const std::size_t n = o.dimension();
  BigInt loop = 1;
  for (std::size_t i = 1; i <= n; ++i) loop *= static_cast<long>(n) * o.s()(i) + 1;
  if (loop > cap) {
    throw Error(ErrorKind::TooLarge, "prod (n s_i + 1) = " + loop.get_str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<BigInt> counts(n + 1);
  for (std::size_t t = 0; t <= n; ++t) counts[t] = count_dilate_points(o, static_cast<std::int64_t>(t));
  // h*_i = sum_{j <= i} (-1)^j C(n+1, j) L(i - j).
  std::vector<BigInt> h(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt binomial = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      if (j > 0) binomial = binomial * static_cast<long>(n + 2 - j) / static_cast<long>(j);
      const BigInt term = binomial * counts[i - j];
      if (j % 2 == 0) {
        h[i] += term;
      } else {
        h[i] -= term;
      }
    }
    if (h[i] < 0) throw Error(ErrorKind::Internal, "negative h* coefficient");
  }
  IntPolynomial result(std::move(h));
  BigInt expected = static_cast<long>(o.poset().linear_extension_count());
  expected *= o.s().product();
  if (result.evaluate(BigInt(1)) != expected) {
    throw Error(ErrorKind::Internal, "h*(1) differs from e(P) * prod s_i");
  }
  return result;
}

}  // namespace lhl
