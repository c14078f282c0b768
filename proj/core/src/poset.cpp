#include "lhl/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "lhl/error.hpp"

namespace lhl {

namespace {

ElementMask bit(int a) { return ElementMask{1} << (a - 1); }

}  // namespace

Poset::Poset(std::size_t n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), up_(n), down_(n) {
  if (n > kMaxPosetSize) {
    throw Error(ErrorKind::TooLarge, "posets are limited to " + std::to_string(kMaxPosetSize) + " elements");
  }
  const int size = static_cast<int>(n);
  for (int a = 1; a <= size; ++a) {
    up_[static_cast<std::size_t>(a) - 1] = bit(a);
    down_[static_cast<std::size_t>(a) - 1] = bit(a);
  }
  for (const auto& [a, b] : relations) {
    if (a < 1 || b < 1 || a > size || b > size) {
      throw Error(ErrorKind::InvalidArgument, "relation mentions an element outside [n]");
    }
    if (a >= b) {
      throw Error(ErrorKind::InvalidArgument,
                  "relation " + std::to_string(a) + " < " + std::to_string(b) + " is not naturally labeled");
    }
    up_[static_cast<std::size_t>(a) - 1] |= bit(b);
  }
  // Labels are a linear extension, so one pass from the top closes the order.
  for (int a = size; a >= 1; --a) {
    ElementMask closure = up_[static_cast<std::size_t>(a) - 1];
    for (int b = a + 1; b <= size; ++b) {
      if (closure & bit(b)) closure |= up_[static_cast<std::size_t>(b) - 1];
    }
    up_[static_cast<std::size_t>(a) - 1] = closure;
  }
  for (int a = 1; a <= size; ++a) {
    for (int b = 1; b <= size; ++b) {
      if (up_[static_cast<std::size_t>(a) - 1] & bit(b)) down_[static_cast<std::size_t>(b) - 1] |= bit(a);
    }
  }
  for (int a = 1; a <= size; ++a) {
    for (int b = a + 1; b <= size; ++b) {
      if (!less(a, b)) continue;
      bool is_cover = true;
      for (int c = a + 1; c < b && is_cover; ++c) is_cover = !(less(a, c) && less(c, b));
      if (is_cover) covers_.emplace_back(a, b);
    }
  }
}

Poset Poset::antichain(std::size_t n) { return Poset(n, {}); }

Poset Poset::chain(std::size_t n) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 1; a < static_cast<int>(n); ++a) rel.emplace_back(a, a + 1);
  return Poset(n, rel);
}

bool Poset::leq(int a, int b) const {
  if (a < 1 || b < 1 || a > static_cast<int>(n_) || b > static_cast<int>(n_)) {
    throw Error(ErrorKind::InvalidArgument, "element outside [n]");
  }
  return (up_[static_cast<std::size_t>(a) - 1] & bit(b)) != 0;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= static_cast<int>(n_); ++a) {
    for (int b = a + 1; b <= static_cast<int>(n_); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 1; a <= static_cast<int>(n_); ++a) {
    if (down_set(a) == bit(a)) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 1; a <= static_cast<int>(n_); ++a) {
    if (up_set(a) == bit(a)) out.push_back(a);
  }
  return out;
}

bool Poset::is_filter(ElementMask f) const {
  if ((f & ~full_mask()) != 0) return false;
  for (int a = 1; a <= static_cast<int>(n_); ++a) {
    if ((f & bit(a)) && (up_set(a) & ~f)) return false;
  }
  return true;
}

std::vector<ElementMask> Poset::order_filters() const {
  // Filters are unions of principal up-sets; grow them by adding any element
  // all of whose strict successors are already present.
  std::vector<ElementMask> out;
  std::vector<ElementMask> stack{0};
  std::set<ElementMask> seen{0};
  while (!stack.empty()) {
    const ElementMask f = stack.back();
    stack.pop_back();
    out.push_back(f);
    for (int a = 1; a <= static_cast<int>(n_); ++a) {
      if (f & bit(a)) continue;
      if ((up_set(a) & ~bit(a) & ~f) != 0) continue;
      const ElementMask g = f | bit(a);
      if (seen.insert(g).second) stack.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), [](ElementMask x, ElementMask y) {
    const int cx = std::popcount(x);
    const int cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });
  return out;
}

std::vector<Permutation> Poset::linear_extensions() const {
  std::vector<Permutation> out;
  std::vector<int> order;
  auto recurse = [&](auto&& self, ElementMask placed) -> void {
    if (order.size() == n_) {
      out.emplace_back(order);
      return;
    }
    for (int a = 1; a <= static_cast<int>(n_); ++a) {
      if (placed & bit(a)) continue;
      if ((down_set(a) & ~bit(a) & ~placed) != 0) continue;
      order.push_back(a);
      self(self, placed | bit(a));
      order.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::size_t Poset::linear_extension_count() const {
  // Dynamic programming over down-closed sets of placed elements.
  std::map<ElementMask, std::size_t> ways{{0, 1}};
  for (std::size_t step = 0; step < n_; ++step) {
    std::map<ElementMask, std::size_t> next;
    for (const auto& [placed, count] : ways) {
      for (int a = 1; a <= static_cast<int>(n_); ++a) {
        if (placed & bit(a)) continue;
        if ((down_set(a) & ~bit(a) & ~placed) != 0) continue;
        next[placed | bit(a)] += count;
      }
    }
    ways = std::move(next);
  }
  return ways.empty() ? 0 : ways.begin()->second;
}

namespace {

// Longest and shortest saturated chains from a minimal element up to each element.
void chain_lengths(const Poset& p, std::vector<int>& longest, std::vector<int>& shortest) {
  const std::size_t n = p.size();
  longest.assign(n, 0);
  shortest.assign(n, 0);
  std::vector<bool> has_lower(n, false);
  // Covers are sorted by their lower element, and labels are a linear extension,
  // so processing upper elements in increasing order sees finished values.
  for (int b = 1; b <= static_cast<int>(n); ++b) {
    for (const auto& [lo, hi] : p.covers()) {
      if (hi != b) continue;
      const auto li = static_cast<std::size_t>(lo) - 1;
      const auto bi = static_cast<std::size_t>(b) - 1;
      if (!has_lower[bi]) {
        longest[bi] = longest[li] + 1;
        shortest[bi] = shortest[li] + 1;
        has_lower[bi] = true;
      } else {
        longest[bi] = std::max(longest[bi], longest[li] + 1);
        shortest[bi] = std::min(shortest[bi], shortest[li] + 1);
      }
    }
  }
}

}  // namespace

bool Poset::is_ranked() const {
  std::vector<int> longest, shortest;
  chain_lengths(*this, longest, shortest);
  return longest == shortest;
}

std::vector<int> Poset::rank_function() const {
  std::vector<int> longest, shortest;
  chain_lengths(*this, longest, shortest);
  if (longest != shortest) throw Error(ErrorKind::NotRanked, "poset is not ranked");
  return longest;
}

Poset Poset::induced(ElementMask keep) const {
  std::vector<int> label(n_ + 1, 0);
  int next = 0;
  for (int a = 1; a <= static_cast<int>(n_); ++a) {
    if (keep & bit(a)) label[static_cast<std::size_t>(a)] = ++next;
  }
  std::vector<std::pair<int, int>> rel;
  for (const auto& [a, b] : relations()) {
    if ((keep & bit(a)) && (keep & bit(b))) {
      rel.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
    }
  }
  return Poset(static_cast<std::size_t>(next), rel);
}

SSequence rank_sequence(const Poset& p) {
  if (p.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty poset has no rank sequence");
  std::vector<std::int64_t> s;
  for (const int r : p.rank_function()) s.push_back(r + 1);
  return SSequence(std::move(s));
}

std::vector<Poset> naturally_labeled_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::TooLarge, "poset enumeration is limited to n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= static_cast<int>(n); ++a) {
    for (int b = a + 1; b <= static_cast<int>(n); ++b) pairs.emplace_back(a, b);
  }
  std::vector<Poset> out;
  const std::size_t total = std::size_t{1} << pairs.size();
  for (std::size_t subset = 0; subset < total; ++subset) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (subset & (std::size_t{1} << k)) rel.push_back(pairs[k]);
    }
    // Keep only transitively closed relation sets, so each order appears once.
    Poset p(n, rel);
    if (p.relations().size() == rel.size()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> nonisomorphic_posets(std::size_t n) {
  std::vector<int> perm(n);
  std::map<std::vector<std::uint8_t>, std::size_t> classes;
  std::vector<Poset> out;
  for (auto& p : naturally_labeled_posets(n)) {
    // Canonical form: lexicographically least relation matrix over all relabelings.
    const auto rel = p.relations();
    std::vector<std::uint8_t> best;
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i) + 1;
    do {
      std::vector<std::uint8_t> m(n * n, 0);
      for (const auto& [a, b] : rel) {
        m[static_cast<std::size_t>(perm[static_cast<std::size_t>(a) - 1] - 1) * n +
          static_cast<std::size_t>(perm[static_cast<std::size_t>(b) - 1] - 1)] = 1;
      }
      if (best.empty() || m < best) best = std::move(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (classes.emplace(best, out.size()).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lhl
