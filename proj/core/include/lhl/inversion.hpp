#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhl/error.hpp"
#include "lhl/polynomial.hpp"

namespace lhl {

// A finite sequence s = (s_1, ..., s_n) of positive integers, n >= 1.
// Statistics read it through the padded view s_0 = s_{n+1} = 1.
class SSequence {
 public:
  explicit SSequence(std::vector<std::int64_t> entries);

  // Parses "2,3,4" (whitespace around entries is tolerated).
  static SSequence parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  // 1-based access: s(1) .. s(n).
  std::int64_t operator()(std::size_t i) const { return entries_[i - 1]; }
  // Padded access for i in [0, n+1].
  std::int64_t padded(std::size_t i) const {
    return (i == 0 || i == entries_.size() + 1) ? 1 : entries_[i - 1];
  }
  BigInt product() const;
  std::string to_string() const;

  friend bool operator==(const SSequence&, const SSequence&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// e = (e_1, ..., e_n) with 0 <= e_i < s_i.
class InversionSequence {
 public:
  InversionSequence(std::vector<std::int64_t> entries, SSequence bound);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  const SSequence& bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return entries_.size(); }
  // Padded access for i in [0, n+1].
  std::int64_t padded(std::size_t i) const {
    return (i == 0 || i == entries_.size() + 1) ? 0 : entries_[i - 1];
  }

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;

 private:
  std::vector<std::int64_t> entries_;
  SSequence bound_;
};

enum class Statistic { Ascent, Descent };

inline constexpr std::int64_t kDefaultEnumerationCap = 100'000'000;

namespace detail {

// Compares e_i/s_i with e_{i+1}/s_{i+1} on the padded view, i in [0, n].
// Returns -1, 0, +1.
inline int compare_step(std::span<const std::int64_t> e, const SSequence& s, std::size_t i) {
  const std::size_t n = e.size();
  const std::int64_t lhs_num = (i == 0) ? 0 : e[i - 1];
  const std::int64_t rhs_num = (i == n) ? 0 : e[i];
  const std::int64_t lhs = lhs_num * s.padded(i + 1);
  const std::int64_t rhs = rhs_num * s.padded(i);
  return (lhs < rhs) ? -1 : (lhs > rhs ? 1 : 0);
}

void check_enumeration_size(const SSequence& s, std::int64_t cap);

}  // namespace detail

// Number of ascents / descents of e (given as e_1..e_n) over i in [0, n].
int statistic_count(std::span<const std::int64_t> e, const SSequence& s, Statistic stat);
inline int ascent_count(std::span<const std::int64_t> e, const SSequence& s) {
  return statistic_count(e, s, Statistic::Ascent);
}
inline int descent_count(std::span<const std::int64_t> e, const SSequence& s) {
  return statistic_count(e, s, Statistic::Descent);
}

std::vector<std::size_t> ascent_set(const InversionSequence& e);
std::vector<std::size_t> descent_set(const InversionSequence& e);

// No equal adjacent ratios anywhere on the padded view.
bool is_restricted(std::span<const std::int64_t> e, const SSequence& s);

// Visits every s-inversion sequence in lexicographic order.
template <typename Visitor>
void for_each_inversion_sequence(const SSequence& s, Visitor&& visit,
                                 std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_enumeration_size(s, cap);
  const std::size_t n = s.size();
  std::vector<std::int64_t> e(n, 0);
  while (true) {
    visit(std::span<const std::int64_t>(e));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++e[i] < s(i + 1)) break;
      e[i] = 0;
      if (i == 0) return;
    }
  }
}

// Visits the restricted sequences (no padded ratio tie) in lexicographic
// order. Prefixes are pruned as soon as a tie appears.
template <typename Visitor>
void for_each_restricted_sequence(const SSequence& s, Visitor&& visit) {
  const std::size_t n = s.size();
  std::vector<std::int64_t> e(n, 0);
  // Position `depth` (0-based) is being assigned; ties between entry depth-1
  // and depth are checked as soon as entry depth is known.
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (e[n - 1] != 0) visit(std::span<const std::int64_t>(e));
      return;
    }
    const std::int64_t prev_num = depth == 0 ? 0 : e[depth - 1];
    const std::int64_t prev_den = depth == 0 ? 1 : s(depth);
    const std::int64_t den = s(depth + 1);
    for (std::int64_t v = 0; v < den; ++v) {
      if (prev_num * den == v * prev_den) continue;
      e[depth] = v;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
}

std::vector<InversionSequence> enumerate_all(const SSequence& s,
                                             std::int64_t cap = kDefaultEnumerationCap);
std::vector<InversionSequence> enumerate_restricted(const SSequence& s);

// E_n^s: ascent (or descent) generating polynomial over all s-inversion sequences.
IntPolynomial s_eulerian(const SSequence& s, Statistic stat = Statistic::Ascent);

// f(e)_i = -e_i mod s_i.
InversionSequence complement_involution(const InversionSequence& e);

// d_n^s by enumerating the restricted set.
IntPolynomial s_derangement_enum(const SSequence& s, Statistic stat = Statistic::Ascent);

// d_n^s via the three-term recursion on the family p_{n,k}.
IntPolynomial s_derangement_recursive(const SSequence& s);

// The family (p_{n,k})_{k=0}^{s_n - 1}; consecutive members interlace.
std::vector<IntPolynomial> interlacing_certificate(const SSequence& s);

}  // namespace lhl
