#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lhl/inversion.hpp"
#include "lhl/polynomial.hpp"

namespace lhl {

// A permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);
  // Parses one-line notation: "34521" for n <= 9, or whitespace/comma separated values.
  static Permutation parse(std::string_view text);
  // Inverse of lehmer_code(): t_i = #{j > i : pi_j < pi_i}.
  static Permutation from_lehmer_code(const std::vector<int>& code);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<int>& values() const noexcept { return values_; }
  // 1-based: pi(i) for i in [n].
  int operator()(std::size_t i) const { return values_[i - 1]; }

  std::vector<int> lehmer_code() const;
  // Cycles, each starting at its least element, sorted by that element.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

int descent_count(const Permutation& p);
int excedance_count(const Permutation& p);
bool is_derangement(const Permutation& p);

inline constexpr int kDefaultMaxPermutationN = 9;

// Visits all n! permutations in lexicographic order. Throws TooLarge if n > max_n.
template <typename Visitor>
void for_each_permutation(std::size_t n, Visitor&& visit, int max_n = kDefaultMaxPermutationN);

// A_n(z) over descents, and d_n(z) over excedances of derangements.
IntPolynomial eulerian_poly(std::size_t n, int max_n = kDefaultMaxPermutationN);
IntPolynomial derangement_poly(std::size_t n, int max_n = kDefaultMaxPermutationN);

// The cycle-building bijection from restricted (2,3,...,n)-inversion sequences
// onto derangements of [n], sending descents to excedances.
Permutation inversion_to_derangement(const InversionSequence& e);
InversionSequence derangement_to_inversion(const Permutation& p);

// s = (2, 3, ..., n), the bound used by the two maps above. Requires n >= 2.
SSequence derangement_bound(std::size_t n);

void check_permutation_size(std::size_t n, int max_n);

template <typename Visitor>
void for_each_permutation(std::size_t n, Visitor&& visit, int max_n) {
  check_permutation_size(n, max_n);
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  do {
    visit(static_cast<const std::vector<int>&>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace lhl
