#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lhl/polynomial.hpp"

namespace lhl {

// omega_0 ... omega_n over {0, ..., r-1} with omega_0 = omega_n = 0 and no
// equal adjacent letters.
struct SmirnoffWord {
  std::vector<int> letters;

  int descent_count() const;
  int ascent_count() const;
  SmirnoffWord reversed() const;

  friend bool operator==(const SmirnoffWord&, const SmirnoffWord&) = default;
};

bool is_smirnoff_word(const std::vector<int>& letters, int r);

inline constexpr std::int64_t kDefaultSmirnoffCap = 10'000'000;

// All words of SW(n, r) in lexicographic order. Throws TooLarge past cap.
std::vector<SmirnoffWord> smirnoff_words(std::size_t n, int r, std::int64_t cap = kDefaultSmirnoffCap);

// sum over SW(n, r) of z^des.
IntPolynomial smirnoff_descent_poly(std::size_t n, int r, std::int64_t cap = kDefaultSmirnoffCap);

}  // namespace lhl
