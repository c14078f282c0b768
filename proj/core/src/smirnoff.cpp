#include "lhl/smirnoff.hpp"

#include <algorithm>
#include <string>

#include "lhl/error.hpp"

namespace lhl {

int SmirnoffWord::descent_count() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) count += letters[i] > letters[i + 1] ? 1 : 0;
  return count;
}

int SmirnoffWord::ascent_count() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) count += letters[i] < letters[i + 1] ? 1 : 0;
  return count;
}

SmirnoffWord SmirnoffWord::reversed() const {
  return SmirnoffWord{std::vector<int>(letters.rbegin(), letters.rend())};
}

bool is_smirnoff_word(const std::vector<int>& letters, int r) {
  if (letters.empty() || letters.front() != 0 || letters.back() != 0) return false;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 0 || letters[i] >= r) return false;
    if (i > 0 && letters[i] == letters[i - 1]) return false;
  }
  return true;
}

namespace {

// Calls visit(word) for every Smirnoff word of length n + 1.
template <typename Visitor>
void for_each_word(std::size_t n, int r, std::int64_t cap, Visitor&& visit) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "alphabet size must be positive");
  // (r-1)^(n-1) bounds the number of words.
  BigInt bound = 1;
  for (std::size_t i = 1; i < n; ++i) bound *= r - 1;
  if (bound > cap) throw Error(ErrorKind::TooLarge, "Smirnoff enumeration exceeds cap " + std::to_string(cap));
  std::vector<int> w(n + 1, 0);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (w[n - 1] != 0) visit(w);
      return;
    }
    for (int a = 0; a < r; ++a) {
      if (a == w[i - 1]) continue;
      w[i] = a;
      self(self, i + 1);
    }
  };
  if (n == 0) {
    visit(w);
    return;
  }
  recurse(recurse, 1);
}

}  // namespace

std::vector<SmirnoffWord> smirnoff_words(std::size_t n, int r, std::int64_t cap) {
  std::vector<SmirnoffWord> out;
  for_each_word(n, r, cap, [&](const std::vector<int>& w) { out.push_back(SmirnoffWord{w}); });
  return out;
}

IntPolynomial smirnoff_descent_poly(std::size_t n, int r, std::int64_t cap) {
  std::vector<std::int64_t> counts(n + 1, 0);
  for_each_word(n, r, cap, [&](const std::vector<int>& w) {
    ++counts[static_cast<std::size_t>(SmirnoffWord{w}.descent_count())];
  });
  return IntPolynomial::from_counts(counts);
}

}  // namespace lhl
