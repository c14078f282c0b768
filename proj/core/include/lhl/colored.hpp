#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lhl/inversion.hpp"
#include "lhl/permutation.hpp"
#include "lhl/polynomial.hpp"

namespace lhl {

// An r-colored permutation (pi, c), stored flat: colors[i] is the color of pi_{i+1}.
class ColoredPermutation {
 public:
  ColoredPermutation(Permutation perm, std::vector<int> colors, int modulus);

  // Parses "2^2 1^1 3^0" (value caret color, whitespace separated).
  static ColoredPermutation parse(std::string_view text, int modulus);

  std::size_t size() const noexcept { return perm_.size(); }
  const Permutation& perm() const noexcept { return perm_; }
  const std::vector<int>& colors() const noexcept { return colors_; }
  int modulus() const noexcept { return modulus_; }
  // 1-based value and color.
  int value(std::size_t i) const { return perm_(i); }
  int color(std::size_t i) const { return colors_[i - 1]; }

  std::string to_string() const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<int> colors_;
  int modulus_;
};

// Descent at i in [n] with the convention pi_{n+1} = n+1, c_{n+1} = 0.
int colored_descent_count(const ColoredPermutation& s);
// pi_i > i, or pi_i = i with c_i > 0.
int colored_excedance_count(const ColoredPermutation& s);
// No fixed point of color 0.
bool is_colored_derangement(const ColoredPermutation& s);

inline constexpr std::int64_t kDefaultColoredCap = 10'000'000;

// Throws TooLarge when r^n * n! exceeds cap.
void check_colored_size(std::size_t n, int r, std::int64_t cap);

// Visits every element of Z_r wr S_n (permutations outer, colorings inner, both lexicographic).
template <typename Visitor>
void for_each_colored_permutation(std::size_t n, int r, Visitor&& visit,
                                  std::int64_t cap = kDefaultColoredCap) {
  check_colored_size(n, r, cap);
  for_each_permutation(
      n,
      [&](const std::vector<int>& v) {
        const Permutation p(v);
        std::vector<int> c(n, 0);
        while (true) {
          visit(ColoredPermutation(p, c, r));
          std::size_t i = n;
          while (i > 0) {
            --i;
            if (++c[i] < r) break;
            c[i] = 0;
            if (i == 0) return;
          }
          if (n == 0) return;
        }
      },
      static_cast<int>(n));
}

// A_{n,r}(z) by descents; the excedance variant is equidistributed.
IntPolynomial colored_eulerian(std::size_t n, int r, std::int64_t cap = kDefaultColoredCap);
IntPolynomial colored_excedance_poly(std::size_t n, int r, std::int64_t cap = kDefaultColoredCap);
// d_{n,r}(z) by excedances over colored derangements.
IntPolynomial colored_derangement_poly(std::size_t n, int r, std::int64_t cap = kDefaultColoredCap);
// sum_k (-1)^{n-k} C(n,k) A_{k,r}(z), with A_{0,r} = 1.
IntPolynomial colored_derangement_by_inclusion_exclusion(std::size_t n, int r,
                                                         std::int64_t cap = kDefaultColoredCap);

// (r, 2r, ..., nr).
SSequence colored_bound(std::size_t n, int r);

// (c_n + t_n, 2c_{n-1} + t_{n-1}, ..., n c_1 + t_1) with t the Lehmer code.
InversionSequence psi_map(const ColoredPermutation& s);
// Requires e.bound() == colored_bound(n, r).
ColoredPermutation psi_inverse(const InversionSequence& e, int r);

// Values i in [n] that are bad in s (pi_0 = 0, c_0 = 0).
std::set<int> bad_numbers(const ColoredPermutation& s);

// Relabels s onto [n] \ T and inserts every i in T (increasing) so that it becomes bad.
ColoredPermutation insert_bad(const ColoredPermutation& s, const std::set<int>& t, std::size_t n);
// Deletes the values in T and relabels the rest onto [n - |T|].
ColoredPermutation remove_bad(const ColoredPermutation& s, const std::set<int>& t);

}  // namespace lhl
