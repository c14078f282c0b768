#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lhl/polynomial.hpp"

namespace lhl {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// left * input * right == diagonal form, with left and right unimodular and
// diagonal[0] | diagonal[1] | ... (all nonnegative). Entries past the rank are 0.
struct SmithNormalForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<BigInt> diagonal;  // length min(rows, cols)

  std::size_t rank() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& input);

// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

}  // namespace lhl
