#include "lhl/integer_matrix.hpp"

#include <utility>

#include "lhl/error.hpp"

namespace lhl {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::size_t SmithNormalForm::rank() const {
  std::size_t r = 0;
  while (r < diagonal.size() && diagonal[r] != 0) ++r;
  return r;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& input)
      : a_(input), left_(IntMatrix::identity(input.rows())), right_(IntMatrix::identity(input.cols())) {}

  SmithNormalForm run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_smallest_to(t)) break;
      while (true) {
        bool clean = clear_column(t);
        clean = clear_row(t) && clean;
        if (!clean) continue;
        // Enforce divisibility of the trailing block by the pivot.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              add_row(t, i, BigInt(1));
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithNormalForm out;
    out.diagonal.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a_(t, t);
    out.left = std::move(left_);
    out.right = std::move(right_);
    return out;
  }

 private:
  // Swaps the nonzero entry of least magnitude in the block [t.., t..] to (t, t).
  bool move_smallest_to(std::size_t t) {
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        if (!found || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = i;
          best_c = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Returns true if the column below the pivot was already zero.
  bool clear_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      clean = false;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (a_(i, t) != 0) {
        swap_rows(t, i);
      }
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      clean = false;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (a_(t, j) != 0) {
        swap_cols(t, j);
      }
    }
    return clean;
  }

  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += factor * a_(src, j);
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(dst, j) += factor * left_(src, j);
  }

  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) += factor * a_(i, src);
    for (std::size_t i = 0; i < right_.rows(); ++i) right_(i, dst) += factor * right_(i, src);
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(x, j), a_(y, j));
    for (std::size_t j = 0; j < left_.cols(); ++j) std::swap(left_(x, j), left_(y, j));
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    for (std::size_t i = 0; i < right_.rows(); ++i) std::swap(right_(i, x), right_(i, y));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(r, j) = -left_(r, j);
  }

  IntMatrix a_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& input) { return Reducer(input).run(); }

std::size_t rank(const IntMatrix& input) {
  IntMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      BigInt f = a(i, c);
      BigInt p = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) * p - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

}  // namespace lhl
