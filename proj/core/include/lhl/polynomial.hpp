#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lhl {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of z^i. Trailing zeros are always trimmed, so
// the zero polynomial has no coefficients and degree() == kZeroDegree.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& coefficient, std::size_t exponent);
  // Builds a polynomial from a histogram of exponents (counts[k] = coefficient of z^k).
  static IntPolynomial from_counts(std::span<const std::int64_t> counts);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  // Coefficient of z^k; zero beyond the degree.
  const BigInt& operator[](std::size_t k) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& z) const;
  Rational evaluate(const Rational& z) const;
  // Sign of p(x) computed without leaving the integers.
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  // z^d * p(1/z). Requires degree() <= d.
  IntPolynomial reversed(std::size_t d) const;
  // z^k * p(z).
  IntPolynomial shifted(std::size_t k) const;

  // gcd of the coefficients (nonnegative); zero for the zero polynomial.
  BigInt content() const;
  // p / content, normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(IntPolynomial base, unsigned exponent);

// Pseudo-remainder of a by b, scaled by |lc(b)|^(deg a - deg b + 1) so that the
// sign of the remainder matches the true rational remainder.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b. Throws Internal if b does not divide a in Z[z].
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Human-readable form such as "1 + 4z + z^2"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p);

}  // namespace lhl
