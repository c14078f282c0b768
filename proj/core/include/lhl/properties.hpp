#pragma once

#include <cstddef>
#include <vector>

#include "lhl/polynomial.hpp"

namespace lhl {

// Distributional predicates on coefficient sequences. The zero polynomial
// passes every predicate.

// p_k == p_{d-k} for 0 <= k <= d, and no coefficient beyond z^d.
bool is_symmetric(const IntPolynomial& p, std::size_t d);

// Weakly increasing then weakly decreasing over indices 0..degree.
bool is_unimodal(const IntPolynomial& p);

// p_k^2 >= p_{k-1} p_{k+1} for every interior index of 0..degree.
bool is_log_concave(const IntPolynomial& p);

// Coefficients of a polynomial symmetric w.r.t. `degree` in the basis
// { z^i (1+z)^(degree-2i) : 0 <= i <= degree/2 }.
struct GammaVector {
  std::vector<BigInt> entries;
  std::size_t degree = 0;

  IntPolynomial reconstruct() const;
  bool is_nonnegative() const;
};

// Throws NotSymmetric unless is_symmetric(p, d).
GammaVector gamma_vector(const IntPolynomial& p, std::size_t d);

// Unique split p = a + z*b with a symmetric w.r.t. d and b symmetric w.r.t. d-1.
struct SymmetricDecomposition {
  IntPolynomial a;
  IntPolynomial b;
};

// Throws DegreeTooHigh if degree(p) > d.
SymmetricDecomposition symmetric_decomposition(const IntPolynomial& p, std::size_t d);

}  // namespace lhl
