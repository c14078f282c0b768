#pragma once

#include <cstddef>
#include <vector>

#include "lhl/polynomial.hpp"

namespace lhl {

// Exact real-root analysis over the rationals. No floating point.

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun's algorithm: factors[i] collects the roots of multiplicity i+1, so that
// p = c * prod factors[i]^(i+1) for a rational constant c. Each factor is
// primitive and squarefree; constant factors are kept as 1.
std::vector<IntPolynomial> squarefree_factorization(const IntPolynomial& p);

// Sturm chain p, p', -rem(...), ... with contents stripped after each step.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

// Sign variations of a Sturm chain at x (zeros skipped).
int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive);

// Number of distinct real roots.
std::size_t count_distinct_real_roots(const IntPolynomial& p);

// True iff every complex root is real, or p is identically zero.
bool is_real_rooted(const IntPolynomial& p);

// 1 + max |p_i / p_deg|, an upper bound on the magnitude of every root.
Rational cauchy_root_bound(const IntPolynomial& p);

// One distinct real root lies in (lower, upper].
struct RootInterval {
  Rational lower;
  Rational upper;
  unsigned multiplicity = 1;
};

// Disjoint half-open intervals sorted in increasing order.
struct RootIsolation {
  std::vector<RootInterval> roots;

  std::size_t total_multiplicity() const;
};

RootIsolation isolate_real_roots(const IntPolynomial& p);

// q interlaces p: with roots a1 >= a2 >= ... of p and b1 >= b2 >= ... of q
// (with multiplicity), a1 >= b1 >= a2 >= b2 >= ... The zero polynomial
// interlaces and is interlaced by everything. Requires deg q in
// {deg p - 1, deg p}; any other degree pair yields false. Throws NotRealRooted
// if either input is not real-rooted.
bool interlaces(const IntPolynomial& q, const IntPolynomial& p);

}  // namespace lhl
