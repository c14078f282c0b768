#include "lhl/properties.hpp"

#include <string>

#include "lhl/error.hpp"

namespace lhl {

bool is_symmetric(const IntPolynomial& p, std::size_t d) {
  if (p.is_zero()) return true;
  if (p.degree() > static_cast<int>(d)) return false;
  for (std::size_t k = 0; k <= d / 2; ++k) {
    if (p[k] != p[d - k]) return false;
  }
  return true;
}

bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

bool is_log_concave(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  for (std::size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  }
  return true;
}

IntPolynomial GammaVector::reconstruct() const {
  IntPolynomial out;
  const IntPolynomial one_plus_z{1, 1};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 0) continue;
    out += (pow(one_plus_z, static_cast<unsigned>(degree - 2 * i)) * entries[i]).shifted(i);
  }
  return out;
}

bool GammaVector::is_nonnegative() const {
  for (const auto& g : entries) {
    if (g < 0) return false;
  }
  return true;
}

GammaVector gamma_vector(const IntPolynomial& p, std::size_t d) {
  if (!is_symmetric(p, d)) {
    throw Error(ErrorKind::NotSymmetric,
                to_string(p) + " is not symmetric w.r.t. degree " + std::to_string(d));
  }
  GammaVector gv;
  gv.degree = d;
  gv.entries.resize(d / 2 + 1);
  // Peel off the lowest remaining coefficient against z^i (1+z)^(d-2i); each
  // basis element has z^i as its lowest term with coefficient 1.
  IntPolynomial rest = p;
  const IntPolynomial one_plus_z{1, 1};
  for (std::size_t i = 0; i <= d / 2; ++i) {
    BigInt g = rest[i];
    gv.entries[i] = g;
    if (g != 0) rest -= (pow(one_plus_z, static_cast<unsigned>(d - 2 * i)) * g).shifted(i);
  }
  if (!rest.is_zero()) throw Error(ErrorKind::Internal, "gamma expansion left a remainder");
  return gv;
}

SymmetricDecomposition symmetric_decomposition(const IntPolynomial& p, std::size_t d) {
  if (p.degree() > static_cast<int>(d)) {
    throw Error(ErrorKind::DegreeTooHigh,
                "degree " + std::to_string(p.degree()) + " exceeds " + std::to_string(d));
  }
  // With p~ = z^d p(1/z) = a + b, we get p~ - p = (1 - z) b.
  IntPolynomial diff = p.reversed(d) - p;
  SymmetricDecomposition out;
  out.b = exact_quotient(diff, IntPolynomial{1, -1});
  out.a = p - out.b.shifted(1);
  return out;
}

}  // namespace lhl
