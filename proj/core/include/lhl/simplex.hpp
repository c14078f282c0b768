#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lhl/integer_matrix.hpp"
#include "lhl/inversion.hpp"
#include "lhl/polynomial.hpp"

namespace lhl {

using IntPoint = std::vector<BigInt>;

// conv(v_0, ..., v_d) in Z^n with affinely independent vertices (d <= n).
class LatticeSimplex {
 public:
  explicit LatticeSimplex(std::vector<IntPoint> vertices);

  const std::vector<IntPoint>& vertices() const noexcept { return vertices_; }
  std::size_t dimension() const noexcept { return vertices_.size() - 1; }
  std::size_t ambient_dimension() const noexcept { return vertices_.front().size(); }

  // (n+1) x (d+1) matrix whose column i is (v_i, 1).
  IntMatrix lifted_matrix() const;

  // Index of the lattice spanned by the lifted vertices inside the integer
  // points of their linear span; equals h*(1).
  BigInt normalized_volume() const;

 private:
  std::vector<IntPoint> vertices_;
};

// A lattice point sum_i lambda_i (v_i, 1) of the half-open parallelepiped.
struct ParallelepipedPoint {
  std::vector<BigInt> coordinates;  // length n+1; the last entry is the height
  std::vector<Rational> lambda;     // length d+1, each in [0, 1)

  const BigInt& height() const { return coordinates.back(); }
  bool is_open() const;  // every lambda_i > 0

  friend bool operator==(const ParallelepipedPoint&, const ParallelepipedPoint&) = default;
};

enum class EnumerationMethod {
  NormalForm,   // coset representatives from the Smith normal form
  BoundingBox,  // scan the bounding box and test membership exactly
};

struct EnumerationOptions {
  std::int64_t max_points = 10'000'000;
  EnumerationMethod method = EnumerationMethod::NormalForm;
};

// All lattice points of the half-open parallelepiped, sorted by height and
// then lexicographically. Throws VolumeTooLarge past options.max_points.
std::vector<ParallelepipedPoint> enumerate_fundamental_domain(const LatticeSimplex& simplex,
                                                              const EnumerationOptions& options = {});

std::vector<ParallelepipedPoint> half_open_points(const LatticeSimplex& simplex,
                                                  const EnumerationOptions& options = {});
std::vector<ParallelepipedPoint> open_points(const LatticeSimplex& simplex,
                                             const EnumerationOptions& options = {});

// Height generating polynomials of the half-open / open parallelepiped.
IntPolynomial hstar(const LatticeSimplex& simplex, const EnumerationOptions& options = {});
IntPolynomial local_hstar(const LatticeSimplex& simplex, const EnumerationOptions& options = {});

// 0 <= x_1/s_1 <= ... <= x_n/s_n <= 1, with vertices (0,..,0,s_{i+1},..,s_n).
LatticeSimplex lecture_hall_simplex(const SSequence& s);

// REM(x)_i = x_i mod s_i, for a half-open point of lecture_hall_simplex(s).
InversionSequence rem_map(const ParallelepipedPoint& point, const SSequence& s);

// Sub-simplex on the selected vertex indices (sorted, distinct, nonempty).
LatticeSimplex face(const LatticeSimplex& simplex, std::span<const std::size_t> indices);

// mu_j = gcd(s_{i_{j-1}+1}, ..., s_{i_j}) for vertex indices 0 <= i_0 < ... < i_m <= n.
// Throws SingleVertex when m = 0.
SSequence face_mu(const SSequence& s, std::span<const std::size_t> indices);

}  // namespace lhl
