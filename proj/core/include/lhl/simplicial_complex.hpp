#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lhl/polynomial.hpp"
#include "lhl/simplex.hpp"

namespace lhl {

// Faces are bitmasks over vertex indices (bit v = vertex v), so a complex has
// at most 64 vertices.
using FaceMask = std::uint64_t;

inline constexpr std::size_t kMaxComplexVertices = 64;

std::vector<std::size_t> face_vertices(FaceMask face);

// A geometric simplicial complex: labeled lattice points and a downward closed
// family of faces (the empty face included). Each face spans a simplex.
class SimplicialComplex {
 public:
  // Downward closure of the given faces.
  static SimplicialComplex from_facets(std::vector<IntPoint> vertices, const std::vector<FaceMask>& facets);

  const std::vector<IntPoint>& vertices() const noexcept { return vertices_; }
  // Sorted by (size, mask); faces().front() is the empty face.
  const std::vector<FaceMask>& faces() const noexcept { return faces_; }
  bool contains(FaceMask face) const;
  // Index of face in faces(); throws FaceNotInComplex.
  std::size_t index_of(FaceMask face) const;

  // Largest face size minus one; -1 for the complex {empty face}.
  int dimension() const;
  std::vector<FaceMask> facets() const;
  bool is_pure() const;
  // f_{-1}, f_0, ..., f_dim.
  std::vector<std::int64_t> f_vector() const;

  LatticeSimplex simplex(FaceMask face) const;

 private:
  SimplicialComplex(std::vector<IntPoint> vertices, std::vector<FaceMask> faces);

  std::vector<IntPoint> vertices_;
  std::vector<FaceMask> faces_;
  friend SimplicialComplex link(const SimplicialComplex& k, FaceMask face);
};

// h(K; z) = sum_i f_{i-1} z^i (1-z)^{d-i}, d = dimension + 1. Throws NotPure.
IntPolynomial complex_h_polynomial(const SimplicialComplex& k);

// Faces sigma disjoint from face with sigma | face in K. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& k, FaceMask face);

// h(link(K, F); z) for every face F, aligned with k.faces(), computed from star
// counts instead of building each link. Requires K pure.
std::vector<IntPolynomial> link_h_polynomials(const SimplicialComplex& k);

}  // namespace lhl
