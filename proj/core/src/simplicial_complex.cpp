#include "lhl/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>

#include "lhl/error.hpp"

namespace lhl {

std::vector<std::size_t> face_vertices(FaceMask face) {
  std::vector<std::size_t> out;
  while (face != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(face)));
    face &= face - 1;
  }
  return out;
}

namespace {

bool face_less(FaceMask a, FaceMask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

void sort_faces(std::vector<FaceMask>& faces) { std::sort(faces.begin(), faces.end(), face_less); }

// (1 - z)^k.
IntPolynomial one_minus_z_pow(std::size_t k) { return pow(IntPolynomial{1, -1}, static_cast<unsigned>(k)); }

IntPolynomial h_from_f(const std::vector<std::int64_t>& f, std::size_t d) {
  // f[i] = f_{i-1}.
  IntPolynomial h;
  for (std::size_t i = 0; i < f.size() && i <= d; ++i) {
    if (f[i] == 0) continue;
    h += IntPolynomial::monomial(BigInt(static_cast<long>(f[i])), i) * one_minus_z_pow(d - i);
  }
  return h;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<IntPoint> vertices, std::vector<FaceMask> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  sort_faces(faces_);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<IntPoint> vertices,
                                                 const std::vector<FaceMask>& facets) {
  if (vertices.size() > kMaxComplexVertices) {
    throw Error(ErrorKind::TooLarge, "complexes are limited to 64 vertices");
  }
  const FaceMask valid = vertices.size() == 64 ? ~FaceMask{0} : (FaceMask{1} << vertices.size()) - 1;
  std::set<FaceMask> all{0};
  for (const FaceMask f : facets) {
    if ((f & ~valid) != 0) throw Error(ErrorKind::InvalidArgument, "facet uses an unknown vertex");
    if (f != 0) {
      std::vector<IntPoint> points;
      for (const std::size_t v : face_vertices(f)) points.push_back(vertices[v]);
      LatticeSimplex check(std::move(points));  // throws unless affinely independent
    }
    // Enumerate all submasks of f.
    for (FaceMask sub = f;; sub = (sub - 1) & f) {
      all.insert(sub);
      if (sub == 0) break;
    }
  }
  return SimplicialComplex(std::move(vertices), std::vector<FaceMask>(all.begin(), all.end()));
}

bool SimplicialComplex::contains(FaceMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
}

std::size_t SimplicialComplex::index_of(FaceMask face) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), face, face_less);
  if (it == faces_.end() || *it != face) throw Error(ErrorKind::FaceNotInComplex, "face is not in the complex");
  return static_cast<std::size_t>(it - faces_.begin());
}

int SimplicialComplex::dimension() const { return std::popcount(faces_.back()) - 1; }

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  for (const FaceMask f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < vertices_.size() && maximal; ++v) {
      const FaceMask b = FaceMask{1} << v;
      if ((f & b) == 0 && contains(f | b)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  const int top = dimension() + 1;
  const auto f = facets();
  return std::all_of(f.begin(), f.end(), [&](FaceMask m) { return std::popcount(m) == top; });
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (const FaceMask face : faces_) ++f[static_cast<std::size_t>(std::popcount(face))];
  return f;
}

LatticeSimplex SimplicialComplex::simplex(FaceMask face) const {
  if (face == 0) throw Error(ErrorKind::InvalidArgument, "the empty face has no simplex");
  index_of(face);
  std::vector<IntPoint> points;
  for (const std::size_t v : face_vertices(face)) points.push_back(vertices_[v]);
  return LatticeSimplex(std::move(points));
}

IntPolynomial complex_h_polynomial(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorKind::NotPure, "complex is not pure");
  return h_from_f(k.f_vector(), static_cast<std::size_t>(k.dimension() + 1));
}

SimplicialComplex link(const SimplicialComplex& k, FaceMask face) {
  if (!k.contains(face)) throw Error(ErrorKind::FaceNotInComplex, "face is not in the complex");
  std::vector<FaceMask> faces;
  for (const FaceMask tau : k.faces()) {
    if ((tau & face) == face) faces.push_back(tau & ~face);
  }
  return SimplicialComplex(k.vertices(), std::move(faces));
}

std::vector<IntPolynomial> link_h_polynomials(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorKind::NotPure, "complex is not pure");
  const auto& faces = k.faces();
  const std::size_t top = static_cast<std::size_t>(k.dimension() + 1);
  std::unordered_map<FaceMask, std::size_t> index;
  index.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
  // star[i][j] = number of faces containing faces[i] with j extra vertices.
  std::vector<std::vector<std::int64_t>> star(faces.size(), std::vector<std::int64_t>(top + 1, 0));
  for (const FaceMask tau : faces) {
    const int size = std::popcount(tau);
    for (FaceMask sub = tau;; sub = (sub - 1) & tau) {
      ++star[index.at(sub)][static_cast<std::size_t>(size - std::popcount(sub))];
      if (sub == 0) break;
    }
  }
  std::vector<IntPolynomial> out;
  out.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out.push_back(h_from_f(star[i], top - static_cast<std::size_t>(std::popcount(faces[i]))));
  }
  return out;
}

}  // namespace lhl
