#include "lhl/triangulation.hpp"

#include <algorithm>
#include <bit>

#include "lhl/error.hpp"
#include "lhl/properties.hpp"
#include "lhl/roots.hpp"

namespace lhl {

std::vector<ElementMask> CanonicalTriangulation::chain(FaceMask face) const {
  std::vector<ElementMask> out;
  for (const std::size_t v : face_vertices(face)) out.push_back(filters.at(v));
  std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

CanonicalTriangulation canonical_triangulation(const OrderPolytope& o) {
  const Poset& p = o.poset();
  const std::size_t n = p.size();
  std::vector<ElementMask> filters = p.order_filters();
  if (filters.size() > kMaxComplexVertices) {
    throw Error(ErrorKind::TooLarge, "more than 64 order filters");
  }
  std::vector<IntPoint> vertices;
  for (const ElementMask f : filters) {
    IntPoint v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (f & (ElementMask{1} << i)) v[i] = static_cast<long>(o.s()(i + 1));
    }
    vertices.push_back(std::move(v));
  }
  // Maximal chains: filters are sorted by size, so extend each chain by one
  // element at a time from the empty filter to the full one.
  std::vector<FaceMask> facets;
  auto recurse = [&](auto&& self, std::size_t current, FaceMask face) -> void {
    if (std::popcount(filters[current]) == static_cast<int>(n)) {
      facets.push_back(face);
      return;
    }
    for (std::size_t next = current + 1; next < filters.size(); ++next) {
      const ElementMask g = filters[next];
      if (std::popcount(g) != std::popcount(filters[current]) + 1) continue;
      if ((g & filters[current]) != filters[current]) continue;
      self(self, next, face | (FaceMask{1} << next));
    }
  };
  recurse(recurse, 0, FaceMask{1});
  CanonicalTriangulation t{SimplicialComplex::from_facets(std::move(vertices), facets), std::move(filters)};
  return t;
}

IntPolynomial betke_mcmullen_hstar(const OrderPolytope& o, const EnumerationOptions& options) {
  const CanonicalTriangulation t = canonical_triangulation(o);
  const auto& faces = t.complex.faces();
  const std::vector<IntPolynomial> link_h = link_h_polynomials(t.complex);
  IntPolynomial total;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] == 0) {
      total += link_h[i];
      continue;
    }
    const IntPolynomial local = local_hstar(t.complex.simplex(faces[i]), options);
    if (!local.is_zero()) total += link_h[i] * local;
  }
  return total;
}

bool is_reflexive(const IntPolynomial& hstar_poly, std::size_t d) { return is_symmetric(hstar_poly, d); }

bool BoxUnimodalityReport::all_unimodal() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoxFaceRow& r) { return r.unimodal; });
}

bool BoxUnimodalityReport::all_real_rooted() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoxFaceRow& r) { return r.real_rooted; });
}

BoxUnimodalityReport box_unimodality_report(const OrderPolytope& o, const EnumerationOptions& options) {
  const CanonicalTriangulation t = canonical_triangulation(o);
  BoxUnimodalityReport report;
  for (const FaceMask face : t.complex.faces()) {
    if (face == 0) continue;
    BoxFaceRow row;
    row.chain = t.chain(face);
    row.local = local_hstar(t.complex.simplex(face), options);
    row.unimodal = is_unimodal(row.local);
    row.real_rooted = is_real_rooted(row.local);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lhl
