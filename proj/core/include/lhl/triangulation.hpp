#pragma once

#include <cstddef>
#include <vector>

#include "lhl/order_polytope.hpp"
#include "lhl/polynomial.hpp"
#include "lhl/simplex.hpp"
#include "lhl/simplicial_complex.hpp"

namespace lhl {

// The s-canonical triangulation: one vertex v_F per order filter F, with
// (v_F)_i = s_i for i in F and 0 otherwise; faces are chains of filters.
struct CanonicalTriangulation {
  SimplicialComplex complex;
  std::vector<ElementMask> filters;  // filters[v] labels vertex v

  // The filters of a face, ordered by inclusion.
  std::vector<ElementMask> chain(FaceMask face) const;
};

CanonicalTriangulation canonical_triangulation(const OrderPolytope& o);

// sum over all faces F (the empty one included, with local h* = 1) of
// h(link F) * local_hstar(F).
IntPolynomial betke_mcmullen_hstar(const OrderPolytope& o, const EnumerationOptions& options = {});

// Hibi's criterion: h* symmetric with respect to degree d.
bool is_reflexive(const IntPolynomial& hstar_poly, std::size_t d);

struct BoxFaceRow {
  std::vector<ElementMask> chain;
  IntPolynomial local;  // local h* of the face
  bool unimodal = false;
  bool real_rooted = false;
};

// Regularity of the triangulation is taken as known, not recomputed.
struct BoxUnimodalityReport {
  std::vector<BoxFaceRow> rows;  // nonempty faces in the complex's face order

  bool all_unimodal() const;
  bool all_real_rooted() const;
  bool passed() const { return all_unimodal() && all_real_rooted(); }
};

BoxUnimodalityReport box_unimodality_report(const OrderPolytope& o, const EnumerationOptions& options = {});

}  // namespace lhl
