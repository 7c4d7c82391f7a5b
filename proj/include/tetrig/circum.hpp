#pragma once

#include "tetrig/affine.hpp"

namespace tetrig {

/// Plane through a point, perpendicular to `normal` under the ambient form:
/// X lies on it iff normal .B (X - through) = 0.
struct Plane {
  Vec3 normal;
  Point3 through;
};

bool plane_contains(const Plane&, const Point3&, const SymForm&);

// Plane through the midpoint of edge ij, perpendicular to that edge.
Plane midplane(const Tetrahedron&, int i, int j);

struct CircumResult {
  Point3 centre;
  Scalar circumquadrance;
};

// Closed-form circumcentre of the standard tetrahedron under B, obtained
// from the first three midplane equations:
//   [ (alpha1 a1 + beta3 a2 + beta2 a3) / 2 delta, ... ]
Point3 standard_circumcentre(const SymForm& b);

// Residuals of all six midplane equations of the standard tetrahedron at
// that centre. Concurrency of the midplanes says every entry is zero; the
// first three vanish by construction.
std::array<Scalar, 6> standard_concurrency_residuals(const SymForm& b);

// Circumquadrance of the standard tetrahedron from the form entries alone:
// archimedes(a1 r1, a2 r2, a3 r3) / (16 delta).
Scalar standard_circumquadrance(const SymForm& b);

// Routes through standard coordinates: computes the closed-form centre
// there, checks all six midplane equations (InternalConcurrencyFailure if
// any fails, which the concurrency theorem rules out), pulls the centre
// back and measures its quadrance from A0.
CircumResult circumcentre(const Tetrahedron&);  // DegenerateTetrahedron

// Independent route from the six quadrances alone:
//   archimedes(Q01 Q23, Q02 Q13, Q03 Q12) / (4 V).
// Contract: equals circumcentre(t).circumquadrance exactly.
Scalar crelle_circumquadrance(const Tetrahedron&);  // DegenerateTetrahedron

}  // namespace tetrig
