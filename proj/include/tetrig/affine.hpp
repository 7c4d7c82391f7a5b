#pragma once

#include <utility>

#include "tetrig/tetra.hpp"

namespace tetrig {

/// Affine change of coordinates carrying a nondegenerate tetrahedron onto
/// the standard one X0=[0,0,0], X1=[1,0,0], X2=[0,1,0], X3=[0,0,1].
///
/// Row-vector convention throughout: the edge matrix has rows A0A1, A0A2,
/// A0A3, to_standard(P) = (P - A0) * inverse(edges) and
/// from_standard(X) = X * edges + A0, so that A_i maps to X_i exactly.
class AffineMap {
 public:
  AffineMap(const Point3& origin, const Mat3& edges);  // DegenerateTetrahedron

  Point3 to_standard(const Point3&) const;
  Point3 from_standard(const Point3&) const;

  const Mat3& edge_matrix() const { return edges_; }
  const Mat3& forward_matrix() const { return forward_; }  // cached exact inverse

 private:
  Point3 origin_;
  Mat3 edges_;
  Mat3 forward_;
};

// Returns the map together with the form induced on standard coordinates,
// B = E C E^T for edge matrix E, which satisfies
// u .C v = (u E^-1) .B (v E^-1) and so preserves every invariant.
std::pair<AffineMap, SymForm> map_to_standard(const Tetrahedron&);

// Invariants computed on the standard tetrahedron under the induced form;
// contract: identical to metric_report on the original tetrahedron.
MetricReport invariants_via_standard(const Tetrahedron&);

}  // namespace tetrig
