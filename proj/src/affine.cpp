#include "tetrig/affine.hpp"

namespace tetrig {

namespace {

Mat3 invert_or_throw(const Mat3& m) {
  Scalar d = m.det();
  if (d.is_zero())
    throw DegenerateTetrahedron("edge vectors are linearly dependent");
  return m.adjugate() / d;
}

}  // namespace

AffineMap::AffineMap(const Point3& origin, const Mat3& edges)
    : origin_(origin), edges_(edges), forward_(invert_or_throw(edges)) {}

Point3 AffineMap::to_standard(const Point3& p) const {
  Vec3 w = (p - origin_) * forward_;
  return {w.x, w.y, w.z};
}

Point3 AffineMap::from_standard(const Point3& p) const {
  Vec3 w = Vec3{p.x, p.y, p.z} * edges_;
  return origin_ + w;
}

std::pair<AffineMap, SymForm> map_to_standard(const Tetrahedron& t) {
  Mat3 edges = Mat3::from_rows(edge_vector(t, 0, 1), edge_vector(t, 0, 2), edge_vector(t, 0, 3));
  AffineMap map(t.point(0), edges);
  // entries of the induced form are the pairwise products of the edge rows
  Mat3 induced = edges * t.form().matrix() * edges.transpose();
  return {map, SymForm::from_matrix(induced)};
}

MetricReport invariants_via_standard(const Tetrahedron& t) {
  auto [map, induced] = map_to_standard(t);
  (void)map;
  return metric_report(Tetrahedron::standard(induced));
}

}  // namespace tetrig
