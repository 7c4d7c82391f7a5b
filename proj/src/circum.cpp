#include "tetrig/circum.hpp"

namespace tetrig {

bool plane_contains(const Plane& plane, const Point3& p, const SymForm& b) {
  return b.dot(plane.normal, p - plane.through).is_zero();
}

Plane midplane(const Tetrahedron& t, int i, int j) {
  return {edge_vector(t, i, j), midpoint(t, i, j)};
}

Point3 standard_circumcentre(const SymForm& b) {
  Scalar two_delta = Scalar::of(2, b.spec()) * b.delta();
  return {(b.alpha1() * b.a1() + b.beta3() * b.a2() + b.beta2() * b.a3()) / two_delta,
          (b.beta3() * b.a1() + b.alpha2() * b.a2() + b.beta1() * b.a3()) / two_delta,
          (b.beta2() * b.a1() + b.beta1() * b.a2() + b.alpha3() * b.a3()) / two_delta};
}

std::array<Scalar, 6> standard_concurrency_residuals(const SymForm& b) {
  Tetrahedron std_t = Tetrahedron::standard(b);
  Point3 centre = standard_circumcentre(b);
  auto residual = [&](int slot) {
    const auto& e = kEdges[static_cast<std::size_t>(slot)];
    Plane plane = midplane(std_t, e[0], e[1]);
    return b.dot(plane.normal, centre - plane.through);
  };
  return {residual(0), residual(1), residual(2), residual(3), residual(4), residual(5)};
}

Scalar standard_circumquadrance(const SymForm& b) {
  return archimedes(b.a1() * b.r1(), b.a2() * b.r2(), b.a3() * b.r3())
       / (Scalar::of(16, b.spec()) * b.delta());
}

CircumResult circumcentre(const Tetrahedron& t) {
  auto [map, induced] = map_to_standard(t);
  for (const Scalar& res : standard_concurrency_residuals(induced)) {
    if (!res.is_zero())
      throw InternalConcurrencyFailure("midplane equation violated at circumcentre, residual " +
                                       res.str());
  }
  Point3 centre = map.from_standard(standard_circumcentre(induced));
  Scalar r = t.form().quad(centre - t.point(0));
  return {centre, r};
}

Scalar crelle_circumquadrance(const Tetrahedron& t) {
  Scalar v = quadrume(t);
  if (v.is_zero()) throw DegenerateTetrahedron("flat tetrahedron: quadrume = 0");
  Scalar q01 = quadrance(t, 0, 1), q02 = quadrance(t, 0, 2), q03 = quadrance(t, 0, 3);
  Scalar q12 = quadrance(t, 1, 2), q13 = quadrance(t, 1, 3), q23 = quadrance(t, 2, 3);
  return archimedes(q01 * q23, q02 * q13, q03 * q12) / (Scalar::of(4, t.spec()) * v);
}

}  // namespace tetrig
