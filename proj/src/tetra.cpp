#include "tetrig/tetra.hpp"

#include <utility>

namespace tetrig {

int edge_slot(int i, int j) {
  for (int s = 0; s < kEdgeCount; ++s)
    if (kEdges[static_cast<std::size_t>(s)][0] == i && kEdges[static_cast<std::size_t>(s)][1] == j)
      return s;
  throw BadIndex("bad edge index (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

int face_slot(int i, int j, int k) {
  for (int s = 0; s < kFaceCount; ++s) {
    const auto& f = kFaces[static_cast<std::size_t>(s)];
    if (f[0] == i && f[1] == j && f[2] == k) return s;
  }
  throw BadIndex("bad face index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")");
}

std::string edge_label(int slot) {
  const auto& e = kEdges.at(static_cast<std::size_t>(slot));
  return std::to_string(e[0]) + std::to_string(e[1]);
}

std::string face_label(int slot) {
  const auto& f = kFaces.at(static_cast<std::size_t>(slot));
  return std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]);
}

Tetrahedron::Tetrahedron(Point3 a0, Point3 a1, Point3 a2, Point3 a3, SymForm form)
    : points_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)},
      form_(std::move(form)) {
  for (const Point3& p : points_) {
    if (p.spec() != form_.spec() || p.y.spec() != form_.spec() || p.z.spec() != form_.spec())
      throw FieldMismatch("point coordinates and form come from different fields");
  }
}

Tetrahedron Tetrahedron::standard(const SymForm& form) {
  FieldSpec s = form.spec();
  Scalar o = Scalar::one(s), z = Scalar::zero(s);
  return Tetrahedron({z, z, z}, {o, z, z}, {z, o, z}, {z, z, o}, form);
}

const Point3& Tetrahedron::point(int i) const {
  if (i < 0 || i > 3) throw BadIndex("bad point index " + std::to_string(i));
  return points_[static_cast<std::size_t>(i)];
}

Vec3 edge_vector(const Tetrahedron& t, int i, int j) {
  edge_slot(i, j);
  return t.point(j) - t.point(i);
}

Point3 midpoint(const Tetrahedron& t, int i, int j) {
  Vec3 v = edge_vector(t, i, j);
  Scalar half = Scalar::one(t.spec()) / Scalar::of(2, t.spec());
  return t.point(i) + v * half;
}

Scalar quadrance(const Tetrahedron& t, int i, int j) {
  return t.form().quad(edge_vector(t, i, j));
}

Scalar archimedes(const Scalar& a, const Scalar& b, const Scalar& c) {
  Scalar s = a + b + c;
  return s * s - Scalar::of(2, a.spec()) * (a * a + b * b + c * c);
}

Scalar quadrea(const Tetrahedron& t, int i, int j, int k) {
  face_slot(i, j, k);
  return archimedes(quadrance(t, i, j), quadrance(t, i, k), quadrance(t, j, k));
}

Scalar euler_four_point(const Scalar& q1, const Scalar& q2, const Scalar& q3,
                        const Scalar& p1, const Scalar& p2, const Scalar& p3) {
  Scalar two = Scalar::of(2, q1.spec());
  Mat3 m(two * p1, p1 + p2 - q3, p1 + p3 - q2,
         p1 + p2 - q3, two * p2, p2 + p3 - q1,
         p1 + p3 - q2, p2 + p3 - q1, two * p3);
  return m.det();
}

Scalar quadrume(const Tetrahedron& t) {
  Scalar q01 = quadrance(t, 0, 1), q02 = quadrance(t, 0, 2), q03 = quadrance(t, 0, 3);
  Scalar q12 = quadrance(t, 1, 2), q13 = quadrance(t, 1, 3), q23 = quadrance(t, 2, 3);
  return euler_four_point(q23, q13, q12, q01, q02, q03) / Scalar::of(2, t.spec());
}

Scalar dihedral_spread(const Tetrahedron& t, int i, int j) {
  int slot = edge_slot(i, j);
  const auto& faces = kEdgeFaces[static_cast<std::size_t>(slot)];
  const auto& f0 = kFaces[static_cast<std::size_t>(faces[0])];
  const auto& f1 = kFaces[static_cast<std::size_t>(faces[1])];
  Scalar a0 = quadrea(t, f0[0], f0[1], f0[2]);
  Scalar a1 = quadrea(t, f1[0], f1[1], f1[2]);
  if (a0.is_zero() || a1.is_zero())
    throw NullTriangle("null face at edge " + edge_label(slot) + ": zero quadrea");
  return Scalar::of(4, t.spec()) * quadrance(t, i, j) * quadrume(t) / (a0 * a1);
}

MetricReport metric_report(const Tetrahedron& t) {
  FieldSpec s = t.spec();
  auto q_of = [&](int slot) {
    const auto& e = kEdges[static_cast<std::size_t>(slot)];
    return quadrance(t, e[0], e[1]);
  };
  std::array<Scalar, 6> q{q_of(0), q_of(1), q_of(2), q_of(3), q_of(4), q_of(5)};

  auto a_of = [&](int slot) {
    const auto& f = kFaces[static_cast<std::size_t>(slot)];
    return archimedes(q[static_cast<std::size_t>(edge_slot(f[0], f[1]))],
                      q[static_cast<std::size_t>(edge_slot(f[0], f[2]))],
                      q[static_cast<std::size_t>(edge_slot(f[1], f[2]))]);
  };
  std::array<Scalar, 4> a{a_of(0), a_of(1), a_of(2), a_of(3)};

  Scalar v = euler_four_point(q[5], q[4], q[3], q[0], q[1], q[2]) / Scalar::of(2, s);

  std::array<std::optional<Scalar>, 6> e;
  Scalar four = Scalar::of(4, s);
  for (int slot = 0; slot < kEdgeCount; ++slot) {
    const auto& faces = kEdgeFaces[static_cast<std::size_t>(slot)];
    const Scalar& a0 = a[static_cast<std::size_t>(faces[0])];
    const Scalar& a1 = a[static_cast<std::size_t>(faces[1])];
    if (a0.is_zero() || a1.is_zero()) continue;
    e[static_cast<std::size_t>(slot)] = four * q[static_cast<std::size_t>(slot)] * v / (a0 * a1);
  }
  return MetricReport{std::move(q), std::move(a), std::move(v), std::move(e)};
}

}  // namespace tetrig
