#pragma once

#include <array>
#include <optional>
#include <string>

#include "tetrig/form.hpp"

namespace tetrig {

struct Point3 {
  Scalar x, y, z;

  FieldSpec spec() const { return x.spec(); }
  bool operator==(const Point3&) const = default;
};

inline Vec3 operator-(const Point3& to, const Point3& from) {
  return {to.x - from.x, to.y - from.y, to.z - from.z};
}
inline Point3 operator+(const Point3& p, const Vec3& v) {
  return {p.x + v.x, p.y + v.y, p.z + v.z};
}

// Canonical index sets: edges ij with i < j, faces ijk with i < j < k.
inline constexpr int kEdgeCount = 6;
inline constexpr int kFaceCount = 4;
inline constexpr std::array<std::array<int, 2>, 6> kEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kFaces{
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
// slot of the edge sharing no vertex with the given one (01<->23 etc.)
inline constexpr std::array<int, 6> kOppositeEdge{5, 4, 3, 2, 1, 0};
// the two face slots containing each edge
inline constexpr std::array<std::array<int, 2>, 6> kEdgeFaces{
    {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};

int edge_slot(int i, int j);          // BadIndex unless 0 <= i < j <= 3
int face_slot(int i, int j, int k);   // BadIndex unless 0 <= i < j < k <= 3
std::string edge_label(int slot);     // "01" .. "23"
std::string face_label(int slot);     // "012" .. "123"

class Tetrahedron {
 public:
  Tetrahedron(Point3 a0, Point3 a1, Point3 a2, Point3 a3, SymForm form);
  static Tetrahedron standard(const SymForm& form);

  const Point3& point(int i) const;  // BadIndex
  const SymForm& form() const { return form_; }
  FieldSpec spec() const { return form_.spec(); }

 private:
  std::array<Point3, 4> points_;
  SymForm form_;
};

Vec3 edge_vector(const Tetrahedron&, int i, int j);
Point3 midpoint(const Tetrahedron&, int i, int j);
Scalar quadrance(const Tetrahedron&, int i, int j);

// (a + b + c)^2 - 2 (a^2 + b^2 + c^2)
Scalar archimedes(const Scalar& a, const Scalar& b, const Scalar& c);
Scalar quadrea(const Tetrahedron&, int i, int j, int k);

// det of the symmetric 3x3 matrix with diagonal 2 p_i and off-diagonal
// entries p_i + p_j - q_k; equivalent to the Cayley-Menger determinant.
Scalar euler_four_point(const Scalar& q1, const Scalar& q2, const Scalar& q3,
                        const Scalar& p1, const Scalar& p2, const Scalar& p3);
Scalar quadrume(const Tetrahedron&);

// 4 Q_ij V / (A_ijk A_ijl); NullTriangle when either face quadrea vanishes.
Scalar dihedral_spread(const Tetrahedron&, int i, int j);

/// The full invariant bundle of one tetrahedron. Spreads whose face
/// quadreas vanish are absent rather than an error, so the bundle is total.
struct MetricReport {
  std::array<Scalar, 6> quadrances;               // edge slot order
  std::array<Scalar, 4> quadreas;                 // face slot order
  Scalar quadrume;
  std::array<std::optional<Scalar>, 6> spreads;   // edge slot order

  bool operator==(const MetricReport&) const = default;
};

MetricReport metric_report(const Tetrahedron&);

}  // namespace tetrig
