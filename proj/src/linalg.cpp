#include "tetrig/linalg.hpp"

#include <utility>

namespace tetrig {

Vec3 Vec3::zero(const FieldSpec& s) {
  return {Scalar::zero(s), Scalar::zero(s), Scalar::zero(s)};
}

Mat3::Mat3(Scalar e00, Scalar e01, Scalar e02,
           Scalar e10, Scalar e11, Scalar e12,
           Scalar e20, Scalar e21, Scalar e22)
    : e_{std::move(e00), std::move(e01), std::move(e02),
         std::move(e10), std::move(e11), std::move(e12),
         std::move(e20), std::move(e21), std::move(e22)} {}

Mat3 Mat3::identity(const FieldSpec& s) {
  Scalar o = Scalar::one(s), z = Scalar::zero(s);
  return Mat3(o, z, z, z, o, z, z, z, o);
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return Mat3(r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z);
}

Mat3 Mat3::operator*(const Mat3& o) const {
  auto cell = [&](int r, int c) {
    return at(r, 0) * o.at(0, c) + at(r, 1) * o.at(1, c) + at(r, 2) * o.at(2, c);
  };
  return Mat3(cell(0, 0), cell(0, 1), cell(0, 2),
              cell(1, 0), cell(1, 1), cell(1, 2),
              cell(2, 0), cell(2, 1), cell(2, 2));
}

Mat3 Mat3::operator*(const Scalar& k) const {
  return Mat3(at(0, 0) * k, at(0, 1) * k, at(0, 2) * k,
              at(1, 0) * k, at(1, 1) * k, at(1, 2) * k,
              at(2, 0) * k, at(2, 1) * k, at(2, 2) * k);
}

Mat3 Mat3::operator/(const Scalar& k) const {
  return Mat3(at(0, 0) / k, at(0, 1) / k, at(0, 2) / k,
              at(1, 0) / k, at(1, 1) / k, at(1, 2) / k,
              at(2, 0) / k, at(2, 1) / k, at(2, 2) / k);
}

Mat3 Mat3::transpose() const {
  return Mat3(at(0, 0), at(1, 0), at(2, 0),
              at(0, 1), at(1, 1), at(2, 1),
              at(0, 2), at(1, 2), at(2, 2));
}

Scalar Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1))
       - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0))
       + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::adjugate() const {
  // transposed cofactors
  return Mat3(at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1),
              at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2),
              at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1),
              at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2),
              at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0),
              at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2),
              at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0),
              at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1),
              at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0));
}

Vec3 operator*(const Vec3& v, const Mat3& m) {
  return {v.x * m.at(0, 0) + v.y * m.at(1, 0) + v.z * m.at(2, 0),
          v.x * m.at(0, 1) + v.y * m.at(1, 1) + v.z * m.at(2, 1),
          v.x * m.at(0, 2) + v.y * m.at(1, 2) + v.z * m.at(2, 2)};
}

}  // namespace tetrig
