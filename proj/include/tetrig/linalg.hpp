#pragma once

#include <array>

#include "tetrig/field.hpp"

namespace tetrig {

struct Vec3 {
  Scalar x, y, z;

  FieldSpec spec() const { return x.spec(); }
  static Vec3 zero(const FieldSpec& s);

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const Scalar& k) const { return {x * k, y * k, z * k}; }
  bool operator==(const Vec3&) const = default;
};

// Exact row-major 3x3 matrix; vectors are rows and apply as v * M.
class Mat3 {
 public:
  Mat3(Scalar e00, Scalar e01, Scalar e02,
       Scalar e10, Scalar e11, Scalar e12,
       Scalar e20, Scalar e21, Scalar e22);
  static Mat3 identity(const FieldSpec&);
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);

  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }
  Vec3 row(int r) const { return {at(r, 0), at(r, 1), at(r, 2)}; }
  FieldSpec spec() const { return e_[0].spec(); }

  Mat3 operator*(const Mat3&) const;
  Mat3 operator*(const Scalar&) const;
  Mat3 operator/(const Scalar&) const;
  Mat3 transpose() const;
  Scalar det() const;
  Mat3 adjugate() const;  // M * adjugate(M) = det(M) * I

  bool operator==(const Mat3&) const = default;

 private:
  std::array<Scalar, 9> e_;
};

Vec3 operator*(const Vec3& v, const Mat3& m);

}  // namespace tetrig
