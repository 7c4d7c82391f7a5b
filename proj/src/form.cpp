#include "tetrig/form.hpp"

#include <utility>

namespace tetrig {

SymForm SymForm::from_matrix(const Mat3& m) {
  if (m.at(0, 1) != m.at(1, 0) || m.at(0, 2) != m.at(2, 0) || m.at(1, 2) != m.at(2, 1))
    throw NonSymmetricForm("form matrix is not symmetric");
  return from_entries(m.at(0, 0), m.at(1, 1), m.at(2, 2), m.at(1, 2), m.at(0, 2), m.at(0, 1));
}

SymForm SymForm::from_entries(Scalar a1, Scalar a2, Scalar a3,
                              Scalar b1, Scalar b2, Scalar b3) {
  return SymForm(std::move(a1), std::move(a2), std::move(a3),
                 std::move(b1), std::move(b2), std::move(b3));
}

SymForm::SymForm(Scalar a1, Scalar a2, Scalar a3, Scalar b1, Scalar b2, Scalar b3)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      b1_(std::move(b1)),
      b2_(std::move(b2)),
      b3_(std::move(b3)),
      delta_(a1_ * a2_ * a3_ + Scalar::of(2, a1_.spec()) * b1_ * b2_ * b3_
             - a1_ * b1_ * b1_ - a2_ * b2_ * b2_ - a3_ * b3_ * b3_),
      alpha1_(a2_ * a3_ - b1_ * b1_),
      alpha2_(a1_ * a3_ - b2_ * b2_),
      alpha3_(a1_ * a2_ - b3_ * b3_),
      beta1_(b2_ * b3_ - a1_ * b1_),
      beta2_(b1_ * b3_ - a2_ * b2_),
      beta3_(b1_ * b2_ - a3_ * b3_),
      r1_(a2_ + a3_ - b1_ - b1_),
      r2_(a1_ + a3_ - b2_ - b2_),
      r3_(a1_ + a2_ - b3_ - b3_),
      adj_sum_(alpha1_ + alpha2_ + alpha3_
               + Scalar::of(2, a1_.spec()) * (beta1_ + beta2_ + beta3_)) {
  if (delta_.is_zero()) throw DegenerateForm("degenerate form: delta = 0");
}

Mat3 SymForm::matrix() const {
  return Mat3(a1_, b3_, b2_, b3_, a2_, b1_, b2_, b1_, a3_);
}

Mat3 SymForm::adjugate() const {
  return Mat3(alpha1_, beta3_, beta2_, beta3_, alpha2_, beta1_, beta2_, beta1_, alpha3_);
}

Scalar SymForm::dot(const Vec3& u, const Vec3& v) const {
  return a1_ * u.x * v.x + a2_ * u.y * v.y + a3_ * u.z * v.z
       + b3_ * (u.x * v.y + u.y * v.x)
       + b2_ * (u.x * v.z + u.z * v.x)
       + b1_ * (u.y * v.z + u.z * v.y);
}

}  // namespace tetrig
