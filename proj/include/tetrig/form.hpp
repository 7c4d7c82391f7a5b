#pragma once

#include "tetrig/linalg.hpp"

namespace tetrig {

/// Invertible symmetric bilinear form
///
///   | a1 b3 b2 |
///   | b3 a2 b1 |
///   | b2 b1 a3 |
///
/// with its derived quantities cached at construction: the determinant
/// delta, the adjugate entries alpha_i (diagonal) and beta_i
/// (off-diagonal), the sums r_i = a_j + a_k - 2 b_i over {i,j,k} = {1,2,3},
/// and adj_sum, the sum of all nine adjugate entries. A zero determinant is
/// rejected.
class SymForm {
 public:
  static SymForm from_matrix(const Mat3&);  // NonSymmetricForm, DegenerateForm
  static SymForm from_entries(Scalar a1, Scalar a2, Scalar a3,
                              Scalar b1, Scalar b2, Scalar b3);

  const Scalar& a1() const { return a1_; }
  const Scalar& a2() const { return a2_; }
  const Scalar& a3() const { return a3_; }
  const Scalar& b1() const { return b1_; }
  const Scalar& b2() const { return b2_; }
  const Scalar& b3() const { return b3_; }
  const Scalar& delta() const { return delta_; }
  const Scalar& alpha1() const { return alpha1_; }
  const Scalar& alpha2() const { return alpha2_; }
  const Scalar& alpha3() const { return alpha3_; }
  const Scalar& beta1() const { return beta1_; }
  const Scalar& beta2() const { return beta2_; }
  const Scalar& beta3() const { return beta3_; }
  const Scalar& r1() const { return r1_; }
  const Scalar& r2() const { return r2_; }
  const Scalar& r3() const { return r3_; }
  const Scalar& adj_sum() const { return adj_sum_; }

  Mat3 matrix() const;
  Mat3 adjugate() const;
  FieldSpec spec() const { return a1_.spec(); }

  Scalar dot(const Vec3& u, const Vec3& v) const;  // u B v^T
  Scalar quad(const Vec3& v) const { return dot(v, v); }
  bool is_null(const Vec3& v) const { return quad(v).is_zero(); }

  bool operator==(const SymForm&) const = default;

 private:
  SymForm(Scalar a1, Scalar a2, Scalar a3, Scalar b1, Scalar b2, Scalar b3);

  Scalar a1_, a2_, a3_, b1_, b2_, b3_;
  Scalar delta_;
  Scalar alpha1_, alpha2_, alpha3_, beta1_, beta2_, beta3_;
  Scalar r1_, r2_, r3_;
  Scalar adj_sum_;
};

}  // namespace tetrig
