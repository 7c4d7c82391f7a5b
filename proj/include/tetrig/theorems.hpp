#pragma once

#include <string>
#include <vector>

#include "tetrig/circum.hpp"

namespace tetrig {

// Minus the determinant of the symmetric hollow 4x4 matrix whose (i,j)
// entry is the spread at edge ij.
Scalar spread_matrix_det(const std::array<Scalar, 6>& spreads);
Scalar spread_matrix_det(const MetricReport&);  // MissingSpread if any absent

// archimedes of the three opposite-edge spread products; conjecturally (and
// on every instance checked) equal to spread_matrix_det.
Scalar spread_product_archimedes(const std::array<Scalar, 6>& spreads);
Scalar spread_product_archimedes(const MetricReport&);  // MissingSpread

// archimedes of the three opposite-edge quadrance products.
Scalar quadrance_product_archimedes(const std::array<Scalar, 6>& quadrances);

// K = 16 V^2 / (A012 A013 A023 A123); NullTriangle when a quadrea vanishes.
Scalar richardson_number(const Tetrahedron&);

struct TheoremCheck {
  std::string name;
  Scalar lhs, rhs;
  bool pass;  // lhs == rhs exactly
};

struct VerifyReport {
  std::vector<TheoremCheck> checks;
  Scalar m;  // spread_product_archimedes of the instance
  Scalar n;  // quadrance_product_archimedes of the instance
  Scalar k;  // richardson_number of the instance

  bool all_pass() const;
};

/// Evaluates both sides of every identity exactly on one instance:
///   midplane-concurrency    closed-form centre solves all six equations
///   crelle-circumquadrance  quadrance-only route = circumcentre route
///   circumquadrance-spread  (A012 A013 A023 A123)^2 M = 1024 V^5 R
///   quadrance-product-form  (A012 A013 A023 A123)^2 M = 256 V^4 N
///   spread-ratio            E_ij E_kl = K Q_ij Q_kl, all three pairs
///   spread-matrix-identity  determinant route for M = archimedes route
///   m-richardson-relation   M = K^2 N
VerifyReport verify_all(const Tetrahedron&);  // DegenerateTetrahedron, NullTriangle

}  // namespace tetrig
