#pragma once

#include <string>
#include <vector>

#include "tetrig/circum.hpp"

namespace tetrig {

// Sylvester criterion on the cached minors: a1 > 0, alpha3 > 0, delta > 0.
// Rational forms only; UnsupportedField otherwise.
bool is_positive_definite(const SymForm&);

struct OracleRow {
  std::string label;  // "Q01", "A012", "V", "E01", "R"
  double exact;       // exact invariant, as a double
  double classical;   // squared Euclidean measurement
  double abs_diff;
  double deviation;   // relative where exact != 0, absolute otherwise
};

/// Floating-point crosscheck against classical Euclidean geometry:
/// quadrance vs squared distance, quadrea vs 16 area^2, quadrume vs
/// 144 volume^2, dihedral spread vs sin^2 of the dihedral angle, and
/// circumquadrance vs squared circumradius. Read-only validation; never
/// feeds back into the exact path.
struct EuclideanOracleReport {
  std::vector<OracleRow> rows;
  double max_deviation;

  bool pass(double tol = 1e-9) const { return max_deviation < tol; }
};

// UnsupportedField, NotPositiveDefinite, DegenerateTetrahedron
EuclideanOracleReport euclidean_crosscheck(const Tetrahedron&);

}  // namespace tetrig
