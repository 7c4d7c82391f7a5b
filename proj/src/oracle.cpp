#include "tetrig/oracle.hpp"

#include <cmath>

namespace tetrig {

namespace {

struct D3 {
  double v[3];
  double operator[](int i) const { return v[i]; }
};

D3 sub(const D3& a, const D3& b) { return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}; }
double dot(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
D3 cross(const D3& a, const D3& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

double det3(const D3& r0, const D3& r1, const D3& r2) { return dot(r0, cross(r1, r2)); }

// B = L L^T with L lower triangular; valid since B is positive definite.
void cholesky(const double b[3][3], double l[3][3]) {
  l[0][0] = std::sqrt(b[0][0]);
  l[0][1] = 0.0;
  l[0][2] = 0.0;
  l[1][0] = b[1][0] / l[0][0];
  l[1][1] = std::sqrt(b[1][1] - l[1][0] * l[1][0]);
  l[1][2] = 0.0;
  l[2][0] = b[2][0] / l[0][0];
  l[2][1] = (b[2][1] - l[2][0] * l[1][0]) / l[1][1];
  l[2][2] = std::sqrt(b[2][2] - l[2][0] * l[2][0] - l[2][1] * l[2][1]);
}

// squared circumradius of four points: solve 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2
double circumradius_sq(const D3 p[4]) {
  D3 rows[3];
  double rhs[3];
  for (int i = 1; i <= 3; ++i) {
    D3 d = sub(p[i], p[0]);
    rows[i - 1] = {{2 * d[0], 2 * d[1], 2 * d[2]}};
    rhs[i - 1] = dot(p[i], p[i]) - dot(p[0], p[0]);
  }
  double det = det3(rows[0], rows[1], rows[2]);
  D3 col_rhs{{rhs[0], rhs[1], rhs[2]}};
  // Cramer's rule, replacing one column at a time
  D3 c{{0, 0, 0}};
  for (int j = 0; j < 3; ++j) {
    D3 m[3];
    for (int i = 0; i < 3; ++i) {
      m[i] = rows[i];
      m[i].v[j] = col_rhs[i];
    }
    c.v[j] = det3(m[0], m[1], m[2]) / det;
  }
  D3 d = sub(c, p[0]);
  return dot(d, d);
}

double deviation_of(double exact, double classical) {
  double diff = std::fabs(exact - classical);
  return exact != 0.0 ? diff / std::fabs(exact) : diff;
}

}  // namespace

bool is_positive_definite(const SymForm& b) {
  if (b.spec().kind() != FieldKind::rational)
    throw UnsupportedField("positive definiteness is undefined over " + b.spec().str());
  return b.a1().sign() > 0 && b.alpha3().sign() > 0 && b.delta().sign() > 0;
}

EuclideanOracleReport euclidean_crosscheck(const Tetrahedron& t) {
  if (!is_positive_definite(t.form()))
    throw NotPositiveDefinite("form is not positive definite");
  MetricReport rep = metric_report(t);
  if (rep.quadrume.is_zero()) throw DegenerateTetrahedron("flat tetrahedron: quadrume = 0");
  CircumResult circ = circumcentre(t);

  double bm[3][3];
  {
    Mat3 m = t.form().matrix();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) bm[r][c] = m.at(r, c).to_double();
  }
  double l[3][3];
  cholesky(bm, l);

  // map row vectors by L so that Euclidean lengths realise the form
  D3 p[4];
  for (int i = 0; i < 4; ++i) {
    const Point3& a = t.point(i);
    double row[3] = {a.x.to_double(), a.y.to_double(), a.z.to_double()};
    for (int j = 0; j < 3; ++j)
      p[i].v[j] = row[0] * l[0][j] + row[1] * l[1][j] + row[2] * l[2][j];
  }

  EuclideanOracleReport report{{}, 0.0};
  auto push = [&](std::string label, double exact, double classical) {
    double diff = std::fabs(exact - classical);
    double dev = deviation_of(exact, classical);
    if (dev > report.max_deviation) report.max_deviation = dev;
    report.rows.push_back({std::move(label), exact, classical, diff, dev});
  };

  for (int slot = 0; slot < kEdgeCount; ++slot) {
    const auto& e = kEdges[static_cast<std::size_t>(slot)];
    D3 d = sub(p[e[1]], p[e[0]]);
    push("Q" + edge_label(slot), rep.quadrances[static_cast<std::size_t>(slot)].to_double(),
         dot(d, d));
  }

  for (int slot = 0; slot < kFaceCount; ++slot) {
    const auto& f = kFaces[static_cast<std::size_t>(slot)];
    D3 u = sub(p[f[1]], p[f[0]]), v = sub(p[f[2]], p[f[0]]);
    D3 c = cross(u, v);
    // 16 area^2 = 4 |u x v|^2
    push("A" + face_label(slot), rep.quadreas[static_cast<std::size_t>(slot)].to_double(),
         4.0 * dot(c, c));
  }

  {
    double vol6 = det3(sub(p[1], p[0]), sub(p[2], p[0]), sub(p[3], p[0]));
    // 144 volume^2 = 4 (6 volume)^2
    push("V", rep.quadrume.to_double(), 4.0 * vol6 * vol6);
  }

  for (int slot = 0; slot < kEdgeCount; ++slot) {
    const auto& e = kEdges[static_cast<std::size_t>(slot)];
    int k = -1, m = -1;
    for (int vert = 0; vert < 4; ++vert) {
      if (vert == e[0] || vert == e[1]) continue;
      (k < 0 ? k : m) = vert;
    }
    D3 axis = sub(p[e[1]], p[e[0]]);
    D3 n1 = cross(axis, sub(p[k], p[e[0]]));
    D3 n2 = cross(axis, sub(p[m], p[e[0]]));
    // sin^2 via the cross product; avoids cancellation in 1 - cos^2 for
    // nearly-flat dihedral angles
    D3 nn = cross(n1, n2);
    double sin_sq = dot(nn, nn) / (dot(n1, n1) * dot(n2, n2));
    push("E" + edge_label(slot), rep.spreads[static_cast<std::size_t>(slot)].value().to_double(),
         sin_sq);
  }

  push("R", circ.circumquadrance.to_double(), circumradius_sq(p));
  return report;
}

}  // namespace tetrig
