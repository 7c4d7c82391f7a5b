#include "tetrig/theorems.hpp"

#include <utility>

namespace tetrig {

namespace {

std::array<Scalar, 6> require_spreads(const MetricReport& rep) {
  for (int slot = 0; slot < kEdgeCount; ++slot) {
    if (!rep.spreads[static_cast<std::size_t>(slot)])
      throw MissingSpread("spread absent at edge " + edge_label(slot));
  }
  return {*rep.spreads[0], *rep.spreads[1], *rep.spreads[2],
          *rep.spreads[3], *rep.spreads[4], *rep.spreads[5]};
}

Scalar det4(const std::array<Scalar, 16>& m) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    auto e = [&](int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; };
    return e(r0, c0) * (e(r1, c1) * e(r2, c2) - e(r1, c2) * e(r2, c1))
         - e(r0, c1) * (e(r1, c0) * e(r2, c2) - e(r1, c2) * e(r2, c0))
         + e(r0, c2) * (e(r1, c0) * e(r2, c1) - e(r1, c1) * e(r2, c0));
  };
  return m[0] * det3(1, 2, 3, 1, 2, 3) - m[1] * det3(1, 2, 3, 0, 2, 3)
       + m[2] * det3(1, 2, 3, 0, 1, 3) - m[3] * det3(1, 2, 3, 0, 1, 2);
}

}  // namespace

Scalar spread_matrix_det(const std::array<Scalar, 6>& e) {
  Scalar z = Scalar::zero(e[0].spec());
  // rows/cols are vertices; entry (i,j) is the spread at edge ij
  std::array<Scalar, 16> m{z,    e[0], e[1], e[2],
                           e[0], z,    e[3], e[4],
                           e[1], e[3], z,    e[5],
                           e[2], e[4], e[5], z};
  return -det4(m);
}

Scalar spread_matrix_det(const MetricReport& rep) {
  return spread_matrix_det(require_spreads(rep));
}

Scalar spread_product_archimedes(const std::array<Scalar, 6>& e) {
  return archimedes(e[0] * e[5], e[1] * e[4], e[2] * e[3]);
}

Scalar spread_product_archimedes(const MetricReport& rep) {
  return spread_product_archimedes(require_spreads(rep));
}

Scalar quadrance_product_archimedes(const std::array<Scalar, 6>& q) {
  return archimedes(q[0] * q[5], q[1] * q[4], q[2] * q[3]);
}

Scalar richardson_number(const Tetrahedron& t) {
  MetricReport rep = metric_report(t);
  for (int slot = 0; slot < kFaceCount; ++slot) {
    if (rep.quadreas[static_cast<std::size_t>(slot)].is_zero())
      throw NullTriangle("null face " + face_label(slot) + ": zero quadrea");
  }
  Scalar v = rep.quadrume;
  Scalar prod = rep.quadreas[0] * rep.quadreas[1] * rep.quadreas[2] * rep.quadreas[3];
  return Scalar::of(16, t.spec()) * v * v / prod;
}

bool VerifyReport::all_pass() const {
  for (const TheoremCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

VerifyReport verify_all(const Tetrahedron& t) {
  FieldSpec s = t.spec();
  MetricReport rep = metric_report(t);
  if (rep.quadrume.is_zero()) throw DegenerateTetrahedron("flat tetrahedron: quadrume = 0");
  for (int slot = 0; slot < kFaceCount; ++slot) {
    if (rep.quadreas[static_cast<std::size_t>(slot)].is_zero())
      throw NullTriangle("null face " + face_label(slot) + ": zero quadrea");
  }
  std::array<Scalar, 6> e = require_spreads(rep);

  Scalar m_arch = spread_product_archimedes(e);
  Scalar m_det = spread_matrix_det(e);
  Scalar n = quadrance_product_archimedes(rep.quadrances);
  Scalar v = rep.quadrume;
  Scalar quadrea_prod = rep.quadreas[0] * rep.quadreas[1] * rep.quadreas[2] * rep.quadreas[3];
  Scalar k = Scalar::of(16, s) * v * v / quadrea_prod;

  auto [map, induced] = map_to_standard(t);
  (void)map;
  CircumResult circ = circumcentre(t);

  std::vector<TheoremCheck> checks;
  auto add = [&](std::string name, Scalar lhs, Scalar rhs) {
    bool pass = lhs == rhs;
    checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
  };

  // concurrency: record the first violated midplane equation, if any
  {
    auto residuals = standard_concurrency_residuals(induced);
    Scalar offender = Scalar::zero(s);
    for (const Scalar& res : residuals) {
      if (!res.is_zero()) {
        offender = res;
        break;
      }
    }
    add("midplane-concurrency", offender, Scalar::zero(s));
  }

  add("crelle-circumquadrance", crelle_circumquadrance(t), circ.circumquadrance);

  Scalar lhs_main = quadrea_prod * quadrea_prod * m_arch;
  Scalar v4 = v * v * v * v;
  add("circumquadrance-spread", lhs_main, Scalar::of(1024, s) * v4 * v * circ.circumquadrance);
  add("quadrance-product-form", lhs_main, Scalar::of(256, s) * v4 * n);

  // spread-ratio in cross-multiplied form, total over any field:
  // E_ij E_kl = K Q_ij Q_kl for the three opposite edge pairs
  {
    bool violated = false;
    for (int slot = 0; slot < 3 && !violated; ++slot) {
      std::size_t a = static_cast<std::size_t>(slot);
      std::size_t b = static_cast<std::size_t>(kOppositeEdge[a]);
      Scalar lhs = e[a] * e[b];
      Scalar rhs = k * rep.quadrances[a] * rep.quadrances[b];
      if (lhs != rhs) {
        add("spread-ratio", lhs, rhs);
        violated = true;
      }
    }
    if (!violated)
      add("spread-ratio", e[0] * e[5], k * rep.quadrances[0] * rep.quadrances[5]);
  }

  add("spread-matrix-identity", m_det, m_arch);
  add("m-richardson-relation", m_arch, k * k * n);

  return VerifyReport{std::move(checks), std::move(m_arch), std::move(n), std::move(k)};
}

}  // namespace tetrig
