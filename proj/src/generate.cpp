#include "tetrig/generate.hpp"

namespace tetrig {

namespace {

// Modulo reduction keeps draws identical across standard libraries; the
// slight bias is irrelevant for sampling test instances.
std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

long long in_range(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Point3 random_point(Rng& rng, const GenOptions& opt) {
  Scalar x = random_scalar(rng, opt);
  Scalar y = random_scalar(rng, opt);
  Scalar z = random_scalar(rng, opt);
  return {x, y, z};
}

std::optional<SymForm> random_form(Rng& rng, const GenOptions& opt) {
  for (int attempt = 0; attempt < opt.retry_cap; ++attempt) {
    Scalar a1 = random_scalar(rng, opt), a2 = random_scalar(rng, opt),
           a3 = random_scalar(rng, opt);
    Scalar b1 = random_scalar(rng, opt), b2 = random_scalar(rng, opt),
           b3 = random_scalar(rng, opt);
    try {
      return SymForm::from_entries(a1, a2, a3, b1, b2, b3);
    } catch (const DegenerateForm&) {
      continue;
    }
  }
  return std::nullopt;
}

std::optional<SymForm> random_pd_form(Rng& rng, const GenOptions& opt) {
  Vec3 r0{random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt)};
  Vec3 r1{random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt)};
  Vec3 r2{random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt)};
  Mat3 g = Mat3::from_rows(r0, r1, r2);
  Mat3 b = g * g.transpose();
  Mat3 shifted(b.at(0, 0) + Scalar::one(opt.spec), b.at(0, 1), b.at(0, 2),
               b.at(1, 0), b.at(1, 1) + Scalar::one(opt.spec), b.at(1, 2),
               b.at(2, 0), b.at(2, 1), b.at(2, 2) + Scalar::one(opt.spec));
  return SymForm::from_matrix(shifted);
}

std::optional<Tetrahedron> random_tetra_for_form(Rng& rng, const GenOptions& opt,
                                                 const SymForm& form) {
  for (int attempt = 0; attempt < opt.retry_cap; ++attempt) {
    Point3 a0 = random_point(rng, opt), a1 = random_point(rng, opt);
    Point3 a2 = random_point(rng, opt), a3 = random_point(rng, opt);
    Mat3 edges = Mat3::from_rows(a1 - a0, a2 - a0, a3 - a0);
    if (edges.det().is_zero()) continue;
    Tetrahedron t(a0, a1, a2, a3, form);
    bool null_face = false;
    for (const auto& f : kFaces) {
      if (quadrea(t, f[0], f[1], f[2]).is_zero()) {
        null_face = true;
        break;
      }
    }
    if (null_face) continue;
    return t;
  }
  return std::nullopt;
}

}  // namespace

Rng rng_for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(seed + trial); }

Scalar random_scalar(Rng& rng, const GenOptions& opt) {
  long long num = in_range(rng, -opt.coord_bound, opt.coord_bound);
  if (opt.spec.kind() == FieldKind::prime) return Scalar::of(num, opt.spec);
  long long den = in_range(rng, 1, opt.denom_bound);
  return Scalar::of(num, opt.spec) / Scalar::of(den, opt.spec);
}

Scalar random_nonzero_scalar(Rng& rng, const GenOptions& opt) {
  for (;;) {
    Scalar s = random_scalar(rng, opt);
    if (!s.is_zero()) return s;
  }
}

std::array<Scalar, 6> random_sextuple(Rng& rng, const GenOptions& opt) {
  return {random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt),
          random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt)};
}

std::optional<Tetrahedron> random_instance(Rng& rng, const GenOptions& opt) {
  std::optional<SymForm> form = random_form(rng, opt);
  if (!form) return std::nullopt;
  return random_tetra_for_form(rng, opt, *form);
}

std::optional<Tetrahedron> random_positive_definite_instance(Rng& rng, const GenOptions& opt) {
  if (opt.spec.kind() != FieldKind::rational)
    throw UnsupportedField("positive definite instances require the rational field");
  std::optional<SymForm> form = random_pd_form(rng, opt);
  if (!form) return std::nullopt;
  return random_tetra_for_form(rng, opt, *form);
}

}  // namespace tetrig
