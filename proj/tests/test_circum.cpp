#include "doctest.h"
#include "test_util.hpp"
#include "tetrig/circum.hpp"

using namespace tetrig;
using namespace tetrig::testutil;

TEST_CASE("midplanes of the standard tetrahedron") {
  Tetrahedron t = unit_standard();
  Plane p01 = midplane(t, 0, 1);
  CHECK(p01.normal == Vec3{q("1"), q("0"), q("0")});
  CHECK(p01.through == Point3{q("1/2"), q("0"), q("0")});
  CHECK(plane_contains(p01, Point3{q("1/2"), q("7"), q("-3")}, t.form()));
  CHECK_FALSE(plane_contains(p01, Point3{q("1"), q("0"), q("0")}, t.form()));

  // membership against the explicit affine equations of the two planes
  GenOptions opt{rational(), 6, 4, 64};
  Rng rng = rng_for_trial(7030, 0);
  Scalar half = q("1/2");
  for (int trial = 0; trial < 40; ++trial) {
    SymForm b = random_nondegenerate_form(rng, opt);
    Tetrahedron st = Tetrahedron::standard(b);
    Point3 p{random_scalar(rng, opt), random_scalar(rng, opt), random_scalar(rng, opt)};

    bool on01 = b.a1() * p.x + b.b3() * p.y + b.b2() * p.z == half * b.a1();
    CHECK(plane_contains(midplane(st, 0, 1), p, b) == on01);

    bool on23 = (b.b2() - b.b3()) * p.x + (b.b1() - b.a2()) * p.y + (b.a3() - b.b1()) * p.z ==
                half * (b.a3() - b.a2());
    CHECK(plane_contains(midplane(st, 2, 3), p, b) == on23);
  }
}

TEST_CASE("circumcentre of the unit corner tetrahedron") {
  CircumResult c = circumcentre(unit_standard());
  CHECK(c.centre == Point3{q("1/2"), q("1/2"), q("1/2")});
  CHECK(c.circumquadrance == q("3/4"));
}

TEST_CASE("circumcentre under diag(1,2,3)") {
  // hand-derived: centre [1/2,1/2,1/2], R = (1 + 2 + 3) / 4
  CircumResult c = circumcentre(Tetrahedron::standard(diag_form(1, 2, 3, rational())));
  CHECK(c.centre == Point3{q("1/2"), q("1/2"), q("1/2")});
  CHECK(c.circumquadrance == q("3/2"));
}

TEST_CASE("closed-form centre solves the first three equations") {
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(101)}) {
    GenOptions opt{spec, 8, 5, 64};
    Rng rng = rng_for_trial(7031, spec.kind() == FieldKind::rational ? 0 : 1);
    Scalar half = Scalar::one(spec) / Scalar::of(2, spec);
    for (int trial = 0; trial < 50; ++trial) {
      SymForm b = random_nondegenerate_form(rng, opt);
      Point3 c = standard_circumcentre(b);
      Vec3 cv{c.x, c.y, c.z};
      // row i of B times the centre equals a_i / 2
      Mat3 m = b.matrix();
      CHECK(m.row(0).x * cv.x + m.row(0).y * cv.y + m.row(0).z * cv.z == half * b.a1());
      CHECK(m.row(1).x * cv.x + m.row(1).y * cv.y + m.row(1).z * cv.z == half * b.a2());
      CHECK(m.row(2).x * cv.x + m.row(2).y * cv.y + m.row(2).z * cv.z == half * b.a3());
    }
  }
}

TEST_CASE("all six midplane equations hold at the closed-form centre") {
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(101)}) {
    GenOptions opt{spec, 8, 5, 64};
    Rng rng = rng_for_trial(7032, spec.kind() == FieldKind::rational ? 0 : 1);
    for (int trial = 0; trial < 100; ++trial) {
      SymForm b = random_nondegenerate_form(rng, opt);
      for (const Scalar& res : standard_concurrency_residuals(b)) CHECK(res.is_zero());
    }
  }
}

TEST_CASE("equidistance from all four points") {
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(101)}) {
    GenOptions opt{spec, 6, 4, 64};
    Rng rng = rng_for_trial(7033, spec.kind() == FieldKind::rational ? 0 : 1);
    int done = 0;
    for (std::uint64_t trial = 0; done < 40; ++trial) {
      REQUIRE(trial < 4000);
      auto t = random_instance(rng, opt);
      if (!t) continue;
      ++done;
      CircumResult c = circumcentre(*t);
      for (int i = 0; i < 4; ++i)
        CHECK(t->form().quad(c.centre - t->point(i)) == c.circumquadrance);
    }
  }
}

TEST_CASE("crelle formula") {
  CHECK(crelle_circumquadrance(unit_standard()) == q("3/4"));

  GenOptions opt{rational(), 8, 5, 64};
  Rng rng = rng_for_trial(7034, 0);
  Scalar sixteen = Scalar::of(16, rational());
  for (int trial = 0; trial < 40; ++trial) {
    SymForm b = random_nondegenerate_form(rng, opt);
    Tetrahedron st = Tetrahedron::standard(b);
    Scalar closed = archimedes(b.a1() * b.r1(), b.a2() * b.r2(), b.a3() * b.r3()) /
                    (sixteen * b.delta());
    CHECK(crelle_circumquadrance(st) == closed);
    CHECK(standard_circumquadrance(b) == closed);

    // same value written out in the form's entries; the middle factor is
    // linear, a1 + a2 + a3 - 2 (b1 + b2 + b3)
    Scalar two = Scalar::of(2, rational());
    Scalar linear = b.a1() + b.a2() + b.a3() - two * (b.b1() + b.b2() + b.b3());
    Scalar entry_level =
        (archimedes(b.a1() * b.b1(), b.a2() * b.b2(), b.a3() * b.b3()) +
         b.a1() * b.a2() * b.a3() * linear) /
        (Scalar::of(4, rational()) * b.delta());
    CHECK(entry_level == closed);
  }
}

TEST_CASE("crelle equals the circumcentre quadrance on random instances") {
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(101)}) {
    GenOptions opt{spec, 6, 4, 64};
    Rng rng = rng_for_trial(7035, spec.kind() == FieldKind::rational ? 0 : 1);
    int done = 0;
    for (std::uint64_t trial = 0; done < 60; ++trial) {
      REQUIRE(trial < 6000);
      auto t = random_instance(rng, opt);
      if (!t) continue;
      ++done;
      CHECK(crelle_circumquadrance(*t) == circumcentre(*t).circumquadrance);
    }
  }
}

TEST_CASE("degenerate tetrahedra are rejected") {
  FieldSpec s = rational();
  Tetrahedron flat(pt(0, 0, 0, s), pt(1, 0, 0, s), pt(0, 1, 0, s),
                   Point3{q("1/2"), q("1/2"), q("0")}, identity_form(s));
  CHECK_THROWS_AS(circumcentre(flat), DegenerateTetrahedron);
  CHECK_THROWS_AS(crelle_circumquadrance(flat), DegenerateTetrahedron);
}
