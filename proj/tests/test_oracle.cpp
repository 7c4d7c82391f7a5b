#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "tetrig/oracle.hpp"

using namespace tetrig;
using namespace tetrig::testutil;

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(identity_form(rational())));
  CHECK_FALSE(is_positive_definite(diag_form(1, 1, -1, rational())));

  // all-twos diagonal with unit off-diagonals: minors 2, 3, 4
  Scalar two = q("2"), one = q("1");
  SymForm b = SymForm::from_entries(two, two, two, one, one, one);
  CHECK(b.alpha3() == q("3"));
  CHECK(b.delta() == q("4"));
  CHECK(is_positive_definite(b));

  CHECK_THROWS_AS(is_positive_definite(identity_form(FieldSpec::prime(7))), UnsupportedField);
}

TEST_CASE("crosscheck on the unit corner tetrahedron") {
  EuclideanOracleReport rep = euclidean_crosscheck(unit_standard());
  CHECK(rep.pass());
  CHECK(rep.rows.size() == 6 + 4 + 1 + 6 + 1);

  auto row = [&](const std::string& label) -> const OracleRow& {
    for (const OracleRow& r : rep.rows)
      if (r.label == label) return r;
    REQUIRE(false);
    return rep.rows.front();
  };

  // volume 1/6, so 144 vol^2 = 4
  CHECK(row("V").exact == doctest::Approx(4.0));
  CHECK(row("V").classical == doctest::Approx(4.0));

  // dihedral angle along edge 23 has cos = 1/sqrt(3)
  double expected_sin_sq = 1.0 - 1.0 / 3.0;
  CHECK(row("E23").exact == doctest::Approx(2.0 / 3.0));
  CHECK(row("E23").classical == doctest::Approx(expected_sin_sq));

  // sphere through the four points is centred at (1/2, 1/2, 1/2)
  CHECK(row("R").exact == doctest::Approx(0.75));
  CHECK(row("R").classical == doctest::Approx(0.75));
}

TEST_CASE("crosscheck holds on random positive definite instances") {
  GenOptions opt{rational(), 10, 10, 64};
  Rng rng = rng_for_trial(7050, 0);
  int done = 0;
  for (std::uint64_t trial = 0; done < 50; ++trial) {
    REQUIRE(trial < 5000);
    auto t = random_positive_definite_instance(rng, opt);
    if (!t) continue;
    ++done;
    REQUIRE(is_positive_definite(t->form()));
    EuclideanOracleReport rep = euclidean_crosscheck(*t);
    CHECK(rep.max_deviation < 1e-9);
  }
}

TEST_CASE("oracle preconditions") {
  FieldSpec s = rational();
  Tetrahedron indefinite(pt(0, 0, 0, s), pt(1, 0, 0, s), pt(0, 1, 0, s), pt(0, 0, 1, s),
                         diag_form(1, 1, -1, s));
  CHECK_THROWS_AS(euclidean_crosscheck(indefinite), NotPositiveDefinite);

  CHECK_THROWS_AS(euclidean_crosscheck(Tetrahedron::standard(identity_form(FieldSpec::prime(7)))),
                  UnsupportedField);

  Tetrahedron flat(pt(0, 0, 0, s), pt(1, 0, 0, s), pt(0, 1, 0, s),
                   Point3{q("1/2"), q("1/2"), q("0")}, identity_form(s));
  CHECK_THROWS_AS(euclidean_crosscheck(flat), DegenerateTetrahedron);
}
