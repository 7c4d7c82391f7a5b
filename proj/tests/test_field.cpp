#include <regex>

#include "doctest.h"
#include "test_util.hpp"
#include "tetrig/field.hpp"

using namespace tetrig;
using namespace tetrig::testutil;

TEST_CASE("field spec construction and parsing") {
  CHECK(FieldSpec::rational().kind() == FieldKind::rational);
  CHECK(FieldSpec::prime(7).modulus() == 7);
  CHECK(FieldSpec::parse("rational") == FieldSpec::rational());
  CHECK(FieldSpec::parse("prime:101") == FieldSpec::prime(101));
  CHECK(FieldSpec::prime(101).str() == "prime:101");

  CHECK_THROWS_AS(FieldSpec::prime(2), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(3), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(9), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(1), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("prime:"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("prime:abc"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("real"), ParseError);
}

TEST_CASE("scalar parsing normalises") {
  CHECK(q("3/6").str() == "1/2");
  CHECK(q("0/9").str() == "0");
  CHECK(q("-4/6").str() == "-2/3");
  CHECK(q("007").str() == "7");
  CHECK(fp("-5", 7).str() == "2");
  CHECK(fp("15", 7).str() == "1");
  CHECK(fp("123456789123456789", 101) ==
        Scalar::of(123456789123456789LL % 101, FieldSpec::prime(101)));

  CHECK_THROWS_AS(q("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(q("abc"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
  CHECK_THROWS_AS(q("-"), ParseError);
  CHECK_THROWS_AS(q("1/"), ParseError);
  CHECK_THROWS_AS(q("/2"), ParseError);
  CHECK_THROWS_AS(q("1.5"), ParseError);
  CHECK_THROWS_AS(q(" 1"), ParseError);
  CHECK_THROWS_AS(fp("1/2", 7), ParseError);
}

TEST_CASE("scalar arithmetic examples") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar::of(3, f7) * Scalar::of(5, f7) == Scalar::of(1, f7));

  // inverse of 4 mod 7, checked against exhaustive search
  Scalar inv = Scalar::one(f7) / Scalar::of(4, f7);
  int expected = -1;
  for (int x = 0; x < 7; ++x)
    if ((4 * x) % 7 == 1) expected = x;
  REQUIRE(expected == 2);
  CHECK(inv == Scalar::of(expected, f7));

  CHECK_THROWS_AS(q("1") / q("0"), ZeroDenominator);
  CHECK_THROWS_AS(Scalar::one(f7) / Scalar::zero(f7), ZeroDenominator);
  CHECK_THROWS_AS(q("1") + Scalar::one(f7), FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(FieldSpec::prime(5)) + Scalar::one(f7), FieldMismatch);
}

TEST_CASE("rational-only views") {
  CHECK(q("-3/4").sign() == -1);
  CHECK(q("0").sign() == 0);
  CHECK(q("3/4").to_double() == doctest::Approx(0.75));
  CHECK_THROWS_AS(fp("1", 7).sign(), UnsupportedField);
  CHECK_THROWS_AS(fp("1", 7).to_double(), UnsupportedField);
}

TEST_CASE("field axioms hold on random triples") {
  const std::regex rational_grammar("^-?[0-9]+(/[1-9][0-9]*)?$");
  const std::regex residue_grammar("^[0-9]+$");

  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(101)}) {
    GenOptions opt{spec, 20, 10, 64};
    Rng rng = rng_for_trial(7001, spec.kind() == FieldKind::rational ? 0 : 1);
    for (int trial = 0; trial < 300; ++trial) {
      Scalar a = random_scalar(rng, opt), b = random_scalar(rng, opt),
             c = random_scalar(rng, opt);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK(a / a == Scalar::one(spec));
        CHECK(a * (Scalar::one(spec) / a) == Scalar::one(spec));
      }

      // round trip through the text grammar
      CHECK(Scalar::parse(a.str(), spec) == a);
      const std::regex& grammar =
          spec.kind() == FieldKind::rational ? rational_grammar : residue_grammar;
      CHECK(std::regex_match(a.str(), grammar));
    }
  }
}
