#include <catch2/catch_amalgamated.hpp>

#include "leibniz/field.hpp"

using namespace leibniz;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(5));
  CHECK(is_prime(104729));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational arithmetic is exact") {
  const FieldSpec f = FieldSpec::rationals();
  const Scalar third = f.div(f.one(), f.from_int(3));
  Scalar sum = f.zero();
  for (int i = 0; i < 3; ++i) sum = f.add(sum, third);
  CHECK(sum == f.one());
  CHECK(third.str() == "1/3");
  CHECK(f.neg(third).str() == "-1/3");
  CHECK(f.mul(f.from_int(-2), f.from_int(3)).str() == "-6");
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f = FieldSpec::gf(7);
  CHECK(f.from_int(-1).res() == 6);
  CHECK(f.add(f.from_int(5), f.from_int(4)).res() == 2);
  CHECK(f.sub(f.from_int(2), f.from_int(5)).res() == 4);
  for (int a = 1; a < 7; ++a) {
    const Scalar s = f.from_int(a);
    CHECK(f.mul(s, f.inv(s)) == f.one());
  }
  CHECK_THROWS_AS(f.inv(f.zero()), UsageError);
  CHECK_THROWS_AS(FieldSpec::gf(6), UsageError);
}

TEST_CASE("scalars from different fields cannot be mixed") {
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec g = FieldSpec::gf(2);
  CHECK_THROWS_AS(q.add(q.one(), g.one()), UsageError);
}

TEST_CASE("canonical parse accepts exactly the canonical forms") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(q.parse("0") == q.zero());
  CHECK(q.parse("-7") == q.from_int(-7));
  CHECK(q.parse("22/7") == q.div(q.from_int(22), q.from_int(7)));
  CHECK(q.parse("-22/7") == q.div(q.from_int(-22), q.from_int(7)));
  CHECK_THROWS_AS(q.parse("2/4"), UsageError);
  CHECK_THROWS_AS(q.parse("3/1"), UsageError);
  CHECK_THROWS_AS(q.parse("-0"), UsageError);
  CHECK_THROWS_AS(q.parse("+1"), UsageError);
  CHECK_THROWS_AS(q.parse("01"), UsageError);
  CHECK_THROWS_AS(q.parse("1/-2"), UsageError);
  CHECK_THROWS_AS(q.parse(""), UsageError);
  CHECK_THROWS_AS(q.parse("1.5"), UsageError);

  const FieldSpec g = FieldSpec::gf(5);
  CHECK(g.parse("4").res() == 4);
  CHECK_THROWS_AS(g.parse("5"), UsageError);
  CHECK_THROWS_AS(g.parse("-1"), UsageError);
  CHECK_THROWS_AS(g.parse("1/2"), UsageError);
}

TEST_CASE("str round-trips through parse") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* text : {"0", "1", "-1", "22/7", "-3/2", "1000000000000000000000"})
    CHECK(q.parse(text).str() == text);
}
