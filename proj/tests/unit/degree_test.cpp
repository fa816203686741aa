#include <doctest.h>

#include <random>

#include "fuzzdir/degree.hpp"
#include "fuzzdir/errors.hpp"

using fuzzdir::Degree;
using fuzzdir::InputError;

TEST_SUITE("degrees-and-sets") {
  TEST_CASE("degree literals parse to reduced fractions") {
    CHECK(Degree::parse("0") == Degree::zero());
    CHECK(Degree::parse("1") == Degree::one());
    CHECK(Degree::parse("1.0") == Degree::one());
    CHECK(Degree::parse("0.3") == Degree(3, 10));
    CHECK(Degree::parse(".5") == Degree(1, 2));
    CHECK(Degree::parse("0.50") == Degree(1, 2));
    CHECK(Degree::parse("2/4") == Degree(1, 2));
    CHECK(Degree::parse("0.2").to_string() == "1/5");
    CHECK(Degree(6, 10).to_string() == "3/5");
    CHECK(Degree(0, 7).to_string() == "0");
    CHECK(Degree(7, 7).to_string() == "1");
  }

  TEST_CASE("out-of-range and malformed literals are rejected") {
    CHECK_THROWS_AS(Degree::parse("1.5"), InputError);
    CHECK_THROWS_AS(Degree::parse("-0.1"), InputError);
    CHECK_THROWS_AS(Degree::parse("3/2"), InputError);
    CHECK_THROWS_AS(Degree::parse("1/0"), InputError);
    CHECK_THROWS_AS(Degree::parse(""), InputError);
    CHECK_THROWS_AS(Degree::parse("."), InputError);
    CHECK_THROWS_AS(Degree::parse("0.x"), InputError);
    CHECK_THROWS_AS(Degree::parse("2"), InputError);
    CHECK_THROWS_AS(Degree(-1, 2), InputError);
  }

  TEST_CASE("ordering is exact") {
    CHECK(Degree(1, 3) < Degree(334, 1000));
    CHECK(Degree(333, 1000) < Degree(1, 3));
    CHECK(Degree::parse("0.1") == Degree(1, 10));
    CHECK(meet(Degree(1, 2), Degree(1, 5)) == Degree(1, 5));
    CHECK(join(Degree(1, 2), Degree(1, 5)) == Degree(1, 2));
  }

  TEST_CASE("meet and join form a bounded distributive lattice") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> den(1, 40);
    auto draw = [&] {
      const auto d = den(rng);
      return Degree(std::uniform_int_distribution<std::int64_t>(0, d)(rng), d);
    };
    for (int i = 0; i < 2000; ++i) {
      const Degree a = draw(), b = draw(), c = draw();
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
      CHECK(join(a, join(b, c)) == join(join(a, b), c));
      CHECK(meet(a, join(a, b)) == a);
      CHECK(join(a, meet(a, b)) == a);
      CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
      CHECK(meet(a, Degree::one()) == a);
      CHECK(join(a, Degree::zero()) == a);
      CHECK(Degree::parse(a.to_string()) == a);
    }
  }
}
