#include <doctest.h>

#include "fuzzdir/fuzzy_set.hpp"
#include "fuzzdir/state_set.hpp"
#include "support/helpers.hpp"

using namespace fuzzdir;
using testing::deg;

TEST_SUITE("degrees-and-sets") {
  TEST_CASE("state sets") {
    StateSet s(70, {1, 65});
    CHECK(s.size() == 2);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(64));
    CHECK(s.members() == std::vector<StateId>{1, 65});
    CHECK(StateSet::full(70).size() == 70);
    CHECK(s.is_subset_of(StateSet::full(70)));
    CHECK(s.intersects(StateSet::singleton(70, 1)));
    CHECK_FALSE(s.intersects(StateSet::singleton(70, 2)));
    CHECK(StateSet(3).empty());
    CHECK((StateSet(3, {0}) | StateSet(3, {2})) == StateSet(3, {0, 2}));
    CHECK((StateSet(3, {0, 1}) & StateSet(3, {1, 2})) == StateSet(3, {1}));
    CHECK(StateSet(3, {0, 2}) < StateSet(3, {1}));
  }

  TEST_CASE("support keeps exactly the positive states") {
    const FuzzyStateSet s(3, {{0, deg("1/2")}, {1, deg("0")}, {2, deg("1/5")}});
    CHECK(support(s) == StateSet(3, {0, 2}));
    CHECK(support(FuzzyStateSet(3)).empty());
    CHECK(support(FuzzyStateSet(3, {{1, deg("1")}})) == StateSet(3, {1}));
    CHECK(s[1] == Degree::zero());
    CHECK(s.height() == deg("1/2"));
  }

  TEST_CASE("normal fuzzy sets attain 1") {
    CHECK(is_normal_fuzzy_set(FuzzyStateSet(2, {{0, deg("1")}, {1, deg("1/2")}})));
    CHECK_FALSE(is_normal_fuzzy_set(FuzzyStateSet(2, {{0, deg("1/2")}})));
    CHECK_FALSE(is_normal_fuzzy_set(FuzzyStateSet(2)));
  }

  TEST_CASE("pointwise join") {
    FuzzyStateSet a(3, {{0, deg("1/2")}, {1, deg("1/5")}});
    a |= FuzzyStateSet(3, {{1, deg("1/2")}, {2, deg("1")}});
    CHECK(a == FuzzyStateSet(3, {{0, deg("1/2")}, {1, deg("1/2")}, {2, deg("1")}}));
  }
}
