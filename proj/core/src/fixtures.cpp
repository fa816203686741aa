#include "fuzzdir/fixtures.hpp"

#include "fuzzdir/errors.hpp"
#include "fuzzdir/text_format.hpp"

namespace fuzzdir {

namespace {

struct Source {
  const char* name;
  const char* description;
  const char* text;
};

// Degrees follow the published examples; where only positivity is given the
// degree is 1. P61hG swaps the two degrees leaving a: with f(a,x,a) = 1 every
// row of a peaks at a and no word is DD3-directing.
constexpr Source kSources[] = {
    {"EX31", "three-state FFA with fractional degrees; D3-directed by xx",
     "kind: ffa\nstates: a b c\nalphabet: x y\n"
     "trans: a x b 3/10\ntrans: b x c 2/5\ntrans: c x b 1/5\ntrans: c x c 3/5\n"
     "trans: b y b 1/2\ntrans: b y c 1/10\n"},
    {"EX38", "every pair of states D3-merges, yet no D3-directing word exists (incomplete)",
     "kind: ffa\nstates: a b c\nalphabet: x y z\n"
     "trans: a x a 1\ntrans: b x a 1\ntrans: b y b 1\ntrans: c y b 1\n"
     "trans: a z c 1\ntrans: c z c 1\n"},
    {"P41a", "all x-degrees 1: DD2 and DD3 but not DD1",
     "kind: ffa\nstates: a b\nalphabet: x\n"
     "trans: a x a 1\ntrans: a x b 1\ntrans: b x a 1\ntrans: b x b 1\n"},
    {"P41b", "D2-directed by x but not DD2-directed",
     "kind: ffa\nstates: a b\nalphabet: x\n"
     "trans: a x b 1/10\ntrans: b x b 1/5\n"},
    {"N44", "not normal; left-ideal law fails for DD1 and DD2",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\ntrans: a y a 1/2\n"},
    {"P55n", "normal FFA with DD1 = X*x",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\ntrans: b y a 1\ntrans: b y b 1\n"},
    {"P56", "crisp FFA whose DD3 language is no DD1 language of any FFA",
     "kind: ffa\nstates: p q\nalphabet: x y\n"
     "trans: p x q 1\ntrans: q x p 1\ntrans: q x q 1\ntrans: p y p 1\n"},
    {"P58", "crisp FFA whose DD3 language is no DD2 language of any FFA",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x a 1\ntrans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\n"},
    {"P61b", "all x-degrees 1: in DD(2) and DD(3) but not DD(1)",
     "kind: ffa\nstates: a b\nalphabet: x\n"
     "trans: a x a 1\ntrans: a x b 1\ntrans: b x a 1\ntrans: b x b 1\n"},
    {"P61cF", "normal, DD(3) but not DD(2)",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x a 1/5\ntrans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\ntrans: b y b 1\n"},
    {"P61cG", "DD2-directed with empty rows; not complete",
     "kind: ffa\nstates: a b\nalphabet: x\n"
     "trans: a x b 1\n"},
    {"P61gF", "DD-directable, paired with EX65G in the product example",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\n"},
    {"P61hF", "non-normal one-letter FFA with degree 1/2 rows",
     "kind: ffa\nstates: a b\nalphabet: x\n"
     "trans: a x b 1/2\ntrans: b x b 1/2\n"},
    {"P61hG", "normal and DD3-directable without DD2-words",
     "kind: ffa\nstates: a b c\nalphabet: x\n"
     "trans: a x a 1/2\ntrans: a x b 1\ntrans: b x c 1\ntrans: c x c 1\n"},
    {"P61l", "crisp, normal and D1-directable but not deterministic",
     "kind: ffa\nstates: a b c\nalphabet: x\n"
     "trans: a x b 1\ntrans: a x c 1\ntrans: b x c 1\ntrans: c x c 1\n"},
    {"EX65F", "first factor of the product example",
     "kind: ffa\nstates: a b\nalphabet: x y\n"
     "trans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\n"},
    {"EX65G", "second factor of the product example",
     "kind: ffa\nstates: 1 2\nalphabet: x y\n"
     "trans: 1 y 2 1\ntrans: 2 y 2 1\ntrans: 2 x 2 1\n"},
};

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  for (const auto& s : kSources) {
    out.push_back({s.name, s.description, s.text, as_ffa(parse_automaton(s.text))});
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace fuzzdir
