#pragma once

#include <doctest.h>

#include <string>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/fixtures.hpp"
#include "fuzzdir/generator.hpp"

namespace testing {

inline fuzzdir::Degree deg(const char* text) { return fuzzdir::Degree::parse(text); }

inline fuzzdir::Word word(const fuzzdir::Ffa& f, const char* text) { return f.signature().parse_word(text); }

inline fuzzdir::FuzzyStateSet row(const fuzzdir::Ffa& f, const char* state, const char* w) {
  return fuzzdir::ffa_step_star(f, f.signature().state(state), word(f, w));
}

/// "{b/1/5,c/3/5}" style rendering for readable assertions.
inline std::string show(const fuzzdir::Ffa& f, const fuzzdir::FuzzyStateSet& s) {
  std::string out = "{";
  for (const auto& [state, d] : s.entries()) {
    if (out.size() > 1) out += ",";
    out += f.signature().state_name(state) + "/" + d.to_string();
  }
  return out + "}";
}

/// The random corpus of the directability criteria: at most 4 states, at
/// most 2 letters, degrees from {0, 1/5, 1/2, 1}.
inline fuzzdir::Ffa corpus_ffa(std::uint64_t seed, bool normal = false) {
  fuzzdir::GeneratorConfig c;
  c.state_count = 2 + seed % 3;
  c.letter_count = 1 + (seed / 4) % 2;
  c.degree_palette = {deg("0"), deg("1/5"), deg("1/2"), deg("1")};
  c.seed = seed;
  c.normal = normal;
  return fuzzdir::generate(c);
}

}  // namespace testing

namespace testing {

/// Small hand-written recognizer: transitions as "from letter to" triples.
inline fuzzdir::Dfr dfr(std::vector<std::string> states, std::vector<std::string> alphabet,
                        std::vector<fuzzdir::Dfa::Transition> delta, const std::string& initial,
                        std::vector<std::string> finals) {
  fuzzdir::Dfa d(std::move(states), std::move(alphabet), delta);
  fuzzdir::StateSet f(d.state_count());
  for (const auto& s : finals) f.insert(d.signature().state(s));
  const auto init = d.signature().state(initial);
  return fuzzdir::Dfr(std::move(d), init, std::move(f));
}

/// X*x over {x, y}.
inline fuzzdir::Dfr ends_with_x() {
  return dfr({"s", "t"}, {"x", "y"}, {{"s", "x", "t"}, {"s", "y", "s"}, {"t", "x", "t"}, {"t", "y", "s"}}, "s", {"t"});
}

/// xX* over {x, y}.
inline fuzzdir::Dfr starts_with_x() {
  return dfr({"s", "t", "d"}, {"x", "y"},
             {{"s", "x", "t"}, {"s", "y", "d"}, {"t", "x", "t"}, {"t", "y", "t"}, {"d", "x", "d"}, {"d", "y", "d"}},
             "s", {"t"});
}

/// X*xX* over {x, y}.
inline fuzzdir::Dfr contains_x() {
  return dfr({"s", "t"}, {"x", "y"}, {{"s", "x", "t"}, {"s", "y", "s"}, {"t", "x", "t"}, {"t", "y", "t"}}, "s", {"t"});
}

}  // namespace testing
