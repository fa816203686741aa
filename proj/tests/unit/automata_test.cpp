#include <doctest.h>

#include "fuzzdir/errors.hpp"
#include "fuzzdir/matrix.hpp"
#include "fuzzdir/reductions.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace fuzzdir;
using namespace testing;

TEST_SUITE("automata-core") {
  TEST_CASE("fuzzy rows of EX31") {
    const Ffa& f = fixture("EX31");
    CHECK(show(f, row(f, "a", "x")) == "{b/3/10}");
    CHECK(show(f, row(f, "a", "")) == "{a/1}");
    CHECK(show(f, row(f, "b", "y")) == "{b/1/2,c/1/10}");
    CHECK(show(f, row(f, "c", "xx")) == "{b/1/5,c/3/5}");
    // chain oracle for the derived row
    CHECK(oracle::chain_degree(f, 2, word(f, "xx"), 1) == deg("0.2"));
    CHECK(oracle::chain_degree(f, 2, word(f, "xx"), 2) == deg("0.6"));
    CHECK(oracle::chain_degree(f, 2, word(f, "xx"), 0) == deg("0"));
  }

  TEST_CASE("unknown states and letters are input errors") {
    const Ffa& f = fixture("EX31");
    CHECK_THROWS_AS(f.signature().state("d"), InputError);
    CHECK_THROWS_AS(f.signature().parse_word("xz"), InputError);
    CHECK_THROWS_AS(ffa_step_star(f, 7, Word{}), InputError);
    CHECK_THROWS_AS(ffa_step_star(f, 0, Word{5}), InputError);
  }

  TEST_CASE("crisp reach sets") {
    const Ffa& f = fixture("EX31");
    const auto& sig = f.signature();
    CHECK(ffa_reach(f, sig.state("c"), word(f, "x")) == sig.state_set({"b", "c"}));
    CHECK(ffa_reach(f, sig.state("a"), word(f, "y")).empty());
    CHECK(ffa_reach(f, sig.state("b"), word(f, "xx")) == sig.state_set({"b", "c"}));
    CHECK(ffa_reach_set(f, sig.state_set({"a", "b"}), word(f, "x")) == sig.state_set({"b", "c"}));
    CHECK(ffa_reach_set(f, StateSet(3), word(f, "xy")).empty());
    CHECK(ffa_reach_set(f, sig.state_set({"c"}), word(f, "x")) == sig.state_set({"b", "c"}));
    const Nfa n = ffa_to_nfa(f);
    CHECK(nfa_step_star(n, sig.state_set({"a"}), word(f, "x")) == sig.state_set({"b"}));
    CHECK(nfa_step_star(n, sig.state_set({"b"}), word(f, "")) == sig.state_set({"b"}));
    CHECK(nfa_step_star(n, sig.state_set({"c"}), word(f, "xx")) == sig.state_set({"b", "c"}));
  }

  TEST_CASE("transition matrices") {
    const Ffa& f = fixture("EX31");
    const auto eps = transition_matrix(f, Word{});
    CHECK(eps == TransitionMatrix::identity(3));
    const auto mx = transition_matrix(f, word(f, "x"));
    CHECK(mx.to_string() == "[0,3/10,0;0,0,2/5;0,1/5,3/5]");
    const auto mxx = transition_matrix(f, word(f, "xx"));
    CHECK(mx * mx == mxx);
    CHECK(eps * mx == mx);
    CHECK(mx * eps == mx);
    for (StateId a = 0; a < 3; ++a) CHECK(mxx.row(a) == ffa_step_star(f, a, word(f, "xx")));
    CHECK_THROWS_AS(TransitionMatrix::identity(2) * mx, InputError);
  }

  TEST_CASE("flags") {
    CHECK_FALSE(is_complete(fixture("EX31")));
    CHECK(is_complete(fixture("P61cF")));
    const Ffa loop({"a"}, {"x"}, std::vector<Ffa::Transition>{{"a", "x", "a", Degree::one()}});
    CHECK(is_complete(loop));
    CHECK(is_normal(loop));
    CHECK_FALSE(is_normal(fixture("N44")));
    CHECK(is_normal(fixture("P55n")));
    CHECK_FALSE(is_normal(fixture("P61cG")));
    CHECK_FALSE(is_crisp(fixture("EX31")));
    CHECK(is_crisp(fixture("P55n")));
    CHECK_FALSE(is_deterministic(fixture("P55n")));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Ffa d = dfa_to_ffa(random_dfa(1 + seed % 5, 1 + seed % 3, seed));
      CHECK(is_crisp(d));
      CHECK(is_normal(d));
      CHECK(is_deterministic(d));
    }
  }

  TEST_CASE("construction errors") {
    using T = Ffa::Transition;
    CHECK_THROWS_AS(Ffa({"a"}, {"x"}, std::vector<T>{{"a", "x", "b", Degree::one()}}), InputError);
    CHECK_THROWS_AS(Ffa({"a"}, {"x"}, std::vector<T>{{"a", "x", "a", Degree::one()}, {"a", "x", "a", Degree::one()}}),
                    InputError);
    CHECK_THROWS_AS(Signature({"a", "a"}, {"x"}), InputError);
    CHECK_THROWS_AS(Signature({}, {"x"}), InputError);
    CHECK_THROWS_AS(Dfa({"a", "b"}, {"x"}, std::vector<Dfa::Transition>{{"a", "x", "b"}}), InputError);
  }

  TEST_CASE("word syntax") {
    const Ffa& f = fixture("EX31");
    CHECK(f.signature().parse_word("x y x") == Word{0, 1, 0});
    CHECK(f.signature().parse_word("xyx") == Word{0, 1, 0});
    CHECK(f.signature().parse_word("").empty());
    CHECK(f.signature().parse_word("ε").empty());
    CHECK(f.signature().format_word(Word{0, 0, 1}) == "xxy");
    const Signature long_letters({"p"}, {"go", "stop"});
    CHECK(long_letters.parse_word("go stop") == Word{0, 1});
    CHECK(long_letters.format_word(Word{0, 1}) == "go stop");
  }

  TEST_CASE("monoid action, matrix rows and the oracles agree on random automata") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Ffa f = corpus_ffa(seed);
      const auto words = oracle::words_up_to(f.letter_count(), 4);
      for (const auto& w : words) {
        const auto m = transition_matrix(f, w);
        const auto dense = oracle::rows(f, w);
        for (StateId a = 0; a < f.state_count(); ++a) {
          const auto r = ffa_step_star(f, a, w);
          CHECK(m.row(a) == r);
          for (StateId b = 0; b < f.state_count(); ++b) {
            CHECK(r[b] == dense[a][b]);
            if (w.size() <= 3) CHECK(r[b] == oracle::chain_degree(f, a, w, b));
          }
          CHECK(support(r) == ffa_reach(f, a, w));
        }
      }
      // u, v split of a few longer words
      for (const auto& u : oracle::words_up_to(f.letter_count(), 2)) {
        for (const auto& v : oracle::words_up_to(f.letter_count(), 2)) {
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          CHECK(transition_matrix(f, uv) == transition_matrix(f, u) * transition_matrix(f, v));
        }
      }
    }
  }

  TEST_CASE("complete automata never reach the empty set; normal ones keep a 1") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GeneratorConfig c;
      c.state_count = 2 + seed % 4;
      c.letter_count = 1 + seed % 2;
      c.degree_palette = {deg("0"), deg("1/3"), deg("1")};
      c.seed = seed;
      c.complete = true;
      c.normal = seed % 2 == 0;
      const Ffa f = generate(c);
      for (const auto& w : oracle::words_up_to(f.letter_count(), 4)) {
        for (StateId a = 0; a < f.state_count(); ++a) {
          const auto r = ffa_step_star(f, a, w);
          CHECK_FALSE(r.empty());
          if (c.normal) CHECK(r.is_normal());
        }
      }
    }
  }
}
