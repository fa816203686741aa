#include <doctest.h>

#include <set>

#include "fuzzdir/directability.hpp"
#include "fuzzdir/errors.hpp"
#include "fuzzdir/languages.hpp"
#include "fuzzdir/matrix.hpp"
#include "fuzzdir/reductions.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace fuzzdir;
using namespace testing;
using K = DirectingKind;

namespace {

bool accepts(const Dfr& r, const Ffa& f, const char* w) { return r.accepts(word(f, w)); }

// Černý automaton C3 over {x, y}: x rotates, y sends the last state to the first.
Ffa cerny3() {
  return dfa_to_ffa(Dfa({"0", "1", "2"}, {"x", "y"},
                        std::vector<Dfa::Transition>{{"0", "x", "1"}, {"1", "x", "2"}, {"2", "x", "0"},
                                                     {"0", "y", "0"}, {"1", "y", "1"}, {"2", "y", "0"}}));
}

}  // namespace

TEST_SUITE("directability") {
  TEST_CASE("kind names") {
    CHECK(parse_kind("dd2") == K::DD2);
    CHECK(parse_kind("D1") == K::D1);
    CHECK(to_string(K::DD3) == "DD3");
    CHECK_THROWS_AS(parse_kind("d4"), InputError);
  }

  TEST_CASE("direct word tests") {
    const Ffa& ex31 = fixture("EX31");
    CHECK(is_directing(ex31, K::D3, word(ex31, "xx")));
    CHECK_FALSE(is_directing(ex31, K::D3, word(ex31, "yxx")));
    CHECK_FALSE(is_directing(ex31, K::D3, word(ex31, "xxy")));

    const Ffa& p41a = fixture("P41a");
    CHECK_FALSE(is_directing(p41a, K::DD1, word(p41a, "x")));
    CHECK(is_directing(p41a, K::DD2, word(p41a, "x")));
    const Ffa& p41b = fixture("P41b");
    CHECK_FALSE(is_directing(p41b, K::DD2, word(p41b, "x")));
    CHECK(is_directing(p41b, K::D2, word(p41b, "x")));
    const Ffa& n44 = fixture("N44");
    CHECK(is_directing(n44, K::DD1, word(n44, "x")));
    CHECK_FALSE(is_directing(n44, K::DD1, word(n44, "yx")));
    const Ffa& g = fixture("P61cG");
    CHECK(is_directing(g, K::DD2, word(g, "xx")));
    CHECK(row(g, "a", "xx").empty());
    CHECK(row(g, "b", "xx").empty());
    const Ffa& p56 = fixture("P56");
    CHECK(is_directing(p56, K::DD3, word(p56, "x")));
    CHECK(is_directing(p56, K::DD3, word(p56, "xxy")));
    CHECK_FALSE(is_directing(p56, K::DD3, word(p56, "xy")));
    CHECK_THROWS_AS(is_directing(ffa_to_nfa(ex31), K::DD1, Word{}), InputError);
  }

  TEST_CASE("subset-family recognizers") {
    const Ffa& ex31 = fixture("EX31");
    const Dfr r = build_d_recognizer(ex31, K::D3);
    CHECK(accepts(r, ex31, "xx"));
    CHECK_FALSE(accepts(r, ex31, "yxx"));
    CHECK_FALSE(accepts(r, ex31, "xxy"));
    CHECK(r.signature().state_name(r.initial()) == "{{a},{b},{c}}");
    CHECK(is_empty_language(build_d_recognizer(fixture("EX38"), K::D3)));
    CHECK_THROWS_AS(build_d_recognizer(ex31, K::DD1), InputError);
    CHECK_THROWS_AS(build_dd_recognizer(ex31, K::D1), InputError);

    const Ffa loop({"a"}, {"x", "y"},
                   std::vector<Ffa::Transition>{{"a", "x", "a", Degree::one()}, {"a", "y", "a", Degree::one()}});
    for (auto kind : kAllKinds) {
      const Dfr all = build_recognizer(loop, kind);
      for (const auto& w : oracle::words_up_to(2, 3)) CHECK(all.accepts(w));
    }
  }

  TEST_CASE("matrix recognizers") {
    const Ffa& p56 = fixture("P56");
    const Dfr r = build_dd_recognizer(p56, K::DD3);
    CHECK(accepts(r, p56, "x"));
    CHECK(accepts(r, p56, "xxy"));
    CHECK_FALSE(accepts(r, p56, "xy"));
    CHECK(language_equal(build_dd_recognizer(fixture("P55n"), K::DD1), ends_with_x()));
    CHECK(language_equal(build_dd_recognizer(fixture("N44"), K::DD1), starts_with_x()));
    const Ffa& p41a = fixture("P41a");
    CHECK(is_empty_language(build_dd_recognizer(p41a, K::DD1)));
    for (auto kind : {K::DD2, K::DD3}) {
      const Dfr dd = build_dd_recognizer(p41a, kind);
      CHECK_FALSE(dd.accepts(Word{}));
      for (std::size_t n = 1; n <= 8; ++n) CHECK(dd.accepts(Word(n, 0)));
    }
  }

  TEST_CASE("emptiness and shortest words") {
    CHECK_FALSE(is_directable(fixture("EX38"), K::D3));
    CHECK(is_directable(fixture("P61hG"), K::DD3));
    CHECK_FALSE(is_directable(fixture("P61hG"), K::DD2));
    CHECK(shortest_directing_word(fixture("P61hG"), K::DD3) == word(fixture("P61hG"), "xx"));
    const Ffa& ex31 = fixture("EX31");
    CHECK(shortest_directing_word(ex31, K::D3) == word(ex31, "xx"));
    CHECK(shortest_directing_word(fixture("P56"), K::DD3) == Word{0});
    CHECK_FALSE(shortest_directing_word(fixture("EX38"), K::D3).has_value());
    // brute force agrees on EX31: no shorter or lexicographically smaller word
    const auto all = enumerate_directing_words(ex31, K::D3, 3);
    REQUIRE_FALSE(all.empty());
    CHECK(all.front() == word(ex31, "xx"));
  }

  TEST_CASE("the P61hG degrees as printed admit no DD3-directing word") {
    const Ffa printed({"a", "b", "c"}, {"x"},
                      std::vector<Ffa::Transition>{{"a", "x", "b", deg("1/2")},
                                                   {"a", "x", "a", deg("1")},
                                                   {"b", "x", "c", deg("1")},
                                                   {"c", "x", "c", deg("1")}});
    CHECK(is_normal(printed));
    CHECK_FALSE(is_directable(printed, K::DD3));
    CHECK_FALSE(is_directable(printed, K::DD2));
    for (std::size_t n = 0; n <= 8; ++n) CHECK_FALSE(oracle::directing(printed, K::DD3, Word(n, 0)));
  }

  TEST_CASE("the product factors are DD-directable") {
    // the product itself is built in the algebra tests; here the factors
    CHECK(is_directable(fixture("EX65F"), K::DD1));
    CHECK(is_directable(fixture("EX65G"), K::DD1));
  }

  TEST_CASE("D3 merging") {
    const Ffa& ex38 = fixture("EX38");
    const auto& s = ex38.signature();
    CHECK(d3_merges(ex38, s.state("a"), s.state("b"), word(ex38, "x")));
    CHECK(d3_merges(ex38, s.state("b"), s.state("c"), word(ex38, "y")));
    CHECK(d3_merges(ex38, s.state("a"), s.state("c"), word(ex38, "z")));
    CHECK(d3_merges(ex38, 1, 1, Word{}));
    const Ffa& ex31 = fixture("EX31");
    CHECK(d3_merges(ex31, 0, 2, word(ex31, "x")));
    CHECK_THROWS_AS(d3_decide_by_merging(ex38), IncompleteAutomaton);
    CHECK_THROWS_AS(mu_chain(ex38), IncompleteAutomaton);
    CHECK_THROWS_AS(d3_mergeable_pairs(ex38), IncompleteAutomaton);
  }

  TEST_CASE("merge decider on small complete automata") {
    const Ffa c3 = cerny3();
    CHECK(d3_decide_by_merging(c3));
    CHECK(is_directable(c3, K::D3));
    CHECK(shortest_directing_word(dfa_to_ffa(Dfa({"0", "1", "2"}, {"x", "y"},
                                                 std::vector<Dfa::Transition>{{"0", "x", "1"},
                                                                              {"1", "x", "2"},
                                                                              {"2", "x", "0"},
                                                                              {"0", "y", "0"},
                                                                              {"1", "y", "1"},
                                                                              {"2", "y", "0"}})),
                                  K::D1)
              ->size() == 4);  // (n-1)^2
    const auto chain = mu_chain(c3);
    CHECK(chain.front() == PairRelation::identity(3));
    CHECK(chain.back().is_total());
    const Ffa one({"a"}, {"x"}, std::vector<Ffa::Transition>{{"a", "x", "a", Degree::one()}});
    CHECK(d3_decide_by_merging(one));
    CHECK(mu_chain(one).size() == 1);
    CHECK(mu_chain(one).front() == PairRelation::identity(1));
  }

  TEST_CASE("mu chain: strict growth, bound, and agreement with the recognizer") {
    std::size_t directable = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      GeneratorConfig c;
      c.state_count = 1 + seed % 6;
      c.letter_count = 1 + seed % 2;
      c.degree_palette = {deg("0"), deg("0"), deg("0"), deg("1/2"), deg("1")};
      c.seed = seed;
      c.complete = true;
      const Ffa f = generate(c);
      const auto chain = mu_chain(f);
      const std::size_t n = f.state_count();
      CHECK(chain.size() <= n * (n - 1) / 2 + 1);
      for (std::size_t k = 0; k < chain.size(); ++k) {
        CHECK(chain[k].is_reflexive());
        CHECK(chain[k].is_symmetric());
        if (k > 0) {
          CHECK(chain[k - 1].is_subset_of(chain[k]));
          CHECK(chain[k - 1] != chain[k]);
        }
      }
      CHECK(chain.back() == d3_mergeable_pairs(f));
      const bool by_recognizer = is_directable(f, K::D3);
      CHECK(chain.back().is_total() == by_recognizer);
      CHECK(d3_decide_by_merging(f) == by_recognizer);
      directable += by_recognizer;
    }
    CHECK(directable > 10);
    CHECK(directable < 140);
  }

  TEST_CASE("recognizers agree with the definitional oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Ffa f = corpus_ffa(seed);
      const Nfa n = ffa_to_nfa(f);
      const auto words = oracle::words_up_to(f.letter_count(), 5);
      for (auto kind : kAllKinds) {
        const Dfr r = build_recognizer(f, kind);
        for (const auto& w : words) {
          const bool expected = oracle::directing(f, kind, w);
          CHECK(is_directing(f, kind, w) == expected);
          CHECK(r.accepts(w) == expected);
          if (!is_degree_kind(kind)) CHECK(is_directing(n, kind, w) == expected);
        }
      }
    }
  }

  TEST_CASE("reachable matrices introduce no new degrees") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Ffa f = corpus_ffa(seed);
      std::set<Degree> allowed{Degree::zero(), Degree::one()};
      for (const auto& d : f.degree_values()) allowed.insert(d);
      const auto monoid = transition_monoid(f);
      CHECK(monoid.front() == TransitionMatrix::identity(f.state_count()));
      for (const auto& m : monoid) {
        for (const auto& d : m.entries()) CHECK(allowed.count(d) == 1);
      }
    }
  }

  TEST_CASE("state cap") {
    RecognizerOptions tiny{2};
    CHECK_THROWS_AS(build_d_recognizer(fixture("EX31"), K::D3, tiny), StateCapExceeded);
    CHECK_THROWS_AS(build_dd_recognizer(fixture("EX31"), K::DD3, tiny), StateCapExceeded);
  }
}
