#include <doctest.h>

#include <json.hpp>

#include "fuzzdir/classify.hpp"
#include "fuzzdir/errors.hpp"
#include "fuzzdir/reductions.hpp"
#include "fuzzdir/text_format.hpp"
#include "support/helpers.hpp"

using namespace fuzzdir;
using namespace testing;
using K = DirectingKind;

namespace {

bool dd(const ClassificationReport& r, int i) { return r.classes.dd[static_cast<std::size_t>(i - 1)].value(); }
bool ndd(const ClassificationReport& r, int i) { return r.classes.ndd[static_cast<std::size_t>(i - 1)].value(); }

}  // namespace

TEST_SUITE("classify-cli") {
  TEST_CASE("text format parses the reference automaton") {
    const char* text =
        "# Example automaton\n"
        "kind: ffa\n"
        "states: a b c\n"
        "alphabet: x y\n"
        "trans: a x b 0.3\n"
        "trans: b x c 0.4\n"
        "trans: c x b 0.2\n"
        "trans: c x c 0.6   # trailing comment\n"
        "trans: b y b 0.5\n"
        "trans: b y c 0.1\n";
    const auto parsed = parse_automaton(text);
    REQUIRE(std::holds_alternative<Ffa>(parsed));
    CHECK(std::get<Ffa>(parsed) == fixture("EX31"));
  }

  TEST_CASE("parse errors carry locations") {
    const std::string head = "kind: ffa\nstates: a b\nalphabet: x\n";
    auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
      try {
        parse_automaton(text);
      } catch (const ParseError& e) {
        return {e.line(), e.column()};
      }
      return {0, 0};
    };
    CHECK(error_at(head + "trans: a x b 1.5\n") == std::pair<std::size_t, std::size_t>{4, 14});
    CHECK(error_at(head + "trans: a x b 1\ntrans: a x b 0.5\n").first == 5);
    CHECK(error_at(head + "trans: a x q 1\n") == std::pair<std::size_t, std::size_t>{4, 12});
    CHECK(error_at(head + "trans: a z b 1\n").first == 4);
    CHECK(error_at(head + "trans: a x\n").first == 4);
    CHECK(error_at("kind: ffa\nkind: nfa\n").first == 2);
    CHECK(error_at("kind: pda\n") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(error_at("states a b\n").first == 1);
    CHECK(error_at("kind: ffa\nstates: a\n").first != 0);
    CHECK(error_at("kind: dfa\nstates: a b\nalphabet: x\ntrans: a x b\n").first != 0);
    CHECK(error_at("kind: dfa\nstates: a\nalphabet: x\ntrans: a x a\ntrans: a x a\n").first == 5);
    CHECK(error_at("kind: ffa\nstates: a a\nalphabet: x\n").first == 2);
    CHECK_THROWS_AS(load_automaton("/nonexistent/file.ffa"), InputError);
  }

  TEST_CASE("NFA and DFA files") {
    const auto n = parse_automaton("kind: nfa\nstates: a b\nalphabet: x\ntrans: a x a\ntrans: a x b\n");
    REQUIRE(std::holds_alternative<Nfa>(n));
    CHECK(std::get<Nfa>(n).image(0, 0).size() == 2);
    const auto d = parse_automaton("kind: dfa\nstates: a b\nalphabet: x\ntrans: a x b\ntrans: b x b\n");
    REQUIRE(std::holds_alternative<Dfa>(d));
    CHECK(is_deterministic(as_ffa(d)));
    CHECK(parse_automaton(serialize(n)) == n);
    CHECK(parse_automaton(serialize(d)) == d);
  }

  TEST_CASE("serialization round trips every fixture") {
    for (const auto& fx : fixtures()) {
      CHECK_MESSAGE(std::get<Ffa>(parse_automaton(serialize(fx.automaton))) == fx.automaton, fx.name);
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Ffa f = corpus_ffa(seed);
      CHECK(std::get<Ffa>(parse_automaton(serialize(f))) == f);
    }
  }

  TEST_CASE("DOT export marks finals") {
    const Dfr r = build_recognizer(fixture("EX31"), K::D3);
    const std::string dot = to_dot(r, "D3");
    CHECK(dot.find("digraph \"D3\"") == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("__start ->") != std::string::npos);
  }

  TEST_CASE("class memberships of the witness fixtures") {
    const auto cf = classify(fixture("P61cF"));
    CHECK(cf.normal);
    CHECK(dd(cf, 3));
    CHECK_FALSE(dd(cf, 2));
    CHECK(ndd(cf, 3));
    CHECK_FALSE(ndd(cf, 2));
    const auto cg = classify(fixture("P61cG"));
    CHECK(dd(cg, 2));
    CHECK_FALSE(dd(cg, 3));
    const auto hg = classify(fixture("P61hG"));
    CHECK(hg.normal);
    CHECK(dd(hg, 3));
    CHECK_FALSE(dd(hg, 2));
    const auto hf = classify(fixture("P61hF"));
    CHECK_FALSE(hf.normal);
    CHECK(dd(hf, 2));
    CHECK(dd(hf, 3));
    const auto b = classify(fixture("P61b"));
    CHECK(ndd(b, 2));
    CHECK(ndd(b, 3));
    CHECK_FALSE(dd(b, 1));
    const auto g = classify(fixture("P61gF"));
    CHECK(dd(g, 1));
    CHECK_FALSE(g.normal);
    const auto l = classify(fixture("P61l"));
    CHECK(ndd(l, 1));
    CHECK_FALSE(l.classes.dir.value());
    const Dfa directable({"a", "b"}, {"x", "y"},
                         std::vector<Dfa::Transition>{{"a", "x", "b"}, {"b", "x", "b"}, {"a", "y", "a"}, {"b", "y", "b"}});
    const auto dir = classify(dfa_to_ffa(directable));
    CHECK(dir.classes.dir.value());
    CHECK(ndd(dir, 1));
  }

  TEST_CASE("report implications hold on generated automata") {
    for (const auto& fx : fixtures()) CHECK_MESSAGE(report_violations(classify(fx.automaton)).empty(), fx.name);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const Ffa f = corpus_ffa(seed, seed % 3 == 0);
      const auto r = classify(f);
      CHECK(report_violations(r).empty());
      CHECK(r[K::D3].directable.value() == r[K::D3].shortest.has_value());
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto r = classify(dfa_to_ffa(random_dfa(2 + seed % 4, 2, seed)));
      CHECK(report_violations(r).empty());
      CHECK(r.classes.dir.value() == r[K::D1].directable.value());
    }
  }

  TEST_CASE("JSON report") {
    const Ffa& f = fixture("P61cF");
    const auto j = nlohmann::json::parse(report_to_json(classify(f), f.signature()));
    CHECK(j["flags"]["normal"] == true);
    CHECK(j["classes"]["DD(3)"] == true);
    CHECK(j["classes"]["DD(2)"] == false);
    CHECK(j["shortest"]["DD3"] == "x");
    CHECK(j["shortest"]["DD2"].is_null());
  }

  TEST_CASE("a state cap leaves kinds undecided without losing the report") {
    const auto r = classify(fixture("EX31"), RecognizerOptions{2});
    CHECK(r.complete == false);
    CHECK_FALSE(r[K::D3].directable.has_value());
    CHECK_FALSE(r[K::D3].error.empty());
    CHECK(report_violations(r).empty());
  }

  TEST_CASE("generator") {
    GeneratorConfig c;
    c.seed = 7;
    c.complete = true;
    c.crisp = true;
    CHECK(generate(c) == generate(c));
    CHECK(is_complete(generate(c)));
    CHECK(is_crisp(generate(c)));
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      GeneratorConfig g;
      g.state_count = 1 + seed % 5;
      g.letter_count = 1 + seed % 3;
      g.degree_palette = {deg("0"), deg("1/4"), deg("1/2"), deg("1")};
      g.seed = seed;
      g.normal = true;
      CHECK(is_normal(generate(g)));
      g.normal = false;
      g.complete = true;
      CHECK(is_complete(generate(g)));
    }
    GeneratorConfig bad;
    bad.crisp = true;
    bad.degree_palette = {deg("0"), deg("1/2")};
    CHECK_THROWS_AS(generate(bad), InputError);
    bad.crisp = false;
    bad.normal = true;
    CHECK_THROWS_AS(generate(bad), InputError);
    bad.normal = false;
    bad.complete = true;
    bad.degree_palette = {deg("0")};
    CHECK_THROWS_AS(generate(bad), InputError);
    bad.degree_palette = {deg("1")};
    bad.state_count = 0;
    CHECK_THROWS_AS(generate(bad), InputError);
  }
}
