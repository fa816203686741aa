#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fuzzdir/algebra.hpp"
#include "fuzzdir/classify.hpp"
#include "fuzzdir/directability.hpp"
#include "fuzzdir/errors.hpp"
#include "fuzzdir/fixtures.hpp"
#include "fuzzdir/generator.hpp"
#include "fuzzdir/languages.hpp"
#include "fuzzdir/text_format.hpp"

namespace fuzzdir::cli {

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

Ffa load(const std::string& path) {
  if (path.starts_with(kFixturePrefix)) return fixture(std::string_view(path).substr(kFixturePrefix.size()));
  return as_ffa(load_automaton(path));
}

std::string word_text(const Signature& sig, const Word& w) { return w.empty() ? "ε" : sig.format_word(w); }

std::size_t state_cap_from_env() {
  const char* raw = std::getenv("FUZZDIR_STATE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultStateCap;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string_view(raw).size() || value == 0) {
    throw InputError("FUZZDIR_STATE_CAP must be a positive integer, got '" + std::string(raw) + "'");
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Options {
  std::size_t state_cap = 0;
  std::vector<std::string> files;
  std::string kind = "d3";
  std::string method = "auto";
  bool fail_if_not = false;
  std::size_t max_len = 4;
  bool minimize = false;
  bool emit_dot = false;
  std::string format = "text";
  std::vector<std::string> states;
  std::vector<std::string> maps;
  std::vector<std::string> codomain;
  GeneratorConfig gen;
  std::string palette = "0,1";
  std::string fixture_name;
};

int cmd_decide(const Options& o, std::ostream& out) {
  const auto kind = parse_kind(o.kind);
  std::string method = o.method;
  if (method == "auto") method = is_degree_kind(kind) ? "matrix" : "powerset";
  const bool ok = (method == "powerset" && !is_degree_kind(kind)) || (method == "matrix" && is_degree_kind(kind)) ||
                  (method == "merge" && kind == DirectingKind::D3);
  if (!ok) throw InputError("method " + method + " does not decide " + std::string(to_string(kind)));

  bool all = true;
  for (const auto& file : o.files) {
    const Ffa f = load(file);
    if (o.files.size() > 1) out << file << ": ";
    if (method == "merge") {
      const bool directable = d3_decide_by_merging(f);
      out << "directable: " << (directable ? "true" : "false") << '\n';
      all = all && directable;
      continue;
    }
    const Dfr r = build_recognizer(f, kind, {o.state_cap});
    const auto w = shortest_accepted_word(r);
    out << "directable: " << (w ? "true" : "false") << "; shortest: " << (w ? word_text(f.signature(), *w) : "none")
        << '\n';
    all = all && w.has_value();
  }
  return o.fail_if_not && !all ? 1 : 0;
}

int cmd_words(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  const auto words = enumerate_directing_words(f, parse_kind(o.kind), o.max_len);
  for (const auto& w : words) out << word_text(f.signature(), w) << '\n';
  return o.fail_if_not && words.empty() ? 1 : 0;
}

int cmd_shortest(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  const auto w = shortest_directing_word(f, parse_kind(o.kind), {o.state_cap});
  out << (w ? word_text(f.signature(), *w) : "none") << '\n';
  return o.fail_if_not && !w ? 1 : 0;
}

int cmd_recognizer(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  const auto kind = parse_kind(o.kind);
  Dfr r = build_recognizer(f, kind, {o.state_cap});
  if (o.minimize) r = minimize(r);
  if (o.emit_dot) {
    out << to_dot(r, std::string(to_string(kind)));
    return 0;
  }
  const auto& sig = r.signature();
  out << "states: " << r.state_count() << "\ninitial: " << sig.state_name(r.initial()) << "\nfinals:";
  r.finals().for_each([&](StateId s) { out << ' ' << sig.state_name(s); });
  out << '\n';
  for (StateId s = 0; s < r.state_count(); ++s) {
    for (LetterId x = 0; x < sig.letter_count(); ++x) {
      out << sig.state_name(s) << ' ' << sig.letter_name(x) << " -> " << sig.state_name(r.dfa().next(s, x)) << '\n';
    }
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.format != "text" && o.format != "json") throw InputError("unknown format '" + o.format + "'");
  for (const auto& file : o.files) {
    const Ffa f = load(file);
    const auto report = classify(f, {o.state_cap});
    if (o.files.size() > 1) out << "== " << file << '\n';
    if (o.format == "json") {
      out << report_to_json(report, f.signature()) << '\n';
    } else {
      out << report_to_text(report, f.signature());
    }
  }
  return 0;
}

int cmd_check_laws(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  const auto report = check_closure_equations(f, {o.state_cap});
  out << "normal: " << (report.normal ? "true" : "false") << '\n';
  for (const auto& law : report.laws) {
    out << '(' << law.name << ") " << (law.holds ? "holds " : "fails ") << law.equation;
    if (law.witness) out << " (witness " << word_text(f.signature(), *law.witness) << ')';
    if (law.required) out << " [required]";
    out << '\n';
  }
  out << "consistent: " << (report.consistent() ? "true" : "false") << '\n';
  return o.fail_if_not && !report.consistent() ? 1 : 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw InputError("product takes exactly two automata");
  out << serialize(direct_product(load(o.files[0]), load(o.files[1])));
  return 0;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  StateSet keep(f.state_count());
  for (const auto& name : o.states) keep.insert(f.signature().state(name));
  out << serialize(subautomaton_induced(f, keep));
  return 0;
}

int cmd_image(const Options& o, std::ostream& out) {
  const Ffa f = load(o.files.front());
  std::vector<std::pair<std::string, std::string>> assignments;
  std::vector<std::string> codomain = o.codomain;
  for (const auto& m : o.maps) {
    const auto eq = m.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == m.size()) {
      throw InputError("expected SOURCE=TARGET, got '" + m + "'");
    }
    assignments.emplace_back(m.substr(0, eq), m.substr(eq + 1));
    if (o.codomain.empty() && std::find(codomain.begin(), codomain.end(), m.substr(eq + 1)) == codomain.end()) {
      codomain.push_back(m.substr(eq + 1));
    }
  }
  const StateMap phi(f.signature(), codomain, assignments);
  out << serialize(epimorphic_image(f, phi));
  return 0;
}

int cmd_gen(Options o, std::ostream& out) {
  o.gen.degree_palette.clear();
  for (const auto& d : split_list(o.palette)) o.gen.degree_palette.push_back(Degree::parse(d));
  out << serialize(generate(o.gen));
  return 0;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  if (!o.fixture_name.empty()) {
    out << find_fixture(o.fixture_name).source;
    return 0;
  }
  for (const auto& f : fixtures()) out << std::left << std::setw(7) << f.name << ' ' << f.description << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directability analysis for fuzzy finite automata", "fuzzdir"};
  app.require_subcommand(1);
  Options o;
  std::size_t cap_flag = 0;
  app.add_option("--state-cap", cap_flag, "recognizer state cap (overrides FUZZDIR_STATE_CAP)");

  const auto kinds = CLI::IsMember({"d1", "d2", "d3", "dd1", "dd2", "dd3"}, CLI::ignore_case);
  auto add_files = [&](CLI::App* sub, bool many) {
    auto* opt = sub->add_option("files", o.files, "automaton file, or fixture:NAME")->required();
    if (!many) opt->expected(1);
  };
  auto add_kind = [&](CLI::App* sub) { sub->add_option("-k,--kind", o.kind, "d1..d3, dd1..dd3")->transform(kinds); };
  auto add_fail = [&](CLI::App* sub) {
    sub->add_flag("--fail-if-not", o.fail_if_not, "exit 1 when the answer is negative");
  };

  auto* decide = app.add_subcommand("decide", "decide directability and print a shortest directing word");
  add_kind(decide);
  decide->add_option("-m,--method", o.method, "auto, powerset, matrix or merge")
      ->check(CLI::IsMember({"auto", "powerset", "matrix", "merge"}));
  add_fail(decide);
  add_files(decide, true);

  auto* words = app.add_subcommand("words", "enumerate directing words by brute force");
  add_kind(words);
  words->add_option("-n,--max-len", o.max_len, "maximum word length");
  add_fail(words);
  add_files(words, false);

  auto* shortest = app.add_subcommand("shortest", "print a shortest directing word");
  add_kind(shortest);
  add_fail(shortest);
  add_files(shortest, false);

  auto* recognizer = app.add_subcommand("recognizer", "build the recognizer of the directing words");
  add_kind(recognizer);
  recognizer->add_flag("--minimize", o.minimize, "minimize before printing");
  recognizer->add_flag("--emit-dot", o.emit_dot, "print Graphviz DOT");
  add_files(recognizer, false);

  auto* classify_cmd = app.add_subcommand("classify", "report flags, directability and class memberships");
  classify_cmd->add_option("-f,--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_files(classify_cmd, true);

  auto* laws = app.add_subcommand("check-laws", "check the ideal laws of the DD languages");
  add_fail(laws);
  add_files(laws, false);

  auto* product = app.add_subcommand("product", "direct product of two automata");
  product->add_option("files", o.files, "two automata")->required()->expected(2);

  auto* restrict_cmd = app.add_subcommand("restrict", "subautomaton on a closed set of states");
  restrict_cmd->add_option("-s,--states", o.states, "states to keep")->required()->delimiter(',');
  add_files(restrict_cmd, false);

  auto* image = app.add_subcommand("image", "epimorphic image under a state map");
  image->add_option("--map", o.maps, "SOURCE=TARGET, one per source state")->required()->delimiter(',');
  image->add_option("--codomain", o.codomain, "target state order")->delimiter(',');
  add_files(image, false);

  auto* gen = app.add_subcommand("gen", "generate a seeded random FFA");
  gen->add_option("--states", o.gen.state_count, "number of states")->check(CLI::PositiveNumber);
  gen->add_option("--letters", o.gen.letter_count, "number of letters")->check(CLI::PositiveNumber);
  gen->add_option("--palette", o.palette, "comma-separated degrees");
  gen->add_option("--seed", o.gen.seed, "random seed");
  gen->add_option("--density", o.gen.density, "probability of drawing an entry")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--complete", o.gen.complete, "every row has a positive entry");
  gen->add_flag("--normal", o.gen.normal, "every row attains 1");
  gen->add_flag("--crisp", o.gen.crisp, "degrees 0 and 1 only");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list the built-in reference automata");
  fixtures_cmd->add_option("name", o.fixture_name, "print this fixture in file format");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    o.state_cap = cap_flag != 0 ? cap_flag : state_cap_from_env();
    if (*decide) return cmd_decide(o, out);
    if (*words) return cmd_words(o, out);
    if (*shortest) return cmd_shortest(o, out);
    if (*recognizer) return cmd_recognizer(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*laws) return cmd_check_laws(o, out);
    if (*product) return cmd_product(o, out);
    if (*restrict_cmd) return cmd_restrict(o, out);
    if (*image) return cmd_image(o, out);
    if (*gen) return cmd_gen(o, out);
    if (*fixtures_cmd) return cmd_fixtures(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fuzzdir::cli
