#include "fuzzdir/text_format.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "fuzzdir/errors.hpp"
#include "fuzzdir/reductions.hpp"

namespace fuzzdir {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !space(line[j])) ++j;
    if (j > i) out.push_back({line.substr(i, j - i), offset + i + 1});
    i = j;
  }
  return out;
}

enum class Kind { Ffa, Nfa, Dfa };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AnyAutomaton run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos), text_.size());
      ++line_no;
      handle_line(text_.substr(pos, end - pos), line_no);
      pos = end + 1;
    }
    last_line_ = line_no;
    return finish();
  }

 private:
  void handle_line(std::string_view line, std::size_t line_no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto colon = line.find(':');
    auto tokens = tokenize(line, 0);
    if (tokens.empty()) return;
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, tokens.front().column, "expected 'key: values'");
    }
    const auto key_tokens = tokenize(line.substr(0, colon), 0);
    if (key_tokens.size() != 1) throw ParseError(line_no, tokens.front().column, "malformed key");
    const std::string key(key_tokens.front().text);
    auto values = tokenize(line.substr(colon + 1), colon + 1);

    if (key == "kind") {
      if (kind_) throw ParseError(line_no, key_tokens.front().column, "kind declared twice");
      if (values.size() != 1) throw ParseError(line_no, colon + 2, "expected one of ffa, nfa, dfa");
      if (values[0].text == "ffa") {
        kind_ = Kind::Ffa;
      } else if (values[0].text == "nfa") {
        kind_ = Kind::Nfa;
      } else if (values[0].text == "dfa") {
        kind_ = Kind::Dfa;
      } else {
        throw ParseError(line_no, values[0].column, "unknown kind '" + std::string(values[0].text) + "'");
      }
    } else if (key == "states" || key == "alphabet") {
      auto& target = key == "states" ? states_ : alphabet_;
      if (target) throw ParseError(line_no, key_tokens.front().column, key + " declared twice");
      if (values.empty()) throw ParseError(line_no, colon + 2, key + " list is empty");
      std::set<std::string_view> seen;
      target.emplace();
      for (const auto& v : values) {
        if (!seen.insert(v.text).second) {
          throw ParseError(line_no, v.column, "duplicate name '" + std::string(v.text) + "'");
        }
        target->emplace_back(v.text);
      }
    } else if (key == "trans") {
      if (!kind_ || !states_ || !alphabet_) {
        throw ParseError(line_no, key_tokens.front().column, "transition before kind, states and alphabet");
      }
      handle_transition(values, line_no, colon);
    } else {
      throw ParseError(line_no, key_tokens.front().column, "unknown key '" + key + "'");
    }
  }

  StateId lookup(const std::vector<std::string>& names, const Token& t, std::size_t line_no, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == t.text) return static_cast<StateId>(i);
    }
    throw ParseError(line_no, t.column, std::string("undeclared ") + what + " '" + std::string(t.text) + "'");
  }

  void handle_transition(const std::vector<Token>& values, std::size_t line_no, std::size_t colon) {
    const std::size_t expected = *kind_ == Kind::Ffa ? 4 : 3;
    if (values.size() != expected) {
      throw ParseError(line_no, values.empty() ? colon + 2 : values.front().column,
                       "expected " + std::to_string(expected) + " fields");
    }
    const StateId from = lookup(*states_, values[0], line_no, "state");
    const LetterId x = lookup(*alphabet_, values[1], line_no, "letter");
    const StateId to = lookup(*states_, values[2], line_no, "state");
    Degree degree = Degree::one();
    if (*kind_ == Kind::Ffa) {
      try {
        degree = Degree::parse(values[3].text);
      } catch (const InputError& e) {
        throw ParseError(line_no, values[3].column, e.what());
      }
    }
    if (*kind_ == Kind::Dfa) {
      if (!dfa_seen_.emplace(from, x).second) {
        throw ParseError(line_no, values[0].column, "duplicate transition for " + std::string(values[0].text) +
                                                        " " + std::string(values[1].text));
      }
    }
    if (!seen_.emplace(from, x, to).second) {
      throw ParseError(line_no, values[0].column, "duplicate transition");
    }
    edges_.push_back({from, x, to, degree});
  }

  AnyAutomaton finish() {
    if (!kind_) throw ParseError(last_line_, 1, "missing 'kind:'");
    if (!states_) throw ParseError(last_line_, 1, "missing 'states:'");
    if (!alphabet_) throw ParseError(last_line_, 1, "missing 'alphabet:'");
    Signature sig;
    try {
      sig = Signature(*states_, *alphabet_);
    } catch (const InputError& e) {
      throw ParseError(last_line_, 1, e.what());
    }
    const std::size_t m = sig.letter_count();
    switch (*kind_) {
      case Kind::Ffa: {
        std::vector<std::vector<Ffa::Edge>> rows(sig.state_count() * m);
        for (const auto& e : edges_) rows[e.from * m + e.letter].push_back({e.to, e.degree});
        return Ffa(std::move(sig), std::move(rows));
      }
      case Kind::Nfa: {
        std::vector<StateSet> images(sig.state_count() * m, StateSet(sig.state_count()));
        for (const auto& e : edges_) images[e.from * m + e.letter].insert(e.to);
        return Nfa(std::move(sig), std::move(images));
      }
      case Kind::Dfa: {
        constexpr auto unset = static_cast<StateId>(-1);
        std::vector<StateId> delta(sig.state_count() * m, unset);
        for (const auto& e : edges_) delta[e.from * m + e.letter] = e.to;
        for (std::size_t i = 0; i < delta.size(); ++i) {
          if (delta[i] == unset) {
            throw ParseError(last_line_, 1, "DFA transition missing for " + sig.state_name(i / m) + " " +
                                                sig.letter_name(i % m));
          }
        }
        return Dfa(std::move(sig), std::move(delta));
      }
    }
    throw ParseError(last_line_, 1, "unreachable");
  }

  struct Edge {
    StateId from;
    LetterId letter;
    StateId to;
    Degree degree;
  };

  std::string_view text_;
  std::size_t last_line_ = 1;
  std::optional<Kind> kind_;
  std::optional<std::vector<std::string>> states_;
  std::optional<std::vector<std::string>> alphabet_;
  std::set<std::tuple<StateId, LetterId, StateId>> seen_;
  std::set<std::pair<StateId, LetterId>> dfa_seen_;
  std::vector<Edge> edges_;
};

void write_header(std::ostringstream& os, std::string_view kind, const Signature& sig) {
  os << "kind: " << kind << "\nstates:";
  for (const auto& s : sig.states()) os << ' ' << s;
  os << "\nalphabet:";
  for (const auto& x : sig.alphabet()) os << ' ' << x;
  os << '\n';
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

AnyAutomaton parse_automaton(std::string_view text) { return Parser(text).run(); }

AnyAutomaton load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

Ffa as_ffa(const AnyAutomaton& automaton) {
  return std::visit(
      [](const auto& a) -> Ffa {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Ffa>) {
          return a;
        } else if constexpr (std::is_same_v<T, Nfa>) {
          return nfa_to_ffa(a);
        } else {
          return dfa_to_ffa(a);
        }
      },
      automaton);
}

std::string serialize(const Ffa& f) {
  std::ostringstream os;
  const auto& sig = f.signature();
  write_header(os, "ffa", sig);
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      for (const auto& e : f.row(a, x)) {
        os << "trans: " << sig.state_name(a) << ' ' << sig.letter_name(x) << ' ' << sig.state_name(e.target) << ' '
           << e.degree.to_string() << '\n';
      }
    }
  }
  return os.str();
}

std::string serialize(const Nfa& n) {
  std::ostringstream os;
  const auto& sig = n.signature();
  write_header(os, "nfa", sig);
  for (StateId a = 0; a < n.state_count(); ++a) {
    for (LetterId x = 0; x < n.letter_count(); ++x) {
      n.image(a, x).for_each([&](StateId b) {
        os << "trans: " << sig.state_name(a) << ' ' << sig.letter_name(x) << ' ' << sig.state_name(b) << '\n';
      });
    }
  }
  return os.str();
}

std::string serialize(const Dfa& d) {
  std::ostringstream os;
  const auto& sig = d.signature();
  write_header(os, "dfa", sig);
  for (StateId a = 0; a < d.state_count(); ++a) {
    for (LetterId x = 0; x < d.letter_count(); ++x) {
      os << "trans: " << sig.state_name(a) << ' ' << sig.letter_name(x) << ' ' << sig.state_name(d.next(a, x)) << '\n';
    }
  }
  return os.str();
}

std::string serialize(const AnyAutomaton& automaton) {
  return std::visit([](const auto& a) { return serialize(a); }, automaton);
}

std::string to_dot(const Dfr& r, std::string_view graph_name) {
  std::ostringstream os;
  const auto& sig = r.signature();
  os << "digraph \"" << dot_escape(std::string(graph_name)) << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (StateId s = 0; s < r.state_count(); ++s) {
    os << "  n" << s << " [label=\"" << dot_escape(sig.state_name(s)) << "\", shape="
       << (r.is_final(s) ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> n" << r.initial() << ";\n";
  for (StateId s = 0; s < r.state_count(); ++s) {
    // Group parallel edges into one labelled arrow.
    std::vector<std::string> labels(r.state_count());
    for (LetterId x = 0; x < sig.letter_count(); ++x) {
      auto& l = labels[r.dfa().next(s, x)];
      if (!l.empty()) l += ",";
      l += sig.letter_name(x);
    }
    for (StateId t = 0; t < r.state_count(); ++t) {
      if (!labels[t].empty()) os << "  n" << s << " -> n" << t << " [label=\"" << dot_escape(labels[t]) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace fuzzdir
