#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "fuzzdir/automata.hpp"

namespace fuzzdir {

using AnyAutomaton = std::variant<Ffa, Nfa, Dfa>;

/// Line-oriented automaton format; '#' starts a comment.
///
///   kind: ffa            # or nfa, dfa
///   states: a b c
///   alphabet: x y
///   trans: a x b 0.3     # FFA: degree literal; omitted transitions are 0
///   trans: a x b         # NFA/DFA; a DFA must be total
///
/// Throws ParseError with a 1-based line and column.
AnyAutomaton parse_automaton(std::string_view text);
AnyAutomaton load_automaton(const std::filesystem::path& path);

/// Views any automaton as an FFA (NFA and DFA edges get degree 1).
Ffa as_ffa(const AnyAutomaton& automaton);

std::string serialize(const Ffa& f);
std::string serialize(const Nfa& n);
std::string serialize(const Dfa& d);
std::string serialize(const AnyAutomaton& automaton);

/// Graphviz rendering; final states are drawn as double circles.
std::string to_dot(const Dfr& r, std::string_view graph_name = "recognizer");

}  // namespace fuzzdir
