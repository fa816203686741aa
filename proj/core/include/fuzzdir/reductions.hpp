#pragma once

#include "fuzzdir/automata.hpp"

namespace fuzzdir {

/// The associated NFA: alpha(a, x) = { b | f(a, x, b) > 0 }.
Nfa ffa_to_nfa(const Ffa& f);

/// The crisp FFA with f(a, x, b) = 1 exactly on the NFA's edges.
Ffa nfa_to_ffa(const Nfa& n);

/// The crisp, normal FFA with f(a, x, delta(a, x)) = 1.
Ffa dfa_to_ffa(const Dfa& d);

/// alpha(a, x) = { delta(a, x) }.
Nfa dfa_to_nfa(const Dfa& d);

}  // namespace fuzzdir
