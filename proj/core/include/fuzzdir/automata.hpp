#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fuzzdir/degree.hpp"
#include "fuzzdir/fuzzy_set.hpp"
#include "fuzzdir/state_set.hpp"

namespace fuzzdir {

/// A word is a sequence of letter indices into an alphabet; the empty
/// sequence is the empty word.
using Word = std::vector<LetterId>;

/// Declared state and letter names of an automaton, in declaration order.
/// All algorithms index states and letters by that order.
class Signature {
 public:
  Signature() = default;
  /// Throws InputError on an empty list, a duplicate name, or a name that
  /// contains whitespace or '#'.
  Signature(std::vector<std::string> states, std::vector<std::string> alphabet);

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& state_name(StateId s) const { return states_.at(s); }
  const std::string& letter_name(LetterId x) const { return alphabet_.at(x); }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<LetterId> find_letter(std::string_view name) const;
  /// Throw InputError for unknown names.
  StateId state(std::string_view name) const;
  LetterId letter(std::string_view name) const;
  StateSet state_set(std::initializer_list<std::string_view> names) const;

  void check_state(StateId s) const;
  void check_word(std::span<const LetterId> w) const;

  /// Reads a word. Letters may be separated by whitespace; when every letter
  /// of the alphabet is a single character they may also be juxtaposed
  /// ("xxy"). "" and "ε" denote the empty word.
  Word parse_word(std::string_view text) const;
  /// Inverse of parse_word; the empty word prints as "".
  std::string format_word(std::span<const LetterId> w) const;
  /// "{a,b}" style rendering of a state set.
  std::string format_set(const StateSet& s) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.states_ == b.states_ && a.alphabet_ == b.alphabet_;
  }

 private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, LetterId> letter_index_;
  bool single_char_letters_ = true;
};

/// Deterministic finite automaton with a total transition function.
class Dfa {
 public:
  struct Transition {
    std::string from, letter, to;
  };

  Dfa() = default;
  /// delta is indexed [state * letter_count + letter]; must be total.
  Dfa(Signature sig, std::vector<StateId> delta);
  /// Throws InputError on unknown names, duplicates, or a missing (state, letter).
  Dfa(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::span<const Transition> transitions);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t state_count() const noexcept { return sig_.state_count(); }
  std::size_t letter_count() const noexcept { return sig_.letter_count(); }
  StateId next(StateId s, LetterId x) const { return delta_[s * letter_count() + x]; }
  std::span<const StateId> table() const noexcept { return delta_; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Signature sig_;
  std::vector<StateId> delta_;
};

/// Nondeterministic finite automaton; images may be empty.
class Nfa {
 public:
  struct Transition {
    std::string from, letter, to;
  };

  Nfa() = default;
  /// images is indexed [state * letter_count + letter].
  Nfa(Signature sig, std::vector<StateSet> images);
  Nfa(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::span<const Transition> transitions);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t state_count() const noexcept { return sig_.state_count(); }
  std::size_t letter_count() const noexcept { return sig_.letter_count(); }
  const StateSet& image(StateId s, LetterId x) const { return images_[s * letter_count() + x]; }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  Signature sig_;
  std::vector<StateSet> images_;
};

/// Fuzzy finite automaton over the max-min unit interval. Only positive
/// transition degrees are stored; an absent transition has degree 0.
class Ffa {
 public:
  struct Edge {
    StateId target;
    Degree degree;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct Transition {
    std::string from, letter, to;
    Degree degree;
  };

  Ffa() = default;
  /// rows is indexed [state * letter_count + letter]; zero-degree edges are
  /// dropped and each row is sorted by target. Throws InputError on targets
  /// out of range or a repeated target within a row.
  Ffa(Signature sig, std::vector<std::vector<Edge>> rows);
  /// Throws InputError on unknown names or a repeated (from, letter, to).
  Ffa(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::span<const Transition> transitions);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t state_count() const noexcept { return sig_.state_count(); }
  std::size_t letter_count() const noexcept { return sig_.letter_count(); }

  /// Positive-degree successors of (s, x), sorted by target.
  std::span<const Edge> row(StateId s, LetterId x) const { return rows_[s * letter_count() + x]; }
  Degree degree(StateId from, LetterId x, StateId to) const;
  /// f(s, x, .) as a fuzzy set.
  FuzzyStateSet fuzzy_row(StateId s, LetterId x) const;
  /// Every positive transition degree, without duplicates, ascending.
  std::vector<Degree> degree_values() const;

  friend bool operator==(const Ffa&, const Ffa&) = default;

 private:
  Signature sig_;
  std::vector<std::vector<Edge>> rows_;
};

/// Deterministic finite recognizer: a DFA with an initial state and finals.
class Dfr {
 public:
  Dfr() = default;
  Dfr(Dfa dfa, StateId initial, StateSet finals);

  const Dfa& dfa() const noexcept { return dfa_; }
  const Signature& signature() const noexcept { return dfa_.signature(); }
  std::size_t state_count() const noexcept { return dfa_.state_count(); }
  StateId initial() const noexcept { return initial_; }
  const StateSet& finals() const noexcept { return finals_; }
  bool is_final(StateId s) const noexcept { return finals_.contains(s); }

  StateId run(StateId from, std::span<const LetterId> w) const;
  bool accepts(std::span<const LetterId> w) const { return is_final(run(initial_, w)); }

 private:
  Dfa dfa_;
  StateId initial_ = 0;
  StateSet finals_;
};

/// F_{a,w}: b -> f*(a, w, b), by the max-min recursion over w.
FuzzyStateSet ffa_step_star(const Ffa& f, StateId a, std::span<const LetterId> w);
/// One max-min step of a fuzzy state set under letter x.
FuzzyStateSet ffa_step(const Ffa& f, const FuzzyStateSet& from, LetterId x);
/// F(a, w): states reachable from a to a nonzero degree.
StateSet ffa_reach(const Ffa& f, StateId a, std::span<const LetterId> w);
/// F(H, w) = union of F(a, w) over a in H.
StateSet ffa_reach_set(const Ffa& f, const StateSet& h, std::span<const LetterId> w);
/// alpha*(H, w).
StateSet nfa_step_star(const Nfa& n, const StateSet& h, std::span<const LetterId> w);
/// delta*(a, w).
StateId dfa_step_star(const Dfa& d, StateId a, std::span<const LetterId> w);

/// Every (state, letter) has a positive-degree successor.
bool is_complete(const Ffa& f);
bool is_complete(const Nfa& n);
/// Every row f(a, x, .) attains degree 1.
bool is_normal(const Ffa& f);
/// Every degree is 0 or 1.
bool is_crisp(const Ffa& f);
/// Crisp and every row has exactly one successor, i.e. the FFA image of a DFA.
bool is_deterministic(const Ffa& f);

}  // namespace fuzzdir
