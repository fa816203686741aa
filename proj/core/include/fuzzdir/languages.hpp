#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/directability.hpp"

namespace fuzzdir {

/// Minimal complete DFR for the same language. States are numbered in
/// breadth-first order from the initial state and named "q0", "q1", ...
Dfr minimize(const Dfr& r);

/// True iff both recognizers accept the same language. The alphabets must
/// contain the same letters (order may differ); throws InputError otherwise.
bool language_equal(const Dfr& r1, const Dfr& r2);
/// A shortest word (over r1's letter indices) accepted by exactly one of the
/// two recognizers, or nullopt when the languages are equal.
std::optional<Word> distinguishing_word(const Dfr& r1, const Dfr& r2);

bool is_empty_language(const Dfr& r);

/// X* L.
Dfr left_ideal_closure(const Dfr& r);
/// L X*.
Dfr right_ideal_closure(const Dfr& r);
/// X* L X*.
Dfr two_sided_ideal_closure(const Dfr& r);

/// Recognizer of the single word w over the given alphabet.
Dfr word_language(const std::vector<std::string>& alphabet, const Word& w);
Dfr empty_language(const std::vector<std::string>& alphabet);

/// All words of length <= max_len in length-then-lexicographic order.
std::vector<Word> all_words(std::size_t letter_count, std::size_t max_len);

/// One row of a closure-law report.
struct ClosureLaw {
  std::string name;       ///< "a", "b", "c", "d" or "c-left"
  std::string equation;   ///< e.g. "DD2·X* = DD2"
  bool required = false;  ///< the law must hold for this automaton
  bool holds = false;
  std::optional<Word> witness;  ///< a word in exactly one side when the law fails
};

struct ClosureReport {
  bool normal = false;
  std::vector<ClosureLaw> laws;
  /// Every required law holds.
  bool consistent() const;
};

/// Builds both sides of each ideal law from the DD recognizers:
///   (a) DD2·X* = DD2            (always required)
///   (b) X*·DD1 = DD1            (required for normal automata)
///   (c) X*·DD2·X* = DD2         (required for normal automata)
///   (d) X*·DD3·X* = DD3         (required for normal automata)
/// plus the informative left law X*·DD2 = DD2 ("c-left").
ClosureReport check_closure_equations(const Ffa& f, const RecognizerOptions& options = {});

/// Minimizes the DD2 or DD3 recognizer and checks that it has exactly one
/// final state and that this state is a trap. Throws PreconditionError when
/// f is not DD2-directable (DD2), or not normal and DD3-directable (DD3).
bool trap_state_check(const Ffa& f, DirectingKind kind, const RecognizerOptions& options = {});

/// Brute force: every word of length <= max_len that is directing, in
/// length-then-lexicographic order.
std::vector<Word> enumerate_directing_words(const Ffa& f, DirectingKind kind, std::size_t max_len);

/// L is nonempty and X* L X* = L, i.e. L is the directing-word set of some
/// directable DFA.
bool dw_characterization_check(const Dfr& r);

}  // namespace fuzzdir
