#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/matrix.hpp"

namespace fuzzdir {

/// The six directing-word notions. D1-D3 look only at the crisp reach sets
/// F(a, w); DD1-DD3 look at the fuzzy rows F_{a,w}.
enum class DirectingKind { D1, D2, D3, DD1, DD2, DD3 };

inline constexpr std::array<DirectingKind, 6> kAllKinds = {
    DirectingKind::D1,  DirectingKind::D2,  DirectingKind::D3,
    DirectingKind::DD1, DirectingKind::DD2, DirectingKind::DD3};

std::string_view to_string(DirectingKind kind);
/// Case-insensitive: "d1", "D1", "dd3", ...
DirectingKind parse_kind(std::string_view text);
constexpr bool is_degree_kind(DirectingKind k) {
  return k == DirectingKind::DD1 || k == DirectingKind::DD2 || k == DirectingKind::DD3;
}

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

struct RecognizerOptions {
  /// Construction fails with StateCapExceeded once more states are discovered.
  std::size_t state_cap = kDefaultStateCap;
};

/// Evaluates the directing condition of `kind` on the rows of w.
bool is_directing(const Ffa& f, DirectingKind kind, std::span<const LetterId> w);
/// D1-D3 on an NFA. Throws InputError for the DD kinds.
bool is_directing(const Nfa& n, DirectingKind kind, std::span<const LetterId> w);

/// Subset-family recognizer for D1, D2 or D3. States are the families
/// {F(a1,u), ..., F(an,u)} reachable from {{a1}, ..., {an}}.
Dfr build_d_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options = {});

/// Transition-monoid recognizer for DD1, DD2 or DD3. States are the distinct
/// matrices M_w reachable from the identity M_ε.
Dfr build_dd_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options = {});

/// Dispatches to build_d_recognizer or build_dd_recognizer.
Dfr build_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options = {});

/// Every matrix M_w of f, in breadth-first discovery order.
std::vector<TransitionMatrix> transition_monoid(const Ffa& f, const RecognizerOptions& options = {});

/// Non-emptiness of the directing-word language.
bool is_directable(const Ffa& f, DirectingKind kind, const RecognizerOptions& options = {});

/// A shortest directing word, lexicographically least in declared alphabet
/// order among the shortest; nullopt when none exists.
std::optional<Word> shortest_directing_word(const Ffa& f, DirectingKind kind,
                                            const RecognizerOptions& options = {});

/// Shortest accepted word of a recognizer, least in alphabet order.
std::optional<Word> shortest_accepted_word(const Dfr& r);

/// w D3-merges a and b when F(a, w) and F(b, w) intersect.
bool d3_merges(const Ffa& f, StateId a, StateId b, std::span<const LetterId> w);

/// A reflexive, symmetric relation on {0, ..., n-1}.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  static PairRelation identity(std::size_t n);

  std::size_t universe() const noexcept { return n_; }
  bool contains(StateId a, StateId b) const { return bits_[a * n_ + b] != 0; }
  /// Inserts (a, b) and (b, a); returns false if already present.
  bool insert(StateId a, StateId b);
  /// Number of unordered pairs {a, b}, a != b.
  std::size_t off_diagonal_pairs() const;
  bool is_total() const;
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_subset_of(const PairRelation& other) const;

  friend bool operator==(const PairRelation&, const PairRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

/// The pairs found D3-mergeable by the worklist algorithm over the inverted
/// transition table (plus the diagonal). Throws IncompleteAutomaton.
PairRelation d3_mergeable_pairs(const Ffa& f);

/// Decides D3-directability of a complete FFA by pairwise merging.
/// Throws IncompleteAutomaton: for incomplete automata every pair may merge
/// while no D3-directing word exists.
bool d3_decide_by_merging(const Ffa& f);

/// mu(0) = identity, mu(k) adds pairs (a, b) with some letter x such that
/// F(a, x) x F(b, x) meets mu(k-1). Returns mu(0), ..., mu(k) up to the first
/// index where the chain stops growing. Throws IncompleteAutomaton.
std::vector<PairRelation> mu_chain(const Ffa& f);

}  // namespace fuzzdir
