#include "fuzzdir/directability.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <queue>
#include <string>
#include <unordered_map>

#include "explore.hpp"
#include "fuzzdir/errors.hpp"
#include "fuzzdir/reductions.hpp"

namespace fuzzdir {

std::string_view to_string(DirectingKind kind) {
  switch (kind) {
    case DirectingKind::D1: return "D1";
    case DirectingKind::D2: return "D2";
    case DirectingKind::D3: return "D3";
    case DirectingKind::DD1: return "DD1";
    case DirectingKind::DD2: return "DD2";
    case DirectingKind::DD3: return "DD3";
  }
  return "?";
}

DirectingKind parse_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto k : kAllKinds) {
    if (upper == to_string(k)) return k;
  }
  throw InputError("unknown directing kind '" + std::string(text) + "'");
}

namespace {

// ------------------------------------------------------------ row predicates

bool sets_directing(DirectingKind kind, const std::vector<StateSet>& rows) {
  switch (kind) {
    case DirectingKind::D1:
      return rows.front().size() == 1 &&
             std::all_of(rows.begin(), rows.end(), [&](const StateSet& r) { return r == rows.front(); });
    case DirectingKind::D2:
      return std::all_of(rows.begin(), rows.end(), [&](const StateSet& r) { return r == rows.front(); });
    case DirectingKind::D3: {
      StateSet common = rows.front();
      for (const auto& r : rows) common &= r;
      return !common.empty();
    }
    default:
      throw InputError("degree-sensitive kind applied to crisp reach sets");
  }
}

bool fuzzy_rows_directing(DirectingKind kind, const std::vector<FuzzyStateSet>& rows) {
  const auto& first = rows.front();
  switch (kind) {
    case DirectingKind::DD1:
      return first.entries().size() == 1 &&
             std::all_of(rows.begin(), rows.end(), [&](const FuzzyStateSet& r) { return r == first; });
    case DirectingKind::DD2:
      return std::all_of(rows.begin(), rows.end(), [&](const FuzzyStateSet& r) { return r == first; });
    case DirectingKind::DD3:
      for (StateId c = 0; c < first.ground(); ++c) {
        const bool ok = std::all_of(rows.begin(), rows.end(), [&](const FuzzyStateSet& r) {
          const Degree dc = r[c];
          return dc.is_positive() && dc == r.height();
        });
        if (ok) return true;
      }
      return false;
    default:
      throw InputError("crisp kind applied to fuzzy rows");
  }
}

// ------------------------------------------------------------ matrix finals

bool matrix_final(DirectingKind kind, const TransitionMatrix& m) {
  const std::size_t n = m.dimension();
  switch (kind) {
    case DirectingKind::DD1:
      for (std::size_t j = 0; j < n; ++j) {
        const Degree r = m(0, j);
        if (!r.is_positive()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          for (std::size_t k = 0; k < n && ok; ++k) ok = k == j ? m(i, k) == r : m(i, k).is_zero();
        }
        if (ok) return true;
      }
      return false;
    case DirectingKind::DD2:
      for (std::size_t i = 1; i < n; ++i) {
        if (!std::equal(m.row_span(i).begin(), m.row_span(i).end(), m.row_span(0).begin())) return false;
      }
      return true;
    case DirectingKind::DD3:
      for (std::size_t j = 0; j < n; ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          const auto row = m.row_span(i);
          ok = m(i, j).is_positive() && *std::max_element(row.begin(), row.end()) == m(i, j);
        }
        if (ok) return true;
      }
      return false;
    default:
      throw InputError("build_dd_recognizer requires DD1, DD2 or DD3");
  }
}

// ------------------------------------------------------------ subset families

using Family = std::vector<StateSet>;

struct FamilyHash {
  std::size_t operator()(const Family& fam) const noexcept {
    std::size_t h = fam.size();
    for (const auto& s : fam) h = (h ^ s.hash()) * 0x9e3779b97f4a7c15ull;
    return h;
  }
};

void canonicalize(Family& fam) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

bool family_final(DirectingKind kind, const Family& fam) {
  switch (kind) {
    case DirectingKind::D1: return fam.size() == 1 && fam.front().size() == 1;
    case DirectingKind::D2: return fam.size() == 1;
    case DirectingKind::D3: {
      StateSet common = fam.front();
      for (const auto& c : fam) common &= c;
      return !common.empty();
    }
    default: throw InputError("build_d_recognizer requires D1, D2 or D3");
  }
}

std::string family_name(const Signature& sig, const Family& fam) {
  std::string out = "{";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i > 0) out += ',';
    out += sig.format_set(fam[i]);
  }
  return out + "}";
}

std::vector<TransitionMatrix> letter_matrices(const Ffa& f) {
  std::vector<TransitionMatrix> out;
  for (LetterId x = 0; x < f.letter_count(); ++x) out.push_back(letter_matrix(f, x));
  return out;
}

void require_complete(const Ffa& f) {
  if (!is_complete(f)) throw IncompleteAutomaton();
}

}  // namespace

// ------------------------------------------------------------ word tests

bool is_directing(const Ffa& f, DirectingKind kind, std::span<const LetterId> w) {
  f.signature().check_word(w);
  std::vector<FuzzyStateSet> rows;
  rows.reserve(f.state_count());
  for (StateId a = 0; a < f.state_count(); ++a) rows.push_back(ffa_step_star(f, a, w));
  if (is_degree_kind(kind)) return fuzzy_rows_directing(kind, rows);
  std::vector<StateSet> reach;
  reach.reserve(rows.size());
  for (const auto& r : rows) reach.push_back(r.support());
  return sets_directing(kind, reach);
}

bool is_directing(const Nfa& n, DirectingKind kind, std::span<const LetterId> w) {
  if (is_degree_kind(kind)) throw InputError("DD kinds are not defined for NFAs");
  n.signature().check_word(w);
  std::vector<StateSet> rows;
  rows.reserve(n.state_count());
  for (StateId a = 0; a < n.state_count(); ++a) {
    rows.push_back(nfa_step_star(n, StateSet::singleton(n.state_count(), a), w));
  }
  return sets_directing(kind, rows);
}

// ------------------------------------------------------------ recognizers

Dfr build_d_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options) {
  if (is_degree_kind(kind)) throw InputError("build_d_recognizer requires D1, D2 or D3");
  const Nfa nd = ffa_to_nfa(f);
  const std::size_t n = f.state_count();
  Family initial;
  for (StateId a = 0; a < n; ++a) initial.push_back(StateSet::singleton(n, a));
  canonicalize(initial);
  auto step = [&](const Family& fam, LetterId x) {
    Family next;
    next.reserve(fam.size());
    for (const auto& c : fam) {
      StateSet img(n);
      c.for_each([&](StateId s) { img |= nd.image(s, x); });
      next.push_back(std::move(img));
    }
    canonicalize(next);
    return next;
  };
  return detail::explore<Family, FamilyHash>(
      f.signature(), std::move(initial), step, [&](const Family& fam) { return family_final(kind, fam); },
      [&](const Family& fam) { return family_name(f.signature(), fam); }, options.state_cap);
}

Dfr build_dd_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options) {
  if (!is_degree_kind(kind)) throw InputError("build_dd_recognizer requires DD1, DD2 or DD3");
  const auto letters = letter_matrices(f);
  return detail::explore<TransitionMatrix, std::hash<TransitionMatrix>>(
      f.signature(), TransitionMatrix::identity(f.state_count()),
      [&](const TransitionMatrix& m, LetterId x) { return m * letters[x]; },
      [&](const TransitionMatrix& m) { return matrix_final(kind, m); },
      [](const TransitionMatrix& m) { return m.to_string(); }, options.state_cap);
}

Dfr build_recognizer(const Ffa& f, DirectingKind kind, const RecognizerOptions& options) {
  return is_degree_kind(kind) ? build_dd_recognizer(f, kind, options) : build_d_recognizer(f, kind, options);
}

std::vector<TransitionMatrix> transition_monoid(const Ffa& f, const RecognizerOptions& options) {
  const auto letters = letter_matrices(f);
  std::vector<TransitionMatrix> out{TransitionMatrix::identity(f.state_count())};
  std::unordered_map<TransitionMatrix, std::size_t> seen{{out.front(), 0}};
  for (std::size_t cur = 0; cur < out.size(); ++cur) {
    for (const auto& lm : letters) {
      auto next = out[cur] * lm;
      if (seen.contains(next)) continue;
      if (out.size() >= options.state_cap) throw StateCapExceeded(options.state_cap);
      seen.emplace(next, out.size());
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<Word> shortest_accepted_word(const Dfr& r) {
  const std::size_t n = r.state_count();
  const std::size_t m = r.signature().letter_count();
  constexpr auto none = static_cast<StateId>(-1);
  std::vector<StateId> parent(n, none);
  std::vector<LetterId> via(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<StateId> queue;
  seen[r.initial()] = 1;
  queue.push(r.initial());
  std::optional<StateId> hit;
  if (r.is_final(r.initial())) hit = r.initial();
  // Letters are tried in declared order, so the first final state discovered
  // carries the least word among the shortest.
  while (!hit && !queue.empty()) {
    const StateId s = queue.front();
    queue.pop();
    for (LetterId x = 0; x < m && !hit; ++x) {
      const StateId t = r.dfa().next(s, x);
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = s;
      via[t] = x;
      if (r.is_final(t)) hit = t;
      queue.push(t);
    }
  }
  if (!hit) return std::nullopt;
  Word w;
  for (StateId s = *hit; s != r.initial(); s = parent[s]) w.push_back(via[s]);
  std::reverse(w.begin(), w.end());
  return w;
}

bool is_directable(const Ffa& f, DirectingKind kind, const RecognizerOptions& options) {
  return !build_recognizer(f, kind, options).finals().empty();
}

std::optional<Word> shortest_directing_word(const Ffa& f, DirectingKind kind,
                                            const RecognizerOptions& options) {
  return shortest_accepted_word(build_recognizer(f, kind, options));
}

// ------------------------------------------------------------ merging

bool d3_merges(const Ffa& f, StateId a, StateId b, std::span<const LetterId> w) {
  return ffa_reach(f, a, w).intersects(ffa_reach(f, b, w));
}

PairRelation PairRelation::identity(std::size_t n) {
  PairRelation rel(n);
  for (StateId a = 0; a < n; ++a) rel.insert(a, a);
  return rel;
}

bool PairRelation::insert(StateId a, StateId b) {
  if (bits_[a * n_ + b]) return false;
  bits_[a * n_ + b] = 1;
  bits_[b * n_ + a] = 1;
  return true;
}

std::size_t PairRelation::off_diagonal_pairs() const {
  std::size_t count = 0;
  for (StateId a = 0; a < n_; ++a) {
    for (StateId b = a + 1; b < n_; ++b) count += contains(a, b) ? 1 : 0;
  }
  return count;
}

bool PairRelation::is_total() const {
  return std::all_of(bits_.begin(), bits_.end(), [](char c) { return c != 0; });
}

bool PairRelation::is_reflexive() const {
  for (StateId a = 0; a < n_; ++a) {
    if (!contains(a, a)) return false;
  }
  return true;
}

bool PairRelation::is_symmetric() const {
  for (StateId a = 0; a < n_; ++a) {
    for (StateId b = 0; b < n_; ++b) {
      if (contains(a, b) != contains(b, a)) return false;
    }
  }
  return true;
}

bool PairRelation::is_subset_of(const PairRelation& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

PairRelation d3_mergeable_pairs(const Ffa& f) {
  require_complete(f);
  const std::size_t n = f.state_count();
  const std::size_t m = f.letter_count();

  // Step 1: M := 0, NewPair := empty, inverted table I[a,x] = { i | a in F(i,x) }.
  std::vector<char> merged(n * n, 0);
  std::deque<std::pair<StateId, StateId>> new_pairs;
  std::vector<std::vector<StateId>> inverted(n * m);
  for (StateId i = 0; i < n; ++i) {
    for (LetterId x = 0; x < m; ++x) {
      for (const auto& e : f.row(i, x)) inverted[e.target * m + x].push_back(i);
    }
  }
  auto mark = [&](StateId i, StateId j) {
    if (i > j) std::swap(i, j);
    if (i == j || merged[i * n + j]) return;
    merged[i * n + j] = 1;
    new_pairs.emplace_back(i, j);
  };

  // Step 2: states with a common successor are merged by a single letter.
  for (StateId a = 0; a < n; ++a) {
    for (LetterId x = 0; x < m; ++x) {
      const auto& preds = inverted[a * m + x];
      if (preds.size() < 2) continue;
      for (std::size_t p = 0; p < preds.size(); ++p) {
        for (std::size_t q = p + 1; q < preds.size(); ++q) mark(preds[p], preds[q]);
      }
    }
  }

  // Step 3: propagate backwards from each newly mergeable pair.
  while (!new_pairs.empty()) {
    const auto [a, b] = new_pairs.front();
    new_pairs.pop_front();
    for (LetterId x = 0; x < m; ++x) {
      for (StateId i : inverted[a * m + x]) {
        for (StateId j : inverted[b * m + x]) mark(i, j);
      }
    }
  }

  // Step 4 is the totality test on the result.
  PairRelation rel = PairRelation::identity(n);
  for (StateId i = 0; i < n; ++i) {
    for (StateId j = i + 1; j < n; ++j) {
      if (merged[i * n + j]) rel.insert(i, j);
    }
  }
  return rel;
}

bool d3_decide_by_merging(const Ffa& f) { return d3_mergeable_pairs(f).is_total(); }

std::vector<PairRelation> mu_chain(const Ffa& f) {
  require_complete(f);
  const std::size_t n = f.state_count();
  const Nfa nd = ffa_to_nfa(f);
  std::vector<PairRelation> chain{PairRelation::identity(n)};
  for (;;) {
    const PairRelation& prev = chain.back();
    PairRelation next = prev;
    for (StateId a = 0; a < n; ++a) {
      for (StateId b = a + 1; b < n; ++b) {
        if (prev.contains(a, b)) continue;
        bool found = false;
        for (LetterId x = 0; x < f.letter_count() && !found; ++x) {
          nd.image(a, x).for_each([&](StateId c) {
            if (found) return;
            nd.image(b, x).for_each([&](StateId d) { found = found || prev.contains(c, d); });
          });
        }
        if (found) next.insert(a, b);
      }
    }
    if (next == prev) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace fuzzdir
