#include "fuzzdir/automata.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

namespace {

void check_name(const std::string& name, const char* what) {
  if (name.empty()) throw InputError(std::string("empty ") + what + " name");
  for (unsigned char c : name) {
    if (std::isspace(c) || c == '#') {
      throw InputError(std::string(what) + " name '" + name + "' contains whitespace or '#'");
    }
  }
}

template <class Index>
std::unordered_map<std::string, Index> index_names(const std::vector<std::string>& names,
                                                   const char* what) {
  if (names.empty()) throw InputError(std::string("no ") + what + "s declared");
  std::unordered_map<std::string, Index> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    check_name(names[i], what);
    if (!index.emplace(names[i], static_cast<Index>(i)).second) {
      throw InputError(std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
  return index;
}

}  // namespace

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<std::string> states, std::vector<std::string> alphabet)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
  state_index_ = index_names<StateId>(states_, "state");
  letter_index_ = index_names<LetterId>(alphabet_, "letter");
  single_char_letters_ = std::all_of(alphabet_.begin(), alphabet_.end(),
                                     [](const std::string& l) { return l.size() == 1; });
}

std::optional<StateId> Signature::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LetterId> Signature::find_letter(std::string_view name) const {
  auto it = letter_index_.find(std::string(name));
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

StateId Signature::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw InputError("unknown state '" + std::string(name) + "'");
}

LetterId Signature::letter(std::string_view name) const {
  if (auto x = find_letter(name)) return *x;
  throw InputError("unknown letter '" + std::string(name) + "'");
}

StateSet Signature::state_set(std::initializer_list<std::string_view> names) const {
  StateSet out(state_count());
  for (auto name : names) out.insert(state(name));
  return out;
}

void Signature::check_state(StateId s) const {
  if (s >= state_count()) throw InputError("state index " + std::to_string(s) + " out of range");
}

void Signature::check_word(std::span<const LetterId> w) const {
  for (LetterId x : w) {
    if (x >= letter_count()) throw InputError("letter index " + std::to_string(x) + " out of range");
  }
}

Word Signature::parse_word(std::string_view text) const {
  Word w;
  if (text.empty() || text == "ε") return w;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c) != 0; });
  if (spaced) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) w.push_back(letter(text.substr(i, j - i)));
      i = j;
    }
    return w;
  }
  if (auto x = find_letter(text)) return {*x};
  if (!single_char_letters_) throw InputError("unknown letter '" + std::string(text) + "'");
  for (char c : text) w.push_back(letter(std::string_view(&c, 1)));
  return w;
}

std::string Signature::format_word(std::span<const LetterId> w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_letters_) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

std::string Signature::format_set(const StateSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](StateId id) {
    if (!first) out += ',';
    first = false;
    out += state_name(id);
  });
  return out + "}";
}

// ---------------------------------------------------------------- Dfa / Nfa / Ffa

Dfa::Dfa(Signature sig, std::vector<StateId> delta) : sig_(std::move(sig)), delta_(std::move(delta)) {
  if (delta_.size() != sig_.state_count() * sig_.letter_count()) {
    throw InputError("DFA transition table has the wrong size");
  }
  for (StateId t : delta_) sig_.check_state(t);
}

Dfa::Dfa(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::span<const Transition> transitions)
    : sig_(std::move(states), std::move(alphabet)) {
  constexpr auto unset = static_cast<StateId>(-1);
  delta_.assign(sig_.state_count() * sig_.letter_count(), unset);
  for (const auto& t : transitions) {
    auto& slot = delta_[sig_.state(t.from) * sig_.letter_count() + sig_.letter(t.letter)];
    if (slot != unset) throw InputError("duplicate transition " + t.from + " " + t.letter);
    slot = sig_.state(t.to);
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i] == unset) {
      throw InputError("DFA transition missing for " + sig_.state_name(i / sig_.letter_count()) +
                       " " + sig_.letter_name(i % sig_.letter_count()));
    }
  }
}

Nfa::Nfa(Signature sig, std::vector<StateSet> images) : sig_(std::move(sig)), images_(std::move(images)) {
  if (images_.size() != sig_.state_count() * sig_.letter_count()) {
    throw InputError("NFA transition table has the wrong size");
  }
  for (const auto& img : images_) {
    if (img.universe() != sig_.state_count()) throw InputError("NFA image over the wrong state set");
  }
}

Nfa::Nfa(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::span<const Transition> transitions)
    : sig_(std::move(states), std::move(alphabet)) {
  images_.assign(sig_.state_count() * sig_.letter_count(), StateSet(sig_.state_count()));
  for (const auto& t : transitions) {
    auto& img = images_[sig_.state(t.from) * sig_.letter_count() + sig_.letter(t.letter)];
    const StateId to = sig_.state(t.to);
    if (img.contains(to)) {
      throw InputError("duplicate transition " + t.from + " " + t.letter + " " + t.to);
    }
    img.insert(to);
  }
}

Ffa::Ffa(Signature sig, std::vector<std::vector<Edge>> rows) : sig_(std::move(sig)), rows_(std::move(rows)) {
  if (rows_.size() != sig_.state_count() * sig_.letter_count()) {
    throw InputError("FFA transition table has the wrong size");
  }
  for (auto& row : rows_) {
    std::erase_if(row, [](const Edge& e) { return e.degree.is_zero(); });
    std::sort(row.begin(), row.end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
    for (std::size_t i = 0; i < row.size(); ++i) {
      sig_.check_state(row[i].target);
      if (i > 0 && row[i - 1].target == row[i].target) throw InputError("duplicate FFA transition");
    }
  }
}

Ffa::Ffa(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::span<const Transition> transitions)
    : sig_(std::move(states), std::move(alphabet)) {
  rows_.assign(sig_.state_count() * sig_.letter_count(), {});
  std::set<std::tuple<StateId, LetterId, StateId>> seen;
  for (const auto& t : transitions) {
    const StateId from = sig_.state(t.from);
    const LetterId x = sig_.letter(t.letter);
    const StateId to = sig_.state(t.to);
    if (!seen.emplace(from, x, to).second) {
      throw InputError("duplicate transition " + t.from + " " + t.letter + " " + t.to);
    }
    if (t.degree.is_positive()) rows_[from * sig_.letter_count() + x].push_back({to, t.degree});
  }
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
  }
}

Degree Ffa::degree(StateId from, LetterId x, StateId to) const {
  const auto r = row(from, x);
  auto it = std::lower_bound(r.begin(), r.end(), to,
                             [](const Edge& e, StateId key) { return e.target < key; });
  return it != r.end() && it->target == to ? it->degree : Degree::zero();
}

FuzzyStateSet Ffa::fuzzy_row(StateId s, LetterId x) const {
  std::vector<FuzzyStateSet::Entry> entries;
  for (const auto& e : row(s, x)) entries.emplace_back(e.target, e.degree);
  return FuzzyStateSet(state_count(), std::move(entries));
}

std::vector<Degree> Ffa::degree_values() const {
  std::vector<Degree> values;
  for (const auto& row : rows_) {
    for (const auto& e : row) values.push_back(e.degree);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// ---------------------------------------------------------------- Dfr

Dfr::Dfr(Dfa dfa, StateId initial, StateSet finals)
    : dfa_(std::move(dfa)), initial_(initial), finals_(std::move(finals)) {
  dfa_.signature().check_state(initial_);
  if (finals_.universe() != dfa_.state_count()) throw InputError("final-state set over the wrong state set");
}

StateId Dfr::run(StateId from, std::span<const LetterId> w) const { return dfa_step_star(dfa_, from, w); }

// ---------------------------------------------------------------- extended transitions

FuzzyStateSet ffa_step(const Ffa& f, const FuzzyStateSet& from, LetterId x) {
  std::vector<Degree> acc(f.state_count());
  for (const auto& [c, dc] : from.entries()) {
    for (const auto& e : f.row(c, x)) acc[e.target] = join(acc[e.target], meet(dc, e.degree));
  }
  return FuzzyStateSet::from_dense(acc);
}

FuzzyStateSet ffa_step_star(const Ffa& f, StateId a, std::span<const LetterId> w) {
  f.signature().check_state(a);
  f.signature().check_word(w);
  auto current = FuzzyStateSet::singleton(f.state_count(), a, Degree::one());
  for (LetterId x : w) current = ffa_step(f, current, x);
  return current;
}

StateSet ffa_reach_set(const Ffa& f, const StateSet& h, std::span<const LetterId> w) {
  f.signature().check_word(w);
  if (h.universe() != f.state_count()) throw InputError("state set over the wrong state set");
  StateSet current = h;
  for (LetterId x : w) {
    StateSet next(f.state_count());
    current.for_each([&](StateId c) {
      for (const auto& e : f.row(c, x)) next.insert(e.target);
    });
    current = std::move(next);
  }
  return current;
}

StateSet ffa_reach(const Ffa& f, StateId a, std::span<const LetterId> w) {
  f.signature().check_state(a);
  return ffa_reach_set(f, StateSet::singleton(f.state_count(), a), w);
}

StateSet nfa_step_star(const Nfa& n, const StateSet& h, std::span<const LetterId> w) {
  n.signature().check_word(w);
  if (h.universe() != n.state_count()) throw InputError("state set over the wrong state set");
  StateSet current = h;
  for (LetterId x : w) {
    StateSet next(n.state_count());
    current.for_each([&](StateId c) { next |= n.image(c, x); });
    current = std::move(next);
  }
  return current;
}

StateId dfa_step_star(const Dfa& d, StateId a, std::span<const LetterId> w) {
  d.signature().check_state(a);
  d.signature().check_word(w);
  for (LetterId x : w) a = d.next(a, x);
  return a;
}

// ---------------------------------------------------------------- predicates

bool is_complete(const Ffa& f) {
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      if (f.row(a, x).empty()) return false;
    }
  }
  return true;
}

bool is_complete(const Nfa& n) {
  for (StateId a = 0; a < n.state_count(); ++a) {
    for (LetterId x = 0; x < n.letter_count(); ++x) {
      if (n.image(a, x).empty()) return false;
    }
  }
  return true;
}

bool is_normal(const Ffa& f) {
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      const auto r = f.row(a, x);
      if (std::none_of(r.begin(), r.end(), [](const Ffa::Edge& e) { return e.degree.is_one(); })) {
        return false;
      }
    }
  }
  return true;
}

bool is_crisp(const Ffa& f) {
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      for (const auto& e : f.row(a, x)) {
        if (!e.degree.is_one()) return false;
      }
    }
  }
  return true;
}

bool is_deterministic(const Ffa& f) {
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      const auto r = f.row(a, x);
      if (r.size() != 1 || !r.front().degree.is_one()) return false;
    }
  }
  return true;
}

}  // namespace fuzzdir
