#include "fuzzdir/languages.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "explore.hpp"
#include "fuzzdir/errors.hpp"

namespace fuzzdir {

namespace {

std::vector<StateId> reachable_order(const Dfr& r) {
  std::vector<StateId> order{r.initial()};
  std::vector<char> seen(r.state_count(), 0);
  seen[r.initial()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (LetterId x = 0; x < r.signature().letter_count(); ++x) {
      const StateId t = r.dfa().next(order[i], x);
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  return order;
}

/// letter_map[x] = index in r2 of r1's letter x.
std::vector<LetterId> align_alphabets(const Dfr& r1, const Dfr& r2) {
  const auto& a1 = r1.signature().alphabet();
  const auto& a2 = r2.signature().alphabet();
  if (a1.size() != a2.size()) throw InputError("alphabet mismatch");
  std::vector<LetterId> map;
  map.reserve(a1.size());
  for (const auto& letter : a1) {
    auto x = r2.signature().find_letter(letter);
    if (!x) throw InputError("alphabet mismatch: '" + letter + "' missing");
    map.push_back(*x);
  }
  return map;
}

std::string unique_name(const Signature& sig, std::string base) {
  while (sig.find_state(base)) base += '\'';
  return base;
}

}  // namespace

Dfr minimize(const Dfr& r) {
  const std::size_t m = r.signature().letter_count();
  const auto order = reachable_order(r);

  // Moore refinement: split classes by (class, successor classes) until stable.
  std::vector<std::size_t> cls(r.state_count(), 0);
  for (StateId s : order) cls[s] = r.is_final(s) ? 1 : 0;
  std::size_t class_count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(r.state_count(), 0);
    for (StateId s : order) {
      std::vector<std::size_t> sig{cls[s]};
      for (LetterId x = 0; x < m; ++x) sig.push_back(cls[r.dfa().next(s, x)]);
      next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    const bool stable = ids.size() == class_count;
    class_count = ids.size();
    cls = std::move(next);
    if (stable) break;
  }

  // Renumber classes in breadth-first order from the initial class.
  constexpr auto unset = static_cast<StateId>(-1);
  std::vector<StateId> number(class_count, unset);
  std::vector<StateId> representative;
  number[cls[r.initial()]] = 0;
  representative.push_back(r.initial());
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    for (LetterId x = 0; x < m; ++x) {
      const std::size_t c = cls[r.dfa().next(representative[i], x)];
      if (number[c] == unset) {
        number[c] = static_cast<StateId>(representative.size());
        representative.push_back(r.dfa().next(representative[i], x));
      }
      delta.push_back(number[c]);
    }
  }
  std::vector<std::string> names;
  StateSet finals(representative.size());
  for (std::size_t i = 0; i < representative.size(); ++i) {
    names.push_back("q" + std::to_string(i));
    if (r.is_final(representative[i])) finals.insert(static_cast<StateId>(i));
  }
  return Dfr(Dfa(Signature(std::move(names), r.signature().alphabet()), std::move(delta)), 0,
             std::move(finals));
}

std::optional<Word> distinguishing_word(const Dfr& r1, const Dfr& r2) {
  const auto map = align_alphabets(r1, r2);
  const std::size_t m = map.size();
  const std::size_t n2 = r2.state_count();
  auto key = [&](StateId p, StateId q) { return static_cast<std::size_t>(p) * n2 + q; };
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(r1.state_count() * n2, none);
  std::vector<LetterId> via(parent.size(), 0);
  std::vector<char> seen(parent.size(), 0);
  std::queue<std::pair<StateId, StateId>> queue;
  queue.emplace(r1.initial(), r2.initial());
  seen[key(r1.initial(), r2.initial())] = 1;
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop();
    if (r1.is_final(p) != r2.is_final(q)) {
      Word w;
      for (std::size_t k = key(p, q); k != key(r1.initial(), r2.initial()); k = parent[k]) {
        w.push_back(via[k]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (LetterId x = 0; x < m; ++x) {
      const StateId p2 = r1.dfa().next(p, x);
      const StateId q2 = r2.dfa().next(q, map[x]);
      const auto k = key(p2, q2);
      if (seen[k]) continue;
      seen[k] = 1;
      parent[k] = key(p, q);
      via[k] = x;
      queue.emplace(p2, q2);
    }
  }
  return std::nullopt;
}

bool language_equal(const Dfr& r1, const Dfr& r2) { return !distinguishing_word(r1, r2).has_value(); }

bool is_empty_language(const Dfr& r) {
  const auto order = reachable_order(r);
  return std::none_of(order.begin(), order.end(), [&](StateId s) { return r.is_final(s); });
}

Dfr left_ideal_closure(const Dfr& r) {
  const std::size_t n = r.state_count();
  auto initial = StateSet::singleton(n, r.initial());
  return detail::explore<StateSet, std::hash<StateSet>>(
      r.signature(), std::move(initial),
      [&](const StateSet& s, LetterId x) {
        StateSet next = StateSet::singleton(n, r.initial());
        s.for_each([&](StateId q) { next.insert(r.dfa().next(q, x)); });
        return next;
      },
      [&](const StateSet& s) { return s.intersects(r.finals()); },
      [&](const StateSet& s) { return r.signature().format_set(s); }, kDefaultStateCap);
}

Dfr right_ideal_closure(const Dfr& r) {
  const std::size_t n = r.state_count();
  const std::size_t m = r.signature().letter_count();
  const auto sink = static_cast<StateId>(n);
  std::vector<StateId> delta;
  delta.reserve((n + 1) * m);
  for (StateId s = 0; s < n; ++s) {
    for (LetterId x = 0; x < m; ++x) delta.push_back(r.is_final(s) ? sink : r.dfa().next(s, x));
  }
  for (LetterId x = 0; x < m; ++x) delta.push_back(sink);
  auto names = r.signature().states();
  names.push_back(unique_name(r.signature(), "accept"));
  StateSet finals(n + 1);
  finals.insert(sink);
  for (StateId s = 0; s < n; ++s) {
    if (r.is_final(s)) finals.insert(s);
  }
  return Dfr(Dfa(Signature(std::move(names), r.signature().alphabet()), std::move(delta)), r.initial(),
             std::move(finals));
}

Dfr two_sided_ideal_closure(const Dfr& r) { return left_ideal_closure(right_ideal_closure(r)); }

Dfr word_language(const std::vector<std::string>& alphabet, const Word& w) {
  // States 0..|w| follow w; state |w|+1 is dead.
  const std::size_t len = w.size();
  const auto dead = static_cast<StateId>(len + 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= len + 1; ++i) names.push_back(i == len + 1 ? "dead" : "p" + std::to_string(i));
  std::vector<StateId> delta;
  for (std::size_t i = 0; i <= len + 1; ++i) {
    for (LetterId x = 0; x < alphabet.size(); ++x) {
      delta.push_back(i < len && w[i] == x ? static_cast<StateId>(i + 1) : dead);
    }
  }
  Signature sig(std::move(names), alphabet);
  sig.check_word(w);
  return Dfr(Dfa(std::move(sig), std::move(delta)), 0, StateSet::singleton(len + 2, static_cast<StateId>(len)));
}

Dfr empty_language(const std::vector<std::string>& alphabet) {
  std::vector<StateId> delta(alphabet.size(), 0);
  return Dfr(Dfa(Signature({"dead"}, alphabet), std::move(delta)), 0, StateSet(1));
}

std::vector<Word> all_words(std::size_t letter_count, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && letter_count > 0; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (LetterId x = 0; x < letter_count; ++x) {
        Word w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

bool ClosureReport::consistent() const {
  return std::all_of(laws.begin(), laws.end(), [](const ClosureLaw& l) { return !l.required || l.holds; });
}

ClosureReport check_closure_equations(const Ffa& f, const RecognizerOptions& options) {
  ClosureReport report;
  report.normal = is_normal(f);
  const Dfr dd1 = build_dd_recognizer(f, DirectingKind::DD1, options);
  const Dfr dd2 = build_dd_recognizer(f, DirectingKind::DD2, options);
  const Dfr dd3 = build_dd_recognizer(f, DirectingKind::DD3, options);
  auto law = [&](std::string name, std::string equation, bool required, const Dfr& lhs, const Dfr& rhs) {
    auto witness = distinguishing_word(lhs, rhs);
    report.laws.push_back({std::move(name), std::move(equation), required, !witness.has_value(), witness});
  };
  law("a", "DD2·X* = DD2", true, right_ideal_closure(dd2), dd2);
  law("b", "X*·DD1 = DD1", report.normal, left_ideal_closure(dd1), dd1);
  law("c", "X*·DD2·X* = DD2", report.normal, two_sided_ideal_closure(dd2), dd2);
  law("d", "X*·DD3·X* = DD3", report.normal, two_sided_ideal_closure(dd3), dd3);
  law("c-left", "X*·DD2 = DD2", false, left_ideal_closure(dd2), dd2);
  return report;
}

bool trap_state_check(const Ffa& f, DirectingKind kind, const RecognizerOptions& options) {
  if (kind != DirectingKind::DD2 && kind != DirectingKind::DD3) {
    throw InputError("trap_state_check applies to DD2 and DD3 only");
  }
  if (kind == DirectingKind::DD3 && !is_normal(f)) {
    throw PreconditionError("trap_state_check(DD3) requires a normal automaton");
  }
  const Dfr rec = build_dd_recognizer(f, kind, options);
  if (is_empty_language(rec)) {
    throw PreconditionError(std::string("automaton is not ") + std::string(to_string(kind)) + "-directable");
  }
  const Dfr min = minimize(rec);
  if (min.finals().size() != 1) return false;
  const StateId trap = min.finals().members().front();
  for (LetterId x = 0; x < min.signature().letter_count(); ++x) {
    if (min.dfa().next(trap, x) != trap) return false;
  }
  return true;
}

std::vector<Word> enumerate_directing_words(const Ffa& f, DirectingKind kind, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : all_words(f.letter_count(), max_len)) {
    if (is_directing(f, kind, w)) out.push_back(std::move(w));
  }
  return out;
}

bool dw_characterization_check(const Dfr& r) {
  return !is_empty_language(r) && language_equal(two_sided_ideal_closure(r), r);
}

}  // namespace fuzzdir
