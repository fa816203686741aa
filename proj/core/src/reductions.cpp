#include "fuzzdir/reductions.hpp"

namespace fuzzdir {

Nfa ffa_to_nfa(const Ffa& f) {
  std::vector<StateSet> images;
  images.reserve(f.state_count() * f.letter_count());
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      StateSet img(f.state_count());
      for (const auto& e : f.row(a, x)) img.insert(e.target);
      images.push_back(std::move(img));
    }
  }
  return Nfa(f.signature(), std::move(images));
}

Ffa nfa_to_ffa(const Nfa& n) {
  std::vector<std::vector<Ffa::Edge>> rows;
  rows.reserve(n.state_count() * n.letter_count());
  for (StateId a = 0; a < n.state_count(); ++a) {
    for (LetterId x = 0; x < n.letter_count(); ++x) {
      std::vector<Ffa::Edge> row;
      n.image(a, x).for_each([&](StateId b) { row.push_back({b, Degree::one()}); });
      rows.push_back(std::move(row));
    }
  }
  return Ffa(n.signature(), std::move(rows));
}

Ffa dfa_to_ffa(const Dfa& d) {
  std::vector<std::vector<Ffa::Edge>> rows;
  rows.reserve(d.state_count() * d.letter_count());
  for (StateId a = 0; a < d.state_count(); ++a) {
    for (LetterId x = 0; x < d.letter_count(); ++x) rows.push_back({{d.next(a, x), Degree::one()}});
  }
  return Ffa(d.signature(), std::move(rows));
}

Nfa dfa_to_nfa(const Dfa& d) {
  std::vector<StateSet> images;
  images.reserve(d.state_count() * d.letter_count());
  for (StateId a = 0; a < d.state_count(); ++a) {
    for (LetterId x = 0; x < d.letter_count(); ++x) {
      images.push_back(StateSet::singleton(d.state_count(), d.next(a, x)));
    }
  }
  return Nfa(d.signature(), std::move(images));
}

}  // namespace fuzzdir
