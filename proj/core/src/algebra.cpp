#include "fuzzdir/algebra.hpp"

#include <algorithm>
#include <map>

namespace fuzzdir {

namespace {

/// map[x] = index in `other` of `sig`'s letter x.
std::vector<LetterId> align_letters(const Signature& sig, const Signature& other) {
  if (sig.letter_count() != other.letter_count()) throw InputError("alphabet mismatch");
  std::vector<LetterId> map;
  for (const auto& letter : sig.alphabet()) {
    auto x = other.find_letter(letter);
    if (!x) throw InputError("alphabet mismatch: '" + letter + "' missing");
    map.push_back(*x);
  }
  return map;
}

/// max{ f(a, x, a') | phi(a') = b } for every b of the codomain.
std::vector<Degree> image_row(const Ffa& f, const StateMap& phi, StateId a, LetterId x) {
  std::vector<Degree> row(phi.codomain().size());
  for (const auto& e : f.row(a, x)) row[phi(e.target)] = join(row[phi(e.target)], e.degree);
  return row;
}

}  // namespace

StateMap::StateMap(std::vector<StateId> image, std::vector<std::string> codomain)
    : image_(std::move(image)), codomain_(std::move(codomain)) {
  for (StateId t : image_) {
    if (t >= codomain_.size()) throw InputError("state map image out of range");
  }
}

StateMap::StateMap(const Signature& source, std::vector<std::string> codomain,
                   const std::vector<std::pair<std::string, std::string>>& assignments)
    : codomain_(std::move(codomain)) {
  constexpr auto unset = static_cast<StateId>(-1);
  image_.assign(source.state_count(), unset);
  for (const auto& [from, to] : assignments) {
    const StateId s = source.state(from);
    auto it = std::find(codomain_.begin(), codomain_.end(), to);
    if (it == codomain_.end()) throw InputError("state map target '" + to + "' not in codomain");
    if (image_[s] != unset) throw InputError("state '" + from + "' mapped twice");
    image_[s] = static_cast<StateId>(it - codomain_.begin());
  }
  for (StateId s = 0; s < image_.size(); ++s) {
    if (image_[s] == unset) throw InputError("state '" + source.state_name(s) + "' not mapped");
  }
}

StateMap StateMap::identity(const Signature& sig) {
  std::vector<StateId> image(sig.state_count());
  for (StateId s = 0; s < image.size(); ++s) image[s] = s;
  return StateMap(std::move(image), sig.states());
}

bool StateMap::is_surjective() const {
  std::vector<char> hit(codomain_.size(), 0);
  for (StateId t : image_) hit[t] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_subautomaton(const Ffa& g, const Ffa& f) {
  std::vector<LetterId> letters;
  try {
    letters = align_letters(g.signature(), f.signature());
  } catch (const InputError&) {
    return false;
  }
  std::vector<StateId> in_f;
  StateSet b(f.state_count());
  for (const auto& name : g.signature().states()) {
    auto s = f.signature().find_state(name);
    if (!s) return false;
    in_f.push_back(*s);
    b.insert(*s);
  }
  for (StateId s = 0; s < g.state_count(); ++s) {
    for (LetterId x = 0; x < g.letter_count(); ++x) {
      const auto frow = f.row(in_f[s], letters[x]);
      const auto grow = g.row(s, x);
      if (frow.size() != grow.size()) return false;
      for (const auto& e : frow) {
        if (!b.contains(e.target)) return false;
      }
      for (const auto& e : grow) {
        if (f.degree(in_f[s], letters[x], in_f[e.target]) != e.degree) return false;
      }
    }
  }
  return true;
}

Ffa subautomaton_induced(const Ffa& f, const StateSet& states) {
  if (states.universe() != f.state_count()) throw InputError("state set over the wrong state set");
  if (states.empty()) throw InputError("subautomaton needs at least one state");
  const auto members = states.members();
  std::vector<StateId> local(f.state_count(), 0);
  for (StateId i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<std::string> names;
  std::vector<std::vector<Ffa::Edge>> rows;
  for (StateId s : members) {
    names.push_back(f.signature().state_name(s));
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      std::vector<Ffa::Edge> row;
      for (const auto& e : f.row(s, x)) {
        if (!states.contains(e.target)) {
          throw NotClosed(f.signature().state_name(s), f.signature().letter_name(x),
                          f.signature().state_name(e.target));
        }
        row.push_back({local[e.target], e.degree});
      }
      rows.push_back(std::move(row));
    }
  }
  return Ffa(Signature(std::move(names), f.signature().alphabet()), std::move(rows));
}

std::optional<HomomorphismViolation> find_homomorphism_violation(const StateMap& phi, const Ffa& f,
                                                                 const Ffa& g) {
  if (phi.source_size() != f.state_count()) throw InputError("state map does not cover the source");
  if (phi.codomain() != g.signature().states()) throw InputError("state map codomain differs from target states");
  const auto letters = align_letters(f.signature(), g.signature());
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (LetterId x = 0; x < f.letter_count(); ++x) {
      const auto expected = image_row(f, phi, a, x);
      for (StateId b = 0; b < g.state_count(); ++b) {
        const Degree actual = g.degree(phi(a), letters[x], b);
        if (actual != expected[b]) return HomomorphismViolation{a, x, b, expected[b], actual};
      }
    }
  }
  return std::nullopt;
}

bool check_homomorphism(const StateMap& phi, const Ffa& f, const Ffa& g) {
  return !find_homomorphism_violation(phi, f, g).has_value();
}

Ffa epimorphic_image(const Ffa& f, const StateMap& phi) {
  if (phi.source_size() != f.state_count()) throw InputError("state map does not cover the source");
  if (!phi.is_surjective()) throw InputError("state map is not surjective");
  const std::size_t k = phi.codomain().size();
  const std::size_t m = f.letter_count();
  constexpr auto unset = static_cast<StateId>(-1);
  std::vector<StateId> representative(k, unset);
  std::vector<std::vector<Degree>> rows(k * m);
  for (StateId a = 0; a < f.state_count(); ++a) {
    const StateId cls = phi(a);
    for (LetterId x = 0; x < m; ++x) {
      auto row = image_row(f, phi, a, x);
      if (representative[cls] == unset) {
        rows[cls * m + x] = std::move(row);
        continue;
      }
      for (StateId b = 0; b < k; ++b) {
        if (row[b] != rows[cls * m + x][b]) {
          throw InconsistentQuotient(f.signature().state_name(representative[cls]), f.signature().state_name(a),
                                     f.signature().letter_name(x), phi.codomain()[b]);
        }
      }
    }
    if (representative[cls] == unset) representative[cls] = a;
  }
  std::vector<std::vector<Ffa::Edge>> edges(k * m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (StateId b = 0; b < k; ++b) {
      if (rows[i][b].is_positive()) edges[i].push_back({b, rows[i][b]});
    }
  }
  return Ffa(Signature(phi.codomain(), f.signature().alphabet()), std::move(edges));
}

Ffa direct_product(const Ffa& f, const Ffa& g) {
  const auto letters = align_letters(f.signature(), g.signature());
  const std::size_t nf = f.state_count();
  const std::size_t ng = g.state_count();
  std::vector<std::string> names;
  names.reserve(nf * ng);
  for (StateId a = 0; a < nf; ++a) {
    for (StateId b = 0; b < ng; ++b) {
      names.push_back("(" + f.signature().state_name(a) + "," + g.signature().state_name(b) + ")");
    }
  }
  std::vector<std::vector<Ffa::Edge>> rows;
  rows.reserve(nf * ng * f.letter_count());
  for (StateId a = 0; a < nf; ++a) {
    for (StateId b = 0; b < ng; ++b) {
      for (LetterId x = 0; x < f.letter_count(); ++x) {
        std::vector<Ffa::Edge> row;
        for (const auto& ea : f.row(a, x)) {
          for (const auto& eb : g.row(b, letters[x])) {
            row.push_back({static_cast<StateId>(ea.target * ng + eb.target), meet(ea.degree, eb.degree)});
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return Ffa(Signature(std::move(names), f.signature().alphabet()), std::move(rows));
}

}  // namespace fuzzdir
