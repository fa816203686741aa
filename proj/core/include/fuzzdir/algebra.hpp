#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/errors.hpp"

namespace fuzzdir {

/// The state set handed to subautomaton_induced is not closed under
/// transitions: `from` reaches `escape` on `letter`.
class NotClosed : public InputError {
 public:
  NotClosed(std::string from, std::string letter, std::string escape)
      : InputError("state set not closed: " + from + " --" + letter + "--> " + escape),
        from(std::move(from)),
        letter(std::move(letter)),
        escape(std::move(escape)) {}
  std::string from, letter, escape;
};

/// Two states of one class of the map force different degrees for the image
/// transition (class of `first`, `letter`, `target`).
class InconsistentQuotient : public InputError {
 public:
  InconsistentQuotient(std::string first, std::string second, std::string letter, std::string target)
      : InputError("inconsistent quotient: " + first + " and " + second + " disagree on letter " + letter +
                   " into " + target),
        first(std::move(first)),
        second(std::move(second)),
        letter(std::move(letter)),
        target(std::move(target)) {}
  std::string first, second, letter, target;
};

/// A total map from the states of a source automaton to a list of target
/// state names.
class StateMap {
 public:
  StateMap(std::vector<StateId> image, std::vector<std::string> codomain);
  /// Throws InputError unless every source state is mapped exactly once to a
  /// codomain name.
  StateMap(const Signature& source, std::vector<std::string> codomain,
           const std::vector<std::pair<std::string, std::string>>& assignments);
  static StateMap identity(const Signature& sig);

  std::size_t source_size() const noexcept { return image_.size(); }
  const std::vector<std::string>& codomain() const noexcept { return codomain_; }
  StateId operator()(StateId s) const { return image_.at(s); }
  bool is_surjective() const;

 private:
  std::vector<StateId> image_;
  std::vector<std::string> codomain_;
};

/// g is a subautomaton of f: its states are states of f, it is closed under
/// f's positive transitions, and its degrees agree with f's.
bool is_subautomaton(const Ffa& g, const Ffa& f);

/// Restriction of f to a nonempty transition-closed set of states, keeping
/// f's declared order. Throws NotClosed with a witness otherwise.
Ffa subautomaton_induced(const Ffa& f, const StateSet& states);

struct HomomorphismViolation {
  StateId source;
  LetterId letter;
  StateId target;
  Degree expected;  ///< max{ f(source, letter, a') | a' maps to target }
  Degree actual;    ///< g(phi(source), letter, target)
};

/// First (source, letter, target) violating
/// g(phi(a), x, b) = max{ f(a, x, a') | phi(a') = b }, or nullopt.
std::optional<HomomorphismViolation> find_homomorphism_violation(const StateMap& phi, const Ffa& f,
                                                                 const Ffa& g);
bool check_homomorphism(const StateMap& phi, const Ffa& f, const Ffa& g);

/// The FFA on phi's codomain that makes phi an epimorphism. Throws
/// InputError if phi is not surjective and InconsistentQuotient when the
/// states of some class disagree.
Ffa epimorphic_image(const Ffa& f, const StateMap& phi);

/// States (a, b) in row-major order, degree f(a,x,a') ∧ g(b,x,b').
Ffa direct_product(const Ffa& f, const Ffa& g);

}  // namespace fuzzdir
