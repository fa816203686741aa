#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/directability.hpp"

namespace fuzzdir {

/// Class memberships in the lattice of DD-directable classes. Each entry is
/// empty when the underlying decision could not be made (state cap).
struct ClassMembership {
  std::array<std::optional<bool>, 3> dd;   ///< DD(1), DD(2), DD(3)
  std::array<std::optional<bool>, 3> ndd;  ///< nDD(i) = DD(i) and normal
  std::optional<bool> dir;                 ///< directable DFA
};

struct KindResult {
  std::optional<bool> directable;
  std::optional<Word> shortest;
  std::string error;  ///< set when the recognizer could not be built
};

struct ClassificationReport {
  bool complete = false;
  bool normal = false;
  bool crisp = false;
  bool deterministic = false;
  std::array<KindResult, 6> kinds;  ///< indexed in kAllKinds order
  ClassMembership classes;

  const KindResult& operator[](DirectingKind k) const { return kinds[static_cast<std::size_t>(k)]; }
};

ClassificationReport classify(const Ffa& f, const RecognizerOptions& options = {});

/// Implications every report must satisfy; returns one message per
/// violation (empty when consistent):
///   nDD(i) = DD(i) and normal,  Dir => nDD(1),  DD(1) => DD(2) and DD(3),
///   nDD(1) => nDD(2) => nDD(3).
std::vector<std::string> report_violations(const ClassificationReport& report);

/// Machine-readable report (JSON object).
std::string report_to_json(const ClassificationReport& report, const Signature& sig);
/// Human-readable table.
std::string report_to_text(const ClassificationReport& report, const Signature& sig);

}  // namespace fuzzdir
