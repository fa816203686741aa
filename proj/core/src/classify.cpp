#include "fuzzdir/classify.hpp"

#include <sstream>

#include <json.hpp>

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

namespace {

std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if (a == false || b == false) return false;
  if (!a || !b) return std::nullopt;
  return true;
}

/// a => b, where an unknown side never counts as a violation.
bool implies(std::optional<bool> a, std::optional<bool> b) { return !(a == true && b == false); }

std::string tri(std::optional<bool> v) { return v ? (*v ? "yes" : "no") : "unknown"; }

nlohmann::json tri_json(std::optional<bool> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

ClassificationReport classify(const Ffa& f, const RecognizerOptions& options) {
  ClassificationReport report;
  report.complete = is_complete(f);
  report.normal = is_normal(f);
  report.crisp = is_crisp(f);
  report.deterministic = is_deterministic(f);
  for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
    auto& result = report.kinds[i];
    try {
      const Dfr rec = build_recognizer(f, kAllKinds[i], options);
      result.shortest = shortest_accepted_word(rec);
      result.directable = result.shortest.has_value();
    } catch (const StateCapExceeded& e) {
      result.error = e.what();
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    report.classes.dd[i] = report.kinds[3 + i].directable;
    report.classes.ndd[i] = both(report.classes.dd[i], report.normal);
  }
  report.classes.dir = both(report.deterministic, report[DirectingKind::D1].directable);
  return report;
}

std::vector<std::string> report_violations(const ClassificationReport& r) {
  std::vector<std::string> out;
  const auto& c = r.classes;
  for (std::size_t i = 0; i < 3; ++i) {
    if (c.ndd[i] != both(c.dd[i], r.normal)) {
      out.push_back("nDD(" + std::to_string(i + 1) + ") differs from DD(" + std::to_string(i + 1) +
                    ") and normal");
    }
  }
  if (!implies(c.dir, c.ndd[0])) out.push_back("Dir without nDD(1)");
  if (!implies(c.dd[0], c.dd[1])) out.push_back("DD(1) without DD(2)");
  if (!implies(c.dd[0], c.dd[2])) out.push_back("DD(1) without DD(3)");
  if (!implies(c.ndd[0], c.ndd[1])) out.push_back("nDD(1) without nDD(2)");
  if (!implies(c.ndd[1], c.ndd[2])) out.push_back("nDD(2) without nDD(3)");
  return out;
}

std::string report_to_json(const ClassificationReport& r, const Signature& sig) {
  nlohmann::ordered_json j;
  j["flags"] = {{"complete", r.complete}, {"normal", r.normal}, {"crisp", r.crisp}, {"deterministic", r.deterministic}};
  nlohmann::ordered_json directable, shortest, errors;
  for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
    const std::string key(to_string(kAllKinds[i]));
    const auto& k = r.kinds[i];
    directable[key] = tri_json(k.directable);
    shortest[key] = k.shortest ? nlohmann::json(sig.format_word(*k.shortest)) : nlohmann::json(nullptr);
    if (!k.error.empty()) errors[key] = k.error;
  }
  j["directable"] = directable;
  nlohmann::ordered_json classes;
  for (std::size_t i = 0; i < 3; ++i) classes["DD(" + std::to_string(i + 1) + ")"] = tri_json(r.classes.dd[i]);
  for (std::size_t i = 0; i < 3; ++i) classes["nDD(" + std::to_string(i + 1) + ")"] = tri_json(r.classes.ndd[i]);
  classes["Dir"] = tri_json(r.classes.dir);
  j["classes"] = classes;
  j["shortest"] = shortest;
  if (!errors.empty()) j["errors"] = errors;
  return j.dump(2);
}

std::string report_to_text(const ClassificationReport& r, const Signature& sig) {
  std::ostringstream os;
  os << "complete: " << (r.complete ? "yes" : "no") << "\n"
     << "normal: " << (r.normal ? "yes" : "no") << "\n"
     << "crisp: " << (r.crisp ? "yes" : "no") << "\n"
     << "deterministic: " << (r.deterministic ? "yes" : "no") << "\n\n"
     << "kind  directable  shortest\n";
  for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
    const auto& k = r.kinds[i];
    std::string name(to_string(kAllKinds[i]));
    name.resize(6, ' ');
    std::string dir = tri(k.directable);
    dir.resize(12, ' ');
    os << name << dir;
    if (k.shortest) {
      os << (k.shortest->empty() ? "ε" : sig.format_word(*k.shortest));
    } else if (!k.error.empty()) {
      os << "(" << k.error << ")";
    } else {
      os << "-";
    }
    os << "\n";
  }
  os << "\nclasses:";
  for (std::size_t i = 0; i < 3; ++i) os << " DD(" << i + 1 << ")=" << tri(r.classes.dd[i]);
  for (std::size_t i = 0; i < 3; ++i) os << " nDD(" << i + 1 << ")=" << tri(r.classes.ndd[i]);
  os << " Dir=" << tri(r.classes.dir) << "\n";
  return os.str();
}

}  // namespace fuzzdir
