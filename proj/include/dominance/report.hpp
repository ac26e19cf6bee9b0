#pragma once

// Serialization of sweep reports. Partitions are written in the text form
// ("4,2,1,0"). Keys keep insertion order so output is stable byte for byte.

#include <sstream>
#include <string>

#include "json.hpp"

#include "dominance/text.hpp"
#include "dominance/theorem.hpp"

namespace dominance {

using ordered_json = nlohmann::ordered_json;

inline std::string format_move(const CoverMove& m) {
  std::string flavor = m.adjacent && m.equal_parts ? "adjacent+equal_parts"
                       : m.adjacent                ? "adjacent"
                                                   : "equal_parts";
  return "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ") " + flavor;
}

/// `elapsed_ms` is null unless `with_timing`, keeping repeated runs identical.
inline ordered_json to_json(const VerificationReport& r, bool with_timing = false) {
  ordered_json j;
  j["n"] = r.n;
  j["k_max"] = r.k_max;
  j["pairs_checked"] = r.pairs_checked;
  j["covers_checked"] = r.covers_checked;
  ordered_json hist = ordered_json::object();
  for (auto c : kAllCases) hist[std::string(to_string(c))] = r.count(c);
  j["case_histogram"] = hist;
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"lambda", format(c.lambda)},
                   {"mu", format(c.mu)},
                   {"k", c.k},
                   {"first_violated_prefix", c.first_violated_prefix},
                   {"lambda_k", format(c.lambda_k)},
                   {"mu_k", format(c.mu_k)}});
  j["counterexamples"] = ces;
  j["replacement_mismatches"] = r.replacement_mismatches;
  ordered_json viol = ordered_json::array();
  for (const auto& v : r.positional_violations)
    viol.push_back({{"lambda", format(v.lambda)},
                    {"mu", format(v.mu)},
                    {"i", v.move.i},
                    {"j", v.move.j},
                    {"k", v.k},
                    {"case", std::string(to_string(v.label))},
                    {"in_place", format_values(v.values)}});
  j["positional"] = {{"checked", r.positional_checked},
                     {"skipped", r.positional_skipped},
                     {"unsorted", r.positional_violations.size()},
                     {"violations", viol}};
  j["between_order"] = {{"upper_larger", r.between_order.upper_larger},
                        {"lower_larger", r.between_order.lower_larger},
                        {"equal", r.between_order.equal}};
  j["elapsed_ms"] = with_timing ? ordered_json(r.elapsed.count()) : ordered_json(nullptr);
  return j;
}

inline std::string to_plain(const VerificationReport& r, bool with_timing = false) {
  std::ostringstream os;
  os << "n: " << r.n << "\n"
     << "k range: 1.." << r.k_max << "\n"
     << "pairs_checked: " << r.pairs_checked << "\n"
     << "covers_checked: " << r.covers_checked << "\n"
     << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples)
    os << "  lambda=" << format(c.lambda) << " mu=" << format(c.mu) << " k=" << c.k << " lambda^k=" << format(c.lambda_k)
       << " mu^k=" << format(c.mu_k) << " prefix=" << c.first_violated_prefix << "\n";
  os << "case_histogram:\n";
  for (auto c : kAllCases) os << "  " << to_string(c) << ": " << r.count(c) << "\n";
  os << "replacement_mismatches: " << r.replacement_mismatches << "\n"
     << "positional: checked=" << r.positional_checked << " skipped=" << r.positional_skipped
     << " unsorted=" << r.positional_violations.size() << "\n";
  os << "between_order: upper_larger=" << r.between_order.upper_larger
     << " lower_larger=" << r.between_order.lower_larger << " equal=" << r.between_order.equal << "\n";
  if (with_timing) os << "elapsed_ms: " << r.elapsed.count() << "\n";
  return os.str();
}

}  // namespace dominance
