#pragma once

// Seeded campaigns over D, the classical quartic-law corpus against
// independent oracles, the prime octuple search and chi = delta o tau
// campaigns. Reports are JSON lines, sorted by instance key, reproducible
// from (seed, parameters).

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recip/reciprocity.hpp"

namespace recip {

struct Record {
  std::string key;      // sort key, unique within a report
  bool pass = false;
  nlohmann::json body;  // includes "campaign", "instance", "lhs", "rhs", "pass"
};

struct Report {
  std::string campaign;
  nlohmann::json params;
  std::vector<Record> records;
  nlohmann::json summary;

  bool pass() const;
  std::size_t failures() const;
  /// One line per record, then a summary line.
  std::string to_jsonl() const;
  void sort_records();
};

nlohmann::json factor_json(const LocalFactor& f);
nlohmann::json evaluation_json(const Evaluation& e);

Report run_d_campaign(long bound, int count, std::uint64_t seed);

const std::vector<std::string>& law_names();
/// Error(UnknownLaw) for an unrecognised name.
Report run_law(std::string_view law, long max_prime);

struct Octuple {
  long p, q, r, s;  // = 1 mod 4
  long a, b, c, d;
  std::vector<Triple> triples() const;
};

inline constexpr long kExample28DefaultBound = 500;

/// First octuple in the seeded search order with every prime below
/// `prime_bound`, or nullopt.
std::optional<Octuple> find_example28(long prime_bound, std::uint64_t seed);
Report search_example28(long prime_bound, std::uint64_t seed);

Report run_thm210_campaign(long bound, int count, std::uint64_t seed);

}  // namespace recip
