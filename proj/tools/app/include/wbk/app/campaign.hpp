#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wbk/json.hpp"

namespace wbk::app {

enum class Theorem { prop32, thm41, thm42, appendix_a, exhaustion, agreement };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view theorem_name(Theorem t);

/// Result of one generated instance.
struct Outcome {
  bool pass = true;
  std::string message;
  io::Json instance;
  /// Campaign-specific counters, summed over instances.
  std::map<std::string, long> tallies;
};

struct Counterexample {
  std::size_t index = 0;
  std::string message;
  io::Json instance;
};

struct CampaignReport {
  Theorem theorem = Theorem::prop32;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;
  std::map<std::string, long> tallies;
  std::optional<double> wall_seconds;
};

/// Instance `index` of a campaign. Deterministic in (seed, index, count).
Outcome run_instance(Theorem t, std::uint64_t seed, std::size_t index, std::size_t count);

/// Runs `count` instances on `jobs` threads. The report does not depend on
/// `jobs`; wall time is recorded only when `timed`.
CampaignReport run_campaign(Theorem t, std::size_t count, std::uint64_t seed, unsigned jobs, bool timed);

io::Json to_json(const CampaignReport& r);

}  // namespace wbk::app
