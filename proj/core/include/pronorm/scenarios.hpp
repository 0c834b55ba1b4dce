#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pronorm/caps.hpp"

namespace pronorm {

struct ScenarioResult {
  enum class Status { pass, fail, skipped };

  std::string name;
  Status status = Status::pass;
  nlohmann::json details;  // computed values vs expected; failure witnesses
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
};

const char* to_string(ScenarioResult::Status s);

// Names of all registered scenarios, in registry order.
std::vector<std::string> list_scenarios();

// Runs one scenario; throws ParseError for unknown names. Deterministic
// for a fixed seed.
ScenarioResult run_scenario(const std::string& name,
                            std::uint64_t seed = kDefaultSeed,
                            const Caps& caps = default_caps());

struct ScenarioReport {
  std::vector<ScenarioResult> results;
  bool all_pass = true;

  nlohmann::json to_json() const;
};

// Runs every scenario whose name contains `filter` (all when empty),
// aggregating results; never aborts on a single failure.
ScenarioReport run_all(const std::string& filter = "",
                       std::uint64_t seed = kDefaultSeed,
                       const Caps& caps = default_caps());

}  // namespace pronorm
