#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmisim/cohort.hpp"
#include "bmisim/sim.hpp"

namespace bmisim {

/// Raised on invalid configuration; carries one message per bad field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Parse an INI-style run config ([run]/[task]/[user]/[decoder]/[phases]
/// sections, '#' comments). Unknown keys and malformed values are collected
/// and reported together.
SimConfig parse_sim_config(const std::string& text);
SimConfig load_sim_config(const std::string& path);

/// Serialize back to the same format; parse(serialize(cfg)) == cfg.
std::string serialize_sim_config(const SimConfig& cfg);

/// Validate a fully-built config; throws ValidationError listing every
/// problem (rates out of range, freeze windows outside [1, n_trials],
/// off-grid time parameters, ...).
void validate(const SimConfig& cfg);

enum class SweepKind { none, strategy, kappa, update_period, cost, nonstationary };

struct CampaignVariant {
  std::string label;
  SimConfig cfg;
  bool nonstationary_adaptive_arm = true;  // meaningful for nonstationary sweeps
};

struct CampaignSpec {
  std::string name = "campaign";
  SweepKind sweep = SweepKind::none;
  int seeds = 10;
  std::uint64_t first_seed = 1;
  int jobs = 0;  // 0: hardware concurrency
  SimConfig base;
  std::vector<CampaignVariant> variants;
};

/// Parse a campaign file: a [campaign] section (name, sweep, values, seeds,
/// first_seed, jobs) on top of the base run sections. Expands the sweep
/// values into labelled variants.
CampaignSpec parse_campaign(const std::string& text);
CampaignSpec load_campaign(const std::string& path);

std::string to_string(SweepKind kind);

bool operator==(const TrialWindow& a, const TrialWindow& b);
bool operator==(const SimConfig& a, const SimConfig& b);

/// FNV-1a over the canonical serialization; recorded in campaign manifests.
std::uint64_t config_hash(const SimConfig& cfg);

}  // namespace bmisim
