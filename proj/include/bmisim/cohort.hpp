#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmisim/sim.hpp"
#include "bmisim/stats.hpp"

namespace bmisim {

struct PhaseStats {
  std::string name;
  long n_trials = 0;                       // completed-run trials pooled
  double median_rce = 0.0;
  double iqr_low = 0.0, iqr_high = 0.0;
  double hit_rate = 0.0;
  double mean_ce = 0.0;                    // m, pooled
  std::vector<double> per_seed_median_rce; // one entry per completed run
  std::vector<double> pooled_rce;          // all trials of the phase
};

struct CohortResult {
  std::vector<std::uint64_t> seeds;
  std::vector<RunResult> runs;  // aligned with seeds; aborted runs flagged
};

struct CohortSummary {
  std::string name;
  std::vector<std::uint64_t> seeds;
  double baseline_ce = 0.0;                 // RCE denominator (m)
  int aborted_runs = 0;
  std::vector<double> median_rce_by_trial;  // across completed runs
  std::vector<PhaseStats> phases;
};

/// Run one config across seeds, optionally in parallel. Per-run aborts are
/// recorded in the result; they never take the cohort down.
CohortResult run_cohort(const SimConfig& cfg,
                        const std::vector<std::uint64_t>& seeds, int jobs = 1);

/// ce / baseline. Throws std::invalid_argument when baseline <= 0.
double relative_cumulative_error(double ce, double supervised_baseline_mean);

/// Mean cumulative error of a cohort over the named phase, pooled across
/// completed runs (the RCE denominator when the cohort is supervised).
double phase_mean_cumulative_error(const CohortResult& cohort,
                                   const std::string& phase);

CohortSummary summarize_cohort(const std::string& name, const SimConfig& cfg,
                               const CohortResult& cohort, double baseline_ce);

struct NonstationaryResult {
  CohortResult adaptive;
  CohortResult frozen;
};

/// Paired arms of the drifting-tuning experiment: identical seeds and
/// sub-streams, so the arms are bit-identical until the first freeze ends
/// and differ only in whether adaptation resumes afterwards.
NonstationaryResult nonstationary_experiment(const SimConfig& cfg_base,
                                             const std::vector<std::uint64_t>& seeds,
                                             int jobs = 1);

/// Freeze windows and phase labels for the drifting-tuning protocol.
void apply_nonstationary_schedule(SimConfig& cfg, bool adaptive_arm);

}  // namespace bmisim
