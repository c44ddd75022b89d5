#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "bmisim/cohort.hpp"
#include "bmisim/config.hpp"

namespace bmisim {

/// Deterministic float formatting shared by every CSV/JSON writer.
std::string format_double(double v);

/// Per-trial rows: cohort_id,seed,trial,phase,success,duration_steps,ce_m,rce.
/// rce is written as nan when no baseline is available.
void write_trials_csv(std::ostream& os, const std::string& cohort_id,
                      const CohortResult& cohort, double baseline_ce);

/// Per-step rows of one run: sim_id,trial,step,p1,p2,v1,v2,g1,g2.
void write_trajectory_csv(std::ostream& os, const std::string& sim_id,
                          const RunResult& run);

/// Cohort summary JSON: config echo, per-phase stats, pairwise phase
/// rank-sum p-values, seeds, version.
std::string cohort_summary_json(const SimConfig& cfg, const CohortSummary& summary);

struct ManifestEntry {
  std::string label;
  std::string trials_csv;
  std::string summary_json;
  std::uint64_t config_hash = 0;
};

/// Campaign manifest JSON: baseline mean, file inventory, version.
std::string manifest_json(const std::string& campaign_name,
                          double supervised_baseline_mean,
                          const std::vector<ManifestEntry>& entries);

/// Comparison table across variants: variant,phase,n,median_rce,iqr_low,
/// iqr_high,hit_rate,ranksum_p_vs_baseline.
void write_comparison_csv(std::ostream& os,
                          const std::vector<CohortSummary>& summaries);

/// Everything cmd_report needs, reconstructed from a campaign directory
/// without re-running anything.
struct ReportData {
  std::string campaign_name;
  double baseline = 0.0;
  struct TrialRow {
    std::string variant;
    std::uint64_t seed;
    int trial;
    std::string phase;
    bool success;
    int duration;
    double ce;
    double rce;
  };
  std::vector<TrialRow> rows;  // in manifest/file order
};

/// Parse trials CSVs listed in a campaign manifest. Throws
/// std::runtime_error when the manifest is missing.
ReportData load_report_data(const std::filesystem::path& campaign_dir);

/// Phase table (median RCE, hit rate, rank-sum p vs the first variant) to
/// os_table and the long-format CSV to os_csv. Pure function of the loaded
/// rows, so repeated runs are byte-identical.
void render_report(const ReportData& data, std::ostream& os_table,
                   std::ostream& os_csv);

std::uint64_t fnv1a(const std::string& text);

}  // namespace bmisim
