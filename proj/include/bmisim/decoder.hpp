#pragma once

#include <string>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "bmisim/costs.hpp"
#include "bmisim/meta_rls.hpp"
#include "bmisim/rng.hpp"
#include "bmisim/supervised_rls.hpp"

namespace bmisim {

enum class DecoderKind {
  unsupervised_amplitude,
  unsupervised_deviation,
  unsupervised_combined,
  error_based,
  unsup_plus_error,
  supervised,
  static_random,
};

std::string to_string(DecoderKind kind);
DecoderKind decoder_kind_from_string(const std::string& name);
bool decoder_uses_error_channel(DecoderKind kind);
bool decoder_adapts(DecoderKind kind);

struct DecoderSettings {
  int channels = 20;
  int window_steps = 100;
  double epsilon = 0.4;
  double lambda = 1.0;
  double p0 = 100.0;
  double bias = 1.0;
  double z_weight = -1.0;      // < 0: calibrate so both cost terms
                               // contribute equally over the pilot events
  int z_pilot_events = 10;
  double combine_weight = 0.5; // unsupervised share of the mixed -log cost
};

/// Incremental mean/variance tracker (Welford).
struct RunningStats {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double stddev() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n));
  }
  double standardize(double x) const {
    const double s = stddev();
    return s > 1e-12 ? (x - mean) / s : 0.0;
  }
};

/// Runtime wrapper around one decoder variant. Owns the active decoding
/// parameters, the update-period window and the per-variant learner state.
class Decoder {
 public:
  /// matched_beta, when given, seeds the supervised decoder with the user's
  /// own tuning; all other kinds draw their initial parameters from rng.
  Decoder(DecoderKind kind, const DecoderSettings& settings, Rng& rng,
          const Eigen::VectorXd* matched_beta = nullptr);

  DecoderKind kind() const { return kind_; }
  const Eigen::VectorXd& beta() const { return beta_; }
  const Eigen::Matrix<double, 2, Eigen::Dynamic>& b_prime() const {
    return b_prime_;
  }

  /// Feed one simulation step. While adapting, the supervised variant
  /// updates immediately and the RLS variants accumulate their window,
  /// updating + reselecting parameters every window_steps steps.
  void observe_step(const Eigen::VectorXd& u, const Eigen::Vector2d& v_intent,
                    int err_bit, bool adapting, Rng& rng);

  /// Adaptation is being switched off: lock in the greedy parameters.
  void enter_freeze(Rng& rng);

  /// Adaptation resumes: restart the window so the next scored period is
  /// generated entirely under the active parameters.
  void resume();

  const MetaRlsState& meta_state() const { return meta_; }
  double z_weight() const { return z_; }

  nlohmann::json snapshot(std::uint64_t step_count,
                          std::uint64_t rng_cursor) const;

 private:
  void set_beta(const Eigen::VectorXd& beta);
  void update_from_window(Rng& rng);
  double observed_neg_log_cost();

  DecoderKind kind_;
  DecoderSettings settings_;
  Eigen::VectorXd beta_;
  Eigen::Matrix<double, 2, Eigen::Dynamic> b_prime_;
  MetaRlsState meta_;
  SupervisedRlsState supervised_;
  CostWindow window_;
  // combined-cost calibration and mixed-channel standardization
  double z_ = 1.0;
  bool z_fixed_ = false;
  double pilot_amp_sum_ = 0.0, pilot_dev_sum_ = 0.0;
  int update_events_ = 0;
  RunningStats unsup_stats_, err_stats_;
};

}  // namespace bmisim
