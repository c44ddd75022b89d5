#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bmisim/decoder.hpp"
#include "bmisim/plant.hpp"

namespace bmisim {

struct TrialWindow {
  std::string name;  // phase label; unnamed windows act as freeze spans
  int first_trial = 1;
  int last_trial = 1;

  bool contains(int trial) const {
    return trial >= first_trial && trial <= last_trial;
  }
};

enum class WalkMode { stddev, variance };

/// Full description of one closed-loop run. Time-denominated values are in
/// seconds and converted to steps when the run starts; conversions must land
/// on the step grid exactly.
struct SimConfig {
  DecoderKind decoder_kind = DecoderKind::unsupervised_amplitude;
  int n_trials = 1501;
  std::uint64_t seed = 1;
  std::vector<TrialWindow> freeze{{"", 1463, 1501}};
  bool nonstationary = false;
  double walk_sigma = 0.007;
  WalkMode walk_mode = WalkMode::stddev;
  double walk_clip = 0.3;

  // task
  double dt = 0.04;
  double target_distance = 0.2;
  double trial_timeout_s = 4.0;
  double dwell_s = 0.16;
  double hit_radius = 0.01;

  // user model (physical units; converted via dt)
  int channels = 20;
  double q = 0.02;
  double r = 0.02;
  double sensory_delay_s = 0.2;
  double obs_noise_pos = 0.0004;   // m
  double obs_noise_vel = 0.1;      // m/s
  double fw_noise_pos = 0.0025;    // m
  double fw_noise_vel = 0.625;     // m/s
  double speed_noise_std = 0.0625; // m/s, target for control-noise calibration
  double control_noise_variance = -1.0;  // >= 0 overrides the calibration
  double noise_scale_obs = 1.0;    // scales realized draws only
  double noise_scale_motor = 1.0;

  // decoder
  double update_period_s = 4.0;
  double epsilon = 0.4;
  double lambda = 1.0;
  double kappa = 0.2;
  double error_angle_deg = 20.0;
  double z_weight = -1.0;
  double combine_weight = 0.5;
  double p0 = 100.0;
  double bias = 1.0;
  bool decoder_init_matched = false;

  std::vector<TrialWindow> phases{
      {"early", 1, 50}, {"late", 1402, 1406}, {"freeze", 1463, 1501}};

  bool collect_debug = false;       // per-trial targets and decoder params
  bool dump_trajectories = false;   // per-step rows in RunResult::trajectory

  TaskParams task_params() const;
  OfcParams ofc_params() const;     // control_noise_variance must be resolved
  int update_period_steps() const;
  int sensory_delay_steps() const;
  std::string phase_of(int trial) const;
  bool frozen_at(int trial) const;
};

struct TrialRecord {
  int trial = 0;
  bool success = false;
  int duration = 0;              // steps
  double cumulative_error = 0.0; // m
  bool adapting = false;
  std::string phase;
};

struct TrajectoryRow {
  int trial;
  int step;
  std::array<double, 6> state;  // p1 p2 v1 v2 g1 g2
};

struct RunResult {
  std::vector<TrialRecord> trials;
  std::uint64_t total_steps = 0;
  bool aborted = false;
  std::string abort_reason;
  double control_noise_variance = 0.0;  // resolved value actually used
  std::string decoder_snapshot;         // JSON text
  // collect_debug extras
  std::vector<Eigen::Vector2d> targets;
  std::vector<Eigen::VectorXd> beta_by_trial;
  // dump_trajectories extras
  std::vector<TrajectoryRow> trajectory;
};

/// Run the closed loop: LQG user -> noisy control -> decoder plant step ->
/// delayed observation -> filter update, with decoder adaptation on
/// wall-clock windows that ignore trial boundaries. Deterministic in
/// cfg.seed. Numerical divergence aborts the run with a diagnostic instead
/// of throwing.
RunResult run_simulation(const SimConfig& cfg);

/// Resolve the motor-noise variance for a config: explicit override if set,
/// otherwise the speed-noise calibration on a fixed dedicated stream (so one
/// target always maps to one variance, independent of the run seed).
double resolve_control_noise_variance(const SimConfig& cfg);

}  // namespace bmisim
