#pragma once

#include <span>

#include <Eigen/Dense>

#include "bmisim/rng.hpp"

namespace bmisim {

/// Screen state (p1, p2, v1, v2, g1, g2): cursor position, cursor velocity
/// per time step, goal position. Positions in meters, velocity in meters per
/// step.
using StateVec = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

inline Eigen::Vector2d cursor(const StateVec& x) { return x.segment<2>(0); }
inline Eigen::Vector2d velocity(const StateVec& x) { return x.segment<2>(2); }
inline Eigen::Vector2d goal(const StateVec& x) { return x.segment<2>(4); }
inline double goal_distance(const StateVec& x) {
  return (goal(x) - cursor(x)).norm();
}

/// Task protocol constants. Step-denominated fields are derived from the
/// second-denominated ones at config time and must divide evenly by dt.
struct TaskParams {
  double target_distance = 0.2;  // m between consecutive targets
  int trial_timeout = 100;       // steps (4 s at 40 ms)
  int dwell_required = 4;        // consecutive in-target steps (0.16 s)
  double hit_radius = 0.01;      // m
  double dt = 0.04;              // s per step
};

enum class TrialOutcome { ongoing, success, failure };

struct TrialStatus {
  int elapsed = 0;
  int dwell = 0;
  TrialOutcome outcome = TrialOutcome::ongoing;
};

/// State transition matrix: p += v, v cleared (set by the decoder row),
/// goal carried unchanged.
Matrix6d make_transition_matrix();

/// 6 x C decoder/tuning matrix with the flattened 2C coefficient vector in
/// rows 3-4 (beta's first C entries are the horizontal row).
Eigen::MatrixXd make_input_matrix(const Eigen::Ref<const Eigen::VectorXd>& beta);

/// 2 x C view of the flattened coefficient vector.
Eigen::Matrix<double, 2, Eigen::Dynamic> beta_matrix(
    const Eigen::Ref<const Eigen::VectorXd>& beta);

/// 4 x 6 observation matrix selecting (p1, p2, v1, v2).
Eigen::Matrix<double, 4, 6> make_observation_matrix();

/// Quadratic state-cost matrix expressing q * ||g - p||^2.
Matrix6d make_distance_cost_matrix(double q);

/// One step of the screen dynamics: p += v; v = B' u + omega; g unchanged.
/// omega is the realized velocity-noise contribution, supplied by the caller
/// so the plant itself stays deterministic.
StateVec plant_step(const StateVec& x,
                    const Eigen::Ref<const Eigen::VectorXd>& u,
                    const Eigen::Ref<const Eigen::Matrix<double, 2, Eigen::Dynamic>>& b_prime,
                    const Eigen::Vector2d& omega);

/// New goal on the circle of radius target_distance around the current goal,
/// uniform angle. Position and velocity untouched.
StateVec spawn_target(const StateVec& x, const TaskParams& params, Rng& rng);

/// Advance trial bookkeeping after a plant step. Success on the step that
/// completes the dwell requirement; failure once elapsed reaches the timeout.
/// Throws std::logic_error when called on a finished trial.
TrialStatus update_trial_status(const TrialStatus& status, const StateVec& x,
                                const TaskParams& params);

/// Sum of cursor-to-goal distances over a trajectory (meters). Throws
/// std::invalid_argument on an empty trajectory.
double trial_cumulative_error(std::span<const StateVec> trajectory);

}  // namespace bmisim
