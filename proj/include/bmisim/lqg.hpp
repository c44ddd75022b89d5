#pragma once

#include <Eigen/Dense>

#include "bmisim/plant.hpp"
#include "bmisim/rng.hpp"

namespace bmisim {

/// Stochastic-optimal-controller parameters, already converted to state
/// units (velocities in meters per step). Covariances here describe the
/// user's internal filter model; realized noise draws are scaled separately.
struct OfcParams {
  double q = 0.02;
  double r = 0.02;
  int sensory_delay = 5;                      // steps
  Eigen::Vector4d obs_noise_std;              // eta std per observed channel
  Eigen::Vector4d fw_noise_std;               // forward-model std (p, p, v, v)
  double control_noise_variance = 6.25e-6;    // sigma^2 per control channel

  Eigen::Matrix4d omega_eta() const {
    return obs_noise_std.array().square().matrix().asDiagonal();
  }
  Eigen::Matrix<double, 6, 6> omega_fw_block() const {
    Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
    m.diagonal().head<4>() = fw_noise_std.array().square();
    return m;
  }
};

/// Iterate the backward Riccati recursion
///   L = (R + Bᵀ S B)⁻¹ Bᵀ S A,  S = Q + Aᵀ S (A - B L)
/// from S = Q until the gain is stationary (max-norm change below tol).
/// Throws std::runtime_error if the gain diverges (uncontrollable setup).
Eigen::MatrixXd riccati_gain(const Eigen::Ref<const Eigen::MatrixXd>& a,
                             const Eigen::Ref<const Eigen::MatrixXd>& b,
                             const Eigen::Ref<const Eigen::MatrixXd>& q_mat,
                             const Eigen::Ref<const Eigen::MatrixXd>& r_mat,
                             double tol = 1e-9, int max_iter = 10000);

/// Delay-augmented system: the state stacks (x_t, x_{t-1}, ..., x_{t-d}).
struct AugmentedSystem {
  Eigen::MatrixXd a_tilde;  // block shift with A in the top-left corner
  Eigen::MatrixXd b_tilde;  // B over zero blocks
  Eigen::MatrixXd h_tilde;  // (0, ..., 0, H): observe the oldest block
};

AugmentedSystem build_augmented(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                const Eigen::Ref<const Eigen::MatrixXd>& b,
                                const Eigen::Ref<const Eigen::MatrixXd>& h,
                                int delay_steps);

struct KalmanState {
  Eigen::VectorXd x_hat;
  Eigen::MatrixXd sigma;
};

/// One predict/update cycle of the augmented filter:
///   x+ = Ã x̂ + B̃ u*,  Σ+ = Ã Σ Ãᵀ + Ω_fw,
///   K = Σ+ H̃ᵀ (H̃ Σ+ H̃ᵀ + Ω_η)⁻¹,
///   x̂ = x+ + K (y - H̃ x+),  Σ = (I - K H̃) Σ+  (then symmetrized).
/// Throws std::runtime_error if the innovation covariance is singular.
KalmanState kalman_step(const KalmanState& ks,
                        const Eigen::Ref<const Eigen::VectorXd>& u_star,
                        const Eigen::Ref<const Eigen::VectorXd>& y,
                        const AugmentedSystem& sys,
                        const Eigen::Ref<const Eigen::MatrixXd>& omega_fw,
                        const Eigen::Ref<const Eigen::MatrixXd>& omega_eta);

/// Simulation-loop filter for the fixed screen system: 6-dim blocks, the
/// oldest block observed through H = [I4 0]. Exploits the shift structure of
/// Ã so a step costs O(d) 6x6 products instead of a dense 6(d+1) cube.
/// Equivalent to kalman_step on the matrices from build_augmented.
class DelayedKalmanFilter {
 public:
  DelayedKalmanFilter(const Matrix6d& a, const Eigen::MatrixXd& b_user,
                      const OfcParams& params);

  /// Reset to an exactly known state (replicated across history blocks).
  void reset(const StateVec& x0);

  void set_input_matrix(const Eigen::MatrixXd& b_user);

  /// The user picks targets, so the goal entries of every block are pinned
  /// to the known value rather than estimated.
  void set_goal(const Eigen::Vector2d& g);

  void step(const Eigen::Ref<const Eigen::VectorXd>& u_star,
            const Eigen::Vector4d& y);

  StateVec current_estimate() const { return x_hat_.head<6>(); }
  const Eigen::VectorXd& x_hat() const { return x_hat_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }

 private:
  Matrix6d a_;
  Eigen::MatrixXd b_;           // 6 x C
  Eigen::Matrix4d omega_eta_;
  Matrix6d omega_fw_;
  int delay_;
  int dim_;                     // 6 (delay + 1)
  Eigen::VectorXd x_hat_, x_pred_;
  Eigen::MatrixXd sigma_, sigma_pred_;
};

/// u* = -L x̂ on the current-state block.
Eigen::VectorXd compute_control(const Eigen::Ref<const Eigen::VectorXd>& x_hat_current,
                                const Eigen::Ref<const Eigen::MatrixXd>& l_gain);

/// u = u* + rho with rho ~ N(0, omega_rho).
Eigen::VectorXd add_motor_noise(const Eigen::Ref<const Eigen::VectorXd>& u_star,
                                const Eigen::MatrixXd& omega_rho, Rng& rng);

/// Control-noise variance sigma^2 such that the cursor speed perturbation
/// ||B' rho|| has RMS target_speed_std (m/s) averaged over n_samples random
/// unit-norm tuning vectors. Exact scale law: measure once at a probe
/// variance, then scale quadratically.
double calibrate_control_noise(double target_speed_std, int n_samples,
                               int channels, double dt, Rng& rng);

/// v_intent = B'_u u.
Eigen::Vector2d intended_velocity(const Eigen::Ref<const Eigen::VectorXd>& beta_u,
                                  const Eigen::Ref<const Eigen::VectorXd>& u);

struct ErrorSignalParams {
  double angle_threshold = 20.0 * M_PI / 180.0;  // rad
  double kappa = 0.2;                            // swap probability
};

/// Raw bit is 1 when the angle between intended and performed velocity
/// exceeds the threshold; the bit is then flipped with probability kappa.
/// Vectors shorter than 1e-9 m/step carry no direction: raw bit 0.
int generate_error_signal(const Eigen::Vector2d& v_intent,
                          const Eigen::Vector2d& v_decoded,
                          const ErrorSignalParams& params, Rng& rng);

/// Per-entry Gaussian perturbation followed by clamping to [-clip, clip].
Eigen::VectorXd random_walk_tuning(const Eigen::Ref<const Eigen::VectorXd>& beta_u,
                                   double sigma_walk, double clip, Rng& rng);

}  // namespace bmisim
