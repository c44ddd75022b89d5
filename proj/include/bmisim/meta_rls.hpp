#pragma once

#include <Eigen/Dense>

#include "bmisim/rng.hpp"

namespace bmisim {

/// Meta-parameter regression state for the log-linear decoder-cost model
/// ell = [betaᵀ b] w. p_mat is the inverse correlation matrix of the
/// bias-augmented feature vectors.
struct MetaRlsState {
  Eigen::VectorXd w;       // 2C + 1
  Eigen::MatrixXd p_mat;   // (2C+1)^2
  double lambda = 1.0;     // forgetting factor, (0, 1]
  double bias = 1.0;
  double epsilon = 0.4;    // exploration rate
  int window_steps = 100;  // update period T

  static MetaRlsState init(int beta_dim, double p0 = 100.0, double lambda = 1.0,
                           double epsilon = 0.4, int window_steps = 100,
                           double bias = 1.0);
};

/// [betaᵀ bias].
Eigen::VectorXd bias_augment(const Eigen::Ref<const Eigen::VectorXd>& beta,
                             double bias);

/// Predicted -log cost for a candidate beta under the current model.
double predict_neg_log_cost(const Eigen::Ref<const Eigen::VectorXd>& beta,
                            const MetaRlsState& state);

/// One RLS step on an observed (beta', ell) pair:
///   e = ell - beta'ᵀ w,  k = P beta' / (lambda + beta'ᵀ P beta'),
///   w += k e,  P = (P - k beta'ᵀ P) / lambda  (then symmetrized).
void meta_rls_update(MetaRlsState& state,
                     const Eigen::Ref<const Eigen::VectorXd>& beta_prime,
                     double ell_observed);

/// epsilon-greedy draw of the next decoder parameters: with probability
/// epsilon a uniform unit vector, otherwise the normalized leading 2C
/// entries of w. A near-zero greedy prefix falls back to exploration, so a
/// freshly initialized model always explores.
Eigen::VectorXd epsilon_greedy_select(const MetaRlsState& state, Rng& rng);

/// Exploitation arm alone (used when adaptation is frozen).
Eigen::VectorXd greedy_select(const MetaRlsState& state, Rng& rng);

}  // namespace bmisim
