#pragma once

#include <Eigen/Dense>

namespace bmisim {

/// Supervised RLS decoder state: B'_d is regressed directly onto observed
/// intended velocities. p_u is the inverse sample-correlation matrix of the
/// control vectors.
struct SupervisedRlsState {
  Eigen::Matrix<double, 2, Eigen::Dynamic> b_prime_d;
  Eigen::MatrixXd p_u;  // C x C
  double lambda = 1.0;

  static SupervisedRlsState init(const Eigen::Matrix<double, 2, Eigen::Dynamic>& b0,
                                 double p0 = 100.0, double lambda = 1.0);
};

/// One supervised step:
///   e = v_intent - B'_d u,  k = P u / (lambda + uᵀ P u),
///   B'_d += e kᵀ,  P = (P - k uᵀ P) / lambda  (then symmetrized).
void supervised_rls_step(SupervisedRlsState& state,
                         const Eigen::Ref<const Eigen::VectorXd>& u,
                         const Eigen::Vector2d& v_intent);

}  // namespace bmisim
