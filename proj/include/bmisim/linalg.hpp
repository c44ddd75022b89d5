#pragma once

#include <Eigen/Dense>

namespace bmisim {

/// Solve m x = rhs for symmetric positive-definite m via Cholesky.
/// Throws std::invalid_argument if m is not square or not symmetric within
/// 1e-10 relative, std::runtime_error("solve_spd: singular system") if the
/// factorization fails. All downstream matrix inverses go through here.
Eigen::MatrixXd solve_spd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                          const Eigen::Ref<const Eigen::MatrixXd>& rhs);

/// True when every entry is finite.
bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& m);

}  // namespace bmisim
