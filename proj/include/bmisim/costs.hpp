#pragma once

#include <vector>

#include <Eigen/Core>

namespace bmisim {

/// Control-signal history of one update period. err_bits is populated only
/// when the error channel is enabled.
struct CostWindow {
  std::vector<Eigen::VectorXd> controls;
  std::vector<int> err_bits;
  bool has_errors = false;

  void clear() {
    controls.clear();
    err_bits.clear();
  }
  std::size_t size() const { return controls.size(); }
};

inline constexpr double kControlCostFloor = 1e-12;
inline constexpr double kErrorCostFloor = 0.5;  // half an error: zero-error
                                                // windows stay finite and
                                                // still rank best

/// Sum of squared control norms over the window.
double window_cost_amplitude(const CostWindow& win);

/// Per-channel sum of squared deviations from the window mean, summed over
/// channels (unnormalized).
double window_cost_deviation(const CostWindow& win);

/// amplitude + z * deviation.
double window_cost_combined(const CostWindow& win, double z);

/// Number of error bits in the window. Throws std::logic_error when the
/// error channel is absent.
double window_cost_error(const CostWindow& win);

/// -log(max(j, floor)).
double neg_log_cost(double j, double floor);

/// weight * ell_unsup + (1 - weight) * ell_err.
double combine_log_costs(double ell_unsup, double ell_err, double weight);

}  // namespace bmisim
