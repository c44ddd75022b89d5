#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace bmisim {

/// Finalizer of the splitmix64 generator; used to turn (seed, stream id)
/// pairs into well-separated engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seeded random stream. Identical seeds give identical variate sequences on
/// any platform; normal deviates use the Marsaglia polar transform, so values
/// match across standard libraries up to libm rounding of log/sqrt.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate.
  double normal() {
    ++draws_;
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * raw_uniform() - 1.0;
      v = 2.0 * raw_uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  /// Number of variates handed out so far (snapshot cursor).
  std::uint64_t draw_count() const { return draws_; }

 private:
  double raw_uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Noise sources of one simulation run. Each gets its own sub-stream so that
/// changing the draw pattern of one source never shifts the sequence of any
/// other (e.g. the exploration rate must not perturb the target angles).
enum class Stream : std::uint32_t {
  user_noise = 0,
  exploration = 1,
  error_swap = 2,
  target_angle = 3,
  init_tuning = 4,
  tuning_walk = 5,
  calibration = 6,
};

inline Rng make_stream(std::uint64_t seed, Stream id) {
  const auto k = static_cast<std::uint64_t>(id) + 1;
  return Rng(splitmix64(seed ^ splitmix64(k * 0xD6E8FEB86659FD93ull)));
}

/// mean + L z with L Lᵀ = cov. Throws std::invalid_argument if cov is not
/// symmetric PSD. Diagonal covariances take the fast per-coordinate path.
Eigen::VectorXd sample_gaussian(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, Rng& rng);

/// Uniform draw from the unit sphere in `dim` dimensions (normalized
/// Gaussian vector). Throws std::invalid_argument for dim < 1.
Eigen::VectorXd sample_unit_vector(Eigen::Index dim, Rng& rng);

}  // namespace bmisim
