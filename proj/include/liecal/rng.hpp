#ifndef LIECAL_RNG_HPP
#define LIECAL_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

namespace liecal {

/// Counter-based deterministic generator. Each (seed, index) pair opens an
/// independent stream, so sample i is the same no matter how samples are
/// scheduled across workers.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index) {
    state_ = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    // burn-in so that nearby (seed, index) pairs decorrelate
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in (0,1), never exactly 0 or 1.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = next_gaussian();
    return v;
  }

  /// Uniform point on the unit sphere of R^n.
  Eigen::VectorXd unit_vector(int n) {
    Eigen::VectorXd v = gaussian_vector(n);
    return v / v.norm();
  }

 private:
  std::uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Sum in a fixed pairwise tree order; result does not depend on how the
/// values were produced, only on their order.
double pairwise_sum(const Eigen::VectorXd& values);

}  // namespace liecal

#endif
