#include "liecal/rng.hpp"

namespace liecal {

namespace {
double pairwise_rec(const double* x, Eigen::Index n) {
  if (n <= 8) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const Eigen::Index half = n / 2;
  return pairwise_rec(x, half) + pairwise_rec(x + half, n - half);
}
}  // namespace

double pairwise_sum(const Eigen::VectorXd& values) {
  if (values.size() == 0) return 0.0;
  return pairwise_rec(values.data(), values.size());
}

}  // namespace liecal
