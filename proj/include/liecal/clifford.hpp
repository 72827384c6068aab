#ifndef LIECAL_CLIFFORD_HPP
#define LIECAL_CLIFFORD_HPP

#include <Eigen/Dense>
#include <vector>

#include "liecal/errors.hpp"

namespace liecal {

/// Real gamma matrices generating the spin representation used for d = 7
/// (on R^8) and d = 9 (on R^16).
///
/// Relations: g_i g_j + g_j g_i = 2 * metric_sign * delta_ij, exactly, with
/// integer entries. For d = 7 the generators square to -I and are
/// skew-symmetric (octonion left multiplications, built by Cayley-Dickson
/// doubling). A 16-dimensional real module with that signature does not
/// exist for d = 9, so there the generators square to +I and are symmetric
/// (tensor blocks over the d = 7 set); the products g_i g_j are skew in both
/// cases, which is all the spin lift needs.
struct CliffordModule {
  int d = 0;
  int spin_dim = 0;
  double metric_sign = -1.0;
  std::vector<Eigen::MatrixXd> gammas;
};

CliffordModule clifford_gammas(int d);

/// Lie-algebra homomorphism so(d) -> so(spin_dim):
/// lift(a) = (metric_sign / 2) * sum_{i<j} a_ij g_i g_j.
Eigen::MatrixXd spin_lift(const CliffordModule& cm, const Eigen::MatrixXd& a,
                          double skew_tol = 1e-12);

}  // namespace liecal

#endif
