#ifndef LIECAL_ALGEBRA_HPP
#define LIECAL_ALGEBRA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "liecal/errors.hpp"

namespace liecal {

enum class Family { su, so, sp };

std::string family_name(Family f);

/// A compact classical Lie algebra realized by matrices in its defining
/// representation. Elements are anti-Hermitian (trace-free for su,
/// J-commuting for sp); so(N) elements are real inside a complex container.
///
/// The invariant inner product is inner(x,y) = -Re tr(xy), positive definite
/// on all three families. `onbasis` is the canonical basis orthonormalized
/// under it; coordinates always refer to `onbasis`.
class MatrixLieAlgebra {
 public:
  Family family;
  int param = 0;        ///< n for su(n)/sp(n), N for so(N)
  int matrix_size = 0;  ///< size of the defining complex/real matrices
  int ambient_dim = 0;  ///< real dimension of the representation space
  int dim = 0;          ///< real dimension of the algebra

  std::vector<Eigen::MatrixXcd> basis;    ///< canonical basis, documented order
  std::vector<Eigen::MatrixXcd> onbasis;  ///< orthonormalized under inner()

  static double inner(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    return -(x * y).trace().real();
  }

  Eigen::MatrixXcd bracket(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) const;

  /// Coordinates of x against `onbasis`.
  Eigen::VectorXd coords(const Eigen::MatrixXcd& x) const;
  /// Element with the given coordinates.
  Eigen::MatrixXcd element(const Eigen::VectorXd& c) const;

  /// Residual of x against span(onbasis); membership check.
  double span_residual(const Eigen::MatrixXcd& x) const;

  /// Defining-condition residual of a single ambient matrix.
  double defining_residual(const Eigen::MatrixXcd& x) const;

  /// Action of x on the realified representation space R^{ambient_dim}.
  /// Complex coordinate z_k occupies slots (2k, 2k+1) as (Re z_k, Im z_k);
  /// so(N) matrices pass through unchanged.
  Eigen::MatrixXd realified(const Eigen::MatrixXcd& x) const;

  /// ad(x) as a dim x dim real matrix in `onbasis` coordinates.
  Eigen::MatrixXd ad_matrix(const Eigen::MatrixXcd& x) const;

  /// For sp(n): the matrix J0 of the quaternionic structure v -> J0 conj(v).
  Eigen::MatrixXcd quaternionic_J() const;
};

/// Families: su(n) n >= 2, so(N) N >= 3, sp(n) n >= 1.
MatrixLieAlgebra build_algebra(Family family, int param);

/// so(N) basis element for i < j: maps e_i -> e_j, e_j -> -e_i
/// (that is, e_j e_i^T - e_i e_j^T).
Eigen::MatrixXd so_wedge(int N, int i, int j);

/// Pfaffian of a real skew-symmetric matrix by skew elimination with
/// pivoting; Pf([[0,1],[-1,0]]) = +1 and Pf^2 = det.
double pfaffian(const Eigen::MatrixXd& A, double skew_tol = 1e-12);

/// The involution x -> sigma x sigma with sigma = diag(-1,1,...,1), as a
/// dim x dim orthogonal matrix in `onbasis` coordinates. so families only.
Eigen::MatrixXd orientation_involution(const MatrixLieAlgebra& g);

}  // namespace liecal

#endif
