#ifndef LIECAL_SL2_HPP
#define LIECAL_SL2_HPP

#include <Eigen/Dense>
#include <vector>

#include "liecal/errors.hpp"

namespace liecal {

/// Irreducible representation S^n of sl(2) / su(2) on C^{n+1}.
///
/// Two bases are kept: the integral weight basis, in which H, E, F have
/// integer entries (E v_k = k(n+1-k) v_{k-1}, F v_k = v_{k+1}), and the
/// orthonormal weight basis, in which the ladder operators are mutually
/// adjoint and the compact generators X1 = iH, X2 = E - F, X3 = i(E + F)
/// are anti-Hermitian with [X_a, X_b] = 2 X_c cyclically.
struct Irrep {
  int n = 0;    ///< label of S^n
  int dim = 0;  ///< n + 1

  // integral weight basis
  Eigen::MatrixXcd H, E, F;

  // orthonormal weight basis (H is the same diagonal)
  Eigen::MatrixXcd Eu, Fu;
  Eigen::MatrixXcd X1, X2, X3;

  /// Diagonal change of basis: integral basis vector k = weight_scale[k]
  /// times the unit vector k.
  Eigen::VectorXd weight_scale;

  /// Casimir H^2 + 2EF + 2FE in the orthonormal basis; acts as n(n+2).
  Eigen::MatrixXcd casimir() const;
};

enum class StructureKind { Real, Quaternionic };

/// Antilinear map v -> S * conj(v) commuting with X1, X2, X3.
/// S*conj(S) = +I for the real kind (n even), -I for quaternionic (n odd).
struct AntilinearStructure {
  Eigen::MatrixXcd S;
  StructureKind kind = StructureKind::Real;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return S * v.conjugate(); }
};

/// One isotypic summand of a representation on R^N: an orthonormal basis of
/// a subspace on which the Casimir acts as spin(spin+2).
struct IsotypicComponent {
  int spin = 0;
  Eigen::MatrixXd basis;  ///< N x (spin+1), orthonormal columns
  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Complex-ambient variant.
struct IsotypicComponentC {
  int spin = 0;
  Eigen::MatrixXcd basis;
  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Real form of an even irrep: unitary basis matrix whose columns span the
/// fixed points of the antilinear structure, and the action of X1, X2, X3
/// in that basis (real skew-symmetric matrices).
struct RealForm {
  Eigen::MatrixXcd basis;                 ///< (n+1) x (n+1) unitary
  std::array<Eigen::MatrixXd, 3> action;  ///< X1, X2, X3 as real skew matrices
};

Irrep irrep(int n);

AntilinearStructure antilinear_structure(const Irrep& r);

/// Fails with NoRealForm when n is odd (quaternionic case).
RealForm real_form_basis(const Irrep& r);

/// Clebsch-Gordan: S^m (x) S^n = S^{m+n} + S^{m+n-2} + ... + S^{m-n};
/// requires m >= n.
std::vector<int> clebsch_gordan_spins(int m, int n);

struct DecomposeOptions {
  double tol_structural = 1e-9;  ///< commutation / adjointness residual
  double tol_eigen = 1e-7;       ///< Casimir eigenvalue clustering (scaled)
};

/// Decomposes R^N under three real matrices satisfying [X_a,X_b] = 2X_c
/// cyclically, anti-symmetric for the standard inner product. Components
/// come back sorted by spin ascending; multiplicities are split along
/// highest-weight vectors into conjugation-stable real subspaces.
std::vector<IsotypicComponent> isotypic_decompose(const Eigen::MatrixXd& X1,
                                                  const Eigen::MatrixXd& X2,
                                                  const Eigen::MatrixXd& X3,
                                                  const DecomposeOptions& opts = {});

/// Complex-ambient variant (standard Hermitian inner product).
std::vector<IsotypicComponentC> isotypic_decompose(const Eigen::MatrixXcd& X1,
                                                   const Eigen::MatrixXcd& X2,
                                                   const Eigen::MatrixXcd& X3,
                                                   const DecomposeOptions& opts = {});

/// Sum of the orthogonal projectors onto all components; identity when the
/// decomposition tiles the ambient space.
Eigen::MatrixXd projector_sum(const std::vector<IsotypicComponent>& comps);

}  // namespace liecal

#endif
