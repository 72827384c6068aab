#ifndef LIECAL_PRINCIPAL_HPP
#define LIECAL_PRINCIPAL_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "liecal/algebra.hpp"
#include "liecal/clifford.hpp"
#include "liecal/sl2.hpp"

namespace liecal {

/// The principal three-dimensional subalgebra of a compact classical
/// algebra, as matrices in the defining representation:
/// [X_a, X_b] = 2 X_c cyclically.
struct PrincipalTriple {
  std::array<Eigen::MatrixXcd, 3> X;
  double relation_residual = 0.0;

  const Eigen::MatrixXcd& X1() const { return X[0]; }
  const Eigen::MatrixXcd& X2() const { return X[1]; }
  const Eigen::MatrixXcd& X3() const { return X[2]; }
};

PrincipalTriple principal_triple(const MatrixLieAlgebra& g);

/// Decomposition of the adjoint representation under the principal triple.
/// Components live in `onbasis` coordinates, sorted by spin ascending; for
/// so(4k) the duplicated spin is split by the orientation involution and the
/// Euler copy (sigma = -1) is listed first.
struct KostantDecomposition {
  std::vector<IsotypicComponent> components;
  std::vector<int> exponents;  ///< spin/2 per component, same order
};

KostantDecomposition kostant_decompose(const MatrixLieAlgebra& g, const PrincipalTriple& t);

/// The two spin-(4k-2) copies of so(4k): V (sigma = -1, inside the
/// span of the e_0-wedges) and V' (sigma = +1, inside so(4k-1)).
struct EulerPontryaginSplit {
  IsotypicComponent V;
  IsotypicComponent Vprime;
};

EulerPontryaginSplit split_euler_pontryagin(const MatrixLieAlgebra& g,
                                            const KostantDecomposition& kd);

/// Standard exponent multiset by Cartan type ('A'..'G') and rank; the
/// classical series are computed, the exceptional ones are table entries.
std::vector<int> exponents(char type, int rank);

/// Exponents for a supported compact family/parameter.
std::vector<int> exponents_for(Family family, int param);

/// Spin representation of so(7) on R^8 or so(9) on R^16 under the lifted
/// principal triple, with the fixed-spinor data for d = 7.
struct SpinStructure {
  int d = 0;
  CliffordModule clifford;
  MatrixLieAlgebra so_d;                  ///< host so(d)
  PrincipalTriple triple;                 ///< principal triple in so(d)
  std::array<Eigen::MatrixXd, 3> lifted;  ///< spin lift of the triple
  std::vector<IsotypicComponent> summands;
  Eigen::VectorXd fixed_spinor;       ///< d = 7 only
  Eigen::MatrixXd stabilizer_coords;  ///< d = 7: 21 x 14, onbasis coords of g2
};

SpinStructure spin_structure(int d);

/// The spin-6 Kostant component of so(7); checks it against the orthogonal
/// complement of the stabilizer and the {2,10} splitting of the stabilizer.
IsotypicComponent g2_complement(const SpinStructure& s, const KostantDecomposition& kd);

/// Largest principal angle between the column spans of two orthonormal
/// frames of equal dimension.
double subspace_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// det(u, a_1 u, ..., a_7 u) for the spin-lifted stabilizer complement at
/// the fixed spinor, normalized by the column norms (Hadamard); nonzero
/// means the orbit map is submersive at u.
double spin7_submersion_det(const SpinStructure& s, const KostantDecomposition& kd);

}  // namespace liecal

#endif
