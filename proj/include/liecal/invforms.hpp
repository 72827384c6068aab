#ifndef LIECAL_INVFORMS_HPP
#define LIECAL_INVFORMS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "liecal/algebra.hpp"

namespace liecal {

/// Primitive adjoint invariants evaluated on an algebra element a:
///  - TracePower(j):  Re tr((-i a)^j), the j-th power sum of the spectrum
///    of the Hermitian matrix -i a (real skew a included);
///  - CharCoeff(j):   e_j of that spectrum, i.e. the degree-j coefficient
///    invariant of the characteristic polynomial;
///  - Pfaff:          Pf(a) for real skew a of even size.
enum class PrimitiveKind { TracePower, CharCoeff, Pfaff };

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::TracePower;
  int degree = 2;  ///< polynomial degree in a (Pfaff: matrix size / 2)
};

struct PolyTerm {
  double coeff = 1.0;
  std::vector<Primitive> factors;
  int degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree;
    return d;
  }
};

/// Homogeneous adjoint-invariant polynomial as a sum of weighted products
/// of primitives; all terms must share the same total degree.
struct InvariantPolynomial {
  std::vector<PolyTerm> terms;
  int degree = 0;
  std::string label;

  double operator()(const Eigen::MatrixXcd& a) const;
};

InvariantPolynomial trace_power(int j);
InvariantPolynomial char_coeff(int j);
/// Pfaffian of so(2k); half_size = k is the polynomial degree.
InvariantPolynomial pfaffian_poly(int half_size);
/// p1^2 - 4 p2 in Pontryagin invariants of so(7); degree 4.
InvariantPolynomial spin7_class();
/// p1^4 - 8 p1^2 p2 + 16 p2^2 - 64 p4 for so(9); degree 8.
InvariantPolynomial spin9_class();

/// Resolve a label ("killing", "tr3", "c4", "pf", "spin7", "spin9") against
/// a host algebra; validates family constraints for "pf".
InvariantPolynomial form_polynomial(const std::string& label, const MatrixLieAlgebra& g);

/// A bi-invariant form of degree 2k-1 built from a degree-k polynomial.
struct FormSpec {
  InvariantPolynomial poly;
  int form_degree = 0;
};

FormSpec make_form(const InvariantPolynomial& p);

/// Unique symmetric multilinear form with diagonal P, by inclusion-exclusion
/// over argument subsets.
double polarize_eval(const InvariantPolynomial& P, const std::vector<Eigen::MatrixXcd>& args);

/// Alternating form value over the reduced term set: a distinguished first
/// argument and unordered bracket pairs of the rest, signed by permutation
/// parity. Normalization is 1 on the reduced set (the naive sum over all
/// (2m+1)! permutations equals this times 2^m m!).
double form_eval(const FormSpec& fs, const std::vector<Eigen::MatrixXcd>& args);

/// Maximum exactly antisymmetrized degree; Spin(9)'s degree 15 goes through
/// the sphere average instead.
constexpr int kMaxExactFormDegree = 11;

/// det(v, A_1 v, ..., A_d v) in the ambient orientation; needs d + 1 = N.
double sphere_integrand(const std::vector<Eigen::MatrixXd>& actions, const Eigen::VectorXd& v);

/// sphere_integrand / |v|^2, the Q-polynomial of the action tuple.
double q_poly_eval(const std::vector<Eigen::MatrixXd>& actions, const Eigen::VectorXd& v);

struct Sampler {
  std::uint64_t seed = 0;
  int count = 100000;
};

struct SphereStats {
  double mean = 0.0;
  double stderr_ = 0.0;
  double min_observed = 0.0;
  double max_observed = 0.0;
  int count = 0;
  std::uint64_t seed = 0;
};

/// Deterministic Monte Carlo average of the integrand over the unit sphere,
/// Gaussian-normalized sampling, fixed pairwise summation order.
SphereStats sphere_average(const std::vector<Eigen::MatrixXd>& actions, const Sampler& s);

/// Max infinitesimal ad-invariance residual
/// |sum_i alpha(a_1, ..., [x, a_i], ..., a_d)| over random trials.
double invariance_check(const FormSpec& fs, const MatrixLieAlgebra& g, int trials,
                        std::uint64_t seed = 11);

}  // namespace liecal

#endif
