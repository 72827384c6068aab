#ifndef LIECAL_RESULTANTS_HPP
#define LIECAL_RESULTANTS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "liecal/errors.hpp"
#include "liecal/sl2.hpp"

namespace liecal {

/// Polynomial with a formal degree: coeffs[0] is the leading coefficient
/// and may vanish; the length of the coefficient list is part of the value.
struct Poly {
  Eigen::VectorXcd coeffs;  ///< a_0 z^deg + a_1 z^{deg-1} + ... + a_deg

  int deg() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> eval(std::complex<double> z) const;
};

Poly poly_mul(const Poly& p, const Poly& q);

/// Determinant of the (m+n) x (m+n) Sylvester matrix for formal degrees
/// (m, n); equals a_0^n b_0^m prod (lambda_i - mu_j) when the leading
/// coefficients are nonzero.
std::complex<double> sylvester_resultant(const Poly& p, const Poly& q);

/// p*(z) = z^{2m-1} conj(p(-1/conj(z))) for odd formal degree; coefficients
/// b_j = (-1)^j conj(a_{2m-1-j}). Applying it twice gives -p.
Poly j_transform(const Poly& p);

/// Weight coordinates of C^n <-> degree-(n-1) polynomials in the unitary
/// basis: a_k = v_k sqrt(binom(n-1, k)).
Poly poly_from_weight_vector(const Eigen::VectorXcd& v);
Eigen::VectorXcd weight_vector_from_poly(const Poly& p);

/// The antilinear structure on weight coordinates:
/// sigma(v)_k = (-1)^k conj(v_{n-1-k}).
Eigen::VectorXcd sigma_apply(const Eigen::VectorXcd& v);

/// Interleaved realification (Re v_0, Im v_0, Re v_1, ...).
Eigen::VectorXcd complexify(const Eigen::VectorXd& v);
Eigen::VectorXd realify(const Eigen::VectorXcd& v);

struct PolyPair {
  Poly first;
  Poly second;
};

/// n odd: the polynomials of the real and imaginary parts of v under the
/// real structure. n even: (p, p* = j_transform(p)), the Jv partner.
/// `kind` must match the parity (real for n odd, quaternionic for n even).
PolyPair vector_to_polys(const Eigen::VectorXcd& v, StructureKind kind);
PolyPair vector_to_polys(const Eigen::VectorXcd& v);

/// A real-structured quadratic with roots lambda and -1/conj(lambda).
Poly real_structured_quadratic(std::complex<double> lambda);

/// Verification suites pairing the Q-polynomial of a Kostant component with
/// the resultant of the polynomial pair of the sample vector.
/// Cases: "su3".."su6" and "spin9".
struct ProportionalityResult {
  double ratio_mean = 0.0;
  double ratio_rel_spread = 0.0;
  bool zeros_consistent = false;
  int accepted = 0;
  double q_scale = 0.0;
};

ProportionalityResult proportionality_suite(const std::string& case_id, int samples,
                                            std::uint64_t seed);

struct SignSuiteResult {
  double min_value = 0.0;
  double max_value = 0.0;
  int violations = 0;
  int samples = 0;
  bool nonnegative_expected = true;  ///< n odd: resultant >= 0; n even: <= 0
};

SignSuiteResult sign_suite(const std::string& case_id, int samples, std::uint64_t seed);

}  // namespace liecal

#endif
