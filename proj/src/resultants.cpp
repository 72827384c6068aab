#include "liecal/resultants.hpp"

#include <algorithm>
#include <cmath>

#include "liecal/clifford.hpp"
#include "liecal/invforms.hpp"
#include "liecal/principal.hpp"
#include "liecal/rng.hpp"

namespace liecal {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace {
constexpr cplx kI{0.0, 1.0};

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}
}  // namespace

cplx Poly::eval(cplx z) const {
  cplx v = 0.0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) v = v * z + coeffs[i];
  return v;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r;
  r.coeffs = VectorXcd::Zero(p.deg() + q.deg() + 1);
  for (int i = 0; i <= p.deg(); ++i)
    for (int j = 0; j <= q.deg(); ++j) r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return r;
}

cplx sylvester_resultant(const Poly& p, const Poly& q) {
  const int m = p.deg(), n = q.deg();
  const int size = m + n;
  if (size == 0) return cplx(1.0, 0.0);
  MatrixXcd s = MatrixXcd::Zero(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = p.coeffs[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = q.coeffs[j];
  return Eigen::PartialPivLU<MatrixXcd>(s).determinant();
}

Poly j_transform(const Poly& p) {
  const int d = p.deg();
  if (d % 2 != 1) throw EvenDegree("j_transform needs odd formal degree");
  Poly out;
  out.coeffs = VectorXcd(d + 1);
  for (int j = 0; j <= d; ++j) {
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    out.coeffs[j] = sgn * std::conj(p.coeffs[d - j]);
  }
  return out;
}

Poly poly_from_weight_vector(const VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  Poly p;
  p.coeffs = VectorXcd(n);
  for (int k = 0; k < n; ++k) p.coeffs[k] = v[k] * std::sqrt(binom(n - 1, k));
  return p;
}

VectorXcd weight_vector_from_poly(const Poly& p) {
  const int n = p.deg() + 1;
  VectorXcd v(n);
  for (int k = 0; k < n; ++k) v[k] = p.coeffs[k] / std::sqrt(binom(n - 1, k));
  return v;
}

VectorXcd sigma_apply(const VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  VectorXcd out(n);
  for (int k = 0; k < n; ++k)
    out[k] = ((k % 2 == 0) ? 1.0 : -1.0) * std::conj(v[n - 1 - k]);
  return out;
}

VectorXcd complexify(const VectorXd& v) {
  if (v.size() % 2 != 0) throw ShapeMismatch("realified vector must have even length");
  VectorXcd out(v.size() / 2);
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = cplx(v[2 * k], v[2 * k + 1]);
  return out;
}

VectorXd realify(const VectorXcd& v) {
  VectorXd out(2 * v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out[2 * k] = v[k].real();
    out[2 * k + 1] = v[k].imag();
  }
  return out;
}

PolyPair vector_to_polys(const VectorXcd& v, StructureKind kind) {
  const int n = static_cast<int>(v.size());
  const StructureKind expect = (n % 2 == 1) ? StructureKind::Real : StructureKind::Quaternionic;
  if (kind != expect)
    throw WrongParity("structure kind does not match the parity of S^{n-1}");
  return vector_to_polys(v);
}

PolyPair vector_to_polys(const VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  PolyPair pp;
  if (n % 2 == 1) {
    // real structure on S^{n-1}: v = v1 + i v2 with sigma-fixed v1, v2
    const VectorXcd sv = sigma_apply(v);
    const VectorXcd v1 = 0.5 * (v + sv);
    const VectorXcd v2 = (v - sv) / (2.0 * kI);
    pp.first = poly_from_weight_vector(v1);
    pp.second = poly_from_weight_vector(v2);
  } else {
    pp.first = poly_from_weight_vector(v);
    pp.second = j_transform(pp.first);
  }
  return pp;
}

Poly real_structured_quadratic(cplx lambda) {
  if (std::abs(lambda) < 1e-12) throw ZeroVector("quadratic root must be nonzero");
  const cplx mu = kI * std::sqrt(std::conj(lambda) / lambda);
  Poly p;
  p.coeffs = VectorXcd(3);
  p.coeffs[0] = mu;
  p.coeffs[1] = mu * (1.0 / std::conj(lambda) - lambda);
  p.coeffs[2] = -mu * lambda / std::conj(lambda);
  return p;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

namespace {

struct SuCase {
  MatrixLieAlgebra g;
  std::vector<MatrixXd> actions;  ///< realified top-component basis
  int n = 0;
};

SuCase make_su_case(int n) {
  SuCase cs;
  cs.n = n;
  cs.g = build_algebra(Family::su, n);
  const PrincipalTriple t = principal_triple(cs.g);
  const KostantDecomposition kd = kostant_decompose(cs.g, t);
  const IsotypicComponent& top = kd.components.back();
  if (top.spin != 2 * n - 2) throw MismatchError("unexpected top spin for su(n)");
  for (int j = 0; j < top.dim(); ++j)
    cs.actions.push_back(cs.g.realified(cs.g.element(top.basis.col(j))));
  return cs;
}

/// Orthogonal intertwiner from a triple action (R_a, skew, (s+1)x(s+1)) to
/// the model real form of S^s; unique up to sign for real-type irreducibles.
MatrixXd solve_intertwiner(const std::array<MatrixXd, 3>& R, const RealForm& model) {
  const int k = static_cast<int>(R[0].rows());
  MatrixXd A(3 * k * k, k * k);
  // row (r,c) of M T - T R = 0: the coefficient of T(r2,c2) is
  // M(r,r2) delta_{c,c2} - R(c2,c) delta_{r,r2}
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < k; ++r)
        for (int c2 = 0; c2 < k; ++c2)
          for (int r2 = 0; r2 < k; ++r2) {
            double val = 0.0;
            if (c == c2) val += model.action[a](r, r2);
            if (r == r2) val -= R[a](c2, c);
            A(a * k * k + c * k + r, c2 * k + r2) = val;
          }
  Eigen::JacobiSVD<MatrixXd> svd(A, Eigen::ComputeThinV);
  const VectorXd t = svd.matrixV().col(k * k - 1);
  if (svd.singularValues()[k * k - 2] < 1e-6)
    throw MismatchError("intertwiner space has dimension > 1");
  if (svd.singularValues()[k * k - 1] > 1e-8)
    throw MismatchError("no intertwiner found");
  MatrixXd T(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) T(r, c) = t[c * k + r];
  const double scale = std::sqrt((T.transpose() * T).trace() / k);
  T /= scale;
  if ((T.transpose() * T - MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-8)
    throw MismatchError("intertwiner is not orthogonal");
  // deterministic sign
  for (int c = 0; c < k && true; ++c) {
    bool done = false;
    for (int r = 0; r < k; ++r)
      if (std::abs(T(r, c)) > 1e-6) {
        if (T(r, c) < 0) T = -T;
        done = true;
        break;
      }
    if (done) break;
  }
  return T;
}

struct Spin9Case {
  SpinStructure s;
  std::vector<MatrixXd> actions;  ///< spin-lifted S^14 basis on R^16
  MatrixXd B10, B4;               ///< summand bases
  MatrixXcd W10, W4;              ///< summand coords -> sigma-fixed weight vector
  MatrixXcd Winv10, Winv4;        ///< weight vector -> summand coords (real image)
};

Spin9Case make_spin9_case() {
  Spin9Case cs;
  cs.s = spin_structure(9);
  const KostantDecomposition kd = kostant_decompose(cs.s.so_d, cs.s.triple);
  const IsotypicComponent& top = kd.components.back();
  if (top.spin != 14) throw MismatchError("so(9) top component should be S^14");
  for (int j = 0; j < top.dim(); ++j)
    cs.actions.push_back(
        spin_lift(cs.s.clifford, cs.s.so_d.element(top.basis.col(j)).real()));

  auto identify = [&cs](const IsotypicComponent& comp, MatrixXd& B, MatrixXcd& W,
                        MatrixXcd& Winv) {
    B = comp.basis;
    std::array<MatrixXd, 3> R;
    for (int a = 0; a < 3; ++a) R[a] = B.transpose() * cs.s.lifted[a] * B;
    const RealForm model = real_form_basis(irrep(comp.spin));
    const MatrixXd T = solve_intertwiner(R, model);
    W = model.basis * T.cast<cplx>();
    Winv = T.transpose().cast<cplx>() * model.basis.adjoint();
  };
  identify(cs.s.summands[1], cs.B10, cs.W10, cs.Winv10);  // spin 10
  identify(cs.s.summands[0], cs.B4, cs.W4, cs.Winv4);     // spin 4
  return cs;
}

VectorXcd random_sigma_fixed(CounterRng& rng, int n) {
  VectorXcd w(n);
  for (int k = 0; k < n; ++k) w[k] = cplx(rng.next_gaussian(), rng.next_gaussian());
  w = (w + sigma_apply(w)).eval();
  const double nrm = w.norm();
  if (nrm < 1e-8) return random_sigma_fixed(rng, n);
  return w / nrm;
}

cplx moderate_root(CounterRng& rng) {
  const double radius = 0.4 + std::abs(rng.next_gaussian());
  const double angle = 2.0 * M_PI * rng.next_uniform();
  return radius * cplx(std::cos(angle), std::sin(angle));
}

struct RatioStats {
  double mean = 0.0;
  double rel_spread = 0.0;
  int accepted = 0;
};

RatioStats ratio_stats(const std::vector<double>& qs, const std::vector<double>& rs) {
  double rmax = 0.0;
  for (double r : rs) rmax = std::max(rmax, std::abs(r));
  const double floor = 1e-8 * rmax;
  RatioStats st;
  double lo = 0.0, hi = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (std::abs(rs[i]) < floor || rs[i] == 0.0) continue;
    const double ratio = qs[i] / rs[i];
    if (st.accepted == 0) lo = hi = ratio;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    sum += ratio;
    ++st.accepted;
  }
  if (st.accepted == 0) throw DegenerateSample("every sample fell below the resultant floor");
  st.mean = sum / st.accepted;
  st.rel_spread = (st.mean == 0.0) ? (hi - lo) : (hi - lo) / std::abs(st.mean);
  return st;
}

double su_resultant(const VectorXcd& vc) {
  const PolyPair pp = vector_to_polys(vc);
  const cplx r = sylvester_resultant(pp.first, pp.second);
  return r.real();
}

}  // namespace

ProportionalityResult proportionality_suite(const std::string& case_id, int samples,
                                            std::uint64_t seed) {
  ProportionalityResult out;
  std::vector<double> qs(samples), rs(samples);

  if (case_id == "spin9") {
    Spin9Case cs = make_spin9_case();
    for (int i = 0; i < samples; ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i));
      const VectorXd v = rng.unit_vector(16);
      qs[i] = q_poly_eval(cs.actions, v);
      const Poly p = poly_from_weight_vector(cs.W10 * (cs.B10.transpose() * v));
      const Poly q = poly_from_weight_vector(cs.W4 * (cs.B4.transpose() * v));
      rs[i] = sylvester_resultant(p, q).real();
    }
    const RatioStats st = ratio_stats(qs, rs);
    out.ratio_mean = st.mean;
    out.ratio_rel_spread = st.rel_spread;
    out.accepted = st.accepted;
    for (double q : qs) out.q_scale = std::max(out.q_scale, std::abs(q));

    // constructed common-zero samples
    bool ok = true;
    for (int j = 0; j < 100 && ok; ++j) {
      CounterRng rng(seed ^ 0x5a5a5a5aull, static_cast<std::uint64_t>(j));
      const Poly quad = real_structured_quadratic(moderate_root(rng));
      const Poly p = poly_mul(quad, poly_from_weight_vector(random_sigma_fixed(rng, 9)));
      const Poly q = poly_mul(quad, poly_from_weight_vector(random_sigma_fixed(rng, 3)));
      VectorXd v = cs.B10 * (cs.Winv10 * weight_vector_from_poly(p)).real() +
                   cs.B4 * (cs.Winv4 * weight_vector_from_poly(q)).real();
      v.normalize();
      if (std::abs(q_poly_eval(cs.actions, v)) > 1e-8 * out.q_scale) ok = false;
    }
    out.zeros_consistent = ok;
    return out;
  }

  if (case_id.rfind("su", 0) != 0) throw UnsupportedParam("unknown case '" + case_id + "'");
  const int n = std::stoi(case_id.substr(2));
  if (n < 3 || n > 6) throw UnsupportedParam("su cases cover n = 3..6");
  SuCase cs = make_su_case(n);
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    const VectorXd v = rng.unit_vector(2 * n);
    qs[i] = q_poly_eval(cs.actions, v);
    rs[i] = su_resultant(complexify(v));
  }
  const RatioStats st = ratio_stats(qs, rs);
  out.ratio_mean = st.mean;
  out.ratio_rel_spread = st.rel_spread;
  out.accepted = st.accepted;
  for (double q : qs) out.q_scale = std::max(out.q_scale, std::abs(q));

  bool ok = true;
  for (int j = 0; j < 100 && ok; ++j) {
    CounterRng rng(seed ^ 0x5a5a5a5aull, static_cast<std::uint64_t>(j));
    const cplx lambda = moderate_root(rng);
    VectorXcd vc;
    if (n % 2 == 1) {
      const Poly quad = real_structured_quadratic(lambda);
      const Poly p1 = poly_mul(quad, poly_from_weight_vector(random_sigma_fixed(rng, n - 2)));
      const Poly p2 = poly_mul(quad, poly_from_weight_vector(random_sigma_fixed(rng, n - 2)));
      vc = weight_vector_from_poly(p1) + kI * weight_vector_from_poly(p2);
    } else {
      Poly quad;
      quad.coeffs = VectorXcd(3);
      quad.coeffs[0] = 1.0;
      quad.coeffs[1] = 1.0 / std::conj(lambda) - lambda;
      quad.coeffs[2] = -lambda / std::conj(lambda);
      VectorXcd g(n - 2);
      for (int k = 0; k < n - 2; ++k) g[k] = cplx(rng.next_gaussian(), rng.next_gaussian());
      const Poly p = poly_mul(quad, poly_from_weight_vector(g));
      vc = weight_vector_from_poly(p);
    }
    VectorXd v = realify(vc);
    v.normalize();
    if (std::abs(q_poly_eval(cs.actions, v)) > 1e-8 * out.q_scale) ok = false;
  }
  out.zeros_consistent = ok;
  return out;
}

SignSuiteResult sign_suite(const std::string& case_id, int samples, std::uint64_t seed) {
  SignSuiteResult out;
  out.samples = samples;
  std::vector<double> rs(samples);

  if (case_id == "spin9") {
    Spin9Case cs = make_spin9_case();
    // R of two real-structured polynomials of even degrees (10, 4): the
    // prefactor (a_0 prod conj(lambda_i)^-1)^4 is a 4th power, so R >= 0
    out.nonnegative_expected = true;
    for (int i = 0; i < samples; ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i));
      const VectorXd v = rng.unit_vector(16);
      const Poly p = poly_from_weight_vector(cs.W10 * (cs.B10.transpose() * v));
      const Poly q = poly_from_weight_vector(cs.W4 * (cs.B4.transpose() * v));
      rs[i] = sylvester_resultant(p, q).real();
    }
  } else {
    if (case_id.rfind("su", 0) != 0) throw UnsupportedParam("unknown case '" + case_id + "'");
    const int n = std::stoi(case_id.substr(2));
    if (n < 3 || n > 6) throw UnsupportedParam("su cases cover n = 3..6");
    // n = 2m+1 odd: R = (a_0 prod conj(lambda_i)^-1)^{2m} prod |p2(lambda_i)|^2
    // where the prefactor base is real for m even and imaginary for m odd,
    // so the resultant is sign-definite of sign (-1)^m. n even: the
    // prefactor collapses to (-|a_0|^2)^{2m-1} < 0, nonpositive for all m.
    if (n % 2 == 1)
      out.nonnegative_expected = ((n - 1) / 2) % 2 == 0;
    else
      out.nonnegative_expected = false;
    for (int i = 0; i < samples; ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i));
      rs[i] = su_resultant(complexify(rng.unit_vector(2 * n)));
    }
  }

  double scale = 0.0;
  for (double r : rs) scale = std::max(scale, std::abs(r));
  const double tol = 1e-10 * scale;
  out.min_value = rs.empty() ? 0.0 : *std::min_element(rs.begin(), rs.end());
  out.max_value = rs.empty() ? 0.0 : *std::max_element(rs.begin(), rs.end());
  for (double r : rs) {
    if (out.nonnegative_expected && r < -tol) ++out.violations;
    if (!out.nonnegative_expected && r > tol) ++out.violations;
  }
  return out;
}

}  // namespace liecal
