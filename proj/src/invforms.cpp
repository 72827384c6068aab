#include "liecal/invforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "liecal/rng.hpp"

namespace liecal {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace {

constexpr cplx kI{0.0, 1.0};

/// Power sums and elementary symmetric functions of the spectrum of -i a,
/// shared by every primitive evaluated at the same matrix.
struct SpectrumData {
  std::vector<double> powers;  ///< powers[j] = Re tr((-i a)^j), j >= 1
  std::vector<double> elem;    ///< elem[j] = e_j, via Newton identities
};

SpectrumData spectrum_data(const MatrixXcd& a, int max_degree) {
  SpectrumData sd;
  sd.powers.assign(max_degree + 1, 0.0);
  const MatrixXcd h = -kI * a;
  MatrixXcd p = h;
  for (int j = 1; j <= max_degree; ++j) {
    sd.powers[j] = p.trace().real();
    if (j < max_degree) p = (p * h).eval();
  }
  sd.elem.assign(max_degree + 1, 0.0);
  sd.elem[0] = 1.0;
  for (int j = 1; j <= max_degree; ++j) {
    double e = 0.0;
    for (int i = 1; i <= j; ++i) {
      const double s = (i % 2 == 1) ? 1.0 : -1.0;
      e += s * sd.elem[j - i] * sd.powers[i];
    }
    sd.elem[j] = e / j;
  }
  return sd;
}

int max_spectral_degree(const InvariantPolynomial& P) {
  int d = 0;
  for (const auto& t : P.terms)
    for (const auto& f : t.factors)
      if (f.kind != PrimitiveKind::Pfaff) d = std::max(d, f.degree);
  return d;
}

bool uses_pfaffian(const InvariantPolynomial& P) {
  for (const auto& t : P.terms)
    for (const auto& f : t.factors)
      if (f.kind == PrimitiveKind::Pfaff) return true;
  return false;
}

double eval_at(const InvariantPolynomial& P, const MatrixXcd& a) {
  const int maxdeg = max_spectral_degree(P);
  SpectrumData sd;
  if (maxdeg > 0) sd = spectrum_data(a, maxdeg);
  double pf = 0.0;
  if (uses_pfaffian(P)) {
    if (a.imag().cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, a.cwiseAbs().maxCoeff()))
      throw ShapeMismatch("Pfaffian primitive needs a real skew matrix");
    pf = pfaffian(a.real(), 1e-9);
  }
  double value = 0.0;
  for (const auto& t : P.terms) {
    double v = t.coeff;
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case PrimitiveKind::TracePower: v *= sd.powers[f.degree]; break;
        case PrimitiveKind::CharCoeff: v *= sd.elem[f.degree]; break;
        case PrimitiveKind::Pfaff: v *= pf; break;
      }
    }
    value += v;
  }
  return value;
}

void check_homogeneous(const InvariantPolynomial& P) {
  for (const auto& t : P.terms)
    if (t.degree() != P.degree)
      throw ArityMismatch("invariant polynomial has mixed-degree terms");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double InvariantPolynomial::operator()(const MatrixXcd& a) const { return eval_at(*this, a); }

InvariantPolynomial trace_power(int j) {
  if (j < 1) throw UnsupportedParam("trace power degree must be positive");
  InvariantPolynomial p;
  p.degree = j;
  p.label = "tr" + std::to_string(j);
  p.terms = {{1.0, {{PrimitiveKind::TracePower, j}}}};
  return p;
}

InvariantPolynomial char_coeff(int j) {
  if (j < 1) throw UnsupportedParam("characteristic coefficient degree must be positive");
  InvariantPolynomial p;
  p.degree = j;
  p.label = "c" + std::to_string(j);
  p.terms = {{1.0, {{PrimitiveKind::CharCoeff, j}}}};
  return p;
}

InvariantPolynomial pfaffian_poly(int half_size) {
  if (half_size < 1) throw UnsupportedParam("pfaffian degree must be positive");
  InvariantPolynomial p;
  p.degree = half_size;
  p.label = "pf";
  p.terms = {{1.0, {{PrimitiveKind::Pfaff, half_size}}}};
  return p;
}

InvariantPolynomial spin7_class() {
  // p1 = -c2, p2 = c4 in terms of CharCoeff of -i a; p1^2 - 4 p2
  InvariantPolynomial p;
  p.degree = 4;
  p.label = "p1p1-4p2";
  p.terms = {{1.0, {{PrimitiveKind::CharCoeff, 2}, {PrimitiveKind::CharCoeff, 2}}},
             {-4.0, {{PrimitiveKind::CharCoeff, 4}}}};
  return p;
}

InvariantPolynomial spin9_class() {
  // p1^4 - 8 p1^2 p2 + 16 p2^2 - 64 p4; even powers of p1 drop its sign
  InvariantPolynomial p;
  p.degree = 8;
  p.label = "spin9-euler";
  const Primitive c2{PrimitiveKind::CharCoeff, 2};
  const Primitive c4{PrimitiveKind::CharCoeff, 4};
  const Primitive c8{PrimitiveKind::CharCoeff, 8};
  p.terms = {{1.0, {c2, c2, c2, c2}}, {-8.0, {c2, c2, c4}}, {16.0, {c4, c4}}, {-64.0, {c8}}};
  return p;
}

InvariantPolynomial form_polynomial(const std::string& label, const MatrixLieAlgebra& g) {
  if (label == "killing") {
    auto p = trace_power(2);
    p.label = "killing";
    return p;
  }
  if (label == "pf") {
    if (g.family != Family::so || g.param % 2 != 0)
      throw WrongFamily("the Pfaffian polynomial lives on so(2k)");
    return pfaffian_poly(g.param / 2);
  }
  if (label == "spin7") return spin7_class();
  if (label == "spin9") return spin9_class();
  if (label.rfind("tr", 0) == 0) return trace_power(std::stoi(label.substr(2)));
  if (label.rfind("c", 0) == 0) return char_coeff(std::stoi(label.substr(1)));
  throw UnsupportedParam("unknown form label '" + label + "'");
}

FormSpec make_form(const InvariantPolynomial& p) {
  check_homogeneous(p);
  FormSpec fs;
  fs.poly = p;
  fs.form_degree = 2 * p.degree - 1;
  return fs;
}

double polarize_eval(const InvariantPolynomial& P, const std::vector<MatrixXcd>& args) {
  const int k = P.degree;
  if (static_cast<int>(args.size()) != k)
    throw ArityMismatch("polarize_eval needs degree-many arguments");
  const Eigen::Index n = args[0].rows();
  double sum = 0.0;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    MatrixXcd m = MatrixXcd::Zero(n, n);
    int bits = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        m += args[i];
        ++bits;
      }
    const double sign = ((k - bits) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * eval_at(P, m);
  }
  return sum / factorial(k);
}

namespace {

/// Enumerates the reduced terms of the antisymmetrization: a lone first
/// index and unordered bracket pairs of the rest, with permutation parity.
void for_each_pairing(std::vector<int>& order, std::vector<int>& rest,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (rest.empty()) {
    visit(order);
    return;
  }
  const int first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const int partner = rest[j];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != j) next.push_back(rest[t]);
    order.push_back(first);
    order.push_back(partner);
    for_each_pairing(order, next, visit);
    order.pop_back();
    order.pop_back();
  }
}

int permutation_parity(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

double form_eval(const FormSpec& fs, const std::vector<MatrixXcd>& args) {
  const int d = fs.form_degree;
  if (static_cast<int>(args.size()) != d)
    throw ArityMismatch("form_eval needs form_degree arguments");
  if (d > kMaxExactFormDegree)
    throw DegreeTooLarge("exact antisymmetrization is capped at degree 11");
  const int m = (d - 1) / 2;

  // all commutators [a_i, a_j], i < j
  std::vector<std::vector<MatrixXcd>> br(d);
  for (int i = 0; i < d; ++i) {
    br[i].resize(d);
    for (int j = i + 1; j < d; ++j) br[i][j] = args[i] * args[j] - args[j] * args[i];
  }

  double total = 0.0;
  std::vector<MatrixXcd> pargs(m + 1);
  for (int f = 0; f < d; ++f) {
    std::vector<int> rest;
    for (int i = 0; i < d; ++i)
      if (i != f) rest.push_back(i);
    std::vector<int> order{f};
    for_each_pairing(order, rest, [&](const std::vector<int>& seq) {
      pargs[0] = args[seq[0]];
      for (int t = 0; t < m; ++t) pargs[t + 1] = br[seq[1 + 2 * t]][seq[2 + 2 * t]];
      total += permutation_parity(seq) * polarize_eval(fs.poly, pargs);
    });
  }
  return total;
}

double sphere_integrand(const std::vector<MatrixXd>& actions, const VectorXd& v) {
  const Eigen::Index N = v.size();
  if (static_cast<Eigen::Index>(actions.size()) + 1 != N)
    throw ShapeMismatch("sphere_integrand needs N - 1 actions on R^N");
  MatrixXd m(N, N);
  m.col(0) = v;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].rows() != N || actions[i].cols() != N)
      throw ShapeMismatch("action matrix has wrong shape");
    m.col(static_cast<Eigen::Index>(i) + 1) = actions[i] * v;
  }
  return m.determinant();
}

double q_poly_eval(const std::vector<MatrixXd>& actions, const VectorXd& v) {
  const double n2 = v.squaredNorm();
  if (n2 == 0.0) throw ZeroVector("q_poly_eval needs a nonzero vector");
  return sphere_integrand(actions, v) / n2;
}

SphereStats sphere_average(const std::vector<MatrixXd>& actions, const Sampler& s) {
  if (actions.empty()) throw ShapeMismatch("sphere_average needs at least one action");
  const int N = static_cast<int>(actions[0].rows());
  SphereStats st;
  st.count = s.count;
  st.seed = s.seed;
  VectorXd values(s.count);
  for (int i = 0; i < s.count; ++i) {
    CounterRng rng(s.seed, static_cast<std::uint64_t>(i));
    values[i] = sphere_integrand(actions, rng.unit_vector(N));
  }
  st.mean = pairwise_sum(values) / s.count;
  st.min_observed = values.minCoeff();
  st.max_observed = values.maxCoeff();
  if (s.count > 1) {
    const VectorXd centered = (values.array() - st.mean).square().matrix();
    const double var = pairwise_sum(centered) / (s.count - 1);
    st.stderr_ = std::sqrt(var / s.count);
  }
  return st;
}

double invariance_check(const FormSpec& fs, const MatrixLieAlgebra& g, int trials,
                        std::uint64_t seed) {
  const int d = fs.form_degree;
  if (d > kMaxExactFormDegree)
    throw DegreeTooLarge("invariance_check is capped at form degree 11");
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    const MatrixXcd x = g.element(rng.unit_vector(g.dim));
    std::vector<MatrixXcd> args(d);
    for (int i = 0; i < d; ++i) args[i] = g.element(rng.unit_vector(g.dim));
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
      std::vector<MatrixXcd> mod = args;
      mod[i] = x * args[i] - args[i] * x;
      sum += form_eval(fs, mod);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

}  // namespace liecal
