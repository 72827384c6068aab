#include "liecal/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace liecal {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace {

constexpr cplx kI{0.0, 1.0};

void canonical_sign(Eigen::Ref<VectorXd> v) {
  const double cut = 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cut) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

void canonical_phase(Eigen::Ref<VectorXcd> v) {
  const double cut = 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cut) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

bool lex_less(const VectorXcd& a, const VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double ra = a[i].real(), rb = b[i].real();
    if (std::abs(ra - rb) > 1e-9) return ra < rb;
    const double ia = a[i].imag(), ib = b[i].imag();
    if (std::abs(ia - ib) > 1e-9) return ia < ib;
  }
  return false;
}

int spin_from_casimir(double mu, double tol) {
  const int s = static_cast<int>(std::lround(-1.0 + std::sqrt(1.0 + std::max(0.0, mu))));
  if (s < 0 || std::abs(static_cast<double>(s) * (s + 2) - mu) > tol * std::max(1.0, mu))
    throw DecompositionResidual("Casimir eigenvalue " + std::to_string(mu) +
                                " is not close to n(n+2) for integer n");
  return s;
}

template <typename Mat>
void check_action(const Mat& X1, const Mat& X2, const Mat& X3, double tol) {
  const Eigen::Index N = X1.rows();
  if (X1.cols() != N || X2.rows() != N || X2.cols() != N || X3.rows() != N || X3.cols() != N)
    throw ShapeMismatch("action matrices must be square and of equal size");
  const double scale =
      std::max({1.0, X1.cwiseAbs().maxCoeff(), X2.cwiseAbs().maxCoeff(), X3.cwiseAbs().maxCoeff()});
  const double c12 = (X1 * X2 - X2 * X1 - 2.0 * X3).cwiseAbs().maxCoeff();
  const double c23 = (X2 * X3 - X3 * X2 - 2.0 * X1).cwiseAbs().maxCoeff();
  const double c31 = (X3 * X1 - X1 * X3 - 2.0 * X2).cwiseAbs().maxCoeff();
  if (std::max({c12, c23, c31}) > tol * scale * scale)
    throw NonClosedAction("commutation residual " + std::to_string(std::max({c12, c23, c31})));
  const double a1 = (X1 + X1.adjoint()).cwiseAbs().maxCoeff();
  const double a2 = (X2 + X2.adjoint()).cwiseAbs().maxCoeff();
  const double a3 = (X3 + X3.adjoint()).cwiseAbs().maxCoeff();
  if (std::max({a1, a2, a3}) > tol * scale)
    throw NonClosedAction("action is not anti-self-adjoint");
}

}  // namespace

MatrixXcd Irrep::casimir() const { return H * H + 2.0 * Eu * Fu + 2.0 * Fu * Eu; }

Irrep irrep(int n) {
  if (n < 0) throw UnsupportedParam("irrep label must be non-negative");
  Irrep r;
  r.n = n;
  r.dim = n + 1;
  const int d = r.dim;
  r.H = MatrixXcd::Zero(d, d);
  r.E = MatrixXcd::Zero(d, d);
  r.F = MatrixXcd::Zero(d, d);
  r.Eu = MatrixXcd::Zero(d, d);
  r.Fu = MatrixXcd::Zero(d, d);
  r.weight_scale = VectorXd::Ones(d);
  for (int k = 0; k < d; ++k) r.H(k, k) = cplx(n - 2 * k, 0.0);
  for (int k = 1; k < d; ++k) {
    const double ce = static_cast<double>(k) * (n + 1 - k);
    r.E(k - 1, k) = ce;
    r.Eu(k - 1, k) = std::sqrt(ce);
    r.weight_scale[k] = r.weight_scale[k - 1] * std::sqrt(ce);
  }
  for (int k = 0; k + 1 < d; ++k) {
    r.F(k + 1, k) = 1.0;
    r.Fu(k + 1, k) = r.Eu(k, k + 1);
  }
  r.X1 = kI * r.H;
  r.X2 = r.Eu - r.Fu;
  r.X3 = kI * (r.Eu + r.Fu);
  return r;
}

AntilinearStructure antilinear_structure(const Irrep& r) {
  AntilinearStructure st;
  const int d = r.dim;
  st.S = MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) st.S(r.n - k, k) = cplx((k % 2 == 0) ? 1.0 : -1.0, 0.0);
  st.kind = (r.n % 2 == 0) ? StructureKind::Real : StructureKind::Quaternionic;
  return st;
}

RealForm real_form_basis(const Irrep& r) {
  if (r.n % 2 != 0)
    throw NoRealForm("S^n has no real form for odd n (quaternionic structure)");
  const int d = r.dim;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  RealForm rf;
  rf.basis = MatrixXcd::Zero(d, d);
  int col = 0;
  for (int k = 0; 2 * k < r.n; ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    rf.basis(k, col) = inv_sqrt2;
    rf.basis(r.n - k, col) = sgn * inv_sqrt2;
    ++col;
    rf.basis(k, col) = kI * inv_sqrt2;
    rf.basis(r.n - k, col) = -sgn * kI * inv_sqrt2;
    ++col;
  }
  const int mid = r.n / 2;
  rf.basis(mid, col) = (mid % 2 == 0) ? cplx(1.0, 0.0) : kI;

  const MatrixXcd Us = rf.basis;
  const std::array<const MatrixXcd*, 3> xs = {&r.X1, &r.X2, &r.X3};
  for (int a = 0; a < 3; ++a) {
    const MatrixXcd A = Us.adjoint() * (*xs[a]) * Us;
    if (A.imag().cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff()))
      throw DecompositionResidual("real form action has a non-real part");
    rf.action[a] = A.real();
  }
  return rf;
}

std::vector<int> clebsch_gordan_spins(int m, int n) {
  if (n < 0 || m < n) throw ArgumentOrder("clebsch_gordan_spins requires m >= n >= 0");
  std::vector<int> spins;
  for (int s = m + n; s >= m - n; s -= 2) spins.push_back(s);
  return spins;
}

// ---------------------------------------------------------------------------
// isotypic decomposition, complex ambient
// ---------------------------------------------------------------------------

std::vector<IsotypicComponentC> isotypic_decompose(const MatrixXcd& X1, const MatrixXcd& X2,
                                                   const MatrixXcd& X3,
                                                   const DecomposeOptions& opts) {
  check_action(X1, X2, X3, opts.tol_structural);
  const Eigen::Index N = X1.rows();
  const MatrixXcd C = -(X1 * X1 + X2 * X2 + X3 * X3);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(C);
  if (es.info() != Eigen::Success) throw DecompositionResidual("Casimir eigensolver failed");

  std::map<int, std::vector<Eigen::Index>> clusters;
  for (Eigen::Index i = 0; i < N; ++i)
    clusters[spin_from_casimir(es.eigenvalues()[i], opts.tol_eigen)].push_back(i);

  const MatrixXcd Fdown = -0.5 * (X2 + kI * X3);
  std::vector<IsotypicComponentC> comps;
  for (const auto& [spin, idx] : clusters) {
    const Eigen::Index dim = static_cast<Eigen::Index>(idx.size());
    if (dim % (spin + 1) != 0)
      throw DecompositionResidual("Casimir eigenspace for spin " + std::to_string(spin) +
                                  " has dimension " + std::to_string(dim));
    const Eigen::Index mult = dim / (spin + 1);
    MatrixXcd V(N, dim);
    for (Eigen::Index j = 0; j < dim; ++j) V.col(j) = es.eigenvectors().col(idx[j]);

    if (spin == 0) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        IsotypicComponentC c;
        c.spin = 0;
        c.basis = V.col(j);
        canonical_phase(c.basis.col(0));
        comps.push_back(std::move(c));
      }
      continue;
    }

    // highest-weight space: the weight-`spin` eigenspace of H within the cluster
    const MatrixXcd Hr = V.adjoint() * (-kI * X1) * V;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ws(Hr);
    MatrixXcd K(dim, mult);
    Eigen::Index got = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (std::abs(ws.eigenvalues()[j] - spin) < 0.5) {
        if (got == mult) throw DecompositionResidual("highest-weight space too large");
        K.col(got++) = ws.eigenvectors().col(j);
      }
    }
    if (got != mult) throw DecompositionResidual("highest-weight space too small");

    std::vector<VectorXcd> heads(mult);
    for (Eigen::Index j = 0; j < mult; ++j) {
      VectorXcd h = V * K.col(j);
      canonical_phase(h);
      heads[j] = h;
    }
    std::sort(heads.begin(), heads.end(), lex_less);

    for (const VectorXcd& h : heads) {
      IsotypicComponentC c;
      c.spin = spin;
      c.basis.resize(N, spin + 1);
      VectorXcd w = h.normalized();
      c.basis.col(0) = w;
      for (int t = 1; t <= spin; ++t) {
        w = (Fdown * w).eval();
        const double nrm = w.norm();
        if (nrm < 1e-12) throw DecompositionResidual("lowering chain collapsed");
        w /= nrm;
        c.basis.col(t) = w;
      }
      comps.push_back(std::move(c));
    }
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const IsotypicComponentC& a, const IsotypicComponentC& b) { return a.spin < b.spin; });
  Eigen::Index total = 0;
  for (const auto& c : comps) total += c.dim();
  if (total != N) throw DecompositionResidual("components do not tile the ambient space");
  return comps;
}

// ---------------------------------------------------------------------------
// isotypic decomposition, real ambient
// ---------------------------------------------------------------------------

std::vector<IsotypicComponent> isotypic_decompose(const MatrixXd& X1, const MatrixXd& X2,
                                                  const MatrixXd& X3,
                                                  const DecomposeOptions& opts) {
  check_action(X1, X2, X3, opts.tol_structural);
  const Eigen::Index N = X1.rows();
  const MatrixXd C = -(X1 * X1 + X2 * X2 + X3 * X3);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(C);
  if (es.info() != Eigen::Success) throw DecompositionResidual("Casimir eigensolver failed");

  std::map<int, std::vector<Eigen::Index>> clusters;
  for (Eigen::Index i = 0; i < N; ++i)
    clusters[spin_from_casimir(es.eigenvalues()[i], opts.tol_eigen)].push_back(i);

  std::vector<IsotypicComponent> comps;
  for (const auto& [spin, idx] : clusters) {
    const Eigen::Index dim = static_cast<Eigen::Index>(idx.size());
    if (dim % (spin + 1) != 0)
      throw DecompositionResidual("Casimir eigenspace for spin " + std::to_string(spin) +
                                  " has dimension " + std::to_string(dim));
    const Eigen::Index mult = dim / (spin + 1);
    MatrixXd V(N, dim);
    for (Eigen::Index j = 0; j < dim; ++j) V.col(j) = es.eigenvectors().col(idx[j]);

    if (spin == 0) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        IsotypicComponent c;
        c.spin = 0;
        c.basis = V.col(j);
        canonical_sign(c.basis.col(0));
        comps.push_back(std::move(c));
      }
      continue;
    }
    if (mult == 1) {
      IsotypicComponent c;
      c.spin = spin;
      c.basis = V;
      for (Eigen::Index j = 0; j < c.basis.cols(); ++j) canonical_sign(c.basis.col(j));
      comps.push_back(std::move(c));
      continue;
    }
    if (spin % 2 != 0)
      throw DecompositionResidual(
          "odd spin with multiplicity over a real ambient space (quaternionic block)");

    // Split the isotypic block along conjugation-stable highest-weight lines.
    // tau(k) = E^spin conj(k) is antilinear on the highest-weight space and,
    // for even spin, squares to a positive multiple of the identity; its
    // fixed vectors generate complex irreducible chains stable under
    // conjugation, hence real subspaces.
    const MatrixXcd Vc = V.cast<cplx>();
    const MatrixXcd Hr = Vc.adjoint() * (-kI * X1.cast<cplx>()) * Vc;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ws(Hr);
    MatrixXcd K(dim, mult);
    Eigen::Index got = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (std::abs(ws.eigenvalues()[j] - spin) < 0.5) {
        if (got == mult) throw DecompositionResidual("highest-weight space too large");
        K.col(got++) = ws.eigenvectors().col(j);
      }
    }
    if (got != mult) throw DecompositionResidual("highest-weight space too small");

    const MatrixXcd Er =
        Vc.adjoint() * (0.5 * (X2.cast<cplx>() - kI * X3.cast<cplx>())) * Vc;
    const MatrixXcd Fr =
        Vc.adjoint() * (-0.5 * (X2.cast<cplx>() + kI * X3.cast<cplx>())) * Vc;
    MatrixXcd Espin = MatrixXcd::Identity(dim, dim);
    for (int t = 0; t < spin; ++t) Espin = (Er * Espin).eval();

    // matrix of tau in the K basis: tau(K a) = K * M * conj(a)
    MatrixXcd M(mult, mult);
    for (Eigen::Index j = 0; j < mult; ++j) {
      const VectorXcd tk = Espin * K.col(j).conjugate();
      M.col(j) = K.adjoint() * tk;
    }
    const MatrixXcd MM = M * M.conjugate();
    const double c2 = MM.diagonal().real().mean();
    if (c2 <= 0 || (MM - c2 * MatrixXcd::Identity(mult, mult)).cwiseAbs().maxCoeff() >
                       1e-6 * std::max(1.0, c2))
      throw DecompositionResidual("tau is not a real structure on the multiplicity space");
    const MatrixXcd Mn = M / std::sqrt(c2);

    // real points of the multiplicity space: span of e_j + Mn e_j and
    // i e_j - i Mn e_j, extracted by SVD over R^{2 mult}
    MatrixXd cand(2 * mult, 2 * mult);
    for (Eigen::Index j = 0; j < mult; ++j) {
      const VectorXcd f = VectorXcd::Unit(mult, j) + Mn.col(j);
      const VectorXcd g = kI * VectorXcd::Unit(mult, j) - kI * Mn.col(j);
      cand.col(2 * j) << f.real(), f.imag();
      cand.col(2 * j + 1) << g.real(), g.imag();
    }
    Eigen::JacobiSVD<MatrixXd> fsvd(cand, Eigen::ComputeThinU);
    std::vector<VectorXcd> heads;
    for (Eigen::Index j = 0; j < mult; ++j) {
      if (fsvd.singularValues()[j] < 1e-8)
        throw DecompositionResidual("real multiplicity space is rank-deficient");
      VectorXcd kfix(mult);
      for (Eigen::Index i = 0; i < mult; ++i)
        kfix[i] = cplx(fsvd.matrixU()(i, j), fsvd.matrixU()(mult + i, j));
      VectorXcd h = Vc * (K * kfix);
      canonical_phase(h);
      heads.push_back(h);
    }
    std::sort(heads.begin(), heads.end(), lex_less);

    for (const VectorXcd& h : heads) {
      MatrixXd parts(N, 2 * (spin + 1));
      VectorXcd w = h.normalized();
      VectorXcd wc = Vc.adjoint() * w;
      for (int t = 0; t <= spin; ++t) {
        const VectorXcd amb = Vc * wc;
        parts.col(2 * t) = amb.real();
        parts.col(2 * t + 1) = amb.imag();
        if (t < spin) {
          wc = (Fr * wc).eval();
          const double nrm = wc.norm();
          if (nrm < 1e-12) throw DecompositionResidual("lowering chain collapsed");
          wc /= nrm;
        }
      }
      Eigen::JacobiSVD<MatrixXd> rsvd(parts, Eigen::ComputeThinU);
      Eigen::Index rank = 0;
      for (Eigen::Index j = 0; j < rsvd.singularValues().size(); ++j)
        if (rsvd.singularValues()[j] > 1e-7 * rsvd.singularValues()[0]) ++rank;
      if (rank != spin + 1)
        throw DecompositionResidual("conjugation-stable chain has wrong real rank " +
                                    std::to_string(rank));
      IsotypicComponent c;
      c.spin = spin;
      c.basis = rsvd.matrixU().leftCols(spin + 1);
      for (Eigen::Index j = 0; j < c.basis.cols(); ++j) canonical_sign(c.basis.col(j));
      comps.push_back(std::move(c));
    }
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const IsotypicComponent& a, const IsotypicComponent& b) { return a.spin < b.spin; });
  Eigen::Index total = 0;
  for (const auto& c : comps) total += c.dim();
  if (total != N) throw DecompositionResidual("components do not tile the ambient space");
  return comps;
}

Eigen::MatrixXd projector_sum(const std::vector<IsotypicComponent>& comps) {
  if (comps.empty()) return MatrixXd();
  const Eigen::Index N = comps.front().ambient_dim();
  MatrixXd P = MatrixXd::Zero(N, N);
  for (const auto& c : comps) P += c.basis * c.basis.transpose();
  return P;
}

}  // namespace liecal
