#include "liecal/clifford.hpp"

#include <array>

namespace liecal {

using Eigen::MatrixXd;

namespace {

// Cayley-Dickson octonion product on R^8 = R^4 x R^4 = ... down to R^1:
// (a,b)(c,d) = (ac - d~ b, da + b c~), conjugation (a,b)~ = (a~, -b).
using Vec = std::array<double, 8>;

void cd_conj(const double* x, double* out, int n) {
  out[0] = x[0];
  for (int i = 1; i < n; ++i) out[i] = -x[i];
}

void cd_mul(const double* x, const double* y, double* out, int n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = n / 2;
  const double *a = x, *b = x + h, *c = y, *d = y + h;
  std::array<double, 4> t1{}, t2{}, dc{}, cc{};
  // out_lo = a*c - conj(d)*b
  cd_conj(d, dc.data(), h);
  cd_mul(a, c, t1.data(), h);
  cd_mul(dc.data(), b, t2.data(), h);
  for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  // out_hi = d*a + b*conj(c)
  cd_conj(c, cc.data(), h);
  cd_mul(d, a, t1.data(), h);
  cd_mul(b, cc.data(), t2.data(), h);
  for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

MatrixXd octonion_left_mult(int i) {
  MatrixXd m(8, 8);
  Vec e{}, f{}, r{};
  e.fill(0.0);
  e[i] = 1.0;
  for (int j = 0; j < 8; ++j) {
    f.fill(0.0);
    f[j] = 1.0;
    cd_mul(e.data(), f.data(), r.data(), 8);
    for (int k = 0; k < 8; ++k) m(k, j) = r[k];
  }
  return m;
}

MatrixXd kron2(const Eigen::Matrix2d& a, const MatrixXd& b) {
  MatrixXd m(2 * b.rows(), 2 * b.cols());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return m;
}

}  // namespace

CliffordModule clifford_gammas(int d) {
  if (d != 7 && d != 9) throw UnsupportedDim("clifford_gammas supports d = 7 or 9");
  CliffordModule cm;
  if (d == 7) {
    cm.d = 7;
    cm.spin_dim = 8;
    cm.metric_sign = -1.0;
    for (int i = 1; i <= 7; ++i) cm.gammas.push_back(octonion_left_mult(i));
  } else {
    const CliffordModule base = clifford_gammas(7);
    Eigen::Matrix2d eps, tau, sig;
    eps << 0, 1, -1, 0;
    tau << 1, 0, 0, -1;
    sig << 0, 1, 1, 0;
    cm.d = 9;
    cm.spin_dim = 16;
    cm.metric_sign = 1.0;
    for (const auto& k : base.gammas) cm.gammas.push_back(kron2(eps, k));
    cm.gammas.push_back(kron2(tau, MatrixXd::Identity(8, 8)));
    cm.gammas.push_back(kron2(sig, MatrixXd::Identity(8, 8)));
  }
  return cm;
}

MatrixXd spin_lift(const CliffordModule& cm, const MatrixXd& a, double skew_tol) {
  if (a.rows() != cm.d || a.cols() != cm.d) throw ShapeMismatch("spin_lift expects a d x d matrix");
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > skew_tol * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw NotSkew("spin_lift argument is not skew-symmetric");
  MatrixXd out = MatrixXd::Zero(cm.spin_dim, cm.spin_dim);
  for (int i = 0; i < cm.d; ++i)
    for (int j = i + 1; j < cm.d; ++j)
      if (a(i, j) != 0.0) out += a(i, j) * (cm.gammas[i] * cm.gammas[j]);
  return 0.5 * cm.metric_sign * out;
}

}  // namespace liecal
