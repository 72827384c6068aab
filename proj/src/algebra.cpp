#include "liecal/algebra.hpp"

#include <cmath>

namespace liecal {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace {
constexpr cplx kI{0.0, 1.0};

std::vector<MatrixXcd> orthonormalize(const std::vector<MatrixXcd>& basis) {
  std::vector<MatrixXcd> q;
  q.reserve(basis.size());
  for (const auto& b : basis) {
    MatrixXcd v = b;
    for (const auto& u : q) v -= MatrixLieAlgebra::inner(u, v) * u;
    // second pass for numerical orthogonality
    for (const auto& u : q) v -= MatrixLieAlgebra::inner(u, v) * u;
    const double nrm = std::sqrt(MatrixLieAlgebra::inner(v, v));
    if (nrm < 1e-12) throw DecompositionResidual("canonical basis is linearly dependent");
    q.push_back(v / nrm);
  }
  return q;
}
}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::su: return "su";
    case Family::so: return "so";
    case Family::sp: return "sp";
  }
  return "?";
}

Eigen::MatrixXd so_wedge(int N, int i, int j) {
  MatrixXd m = MatrixXd::Zero(N, N);
  m(j, i) = 1.0;
  m(i, j) = -1.0;
  return m;
}

MatrixXcd MatrixLieAlgebra::bracket(const MatrixXcd& x, const MatrixXcd& y) const {
  if (x.rows() != matrix_size || x.cols() != matrix_size || y.rows() != matrix_size ||
      y.cols() != matrix_size)
    throw ShapeMismatch("bracket arguments must match the defining representation");
  return x * y - y * x;
}

VectorXd MatrixLieAlgebra::coords(const MatrixXcd& x) const {
  VectorXd c(dim);
  for (int i = 0; i < dim; ++i) c[i] = inner(onbasis[i], x);
  return c;
}

MatrixXcd MatrixLieAlgebra::element(const VectorXd& c) const {
  if (c.size() != dim) throw ShapeMismatch("coordinate vector has wrong length");
  MatrixXcd x = MatrixXcd::Zero(matrix_size, matrix_size);
  for (int i = 0; i < dim; ++i) x += c[i] * onbasis[i];
  return x;
}

double MatrixLieAlgebra::span_residual(const MatrixXcd& x) const {
  return (x - element(coords(x))).norm();
}

double MatrixLieAlgebra::defining_residual(const MatrixXcd& x) const {
  double r = (x + x.adjoint()).cwiseAbs().maxCoeff();
  switch (family) {
    case Family::su:
      r = std::max(r, std::abs(x.trace()));
      break;
    case Family::so:
      r = std::max(r, x.imag().cwiseAbs().maxCoeff());
      break;
    case Family::sp: {
      const MatrixXcd J0 = quaternionic_J();
      r = std::max(r, (x * J0 - J0 * x.conjugate()).cwiseAbs().maxCoeff());
      break;
    }
  }
  return r;
}

MatrixXd MatrixLieAlgebra::realified(const MatrixXcd& x) const {
  if (family == Family::so) return x.real();
  const int n = matrix_size;
  MatrixXd r(2 * n, 2 * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double re = x(j, k).real(), im = x(j, k).imag();
      r(2 * j, 2 * k) = re;
      r(2 * j, 2 * k + 1) = -im;
      r(2 * j + 1, 2 * k) = im;
      r(2 * j + 1, 2 * k + 1) = re;
    }
  return r;
}

MatrixXd MatrixLieAlgebra::ad_matrix(const MatrixXcd& x) const {
  MatrixXd m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = coords(bracket(x, onbasis[j]));
  return m;
}

MatrixXcd MatrixLieAlgebra::quaternionic_J() const {
  if (family != Family::sp) throw WrongFamily("quaternionic structure exists for sp only");
  const int n = param;
  MatrixXcd J0 = MatrixXcd::Zero(2 * n, 2 * n);
  J0.topRightCorner(n, n) = -MatrixXcd::Identity(n, n);
  J0.bottomLeftCorner(n, n) = MatrixXcd::Identity(n, n);
  return J0;
}

MatrixLieAlgebra build_algebra(Family family, int param) {
  MatrixLieAlgebra g;
  g.family = family;
  g.param = param;
  switch (family) {
    case Family::su: {
      if (param < 2) throw UnsupportedParam("su(n) requires n >= 2");
      const int n = param;
      g.matrix_size = n;
      g.ambient_dim = 2 * n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          MatrixXcd a = MatrixXcd::Zero(n, n);
          a(i, j) = 1.0;
          a(j, i) = -1.0;
          g.basis.push_back(a);
          MatrixXcd b = MatrixXcd::Zero(n, n);
          b(i, j) = kI;
          b(j, i) = kI;
          g.basis.push_back(b);
        }
      for (int k = 0; k + 1 < n; ++k) {
        MatrixXcd d = MatrixXcd::Zero(n, n);
        d(k, k) = kI;
        d(k + 1, k + 1) = -kI;
        g.basis.push_back(d);
      }
      break;
    }
    case Family::so: {
      if (param < 3) throw UnsupportedParam("so(N) requires N >= 3");
      const int N = param;
      g.matrix_size = N;
      g.ambient_dim = N;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) g.basis.push_back(so_wedge(N, i, j).cast<cplx>());
      break;
    }
    case Family::sp: {
      if (param < 1) throw UnsupportedParam("sp(n) requires n >= 1");
      const int n = param;
      g.matrix_size = 2 * n;
      g.ambient_dim = 4 * n;
      auto embed_diag = [n](const MatrixXcd& a) {
        MatrixXcd x = MatrixXcd::Zero(2 * n, 2 * n);
        x.topLeftCorner(n, n) = a;
        x.bottomRightCorner(n, n) = a.conjugate();
        return x;
      };
      auto embed_off = [n](const MatrixXcd& b) {
        MatrixXcd x = MatrixXcd::Zero(2 * n, 2 * n);
        x.topRightCorner(n, n) = b;
        x.bottomLeftCorner(n, n) = -b.conjugate();
        return x;
      };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          MatrixXcd a = MatrixXcd::Zero(n, n);
          a(i, j) = 1.0;
          a(j, i) = -1.0;
          g.basis.push_back(embed_diag(a));
          MatrixXcd b = MatrixXcd::Zero(n, n);
          b(i, j) = kI;
          b(j, i) = kI;
          g.basis.push_back(embed_diag(b));
        }
      for (int k = 0; k < n; ++k) {
        MatrixXcd d = MatrixXcd::Zero(n, n);
        d(k, k) = kI;
        g.basis.push_back(embed_diag(d));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          MatrixXcd s = MatrixXcd::Zero(n, n);
          s(i, j) += 1.0;
          s(j, i) += 1.0;
          if (i == j) s(i, i) = 1.0;
          g.basis.push_back(embed_off(s));
          g.basis.push_back(embed_off(kI * s));
        }
      break;
    }
  }
  g.dim = static_cast<int>(g.basis.size());
  g.onbasis = orthonormalize(g.basis);
  return g;
}

double pfaffian(const Eigen::MatrixXd& A, double skew_tol) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || n % 2 != 0) throw ShapeMismatch("pfaffian needs an even square matrix");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > skew_tol * scale)
    throw NotSkew("pfaffian argument is not skew-symmetric");
  if (n == 0) return 1.0;

  MatrixXd M = A;
  double sign = 1.0;
  double pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index p = k + 1;
    double best = std::abs(M(k + 1, k));
    for (Eigen::Index j = k + 2; j < n; ++j)
      if (std::abs(M(j, k)) > best) {
        best = std::abs(M(j, k));
        p = j;
      }
    if (best <= 1e-14 * scale) return 0.0;
    if (p != k + 1) {
      M.row(p).swap(M.row(k + 1));
      M.col(p).swap(M.col(k + 1));
      sign = -sign;
    }
    pf *= M(k, k + 1);
    const double pivot = M(k + 1, k);
    for (Eigen::Index j = k + 2; j < n; ++j) {
      const double f = M(j, k) / pivot;
      if (f != 0.0) {
        M.row(j) -= f * M.row(k + 1);
        M.col(j) -= f * M.col(k + 1);
      }
    }
  }
  return sign * pf;
}

MatrixXd orientation_involution(const MatrixLieAlgebra& g) {
  if (g.family != Family::so) throw WrongFamily("orientation involution applies to so(N)");
  const int N = g.matrix_size;
  MatrixXcd sigma = MatrixXcd::Identity(N, N);
  sigma(0, 0) = -1.0;
  MatrixXd m(g.dim, g.dim);
  for (int j = 0; j < g.dim; ++j) m.col(j) = g.coords(sigma * g.onbasis[j] * sigma);
  return m;
}

}  // namespace liecal
