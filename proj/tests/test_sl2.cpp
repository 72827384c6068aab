#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "liecal/rng.hpp"
#include "liecal/sl2.hpp"

using namespace liecal;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using cplx = std::complex<double>;

namespace {

const cplx kI{0.0, 1.0};

double comm_residual(const MatrixXcd& a, const MatrixXcd& b, const MatrixXcd& c) {
  return (a * b - b * a - 2.0 * c).cwiseAbs().maxCoeff();
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd m(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return m;
}

std::array<MatrixXcd, 3> tensor_action(int m, int n) {
  const Irrep rm = irrep(m), rn = irrep(n);
  const MatrixXcd im = MatrixXcd::Identity(m + 1, m + 1);
  const MatrixXcd in = MatrixXcd::Identity(n + 1, n + 1);
  return {kron(rm.X1, in) + kron(im, rn.X1), kron(rm.X2, in) + kron(im, rn.X2),
          kron(rm.X3, in) + kron(im, rn.X3)};
}

std::vector<int> spins_of(const std::vector<IsotypicComponentC>& comps) {
  std::vector<int> s;
  for (const auto& c : comps) s.push_back(c.spin);
  std::sort(s.begin(), s.end());
  return s;
}

/// realify a complex matrix with (Re, Im) interleaving
MatrixXd interleave_real(const MatrixXcd& x) {
  const Eigen::Index n = x.rows();
  MatrixXd r(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      r(2 * j, 2 * k) = x(j, k).real();
      r(2 * j, 2 * k + 1) = -x(j, k).imag();
      r(2 * j + 1, 2 * k) = x(j, k).imag();
      r(2 * j + 1, 2 * k + 1) = x(j, k).real();
    }
  return r;
}

}  // namespace

TEST_CASE("irrep ladder relations are exact in the integral basis") {
  for (int n = 0; n <= 8; ++n) {
    const Irrep r = irrep(n);
    CHECK(r.dim == n + 1);
    CHECK(comm_residual(r.H, r.E, r.E) == 0.0);  // [H,E] = 2E
    CHECK((r.H * r.F - r.F * r.H + 2.0 * r.F).cwiseAbs().maxCoeff() == 0.0);
    CHECK((r.E * r.F - r.F * r.E - r.H).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("irrep compact generators: anti-Hermitian, cyclic relations, Casimir") {
  for (int n = 1; n <= 8; ++n) {
    const Irrep r = irrep(n);
    CHECK((r.X1 + r.X1.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.X2 + r.X2.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.X3 + r.X3.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(comm_residual(r.X1, r.X2, r.X3) < 1e-12);
    CHECK(comm_residual(r.X2, r.X3, r.X1) < 1e-12);
    CHECK(comm_residual(r.X3, r.X1, r.X2) < 1e-12);
    const MatrixXcd omega = -(r.X1 * r.X1 + r.X2 * r.X2 + r.X3 * r.X3);
    CHECK((omega - r.casimir()).cwiseAbs().maxCoeff() < 1e-12);
    const double ev = static_cast<double>(n) * (n + 2);
    CHECK((omega - ev * MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((r.Eu - r.Fu.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("irrep small examples") {
  const Irrep r1 = irrep(1);
  CHECK(r1.H(0, 0) == cplx(1.0, 0.0));
  CHECK(r1.H(1, 1) == cplx(-1.0, 0.0));
  CHECK(r1.E(0, 1) == cplx(1.0, 0.0));
  CHECK(r1.E(1, 0) == cplx(0.0, 0.0));
  CHECK(r1.F(1, 0) == cplx(1.0, 0.0));

  const Irrep r2 = irrep(2);
  CHECK((r2.casimir() - 8.0 * MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

  const Irrep r6 = irrep(6);
  CHECK(r6.dim == 7);
  for (int k = 0; k < 7; ++k) CHECK(r6.H(k, k) == cplx(6.0 - 2.0 * k, 0.0));
}

TEST_CASE("antilinear structure: kind, involution sign, equivariance") {
  for (int n = 1; n <= 8; ++n) {
    const Irrep r = irrep(n);
    const AntilinearStructure st = antilinear_structure(r);
    const MatrixXcd ss = st.S * st.S.conjugate();
    const double want = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK((ss - want * MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((st.kind == StructureKind::Real) == (n % 2 == 0));
    // commutes with the compact generators: S conj(X) = X S
    for (const MatrixXcd* x : {&r.X1, &r.X2, &r.X3})
      CHECK((st.S * x->conjugate() - (*x) * st.S).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("antilinear structure at n = 8 agrees with the linear-algebra solve") {
  const Irrep r = irrep(8);
  const int d = r.dim;
  // solve S conj(X_a) - X_a S = 0 for S as a complex 81-vector
  MatrixXcd A(3 * d * d, d * d);
  const std::array<const MatrixXcd*, 3> xs = {&r.X1, &r.X2, &r.X3};
  for (int a = 0; a < 3; ++a) {
    const MatrixXcd xc = xs[a]->conjugate();
    // row (i,j): sum_q S(i,q) xc(q,j) - sum_p X(i,p) S(p,j)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            cplx v = 0.0;
            if (p == i) v += xc(q, j);
            if (q == j) v -= (*xs[a])(i, p);
            A(a * d * d + i * d + j, p * d + q) = v;
          }
  }
  Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeThinV);
  const Eigen::Index last = d * d - 1;
  CHECK(svd.singularValues()[last] < 1e-10);        // a solution exists
  CHECK(svd.singularValues()[last - 1] > 1e-6);     // and is unique up to phase
  MatrixXcd S0(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) S0(p, q) = svd.matrixV()(p * d + q, last);
  const AntilinearStructure st = antilinear_structure(r);
  // align phase using the largest entry of the constructed S
  Eigen::Index pi = 0, qi = 0;
  st.S.cwiseAbs().maxCoeff(&pi, &qi);
  const cplx phase = st.S(pi, qi) / S0(pi, qi);
  CHECK(std::abs(std::abs(phase) * std::sqrt(1.0 / (d))) > 0.0);  // nonzero
  CHECK((phase * S0 - st.S).cwiseAbs().maxCoeff() < 1e-8);
  // entries of the constructed S: +-1 on the antidiagonal
  for (int k = 0; k < d; ++k) CHECK(std::abs(std::abs(st.S(8 - k, k)) - 1.0) == 0.0);
}

TEST_CASE("real form basis: unitary, real skew action") {
  for (int n : {2, 6}) {
    const Irrep r = irrep(n);
    const RealForm rf = real_form_basis(r);
    CHECK((rf.basis.adjoint() * rf.basis - MatrixXcd::Identity(n + 1, n + 1))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    for (const auto& a : rf.action) {
      CHECK((a + a.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(a.rows() == n + 1);
    }
    // fixed points of the structure map
    const AntilinearStructure st = antilinear_structure(r);
    for (int c = 0; c < n + 1; ++c) {
      const VectorXcd v = rf.basis.col(c);
      CHECK((st.apply(v) - v).cwiseAbs().maxCoeff() < 1e-12);
    }
    // relations survive in the real basis
    CHECK((rf.action[0] * rf.action[1] - rf.action[1] * rf.action[0] - 2.0 * rf.action[2])
              .cwiseAbs()
              .maxCoeff() < 1e-11);
  }
  CHECK_THROWS_AS(real_form_basis(irrep(1)), NoRealForm);
  CHECK_THROWS_AS(real_form_basis(irrep(3)), NoRealForm);
}

TEST_CASE("clebsch_gordan_spins") {
  CHECK(clebsch_gordan_spins(2, 2) == std::vector<int>{4, 2, 0});
  CHECK(clebsch_gordan_spins(5, 0) == std::vector<int>{5});
  CHECK(clebsch_gordan_spins(3, 1) == std::vector<int>{4, 2});
  CHECK_THROWS_AS(clebsch_gordan_spins(1, 3), ArgumentOrder);
}

TEST_CASE("tensor product decompositions reproduce Clebsch-Gordan for m,n <= 8") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= m; ++n) {
      const auto X = tensor_action(m, n);
      const auto comps = isotypic_decompose(X[0], X[1], X[2]);
      auto want = clebsch_gordan_spins(m, n);
      std::sort(want.begin(), want.end());
      CHECK(spins_of(comps) == want);
    }
}

TEST_CASE("skew square of S^n decomposes as {2n-2, 2n-6, ...}") {
  for (int n = 2; n <= 8; ++n) {
    const auto X = tensor_action(n, n);
    const int d = n + 1;
    // orthonormal embedding of the antisymmetric tensors
    MatrixXcd P(d * d, d * (d - 1) / 2);
    int col = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        P.col(col).setZero();
        P(i * d + j, col) = 1.0 / std::sqrt(2.0);
        P(j * d + i, col) = -1.0 / std::sqrt(2.0);
        ++col;
      }
    std::array<MatrixXcd, 3> XL;
    for (int a = 0; a < 3; ++a) XL[a] = P.adjoint() * X[a] * P;
    const auto comps = isotypic_decompose(XL[0], XL[1], XL[2]);
    std::vector<int> want;
    for (int s = 2 * n - 2; s >= 0; s -= 4) want.push_back(s);
    std::sort(want.begin(), want.end());
    CHECK(spins_of(comps) == want);
  }
}

TEST_CASE("component invariants: orthonormal bases, Casimir restriction, invariance") {
  const auto X = tensor_action(4, 2);
  const auto comps = isotypic_decompose(X[0], X[1], X[2]);
  const MatrixXcd C = -(X[0] * X[0] + X[1] * X[1] + X[2] * X[2]);
  for (const auto& c : comps) {
    CHECK((c.basis.adjoint() * c.basis - MatrixXcd::Identity(c.dim(), c.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    const double ev = static_cast<double>(c.spin) * (c.spin + 2);
    CHECK((c.basis.adjoint() * C * c.basis - ev * MatrixXcd::Identity(c.dim(), c.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
    for (int a = 0; a < 3; ++a) {
      const MatrixXcd img = X[a] * c.basis;
      const MatrixXcd res = img - c.basis * (c.basis.adjoint() * img);
      CHECK(res.cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("adjoint action of su(2) on itself is a single spin-2 component") {
  const Irrep r = irrep(1);
  // orthonormalize {X1, X2, X3} under -Re tr(xy) and build ad matrices
  std::array<MatrixXcd, 3> B = {r.X1 / std::sqrt(2.0), r.X2 / std::sqrt(2.0),
                                r.X3 / std::sqrt(2.0)};
  auto inner = [](const MatrixXcd& a, const MatrixXcd& b) { return -(a * b).trace().real(); };
  std::array<MatrixXd, 3> ad;
  for (int a = 0; a < 3; ++a) {
    ad[a] = MatrixXd(3, 3);
    for (int j = 0; j < 3; ++j) {
      const MatrixXcd br = r.X1 * 0.0;
      const MatrixXcd xx = (a == 0 ? r.X1 : a == 1 ? r.X2 : r.X3);
      const MatrixXcd bj = xx * B[j] - B[j] * xx;
      for (int i = 0; i < 3; ++i) ad[a](i, j) = inner(B[i], bj);
    }
  }
  const auto comps = isotypic_decompose(ad[0], ad[1], ad[2]);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].spin == 2);
}

TEST_CASE("real multiplicity splitting: two copies of the real form of S^2") {
  const RealForm rf = real_form_basis(irrep(2));
  std::array<MatrixXd, 3> X;
  for (int a = 0; a < 3; ++a) {
    X[a] = MatrixXd::Zero(6, 6);
    X[a].topLeftCorner(3, 3) = rf.action[a];
    X[a].bottomRightCorner(3, 3) = rf.action[a];
  }
  const auto comps = isotypic_decompose(X[0], X[1], X[2]);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].spin == 2);
  CHECK(comps[1].spin == 2);
  // orthogonal, invariant
  CHECK((comps[0].basis.transpose() * comps[1].basis).cwiseAbs().maxCoeff() < 1e-9);
  for (const auto& c : comps)
    for (int a = 0; a < 3; ++a) {
      const MatrixXd img = X[a] * c.basis;
      CHECK((img - c.basis * (c.basis.transpose() * img)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("complex multiplicity splitting: two copies of S^1") {
  const Irrep r = irrep(1);
  std::array<MatrixXcd, 3> X;
  const std::array<const MatrixXcd*, 3> xs = {&r.X1, &r.X2, &r.X3};
  for (int a = 0; a < 3; ++a) {
    X[a] = MatrixXcd::Zero(4, 4);
    X[a].topLeftCorner(2, 2) = *xs[a];
    X[a].bottomRightCorner(2, 2) = *xs[a];
  }
  const auto comps = isotypic_decompose(X[0], X[1], X[2]);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].spin == 1);
  CHECK(comps[1].spin == 1);
  CHECK((comps[0].basis.adjoint() * comps[1].basis).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("odd spin over a real ambient space is rejected") {
  const Irrep r = irrep(1);
  std::array<MatrixXd, 3> X = {interleave_real(r.X1), interleave_real(r.X2),
                               interleave_real(r.X3)};
  CHECK_THROWS_AS(isotypic_decompose(X[0], X[1], X[2]), DecompositionResidual);
}

TEST_CASE("non-closed action is rejected") {
  const RealForm rf = real_form_basis(irrep(2));
  MatrixXd bad = rf.action[2];
  bad(0, 1) += 0.05;
  bad(1, 0) -= 0.05;
  CHECK_THROWS_AS(isotypic_decompose(rf.action[0], rf.action[1], bad), NonClosedAction);
}

TEST_CASE("projector reassembly sums to the identity") {
  const RealForm rf2 = real_form_basis(irrep(2));
  const RealForm rf4 = real_form_basis(irrep(4));
  std::array<MatrixXd, 3> X;
  for (int a = 0; a < 3; ++a) {
    X[a] = MatrixXd::Zero(8, 8);
    X[a].topLeftCorner(3, 3) = rf2.action[a];
    X[a].bottomRightCorner(5, 5) = rf4.action[a];
  }
  const auto comps = isotypic_decompose(X[0], X[1], X[2]);
  CHECK((projector_sum(comps) - MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
}
