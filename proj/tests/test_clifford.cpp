#include <doctest.h>

#include <Eigen/Dense>

#include "liecal/algebra.hpp"
#include "liecal/clifford.hpp"
#include "liecal/rng.hpp"

using namespace liecal;
using Eigen::MatrixXd;

namespace {
MatrixXd random_skew(int n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.next_gaussian();
  return m - m.transpose();
}
}  // namespace

TEST_CASE("clifford relations are exact") {
  for (int d : {7, 9}) {
    const CliffordModule cm = clifford_gammas(d);
    CHECK(cm.spin_dim == (d == 7 ? 8 : 16));
    const MatrixXd id = MatrixXd::Identity(cm.spin_dim, cm.spin_dim);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const MatrixXd anti = cm.gammas[i] * cm.gammas[j] + cm.gammas[j] * cm.gammas[i];
        const MatrixXd want = (i == j) ? (2.0 * cm.metric_sign * id).eval() : MatrixXd::Zero(cm.spin_dim, cm.spin_dim).eval();
        CHECK((anti - want).cwiseAbs().maxCoeff() == 0.0);
      }
      // d = 7: skew generators squaring to -I; d = 9: symmetric squaring to +I
      const double sym = (d == 7) ? -1.0 : 1.0;
      CHECK((cm.gammas[i].transpose() - sym * cm.gammas[i]).cwiseAbs().maxCoeff() == 0.0);
      // integer entries
      for (int r = 0; r < cm.spin_dim; ++r)
        for (int c = 0; c < cm.spin_dim; ++c)
          CHECK(cm.gammas[i](r, c) == std::round(cm.gammas[i](r, c)));
    }
  }
}

TEST_CASE("volume element of the d = 7 module is a sign times the identity") {
  const CliffordModule cm = clifford_gammas(7);
  MatrixXd p = MatrixXd::Identity(8, 8);
  for (int i = 0; i < 7; ++i) p = (p * cm.gammas[i]).eval();
  // chirality convention of this construction: gamma_1 ... gamma_7 = -I
  CHECK((p + MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin lift: linearity, homomorphism, rotation normalization") {
  for (int d : {7, 9}) {
    const CliffordModule cm = clifford_gammas(d);
    CHECK(spin_lift(cm, MatrixXd::Zero(d, d)).cwiseAbs().maxCoeff() == 0.0);

    for (int t = 0; t < 100; ++t) {
      const MatrixXd a = random_skew(d, 10 + t);
      const MatrixXd b = random_skew(d, 500 + t);
      const MatrixXd la = spin_lift(cm, a), lb = spin_lift(cm, b);
      const MatrixXd lab = spin_lift(cm, a * b - b * a);
      CHECK((la * lb - lb * la - lab).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((la + la.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }

    // lift of a plane rotation generator squares to -I/4
    const MatrixXd w = so_wedge(d, 0, 1);
    const MatrixXd lw = spin_lift(cm, w);
    CHECK((lw * lw + 0.25 * MatrixXd::Identity(cm.spin_dim, cm.spin_dim)).cwiseAbs().maxCoeff() ==
          0.0);

    // injectivity: the lifted so(d) basis is linearly independent
    const int n = d * (d - 1) / 2;
    MatrixXd flat(cm.spin_dim * cm.spin_dim, n);
    int col = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const MatrixXd l = spin_lift(cm, so_wedge(d, i, j));
        flat.col(col++) = Eigen::Map<const Eigen::VectorXd>(l.data(), l.size());
      }
    Eigen::JacobiSVD<MatrixXd> svd(flat);
    CHECK(svd.singularValues()[n - 1] > 1e-8);
  }
  CHECK_THROWS_AS(spin_lift(clifford_gammas(7), MatrixXd::Ones(7, 7)), NotSkew);
  CHECK_THROWS_AS(clifford_gammas(5), UnsupportedDim);
}
