#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>

#include "liecal/principal.hpp"

using namespace liecal;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cplx = std::complex<double>;

namespace {
std::vector<int> sorted_spins(const KostantDecomposition& kd) {
  std::vector<int> s;
  for (const auto& c : kd.components) s.push_back(c.spin);
  std::sort(s.begin(), s.end());
  return s;
}
}  // namespace

TEST_CASE("principal triple lands in the algebra and spans V1") {
  for (const auto& [fam, param] : std::vector<std::pair<Family, int>>{{Family::su, 2},
                                                                      {Family::su, 4},
                                                                      {Family::so, 5},
                                                                      {Family::so, 6},
                                                                      {Family::so, 8},
                                                                      {Family::sp, 2},
                                                                      {Family::sp, 3}}) {
    const MatrixLieAlgebra g = build_algebra(fam, param);
    const PrincipalTriple t = principal_triple(g);
    CHECK(t.relation_residual < 1e-10);
    for (const auto& x : t.X) CHECK(g.span_residual(x) < 1e-10);

    const KostantDecomposition kd = kostant_decompose(g, t);
    // V1 = span{X1, X2, X3}
    MatrixXd span(g.dim, 3);
    for (int a = 0; a < 3; ++a) span.col(a) = g.coords(t.X[a]);
    Eigen::HouseholderQR<MatrixXd> qr(span);
    const MatrixXd q = qr.householderQ() * MatrixXd::Identity(g.dim, 3);
    CHECK(kd.components[0].spin == 2);
    CHECK(subspace_distance(kd.components[0].basis, q) < 1e-10);
  }
}

TEST_CASE("su(2): the triple spans the whole algebra") {
  const MatrixLieAlgebra g = build_algebra(Family::su, 2);
  const PrincipalTriple t = principal_triple(g);
  MatrixXd span(3, 3);
  for (int a = 0; a < 3; ++a) span.col(a) = g.coords(t.X[a]);
  CHECK(std::abs(span.determinant()) > 1e-6);
  const KostantDecomposition kd = kostant_decompose(g, t);
  CHECK(kd.components.size() == 1);
  CHECK(kd.components[0].spin == 2);
}

TEST_CASE("so(4): ambient representation splits as 1 + S^2") {
  const MatrixLieAlgebra g = build_algebra(Family::so, 4);
  const PrincipalTriple t = principal_triple(g);
  std::array<MatrixXd, 3> X;
  for (int a = 0; a < 3; ++a) X[a] = t.X[a].real();
  const auto comps = isotypic_decompose(X[0], X[1], X[2]);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].spin == 0);
  CHECK(comps[0].dim() == 1);
  CHECK(comps[1].spin == 2);
  // the trivial line is spanned by e_0
  CHECK(std::abs(std::abs(comps[0].basis(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("su(4): the triple is the quaternionic image of S^3") {
  const MatrixLieAlgebra g = build_algebra(Family::su, 4);
  const PrincipalTriple t = principal_triple(g);
  const AntilinearStructure st = antilinear_structure(irrep(3));
  CHECK(st.kind == StructureKind::Quaternionic);
  for (const auto& x : t.X)
    CHECK((st.S * x.conjugate() - x * st.S).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Kostant decomposition spin multisets") {
  {
    const MatrixLieAlgebra g = build_algebra(Family::su, 4);
    const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
    CHECK(sorted_spins(kd) == std::vector<int>{2, 4, 6});
    std::vector<int> dims;
    for (const auto& c : kd.components) dims.push_back(c.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{3, 5, 7});
  }
  {
    const MatrixLieAlgebra g = build_algebra(Family::so, 8);
    const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
    CHECK(sorted_spins(kd) == std::vector<int>{2, 6, 6, 10});
  }
  {
    const MatrixLieAlgebra g = build_algebra(Family::so, 7);
    const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
    CHECK(sorted_spins(kd) == std::vector<int>{2, 6, 10});
  }
}

TEST_CASE("spin multisets match 2 x exponents for every supported algebra up to dim 150") {
  std::vector<std::pair<Family, int>> cases;
  for (int n = 2; n <= 7; ++n) cases.push_back({Family::su, n});
  for (int N = 4; N <= 10; ++N) cases.push_back({Family::so, N});
  for (int n = 1; n <= 4; ++n) cases.push_back({Family::sp, n});
  for (const auto& [fam, param] : cases) {
    const MatrixLieAlgebra g = build_algebra(fam, param);
    if (g.dim > 150) continue;
    const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
    std::vector<int> want;
    for (int e : exponents_for(fam, param)) want.push_back(2 * e);
    std::sort(want.begin(), want.end());
    CHECK(sorted_spins(kd) == want);
    int total = 0;
    for (const auto& c : kd.components) total += c.dim();
    CHECK(total == g.dim);
    // components sorted ascending and pairwise orthogonal
    for (std::size_t i = 0; i + 1 < kd.components.size(); ++i) {
      CHECK(kd.components[i].spin <= kd.components[i + 1].spin);
      CHECK((kd.components[i].basis.transpose() * kd.components[i + 1].basis)
                .cwiseAbs()
                .maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("exponent tables") {
  CHECK(exponents('A', 3) == std::vector<int>{1, 2, 3});
  CHECK(exponents('D', 4) == std::vector<int>{1, 3, 3, 5});
  CHECK(exponents('D', 3) == std::vector<int>{1, 2, 3});
  CHECK(exponents('D', 2) == std::vector<int>{1, 1});
  CHECK(exponents('B', 3) == std::vector<int>{1, 3, 5});
  CHECK(exponents('C', 4) == std::vector<int>{1, 3, 5, 7});
  CHECK(exponents('G', 2) == std::vector<int>{1, 5});
  CHECK(exponents('F', 4) == std::vector<int>{1, 5, 7, 11});
  CHECK(exponents('E', 8) == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  // dimension-count oracle: sum of (2 lambda + 1) = dim g
  int d3 = 0;
  for (int e : exponents('D', 3)) d3 += 2 * e + 1;
  CHECK(d3 == 15);
  int e8 = 0;
  for (int e : exponents('E', 8)) e8 += 2 * e + 1;
  CHECK(e8 == 248);
  CHECK_THROWS_AS(exponents('E', 9), UnsupportedParam);
}

TEST_CASE("so(8) Euler/Pontryagin split") {
  const MatrixLieAlgebra g = build_algebra(Family::so, 8);
  const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
  const EulerPontryaginSplit split = split_euler_pontryagin(g, kd);
  const MatrixXd sigma = orientation_involution(g);
  const MatrixXd id7 = MatrixXd::Identity(7, 7);
  CHECK((split.V.basis.transpose() * sigma * split.V.basis + id7).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((split.Vprime.basis.transpose() * sigma * split.Vprime.basis - id7).cwiseAbs().maxCoeff() <
        1e-9);
  CHECK((split.V.basis.transpose() * split.Vprime.basis).cwiseAbs().maxCoeff() < 1e-10);

  // Euler copy listed first in the decomposition
  CHECK(kd.components[1].spin == 6);
  CHECK(subspace_distance(kd.components[1].basis, split.V.basis) < 1e-9);
  CHECK(subspace_distance(kd.components[2].basis, split.Vprime.basis) < 1e-9);

  // V sits inside the e_0-wedge block
  for (int j = 0; j < 7; ++j) {
    const MatrixXcd m = g.element(split.V.basis.col(j));
    // entries away from row/col 0 must vanish
    CHECK(m.real().bottomRightCorner(7, 7).cwiseAbs().maxCoeff() < 1e-10);
  }

  // sigma-grading sanity: [V, V] is orthogonal to V
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      const MatrixXcd br =
          g.bracket(g.element(split.V.basis.col(a)), g.element(split.V.basis.col(b)));
      const Eigen::VectorXd c = g.coords(br);
      CHECK((split.V.basis.transpose() * c).cwiseAbs().maxCoeff() < 1e-10);
    }

  const MatrixLieAlgebra so6 = build_algebra(Family::so, 6);
  CHECK_THROWS_AS(split_euler_pontryagin(so6, kostant_decompose(so6, principal_triple(so6))),
                  NotApplicable);
}

TEST_CASE("spin structures for d = 7 and d = 9") {
  const SpinStructure s7 = spin_structure(7);
  REQUIRE(s7.summands.size() == 2);
  CHECK(s7.summands[0].spin == 0);
  CHECK(s7.summands[0].dim() == 1);
  CHECK(s7.summands[1].spin == 6);
  CHECK(s7.summands[1].dim() == 7);
  CHECK(s7.stabilizer_coords.cols() == 14);
  // the triple annihilates the fixed spinor
  for (int a = 0; a < 3; ++a)
    CHECK((s7.lifted[a] * s7.fixed_spinor).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(s7.fixed_spinor.norm() - 1.0) < 1e-12);

  const SpinStructure s9 = spin_structure(9);
  REQUIRE(s9.summands.size() == 2);
  CHECK(s9.summands[0].spin == 4);
  CHECK(s9.summands[0].dim() == 5);
  CHECK(s9.summands[1].spin == 10);
  CHECK(s9.summands[1].dim() == 11);
}

TEST_CASE("g2 stabilizer: complement, splitting, submersion") {
  const SpinStructure s = spin_structure(7);
  const KostantDecomposition kd = kostant_decompose(s.so_d, s.triple);
  const IsotypicComponent spin6 = g2_complement(s, kd);
  CHECK(spin6.dim() == 7);

  // a -> a u maps the complement injectively into the spinor space
  MatrixXd m(8, 7);
  for (int j = 0; j < 7; ++j)
    m.col(j) = spin_lift(s.clifford, s.so_d.element(spin6.basis.col(j)).real()) * s.fixed_spinor;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  CHECK(svd.singularValues()[6] > 1e-6);
  // image lands in the orthogonal complement of u
  CHECK((s.fixed_spinor.transpose() * m).cwiseAbs().maxCoeff() < 1e-10);

  CHECK(std::abs(spin7_submersion_det(s, kd)) > 1e-6);
}
