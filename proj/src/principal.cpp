#include "liecal/principal.hpp"

#include <algorithm>
#include <cmath>

namespace liecal {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace {

double triple_residual(const std::array<MatrixXcd, 3>& X) {
  double r = 0.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    r = std::max(r, (X[a] * X[b] - X[b] * X[a] - 2.0 * X[c]).cwiseAbs().maxCoeff());
  }
  return r;
}

void canonical_sign(Eigen::Ref<VectorXd> v) {
  const double cut = 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cut) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

std::vector<int> spins_of(const std::vector<IsotypicComponent>& comps) {
  std::vector<int> s;
  s.reserve(comps.size());
  for (const auto& c : comps) s.push_back(c.spin);
  return s;
}

}  // namespace

PrincipalTriple principal_triple(const MatrixLieAlgebra& g) {
  PrincipalTriple t;
  switch (g.family) {
    case Family::su: {
      const Irrep r = irrep(g.param - 1);
      t.X = {r.X1, r.X2, r.X3};
      break;
    }
    case Family::so: {
      const int N = g.param;
      if (N % 2 == 0) {
        // ambient representation 1 + S^{N-2}, trivial line on e_0
        const RealForm rf = real_form_basis(irrep(N - 2));
        for (int a = 0; a < 3; ++a) {
          MatrixXd m = MatrixXd::Zero(N, N);
          m.bottomRightCorner(N - 1, N - 1) = rf.action[a];
          t.X[a] = m.cast<cplx>();
        }
      } else {
        const RealForm rf = real_form_basis(irrep(N - 1));
        for (int a = 0; a < 3; ++a) t.X[a] = rf.action[a].cast<cplx>();
      }
      break;
    }
    case Family::sp: {
      // S^{2n-1} is quaternionic; rotate its antilinear structure onto the
      // standard J0 so the image lands in sp(n) as realized here.
      const int n = g.param;
      const Irrep r = irrep(2 * n - 1);
      MatrixXd U = MatrixXd::Zero(2 * n, 2 * n);
      for (int j = 0; j < n; ++j) {
        U(j, j) = 1.0;
        U(2 * n - 1 - j, n + j) = (j % 2 == 0) ? 1.0 : -1.0;
      }
      const MatrixXcd Uc = U.cast<cplx>();
      t.X = {Uc.adjoint() * r.X1 * Uc, Uc.adjoint() * r.X2 * Uc, Uc.adjoint() * r.X3 * Uc};
      break;
    }
    default:
      throw UnsupportedFamily("principal_triple: unsupported family");
  }
  t.relation_residual = triple_residual(t.X);
  if (t.relation_residual > 1e-10)
    throw DecompositionResidual("principal triple relations fail: residual " +
                                std::to_string(t.relation_residual));
  for (const auto& x : t.X)
    if (g.defining_residual(x) > 1e-10)
      throw DecompositionResidual("principal triple leaves the algebra");
  return t;
}

KostantDecomposition kostant_decompose(const MatrixLieAlgebra& g, const PrincipalTriple& t) {
  const MatrixXd ad1 = g.ad_matrix(t.X[0]);
  const MatrixXd ad2 = g.ad_matrix(t.X[1]);
  const MatrixXd ad3 = g.ad_matrix(t.X[2]);
  std::vector<IsotypicComponent> comps = isotypic_decompose(ad1, ad2, ad3);

  // so(4k): identify the duplicated spin through the orientation involution
  // rather than through decomposition order; Euler copy (sigma = -1) first.
  if (g.family == Family::so && g.param % 4 == 0) {
    const int dup = g.param - 2;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].spin == dup) where.push_back(i);
    if (where.size() != 2)
      throw DecompositionResidual("so(4k) should carry the spin " + std::to_string(dup) +
                                  " component twice");
    const MatrixXd sigma = orientation_involution(g);
    MatrixXd B(g.dim, 2 * (dup + 1));
    B << comps[where[0]].basis, comps[where[1]].basis;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(B.transpose() * sigma * B);
    MatrixXd minus(g.dim, dup + 1), plus(g.dim, dup + 1);
    int nm = 0, np = 0;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const double ev = es.eigenvalues()[j];
      if (std::abs(ev + 1.0) < 1e-6) {
        if (nm == dup + 1) throw DecompositionResidual("sigma = -1 block too large");
        minus.col(nm++) = B * es.eigenvectors().col(j);
      } else if (std::abs(ev - 1.0) < 1e-6) {
        if (np == dup + 1) throw DecompositionResidual("sigma = +1 block too large");
        plus.col(np++) = B * es.eigenvectors().col(j);
      } else {
        throw DecompositionResidual("orientation involution is not +-1 on the duplicated spin");
      }
    }
    if (nm != dup + 1 || np != dup + 1)
      throw DecompositionResidual("duplicated spin does not split evenly under sigma");
    for (int j = 0; j <= dup; ++j) {
      canonical_sign(minus.col(j));
      canonical_sign(plus.col(j));
    }
    comps[where[0]].basis = minus;
    comps[where[1]].basis = plus;
  }

  KostantDecomposition kd;
  kd.components = std::move(comps);
  for (const auto& c : kd.components) {
    if (c.spin % 2 != 0)
      throw DecompositionResidual("adjoint decomposition produced an odd spin");
    kd.exponents.push_back(c.spin / 2);
  }
  std::vector<int> expect = exponents_for(g.family, g.param);
  std::vector<int> got = kd.exponents;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect != got)
    throw DecompositionResidual("exponent multiset does not match the reference table");
  return kd;
}

EulerPontryaginSplit split_euler_pontryagin(const MatrixLieAlgebra& g,
                                            const KostantDecomposition& kd) {
  if (g.family != Family::so || g.param % 4 != 0)
    throw NotApplicable("Euler/Pontryagin split applies to so(4k)");
  const int dup = g.param - 2;
  std::vector<const IsotypicComponent*> twins;
  for (const auto& c : kd.components)
    if (c.spin == dup) twins.push_back(&c);
  if (twins.size() != 2) throw NotApplicable("no duplicated spin in this decomposition");

  const MatrixXd sigma = orientation_involution(g);
  EulerPontryaginSplit out;
  bool have_v = false, have_vp = false;
  for (const auto* c : twins) {
    const MatrixXd S = c->basis.transpose() * sigma * c->basis;
    const MatrixXd I = MatrixXd::Identity(c->dim(), c->dim());
    if ((S + I).cwiseAbs().maxCoeff() < 1e-8) {
      out.V = *c;
      have_v = true;
    } else if ((S - I).cwiseAbs().maxCoeff() < 1e-8) {
      out.Vprime = *c;
      have_vp = true;
    } else {
      throw DecompositionResidual("duplicated component is not a sigma eigenspace");
    }
  }
  if (!have_v || !have_vp)
    throw DecompositionResidual("sigma eigenvalues do not distinguish the duplicated pair");
  return out;
}

std::vector<int> exponents(char type, int rank) {
  std::vector<int> e;
  switch (type) {
    case 'A':
      if (rank < 1) throw UnsupportedParam("A_l requires l >= 1");
      for (int i = 1; i <= rank; ++i) e.push_back(i);
      break;
    case 'B':
    case 'C':
      if (rank < 1) throw UnsupportedParam("B_l/C_l require l >= 1");
      for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      if (rank < 2) throw UnsupportedParam("D_l requires l >= 2");
      for (int i = 1; i <= rank - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(rank - 1);
      std::sort(e.begin(), e.end());
      break;
    case 'G':
      if (rank != 2) throw UnsupportedParam("G_2 only");
      e = {1, 5};
      break;
    case 'F':
      if (rank != 4) throw UnsupportedParam("F_4 only");
      e = {1, 5, 7, 11};
      break;
    case 'E':
      if (rank == 6) e = {1, 4, 5, 7, 8, 11};
      else if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      else throw UnsupportedParam("E_6, E_7, E_8 only");
      break;
    default:
      throw UnsupportedParam("unknown Cartan type");
  }
  return e;
}

std::vector<int> exponents_for(Family family, int param) {
  switch (family) {
    case Family::su:
      if (param < 2) throw UnsupportedParam("su(n) requires n >= 2");
      return exponents('A', param - 1);
    case Family::so:
      if (param < 3) throw UnsupportedParam("so(N) requires N >= 3");
      if (param % 2 == 1) return exponents('B', (param - 1) / 2);
      return exponents('D', param / 2);
    case Family::sp:
      if (param < 1) throw UnsupportedParam("sp(n) requires n >= 1");
      return exponents('C', param);
  }
  throw UnsupportedFamily("exponents_for: unknown family");
}

SpinStructure spin_structure(int d) {
  if (d != 7 && d != 9) throw UnsupportedDim("spin_structure supports d = 7 or 9");
  SpinStructure s;
  s.d = d;
  s.clifford = clifford_gammas(d);
  s.so_d = build_algebra(Family::so, d);
  s.triple = principal_triple(s.so_d);
  for (int a = 0; a < 3; ++a) s.lifted[a] = spin_lift(s.clifford, s.triple.X[a].real());
  s.summands = isotypic_decompose(s.lifted[0], s.lifted[1], s.lifted[2]);

  const std::vector<int> want = (d == 7) ? std::vector<int>{0, 6} : std::vector<int>{4, 10};
  if (spins_of(s.summands) != want)
    throw DecompositionResidual("spin representation decomposed with unexpected spins");

  if (d == 7) {
    s.fixed_spinor = s.summands[0].basis.col(0);
    canonical_sign(s.fixed_spinor);

    // stabilizer of the fixed spinor inside the lifted so(7)
    MatrixXd M(s.clifford.spin_dim, s.so_d.dim);
    for (int i = 0; i < s.so_d.dim; ++i)
      M.col(i) = spin_lift(s.clifford, s.so_d.onbasis[i].real()) * s.fixed_spinor;
    Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeFullV);
    const double cut = 1e-9 * svd.singularValues()[0];
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > cut) ++rank;
    const int null_dim = s.so_d.dim - rank;
    if (null_dim != 14)
      throw DecompositionResidual("spinor stabilizer has dimension " + std::to_string(null_dim));
    s.stabilizer_coords = svd.matrixV().rightCols(14);
    for (int j = 0; j < 14; ++j) canonical_sign(s.stabilizer_coords.col(j));

    // bracket closure of the stabilizer
    for (int i = 0; i < 14; ++i)
      for (int j = i + 1; j < 14; ++j) {
        const MatrixXcd br = s.so_d.bracket(s.so_d.element(s.stabilizer_coords.col(i)),
                                            s.so_d.element(s.stabilizer_coords.col(j)));
        const VectorXd c = s.so_d.coords(br);
        const VectorXd res = c - s.stabilizer_coords * (s.stabilizer_coords.transpose() * c);
        if (res.norm() > 1e-9 * std::max(1.0, c.norm()))
          throw DecompositionResidual("stabilizer is not bracket-closed");
      }
  }
  return s;
}

IsotypicComponent g2_complement(const SpinStructure& s, const KostantDecomposition& kd) {
  if (s.d != 7) throw UnsupportedDim("g2_complement needs the d = 7 structure");
  const IsotypicComponent* spin6 = nullptr;
  for (const auto& c : kd.components)
    if (c.spin == 6) spin6 = &c;
  if (!spin6) throw MismatchError("Kostant decomposition of so(7) lacks a spin-6 component");

  // orthogonal complement of the stabilizer inside so(7)
  const MatrixXd P =
      MatrixXd::Identity(21, 21) - s.stabilizer_coords * s.stabilizer_coords.transpose();
  Eigen::JacobiSVD<MatrixXd> svd(P, Eigen::ComputeThinU);
  MatrixXd comp(21, 7);
  for (int j = 0; j < 7; ++j) {
    if (svd.singularValues()[j] < 0.5)
      throw MismatchError("stabilizer complement has wrong dimension");
    comp.col(j) = svd.matrixU().col(j);
  }
  if (subspace_distance(spin6->basis, comp) > 1e-9)
    throw MismatchError("spin-6 component differs from the stabilizer complement");

  // the stabilizer itself decomposes as spins {2, 10} under the triple
  std::array<MatrixXd, 3> adr;
  for (int a = 0; a < 3; ++a) {
    const MatrixXd ad = s.so_d.ad_matrix(s.triple.X[a]);
    adr[a] = s.stabilizer_coords.transpose() * ad * s.stabilizer_coords;
  }
  const auto sub = isotypic_decompose(adr[0], adr[1], adr[2]);
  if (spins_of(sub) != std::vector<int>{2, 10})
    throw MismatchError("stabilizer does not decompose as spins {2, 10}");
  return *spin6;
}

double spin7_submersion_det(const SpinStructure& s, const KostantDecomposition& kd) {
  if (s.d != 7) throw UnsupportedDim("submersion check needs the d = 7 structure");
  const IsotypicComponent* spin6 = nullptr;
  for (const auto& c : kd.components)
    if (c.spin == 6) spin6 = &c;
  if (!spin6) throw MismatchError("no spin-6 component");
  MatrixXd m(8, 8);
  m.col(0) = s.fixed_spinor;
  for (int j = 0; j < 7; ++j)
    m.col(j + 1) =
        spin_lift(s.clifford, s.so_d.element(spin6->basis.col(j)).real()) * s.fixed_spinor;
  double norm_prod = 1.0;
  for (int j = 0; j < 8; ++j) norm_prod *= m.col(j).norm();
  return m.determinant() / norm_prod;
}

double subspace_distance(const MatrixXd& A, const MatrixXd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw ShapeMismatch("subspace_distance expects frames of equal shape");
  const MatrixXd R = B - A * (A.transpose() * B);
  Eigen::JacobiSVD<MatrixXd> svd(R);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

}  // namespace liecal
