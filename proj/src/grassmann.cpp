#include "liecal/grassmann.hpp"

#include <cmath>

#include "liecal/rng.hpp"

namespace liecal {

using Eigen::MatrixXd;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

MatrixXd orthonormal_complement(const MatrixXd& frame) {
  const Eigen::Index n = frame.rows(), d = frame.cols();
  Eigen::HouseholderQR<MatrixXd> qr(frame);
  const MatrixXd q = qr.householderQ() * MatrixXd::Identity(n, n);
  return q.rightCols(n - d);
}

MatrixXd gram_schmidt(MatrixXd m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
    for (Eigen::Index k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
    const double nrm = m.col(j).norm();
    if (nrm < 1e-12) throw DecompositionResidual("retraction degenerated the frame");
    m.col(j) /= nrm;
  }
  return m;
}

}  // namespace

FrameEvaluator exact_form_evaluator(const MatrixLieAlgebra& g, const FormSpec& fs) {
  FrameEvaluator ev;
  ev.degree = fs.form_degree;
  ev.eval = [&g, fs](const MatrixXd& cols) {
    std::vector<MatrixXcd> args;
    args.reserve(cols.cols());
    for (Eigen::Index j = 0; j < cols.cols(); ++j) args.push_back(g.element(cols.col(j)));
    return form_eval(fs, args);
  };
  return ev;
}

FrameEvaluator mc_form_evaluator(std::function<MatrixXd(const VectorXd&)> action, int degree,
                                 const Sampler& s) {
  FrameEvaluator ev;
  ev.degree = degree;
  ev.eval = [action = std::move(action), s](const MatrixXd& cols) {
    std::vector<MatrixXd> acts;
    acts.reserve(cols.cols());
    for (Eigen::Index j = 0; j < cols.cols(); ++j) acts.push_back(action(cols.col(j)));
    return sphere_average(acts, s).mean;
  };
  return ev;
}

GrassmannFrame frame_from_basis(const MatrixXd& basis) {
  GrassmannFrame fr;
  fr.frame = basis;
  fr.complement = orthonormal_complement(basis);
  return fr;
}

GrassmannFrame random_frame(int ambient, int d, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  MatrixXd m(ambient, d);
  for (int j = 0; j < d; ++j) m.col(j) = rng.gaussian_vector(ambient);
  return frame_from_basis(gram_schmidt(std::move(m)));
}

double f_value(const FrameEvaluator& ev, const GrassmannFrame& fr) {
  if (ev.degree != fr.d()) throw DegreeMismatch("form degree does not match the frame dimension");
  return ev.eval(fr.frame);
}

GrassmannFrame retract(const GrassmannFrame& fr, const TangentDirection& dir, double t) {
  if (dir.coeffs.rows() != fr.d() || dir.coeffs.cols() != fr.ambient_dim() - fr.d())
    throw ShapeMismatch("tangent coefficients have wrong shape");
  if (!dir.coeffs.allFinite() || !std::isfinite(t))
    throw ShapeMismatch("tangent direction must be finite");
  if (t == 0.0) return fr;
  GrassmannFrame out;
  out.frame = gram_schmidt(fr.frame + t * (fr.complement * dir.coeffs.transpose()));
  out.complement = orthonormal_complement(out.frame);
  return out;
}

Gradient grad_fd(const FrameEvaluator& ev, const GrassmannFrame& fr, double h) {
  if (h <= 0) throw UnsupportedParam("grad_fd needs a positive step");
  const int d = fr.d(), c = fr.ambient_dim() - fr.d();
  Gradient g;
  g.direction.coeffs = MatrixXd::Zero(d, c);
  TangentDirection probe;
  probe.coeffs = MatrixXd::Zero(d, c);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < c; ++j) {
      probe.coeffs(i, j) = 1.0;
      const double fp = f_value(ev, retract(fr, probe, h));
      const double fm = f_value(ev, retract(fr, probe, -h));
      probe.coeffs(i, j) = 0.0;
      g.direction.coeffs(i, j) = (fp - fm) / (2.0 * h);
    }
  g.norm = g.direction.coeffs.norm();
  return g;
}

HessianProbe hessian_probe(const FrameEvaluator& ev, const GrassmannFrame& fr, int directions,
                           double h, double grad_tol, std::uint64_t seed) {
  HessianProbe out;
  const int d = fr.d(), c = fr.ambient_dim() - fr.d();
  if (d * c == 0) return out;  // whole-space frame: no tangent directions
  const Gradient g = grad_fd(ev, fr, h);
  const double f0 = f_value(ev, fr);
  if (g.norm > grad_tol * std::max(1.0, std::abs(f0)))
    throw NotCritical("hessian_probe requires a critical frame");
  const double dead = 1e-6 * std::max(1.0, std::abs(f0));
  for (int t = 0; t < directions; ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    TangentDirection dir;
    dir.coeffs = MatrixXd(d, c);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < c; ++j) dir.coeffs(i, j) = rng.next_gaussian();
    dir.coeffs /= dir.coeffs.norm();
    const double fp = f_value(ev, retract(fr, dir, h));
    const double fm = f_value(ev, retract(fr, dir, -h));
    const double second = (fp - 2.0 * f0 + fm) / (h * h);
    if (second < -dead) ++out.negative;
    else if (second > dead) ++out.positive;
    else ++out.zero;
  }
  return out;
}

std::vector<AscentStep> ascent(const FrameEvaluator& ev, GrassmannFrame& fr, double step,
                               int iters, double h) {
  if (step < 0) throw UnsupportedParam("ascent needs a non-negative step");
  std::vector<AscentStep> trace;
  double value = f_value(ev, fr);
  for (int it = 0; it < iters; ++it) {
    const Gradient g = grad_fd(ev, fr, h);
    trace.push_back({value, g.norm});
    // stationarity: do not wander along finite-difference noise
    if (g.norm <= 1e-7 * std::max(1.0, std::abs(value)) || step == 0.0) continue;
    TangentDirection dir;
    dir.coeffs = g.direction.coeffs / g.norm;
    double t = step;
    bool moved = false;
    for (int back = 0; back < 30; ++back) {
      const GrassmannFrame cand = retract(fr, dir, t);
      const double cv = f_value(ev, cand);
      if (cv >= value) {
        fr = cand;
        value = cv;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  trace.push_back({value, grad_fd(ev, fr, h).norm});
  return trace;
}

}  // namespace liecal
