#ifndef LIECAL_GRASSMANN_HPP
#define LIECAL_GRASSMANN_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "liecal/algebra.hpp"
#include "liecal/invforms.hpp"

namespace liecal {

/// Oriented d-plane in R^n given by an ordered orthonormal frame plus an
/// orthonormal completion.
struct GrassmannFrame {
  Eigen::MatrixXd frame;       ///< n x d
  Eigen::MatrixXd complement;  ///< n x (n - d)

  int ambient_dim() const { return static_cast<int>(frame.rows()); }
  int d() const { return static_cast<int>(frame.cols()); }
};

/// Tangent direction at a frame: coefficients against frame x complement.
struct TangentDirection {
  Eigen::MatrixXd coeffs;  ///< d x (n - d)
};

/// Evaluates a d-form on ordered coordinate frames.
struct FrameEvaluator {
  int degree = 0;
  std::function<double(const Eigen::MatrixXd&)> eval;
};

/// Exact evaluator: columns are onbasis coordinates, mapped to algebra
/// elements and fed to form_eval.
FrameEvaluator exact_form_evaluator(const MatrixLieAlgebra& g, const FormSpec& fs);

/// Monte Carlo evaluator: columns are mapped to real action matrices by
/// `action` and averaged over the sphere with a fixed sampler; degree must
/// equal (ambient rows of the action) - 1.
FrameEvaluator mc_form_evaluator(std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> action,
                                 int degree, const Sampler& s);

GrassmannFrame frame_from_basis(const Eigen::MatrixXd& basis);

GrassmannFrame random_frame(int ambient, int d, std::uint64_t seed);

double f_value(const FrameEvaluator& ev, const GrassmannFrame& fr);

/// Orthogonal retraction: Gram-Schmidt applied to frame + t * complement *
/// coeffs^T; retract(fr, dir, 0) == fr and agrees with the tangent line to
/// first order.
GrassmannFrame retract(const GrassmannFrame& fr, const TangentDirection& dir, double t);

struct Gradient {
  TangentDirection direction;
  double norm = 0.0;
};

/// Central finite differences along every coordinate direction.
Gradient grad_fd(const FrameEvaluator& ev, const GrassmannFrame& fr, double h);

struct HessianProbe {
  int negative = 0;
  int zero = 0;
  int positive = 0;
};

/// Second differences along random unit tangent directions; requires a
/// critical frame.
HessianProbe hessian_probe(const FrameEvaluator& ev, const GrassmannFrame& fr, int directions,
                           double h, double grad_tol, std::uint64_t seed = 5);

struct AscentStep {
  double value = 0.0;
  double grad_norm = 0.0;
};

/// Gradient ascent with backtracking; returns the value trace. The final
/// frame is written back to fr.
std::vector<AscentStep> ascent(const FrameEvaluator& ev, GrassmannFrame& fr, double step,
                               int iters, double h = 1e-4);

}  // namespace liecal

#endif
