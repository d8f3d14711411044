// Local optimizers over the unit sphere of H^n acting on q(X) = <X, A X>.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qnr/qmat.hpp"

namespace qnr {

/// A residual vector r(q) of a target condition on q = <X, A X>, together
/// with its Jacobian with respect to (q0, q1, q2, q3).
struct QuaternionResidual {
  int size = 0;
  std::function<void(const Quaternion& q, std::vector<double>& r, std::vector<std::array<double, 4>>& jac)> eval;
};

/// class_rep(q) == target. For a real target the residual is q - target
/// componentwise, which stays smooth where im(q) vanishes.
QuaternionResidual section_target_residual(Complex target);

/// co(q) = q0 + q1 i equals target.
QuaternionResidual projection_target_residual(Complex target);

struct SphereSolveResult {
  QVector x;
  double residual = 0.0;  ///< |r| at x
  int iterations = 0;
};

/// Levenberg-Marquardt on the sphere: minimum-norm damped Gauss-Newton steps
/// in the tangent space followed by renormalization.
SphereSolveResult solve_on_sphere(const QMatrix& a, QVector start, const QuaternionResidual& res,
                                  double tol = 1e-12, int max_iter = 300);

struct AscentResult {
  QVector x;
  double value = 0.0;  ///< objective at x
  int iterations = 0;
};

/// Projected gradient ascent of objective(<X, A X>) using central finite
/// differences with step h on the 4n real coordinates. Steps grow on success
/// and halve on failure; stops once an accepted step improves by less than 1e-12.
AscentResult ascend_on_sphere(const QMatrix& a, QVector start, const std::function<double(const Quaternion&)>& objective,
                              double h = 1e-6, int max_iter = 20000);

/// ascend_on_sphere with objective |q|.
AscentResult ascend_modulus(const QMatrix& a, QVector start, double h = 1e-6, int max_iter = 20000);

/// d<X, A X> along each of the 4n real coordinate directions of X.
std::vector<Quaternion> quadratic_form_gradient(const QMatrix& a, const QVector& x);

}  // namespace qnr
