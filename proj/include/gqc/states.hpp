#pragma once

#include <complex>

#include "gqc/gaussian.hpp"

namespace gqc {

/// 2x2 rotation by theta.
Eigen::Matrix2d rotation2(double theta);

GaussianState make_vacuum(int modes = 1);

/// Thermal state: V = (2 nbar + 1) I, d = 0. Throws for nbar < 0.
GaussianState make_thermal(double nbar);

/// Coherent state: V = I, d = (2 Re alpha, 2 Im alpha).
GaussianState make_coherent(std::complex<double> alpha);

/// Squeezed vacuum: V = R(theta) diag(e^{2r}, e^{-2r}) R(theta)^t, d = 0.
/// At theta = 0, positive r stretches the first quadrature (V11 = e^{2r}).
GaussianState make_squeezed(double r, double theta = 0.0);

/// Displaced squeezed thermal state:
/// V = (2 nbar + 1) R(theta) diag(e^{2r}, e^{-2r}) R(theta)^t, d from alpha.
GaussianState make_displaced_squeezed_thermal(double nbar, double r, double theta,
                                              std::complex<double> alpha);

/// Two-mode squeezed vacuum, covariance blocks
/// [[cosh(2r) I, sinh(2r) Z], [sinh(2r) Z, cosh(2r) I]] with Z = diag(1,-1).
GaussianState make_two_mode_squeezed(double r);

}  // namespace gqc
