#include "gqc/states.hpp"

#include <cmath>
#include <stdexcept>

namespace gqc {

Eigen::Matrix2d rotation2(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

GaussianState make_vacuum(int modes) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return GaussianState{modes, Matrix::Identity(2 * modes, 2 * modes),
                       Vector::Zero(2 * modes)};
}

GaussianState make_thermal(double nbar) {
  if (nbar < 0.0) {
    throw std::domain_error("thermal mean photon number must be >= 0, got " +
                            std::to_string(nbar));
  }
  return GaussianState{1, (2.0 * nbar + 1.0) * Matrix::Identity(2, 2),
                       Vector::Zero(2)};
}

GaussianState make_coherent(std::complex<double> alpha) {
  Vector d(2);
  d << 2.0 * alpha.real(), 2.0 * alpha.imag();
  return GaussianState{1, Matrix::Identity(2, 2), std::move(d)};
}

GaussianState make_squeezed(double r, double theta) {
  return make_displaced_squeezed_thermal(0.0, r, theta, 0.0);
}

GaussianState make_displaced_squeezed_thermal(double nbar, double r, double theta,
                                              std::complex<double> alpha) {
  if (nbar < 0.0) {
    throw std::domain_error("thermal mean photon number must be >= 0, got " +
                            std::to_string(nbar));
  }
  const Eigen::Matrix2d rot = rotation2(theta);
  Eigen::Matrix2d core = Eigen::Matrix2d::Zero();
  core(0, 0) = std::exp(2.0 * r);
  core(1, 1) = std::exp(-2.0 * r);
  Vector d(2);
  d << 2.0 * alpha.real(), 2.0 * alpha.imag();
  return GaussianState{1, (2.0 * nbar + 1.0) * rot * core * rot.transpose(),
                       std::move(d)};
}

GaussianState make_two_mode_squeezed(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Matrix V = Matrix::Zero(4, 4);
  Eigen::Matrix2d z = Eigen::Matrix2d::Zero();
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  V.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
  V.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
  V.block<2, 2>(0, 2) = s * z;
  V.block<2, 2>(2, 0) = s * z;
  return GaussianState{2, std::move(V), Vector::Zero(4)};
}

}  // namespace gqc
