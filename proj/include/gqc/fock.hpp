#pragma once

#include <complex>
#include <utility>

#include "gqc/gaussian.hpp"

namespace gqc {

// Independent verification path for one-mode states. Number-basis matrix
// elements rho_mn are obtained from the characteristic function through a
// triple phase-space Gaussian integral: the integrand's quadratic form is a
// 6x6 complex matrix A in the variables (x_a, y_a, x_b, y_b, x_l, y_l), and
// carrying out the integral leaves a quadratic exponent
//   xi(u, v) = [ (u,v) B2 (u,v)^t + B1 (u,v)^t + B0 ] / 2
// in the two generating variables. Derivatives of exp(xi) at zero then give
//   rho_mn = (8 / sqrt(det A)) * d_u^m d_v^n exp(xi)|_0 / sqrt(m! n!).

using Matrix6cd = Eigen::Matrix<std::complex<double>, 6, 6>;

/// Quadratic-form matrix of the generating integral together with its
/// determinant. The determinant is computed by LU factorization and checked
/// against the closed form 16 (det V + V11 + V22 + 1) to 1e-9 relative;
/// disagreement throws std::runtime_error.
std::pair<Matrix6cd, double> integral_form_matrix(const Eigen::Matrix2d& V);

/// Coefficients of the quadratic exponent xi.
struct QuadraticFormCoefficients {
  Eigen::Matrix2cd b2;
  Eigen::Vector2cd b1;
  std::complex<double> b0;
  double det_a = 0.0;
};

/// Closed-form B2, B1, B0. Every call cross-checks the closed forms against
/// a direct linear solve of the 6x6 system at sample (u, v) points to 1e-8;
/// disagreement throws std::runtime_error.
QuadraticFormCoefficients quadratic_coeffs(const Eigen::Matrix2d& V,
                                           const Eigen::Vector2d& d);

/// Single number-basis element <m|rho|n>. Supports m, n up to 200.
std::complex<double> fock_element(const Eigen::Matrix2d& V, const Eigen::Vector2d& d,
                                  int m, int n);

/// Truncated number-basis density matrix with truncation-quality metadata.
struct FockMatrix {
  int cutoff = 0;
  Eigen::MatrixXcd elements;   // (cutoff+1) x (cutoff+1)
  double trace_deficit = 0.0;  // |1 - sum of diagonal|
  bool cutoff_warning = false;  // trace_deficit > 0.01
};

/// All elements up to the cutoff (1 <= cutoff <= 200); one-mode states only.
FockMatrix fock_matrix(const GaussianState& s, int cutoff);

/// Cutoff heuristic: max(20, ceil(10 (nbar + 1))), capped at 200.
int default_cutoff(const GaussianState& s);

/// Sum of n rho_nn over the truncated matrix. Requires trace_deficit <= 0.01.
double oracle_mean_photon(const FockMatrix& fm);

/// Coherence from the truncated matrix alone: entropy by eigendecomposition,
/// then the relative entropy to the thermal state with the truncated mean
/// photon number. Requires trace_deficit <= 1e-4; eigenvalues below -1e-8
/// throw std::runtime_error (cutoff too small).
double oracle_coherence(const FockMatrix& fm);

/// Largest |rho_mn| with m != n; zero exactly for thermal states.
double diagonality_residual(const FockMatrix& fm);

}  // namespace gqc
