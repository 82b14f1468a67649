#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gqc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default absolute tolerance for physicality checks.
inline constexpr double kDefaultTol = 1e-9;

/// Symplectic form for m modes: block diagonal with [[0,1],[-1,0]] per mode,
/// quadrature ordering (x1, p1, x2, p2, ...).
Matrix symplectic_form(int modes);

/// An m-mode Gaussian state: covariance matrix V (vacuum = identity) and
/// displacement vector d with d = (<a+a^+>, <-i(a-a^+)>) per mode, so a
/// coherent state |alpha> has d = (2 Re alpha, 2 Im alpha).
///
/// Treated as immutable after construction; all operations below are pure.
struct GaussianState {
  int modes = 0;
  Matrix V;
  Vector d;
};

/// Builds a state from (V, d), deducing the mode count. Throws
/// std::invalid_argument on inconsistent shapes.
GaussianState make_state(Matrix V, Vector d);

struct Violation {
  std::string check;
  double measured = 0.0;
  double threshold = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks that V is symmetric and V + i*Omega is positive semidefinite.
/// Shape mismatches and non-finite entries throw std::invalid_argument;
/// physicality failures are reported as violations, not exceptions.
ValidationReport validate_state(const Matrix& V, const Vector& d, int modes,
                                double tol = kDefaultTol);
ValidationReport validate_state(const GaussianState& s, double tol = kDefaultTol);

/// Symplectic eigenvalues, sorted descending. nu_i >= 1 for physical states;
/// values within 1e-9 below 1 are clamped to 1, values below 1 - 1e-6 throw.
struct SymplecticSpectrum {
  std::vector<double> values;
};

SymplecticSpectrum symplectic_eigenvalues(const GaussianState& s);

/// Entropy contribution of one symplectic eigenvalue, in bits:
///   g(nu) = (nu+1)/2 log2((nu+1)/2) - (nu-1)/2 log2((nu-1)/2),
/// with g(1) = 0. Throws std::domain_error for nu < 1.
double g_function(double nu);

/// Von Neumann entropy in bits: sum of g over the symplectic spectrum.
double entropy(const GaussianState& s);

/// Tensor product: direct sum of covariances, concatenated displacements.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Restriction to a subset of modes (0-based indices, order preserved).
/// Throws std::invalid_argument on empty, duplicate, or out-of-range indices.
GaussianState reduce(const GaussianState& s, const std::vector<int>& modes);

/// 2x2 covariance block of mode i.
Eigen::Matrix2d mode_block(const Matrix& V, int i);

/// Displacement components of mode i.
Eigen::Vector2d mode_displacement(const Vector& d, int i);

}  // namespace gqc
