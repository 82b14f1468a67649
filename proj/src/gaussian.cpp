#include "gqc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

namespace gqc {

namespace {

void check_mode_count(int modes) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive, got " +
                                std::to_string(modes));
  }
}

void check_shapes(const Matrix& V, const Vector& d, int modes) {
  check_mode_count(modes);
  const Eigen::Index n = 2 * static_cast<Eigen::Index>(modes);
  if (V.rows() != n || V.cols() != n) {
    throw std::invalid_argument("covariance matrix must be " + std::to_string(n) +
                                "x" + std::to_string(n) + ", got " +
                                std::to_string(V.rows()) + "x" +
                                std::to_string(V.cols()));
  }
  if (d.size() != n) {
    throw std::invalid_argument("displacement vector must have length " +
                                std::to_string(n) + ", got " +
                                std::to_string(d.size()));
  }
  if (!V.allFinite() || !d.allFinite()) {
    throw std::invalid_argument("state data contains non-finite entries");
  }
}

}  // namespace

Matrix symplectic_form(int modes) {
  check_mode_count(modes);
  Matrix omega = Matrix::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

GaussianState make_state(Matrix V, Vector d) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0 || V.rows() == 0) {
    throw std::invalid_argument("covariance matrix must be square with even size");
  }
  const int modes = static_cast<int>(V.rows() / 2);
  check_shapes(V, d, modes);
  return GaussianState{modes, std::move(V), std::move(d)};
}

ValidationReport validate_state(const Matrix& V, const Vector& d, int modes,
                                double tol) {
  check_shapes(V, d, modes);

  ValidationReport report;
  auto record = [&report](const std::string& check, double measured,
                          double threshold, bool ok) {
    if (!ok) {
      report.ok = false;
      report.violations.push_back({check, measured, threshold});
    }
  };

  const double v_norm = V.norm();
  const double asym = (V - V.transpose()).norm();
  record("V symmetric", asym, tol * v_norm, asym <= tol * v_norm);

  // Hermitian part of V + i Omega; symmetrizing V first keeps the PSD check
  // meaningful even when the symmetry check already failed.
  Eigen::MatrixXcd herm =
      (0.5 * (V + V.transpose())).cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * symplectic_form(modes).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  record("V+iOmega PSD", min_eig, -tol, min_eig >= -tol);

  return report;
}

ValidationReport validate_state(const GaussianState& s, double tol) {
  return validate_state(s.V, s.d, s.modes, tol);
}

SymplecticSpectrum symplectic_eigenvalues(const GaussianState& s) {
  check_shapes(s.V, s.d, s.modes);

  std::vector<double> nus;
  nus.reserve(s.modes);
  if (s.modes == 1) {
    nus.push_back(std::sqrt(std::max(s.V.determinant(), 0.0)));
  } else {
    // Eigenvalues of Omega V come in conjugate pairs +-i nu; the moduli of
    // each pair agree exactly, so sorting and averaging adjacent entries
    // recovers the spectrum.
    Eigen::EigenSolver<Matrix> solver(symplectic_form(s.modes) * s.V, false);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("eigenvalue computation failed");
    }
    Eigen::VectorXd mags = solver.eigenvalues().cwiseAbs();
    std::vector<double> sorted(mags.data(), mags.data() + mags.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    for (int i = 0; i < s.modes; ++i) {
      nus.push_back(0.5 * (sorted[2 * i] + sorted[2 * i + 1]));
    }
  }

  for (double& nu : nus) {
    if (nu < 1.0 - 1e-6) {
      throw std::runtime_error("unphysical state: symplectic eigenvalue " +
                               std::to_string(nu) + " below 1");
    }
    if (nu < 1.0 && nu >= 1.0 - kDefaultTol) {
      nu = 1.0;
    }
  }
  std::sort(nus.begin(), nus.end(), std::greater<double>());
  return SymplecticSpectrum{std::move(nus)};
}

double g_function(double nu) {
  if (!(nu >= 1.0)) {
    throw std::domain_error("g is defined for nu >= 1, got " + std::to_string(nu));
  }
  const double hi = 0.5 * (nu + 1.0);
  const double lo = 0.5 * (nu - 1.0);
  double bits = hi * std::log2(hi);
  if (lo > 0.0) {
    bits -= lo * std::log2(lo);
  }
  return bits;
}

double entropy(const GaussianState& s) {
  double bits = 0.0;
  for (double nu : symplectic_eigenvalues(s).values) {
    bits += g_function(nu);
  }
  return bits;
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
  check_shapes(a.V, a.d, a.modes);
  check_shapes(b.V, b.d, b.modes);

  GaussianState out;
  out.modes = a.modes + b.modes;
  out.V = Matrix::Zero(2 * out.modes, 2 * out.modes);
  out.V.topLeftCorner(2 * a.modes, 2 * a.modes) = a.V;
  out.V.bottomRightCorner(2 * b.modes, 2 * b.modes) = b.V;
  out.d = Vector(2 * out.modes);
  out.d.head(2 * a.modes) = a.d;
  out.d.tail(2 * b.modes) = b.d;
  return out;
}

GaussianState reduce(const GaussianState& s, const std::vector<int>& modes) {
  check_shapes(s.V, s.d, s.modes);
  if (modes.empty()) {
    throw std::invalid_argument("mode selection must not be empty");
  }
  std::set<int> seen;
  for (int idx : modes) {
    if (idx < 0 || idx >= s.modes) {
      throw std::invalid_argument("mode index " + std::to_string(idx) +
                                  " out of range for " + std::to_string(s.modes) +
                                  " modes");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("duplicate mode index " + std::to_string(idx));
    }
  }

  const int m = static_cast<int>(modes.size());
  GaussianState out;
  out.modes = m;
  out.V = Matrix(2 * m, 2 * m);
  out.d = Vector(2 * m);
  for (int a = 0; a < m; ++a) {
    out.d.segment<2>(2 * a) = s.d.segment<2>(2 * modes[a]);
    for (int b = 0; b < m; ++b) {
      out.V.block<2, 2>(2 * a, 2 * b) = s.V.block<2, 2>(2 * modes[a], 2 * modes[b]);
    }
  }
  return out;
}

Eigen::Matrix2d mode_block(const Matrix& V, int i) {
  return V.block<2, 2>(2 * i, 2 * i);
}

Eigen::Vector2d mode_displacement(const Vector& d, int i) {
  return d.segment<2>(2 * i);
}

}  // namespace gqc
