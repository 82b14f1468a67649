#include "gqc/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "gqc/coherence.hpp"

namespace gqc {

namespace {

using Complex = std::complex<double>;

constexpr int kMaxIndex = 200;

constexpr Complex kI{0.0, 1.0};

double symmetrized_offdiag(const Eigen::Matrix2d& V) {
  return 0.5 * (V(0, 1) + V(1, 0));
}

}  // namespace

std::pair<Matrix6cd, double> integral_form_matrix(const Eigen::Matrix2d& V) {
  const double v11 = V(0, 0);
  const double v22 = V(1, 1);
  const double v12 = symmetrized_offdiag(V);

  Matrix6cd a;
  a << 2, 0, -1, -kI, 1, kI,
       0, 2, kI, -1, -kI, 1,
       -1, kI, 2, 0, -1, kI,
       -kI, -1, 0, 2, -kI, -1,
       1, -kI, -1, -kI, 1.0 + v22, -v12,
       kI, 1, kI, -1, -v12, 1.0 + v11;

  const double closed = 16.0 * (v11 * v22 - v12 * v12 + v11 + v22 + 1.0);
  const Complex numeric = a.determinant();
  if (std::abs(numeric - closed) > 1e-9 * std::abs(closed)) {
    throw std::runtime_error(
        "form-matrix determinant disagrees with its closed form: numeric " +
        std::to_string(numeric.real()) + " vs " + std::to_string(closed));
  }
  return {a, numeric.real()};
}

QuadraticFormCoefficients quadratic_coeffs(const Eigen::Matrix2d& V,
                                           const Eigen::Vector2d& d) {
  const double v11 = V(0, 0);
  const double v22 = V(1, 1);
  const double v12 = symmetrized_offdiag(V);
  const double d1 = d(0);
  const double d2 = d(1);
  const double denom = 1.0 + v11 + v22 + v11 * v22 - v12 * v12;

  QuadraticFormCoefficients c;
  c.b2(0, 0) = (v11 - v22 + 2.0 * kI * v12) / denom;
  c.b2(1, 1) = (v11 - v22 - 2.0 * kI * v12) / denom;
  c.b2(0, 1) = (v11 * v22 - v12 * v12 - 1.0) / denom;
  c.b2(1, 0) = c.b2(0, 1);
  c.b1(0) = 2.0 * ((1.0 - kI * v12 + v22) * d1 + kI * (1.0 + v11 + kI * v12) * d2) / denom;
  c.b1(1) = 2.0 * ((1.0 + kI * v12 + v22) * d1 - kI * (1.0 + v11 - kI * v12) * d2) / denom;
  c.b0 = -((1.0 + v22) * d1 * d1 - 2.0 * v12 * d1 * d2 + (1.0 + v11) * d2 * d2) / denom;

  auto [form, det_a] = integral_form_matrix(V);
  c.det_a = det_a;

  // Cross-check the closed forms against a direct solve of the 6x6 system.
  Eigen::PartialPivLU<Matrix6cd> lu(form);
  constexpr double kSamples[4][2] = {{1, 0}, {0, 1}, {1, 1}, {0.5, -0.3}};
  for (const auto& uv : kSamples) {
    const double u = uv[0];
    const double v = uv[1];
    Eigen::Matrix<Complex, 6, 1> b;
    b << u, kI * u, v, -kI * v, -kI * d2, kI * d1;
    const Eigen::Matrix<Complex, 6, 1> x = lu.solve(b);
    const Complex direct = 0.5 * (b.transpose() * x).value();
    const Complex closed =
        0.5 * (c.b2(0, 0) * u * u + 2.0 * c.b2(0, 1) * u * v + c.b2(1, 1) * v * v +
               c.b1(0) * u + c.b1(1) * v + c.b0);
    if (std::abs(direct - closed) > 1e-8 * std::max(1.0, std::abs(closed))) {
      throw std::runtime_error("quadratic coefficients disagree with the direct "
                               "solve of the 6x6 system");
    }
  }
  return c;
}

namespace {

// Table of h(m, n) = (d_u^m d_v^n exp(xi))|_0 / sqrt(m! n!). Since xi is
// quadratic, differentiating exp(xi) gives a three-term recurrence; dividing
// through by sqrt(m! n!) keeps every entry of the order of a matrix element,
// so the table never overflows. rho_mn = (8 / sqrt(det A)) h(m, n).
Eigen::MatrixXcd scaled_derivative_table(const QuadraticFormCoefficients& c,
                                         int rows, int cols) {
  const Complex xu = 0.5 * c.b1(0);
  const Complex xv = 0.5 * c.b1(1);
  const Complex xuu = c.b2(0, 0);
  const Complex xvv = c.b2(1, 1);
  const Complex xuv = c.b2(0, 1);

  Eigen::MatrixXcd h(rows + 1, cols + 1);
  h(0, 0) = std::exp(0.5 * c.b0);
  for (int m = 1; m <= rows; ++m) {
    Complex acc = xu * h(m - 1, 0);
    if (m >= 2) {
      acc += std::sqrt(static_cast<double>(m - 1)) * xuu * h(m - 2, 0);
    }
    h(m, 0) = acc / std::sqrt(static_cast<double>(m));
  }
  for (int m = 0; m <= rows; ++m) {
    for (int n = 1; n <= cols; ++n) {
      Complex acc = xv * h(m, n - 1);
      if (n >= 2) {
        acc += std::sqrt(static_cast<double>(n - 1)) * xvv * h(m, n - 2);
      }
      if (m >= 1) {
        acc += std::sqrt(static_cast<double>(m)) * xuv * h(m - 1, n - 1);
      }
      h(m, n) = acc / std::sqrt(static_cast<double>(n));
    }
  }
  return h;
}

void check_index(int value, const char* name) {
  if (value < 0 || value > kMaxIndex) {
    throw std::out_of_range(std::string(name) + " must lie in [0, " +
                            std::to_string(kMaxIndex) + "], got " +
                            std::to_string(value));
  }
}

}  // namespace

std::complex<double> fock_element(const Eigen::Matrix2d& V, const Eigen::Vector2d& d,
                                  int m, int n) {
  check_index(m, "m");
  check_index(n, "n");
  const QuadraticFormCoefficients c = quadratic_coeffs(V, d);
  const Eigen::MatrixXcd h = scaled_derivative_table(c, m, n);
  return (8.0 / std::sqrt(c.det_a)) * h(m, n);
}

FockMatrix fock_matrix(const GaussianState& s, int cutoff) {
  if (s.modes != 1) {
    throw std::invalid_argument("the number-basis oracle supports one-mode states "
                                "only");
  }
  if (cutoff < 1 || cutoff > kMaxIndex) {
    throw std::out_of_range("cutoff must lie in [1, " + std::to_string(kMaxIndex) +
                            "], got " + std::to_string(cutoff));
  }

  const QuadraticFormCoefficients c =
      quadratic_coeffs(s.V.topLeftCorner<2, 2>(), s.d.head<2>());
  FockMatrix fm;
  fm.cutoff = cutoff;
  fm.elements = (8.0 / std::sqrt(c.det_a)) *
                scaled_derivative_table(c, cutoff, cutoff);

  // Construction check: the recurrence reaches (m, n) and (n, m) along
  // different paths, so Hermiticity is a real consistency test.
  const double herm_err = (fm.elements - fm.elements.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-10) {
    throw std::runtime_error("truncated matrix is not Hermitian (max deviation " +
                             std::to_string(herm_err) + ")");
  }
  double trace = 0.0;
  for (int i = 0; i <= cutoff; ++i) {
    const Complex diag = fm.elements(i, i);
    if (diag.real() < -1e-10) {
      throw std::runtime_error("negative occupation probability at n = " +
                               std::to_string(i));
    }
    trace += diag.real();
  }
  fm.trace_deficit = std::abs(1.0 - trace);
  fm.cutoff_warning = fm.trace_deficit > 0.01;
  return fm;
}

int default_cutoff(const GaussianState& s) {
  double nbar = 0.0;
  for (double n : mean_photon_numbers(s)) {
    nbar += n;
  }
  const int guess = static_cast<int>(std::ceil(10.0 * (nbar + 1.0)));
  return std::min(std::max(20, guess), kMaxIndex);
}

double oracle_mean_photon(const FockMatrix& fm) {
  if (fm.trace_deficit > 0.01) {
    throw std::invalid_argument("trace deficit " + std::to_string(fm.trace_deficit) +
                                " too large for a mean photon estimate");
  }
  double nbar = 0.0;
  for (int n = 1; n <= fm.cutoff; ++n) {
    nbar += n * fm.elements(n, n).real();
  }
  return nbar;
}

double oracle_coherence(const FockMatrix& fm) {
  if (fm.trace_deficit > 1e-4) {
    throw std::invalid_argument("trace deficit " + std::to_string(fm.trace_deficit) +
                                " too large for a coherence estimate");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(fm.elements,
                                                         Eigen::EigenvaluesOnly);
  double entropy_bits = 0.0;
  for (double p : solver.eigenvalues()) {
    if (p < -1e-8) {
      throw std::runtime_error("truncated matrix has eigenvalue " +
                               std::to_string(p) + "; raise the cutoff");
    }
    if (p > 0.0) {
      entropy_bits -= p * std::log2(p);
    }
  }
  const double nbar = oracle_mean_photon(fm);
  double cross_bits = 0.0;  // tr[rho log2 delta(nbar)]
  if (nbar > 0.0) {
    cross_bits = nbar * std::log2(nbar) - (nbar + 1.0) * std::log2(nbar + 1.0);
  }
  return -entropy_bits - cross_bits;
}

double diagonality_residual(const FockMatrix& fm) {
  double residual = 0.0;
  for (int m = 0; m <= fm.cutoff; ++m) {
    for (int n = 0; n <= fm.cutoff; ++n) {
      if (m != n) {
        residual = std::max(residual, std::abs(fm.elements(m, n)));
      }
    }
  }
  return residual;
}

}  // namespace gqc
