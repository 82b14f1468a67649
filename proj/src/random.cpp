#include "gqc/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gqc/coherence.hpp"
#include "gqc/states.hpp"

namespace gqc {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

GaussianState random_one_mode_state(Rng& rng) {
  const double nbar = rng.uniform(0.0, 2.0);
  const double r = rng.uniform(-1.0, 1.0);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return make_displaced_squeezed_thermal(nbar, r, theta, {re, im});
}

GaussianState random_one_mode_state_capped(Rng& rng, double nbar_cap) {
  for (;;) {
    GaussianState s = random_one_mode_state(rng);
    if (mean_photon_numbers(s)[0] <= nbar_cap) {
      return s;
    }
  }
}

namespace {

/// 2m x 2m orthogonal symplectic image of an m x m unitary under the
/// interleaved (x1, p1, ...) quadrature ordering.
Matrix passive_from_unitary(const Eigen::MatrixXcd& u) {
  const int m = static_cast<int>(u.rows());
  Matrix s = Matrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double re = u(i, j).real();
      const double im = u(i, j).imag();
      s(2 * i, 2 * j) = re;
      s(2 * i, 2 * j + 1) = -im;
      s(2 * i + 1, 2 * j) = im;
      s(2 * i + 1, 2 * j + 1) = re;
    }
  }
  return s;
}

Eigen::MatrixXcd haar_unitary(int m, Rng& rng) {
  Eigen::MatrixXcd g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom so Q is Haar-distributed.
  for (int j = 0; j < m; ++j) {
    std::complex<double> diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace

Matrix random_passive_symplectic(int modes, Rng& rng) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return passive_from_unitary(haar_unitary(modes, rng));
}

Matrix random_symplectic(int modes, Rng& rng) {
  Matrix left = random_passive_symplectic(modes, rng);
  Matrix right = random_passive_symplectic(modes, rng);
  Matrix squeeze = Matrix::Identity(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    const double r = rng.uniform(-0.5, 0.5);
    squeeze(2 * i, 2 * i) = std::exp(r);
    squeeze(2 * i + 1, 2 * i + 1) = std::exp(-r);
  }
  return left * squeeze * right;
}

GaussianState random_state(int modes, Rng& rng) {
  GaussianState s = random_one_mode_state(rng);
  for (int i = 1; i < modes; ++i) {
    s = tensor(s, random_one_mode_state(rng));
  }
  if (modes > 1) {
    const Matrix rot = random_passive_symplectic(modes, rng);
    s.V = rot * s.V * rot.transpose();
    s.d = rot * s.d;
  }
  return s;
}

GaussianState random_thermal_product(int modes, Rng& rng) {
  GaussianState s = make_thermal(rng.uniform(0.0, 2.0));
  for (int i = 1; i < modes; ++i) {
    s = tensor(s, make_thermal(rng.uniform(0.0, 2.0)));
  }
  return s;
}

GaussianChannel random_channel(int modes, Rng& rng) {
  const int n = 2 * modes;
  Matrix t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t(i, j) = 0.7 * rng.normal();
    }
  }
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, j) = rng.normal();
    }
  }
  Matrix noise = 0.5 * b * b.transpose();

  // Lift the noise until the channel condition holds with margin.
  const Matrix omega = symplectic_form(modes);
  Eigen::MatrixXcd herm =
      noise.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) *
          (omega - t * omega * t.transpose()).cast<std::complex<double>>();
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .minCoeff();
  const double margin = 1e-6;
  if (min_eig < margin) {
    noise += (margin - min_eig) * Matrix::Identity(n, n);
  }

  Vector dbar(n);
  for (int i = 0; i < n; ++i) {
    dbar(i) = rng.uniform(-1.0, 1.0);
  }
  return GaussianChannel{modes, std::move(t), std::move(noise), std::move(dbar)};
}

GaussianChannel random_incoherent_channel(int modes, Rng& rng) {
  std::vector<IncoherentModeSpec> specs(modes);
  for (auto& spec : specs) {
    spec.t = rng.uniform(0.0, 1.4);
    spec.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    spec.reflect = rng.coin();
    const double det_o = spec.reflect ? -1.0 : 1.0;
    spec.w = std::abs(spec.t * spec.t * det_o - 1.0) + rng.uniform(0.0, 0.8);
  }
  std::vector<int> perm(modes);
  for (int i = 0; i < modes; ++i) {
    perm[i] = i;
  }
  for (int i = modes - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
  }
  return make_incoherent_channel(specs, perm);
}

}  // namespace gqc
