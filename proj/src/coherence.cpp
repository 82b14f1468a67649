#include "gqc/coherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gqc/states.hpp"

namespace gqc {

double photon_entropy_term(double nbar) {
  if (nbar < 0.0) {
    if (nbar < -kDefaultTol) {
      throw std::domain_error("mean photon number must be >= 0, got " +
                              std::to_string(nbar));
    }
    nbar = 0.0;
  }
  double bits = (nbar + 1.0) * std::log2(nbar + 1.0);
  if (nbar > 0.0) {
    bits -= nbar * std::log2(nbar);
  }
  return bits;
}

std::vector<double> mean_photon_numbers(const GaussianState& s) {
  std::vector<double> nbars(s.modes);
  for (int i = 0; i < s.modes; ++i) {
    const Eigen::Matrix2d v = mode_block(s.V, i);
    const Eigen::Vector2d d = mode_displacement(s.d, i);
    const double nbar = 0.25 * (v(0, 0) + v(1, 1) + d(0) * d(0) + d(1) * d(1) - 2.0);
    nbars[i] = std::max(nbar, 0.0);
  }
  return nbars;
}

GaussianState closest_incoherent_state(const GaussianState& s) {
  const std::vector<double> nbars = mean_photon_numbers(s);
  GaussianState out = make_thermal(nbars[0]);
  for (int i = 1; i < s.modes; ++i) {
    out = tensor(out, make_thermal(nbars[i]));
  }
  return out;
}

CoherenceReport coherence(const GaussianState& s) {
  CoherenceReport report;
  report.symplectic = symplectic_eigenvalues(s);
  for (double nu : report.symplectic.values) {
    report.entropy_bits += g_function(nu);
  }
  report.mean_photons = mean_photon_numbers(s);

  double bits = -report.entropy_bits;
  for (double nbar : report.mean_photons) {
    bits += photon_entropy_term(nbar);
  }
  if (bits < 0.0 && bits >= -1e-10) {
    bits = 0.0;
  }
  report.coherence_bits = bits;
  report.closest_incoherent = closest_incoherent_state(s);
  return report;
}

double relative_entropy_to_incoherent(const GaussianState& s,
                                      const std::vector<double>& nbars) {
  if (static_cast<int>(nbars.size()) != s.modes) {
    throw std::invalid_argument("expected one mean photon number per mode");
  }
  const std::vector<double> state_photons = mean_photon_numbers(s);

  double cross_bits = 0.0;  // tr[rho log2 delta]
  for (int i = 0; i < s.modes; ++i) {
    const double target = nbars[i];
    const double mean = state_photons[i];
    if (target < 0.0) {
      throw std::domain_error("reference mean photon numbers must be >= 0");
    }
    if (target == 0.0) {
      if (mean > 0.0) {
        return std::numeric_limits<double>::infinity();
      }
      continue;  // 0 log 0 - 1 log 1
    }
    cross_bits += mean * std::log2(target) - (mean + 1.0) * std::log2(target + 1.0);
  }
  return -entropy(s) - cross_bits;
}

bool is_incoherent(const GaussianState& s, double tol) {
  for (int i = 0; i < 2 * s.modes; ++i) {
    if (std::abs(s.d(i)) > tol) {
      return false;
    }
    for (int j = 0; j < 2 * s.modes; ++j) {
      if (i != j && std::abs(s.V(i, j)) > tol) {
        return false;
      }
    }
  }
  for (int i = 0; i < s.modes; ++i) {
    if (std::abs(s.V(2 * i, 2 * i) - s.V(2 * i + 1, 2 * i + 1)) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace gqc
