#pragma once

#include <vector>

#include "gqc/gaussian.hpp"

namespace gqc {

struct CoherenceReport {
  double coherence_bits = 0.0;
  double entropy_bits = 0.0;
  std::vector<double> mean_photons;
  SymplecticSpectrum symplectic;
  GaussianState closest_incoherent;
};

/// (n+1) log2(n+1) - n log2(n), with 0 log 0 := 0. The diagonal entropy of a
/// thermal state with mean photon number n.
double photon_entropy_term(double nbar);

/// Per-mode mean photon numbers: nbar_i = (V11 + V22 + d1^2 + d2^2 - 2) / 4
/// on the mode's own covariance block and displacement.
std::vector<double> mean_photon_numbers(const GaussianState& s);

/// Relative-entropy coherence in bits:
///   C = -S(rho) + sum_i [(nbar_i + 1) log2(nbar_i + 1) - nbar_i log2 nbar_i].
/// Nonnegative; zero exactly on products of thermal states. Tiny negative
/// rounding residue (>= -1e-10) is clamped to zero.
CoherenceReport coherence(const GaussianState& s);

/// The minimizer of the relative entropy over incoherent states: the product
/// of thermal states with the input's per-mode mean photon numbers.
GaussianState closest_incoherent_state(const GaussianState& s);

/// S(rho || delta) in bits for delta the thermal product with the given mean
/// photon numbers. Returns +infinity when some nbars[i] = 0 while the state
/// has photons in mode i. Minimized at nbars = mean_photon_numbers(s), where
/// it equals the coherence.
double relative_entropy_to_incoherent(const GaussianState& s,
                                      const std::vector<double>& nbars);

/// True iff d vanishes and V is diagonal with equal quadrature variances per
/// mode, all within tol -- i.e. the state is a product of thermal states.
bool is_incoherent(const GaussianState& s, double tol);

}  // namespace gqc
