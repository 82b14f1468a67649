#pragma once

#include <cstdint>
#include <random>

#include "gqc/channels.hpp"
#include "gqc/gaussian.hpp"

namespace gqc {

/// Seeded generator with platform-stable output: mt19937_64 plus explicit
/// uniform/normal transforms (std::uniform_real_distribution is
/// implementation-defined and would break reproducibility of seeds).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in {0, ..., n-1}.
  int uniform_int(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

  bool coin() { return (engine_() & 1ull) != 0; }

  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Displaced squeezed thermal state with nbar in [0,2], r in [-1,1],
/// theta in [0,2pi), displacement components in [-2,2].
GaussianState random_one_mode_state(Rng& rng);

/// As above, rejection-sampled until the total mean photon number is at most
/// the given cap.
GaussianState random_one_mode_state_capped(Rng& rng, double nbar_cap);

/// Tensor product of random one-mode states conjugated by a random passive
/// symplectic (mode-mixing) rotation.
GaussianState random_state(int modes, Rng& rng);

/// Orthogonal symplectic matrix drawn from the Haar measure on passive
/// transformations (image of a Haar-random m x m unitary).
Matrix random_passive_symplectic(int modes, Rng& rng);

/// General random symplectic: passive * per-mode squeezers * passive.
Matrix random_symplectic(int modes, Rng& rng);

/// Random product of thermal states with nbar_i in [0, 2].
GaussianState random_thermal_product(int modes, Rng& rng);

/// Random valid channel: Gaussian T, noise lifted until
/// N + i Omega - i T Omega T^t is positive semidefinite with margin.
GaussianChannel random_channel(int modes, Rng& rng);

/// Random incoherent channel: per-mode t in [0, 1.4], random rotation or
/// reflection, noise at the incoherence bound plus slack in [0, 0.8], and a
/// random mode permutation.
GaussianChannel random_incoherent_channel(int modes, Rng& rng);

}  // namespace gqc
