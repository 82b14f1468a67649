#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gqc/gaussian.hpp"

namespace gqc {

/// An m-mode Gaussian channel (T, N, dbar): it maps a state (V, d) to
/// (T V T^t + N, T d + dbar). Physical iff N is symmetric and
/// N + i Omega - i T Omega T^t >= 0.
struct GaussianChannel {
  int modes = 0;
  Matrix T;
  Matrix N;
  Vector dbar;
};

/// Builds a channel from (T, N, dbar), deducing the mode count. Throws
/// std::invalid_argument on inconsistent shapes.
GaussianChannel make_channel(Matrix T, Matrix N, Vector dbar);

GaussianChannel identity_channel(int modes = 1);

/// One-mode pure loss with transmissivity eta in [0, 1]:
/// T = sqrt(eta) I, N = (1 - eta) I.
GaussianChannel make_loss(double eta);

/// One-mode phase-insensitive amplifier with gain >= 1:
/// T = sqrt(gain) I, N = (gain - 1) I.
GaussianChannel make_amplifier(double gain);

/// One-mode phase rotation: T = R(theta), N = 0.
GaussianChannel make_rotation(double theta);

ValidationReport validate_channel(const GaussianChannel& ch, double tol = kDefaultTol);

GaussianState apply(const GaussianChannel& ch, const GaussianState& s);

/// Channel composition: apply(compose(outer, inner), s) acts as
/// apply(outer, apply(inner, s)).
GaussianChannel compose(const GaussianChannel& outer, const GaussianChannel& inner);

/// Per-mode factor of an incoherent channel: the nonzero 2x2 block of T in
/// block-row i is t * O with O orthogonal, and the mode's noise block is w I.
struct IncoherentModeFactor {
  double t = 0.0;
  Eigen::Matrix2d orthogonal = Eigen::Matrix2d::Identity();
  double det_o = 1.0;  // +1 or -1
  double theta = 0.0;  // orthogonal = R(theta) * (reflect ? diag(1,-1) : I)
  bool reflect = false;
  double w = 0.0;
};

struct IncoherentDecomposition {
  /// Block (i, permutation[i]) of T carries factors[i].t * factors[i].orthogonal;
  /// output mode i reads input mode permutation[i].
  std::vector<int> permutation;
  std::vector<IncoherentModeFactor> factors;
};

struct IncoherentClassification {
  std::optional<IncoherentDecomposition> decomposition;
  std::string rejection;  // first failed condition; empty iff accepted

  bool incoherent() const { return decomposition.has_value(); }
};

/// Decides whether a channel maps thermal products to thermal products.
/// Accepts iff dbar = 0, T is a block permutation of scaled orthogonals
/// t_i O_i, N = diag(w_1 I, ..., w_m I), and w_i >= |t_i^2 det O_i - 1|.
/// Rejection is a value carrying the first failed condition, not an error.
IncoherentClassification classify_incoherent(const GaussianChannel& ch,
                                             double tol = kDefaultTol);

struct IncoherentModeSpec {
  double t = 1.0;
  double theta = 0.0;
  bool reflect = false;
  double w = 0.0;
};

/// Assembles an incoherent channel from per-mode parameters and an optional
/// mode permutation (identity when empty). Throws std::domain_error when a
/// noise parameter w falls below the bound |t^2 det O - 1| (bound 1 at t = 0).
GaussianChannel make_incoherent_channel(const std::vector<IncoherentModeSpec>& modes,
                                        const std::vector<int>& permutation = {});

/// Rebuilds (T, N, 0) from a decomposition.
GaussianChannel reassemble(const IncoherentDecomposition& dec);

}  // namespace gqc
