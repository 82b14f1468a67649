#include "gqc/channels.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "gqc/states.hpp"

namespace gqc {

namespace {

void check_channel_shapes(const GaussianChannel& ch) {
  if (ch.modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  const Eigen::Index n = 2 * static_cast<Eigen::Index>(ch.modes);
  if (ch.T.rows() != n || ch.T.cols() != n || ch.N.rows() != n || ch.N.cols() != n ||
      ch.dbar.size() != n) {
    throw std::invalid_argument("channel matrices must be 2m x 2m with a length-2m "
                                "displacement");
  }
  if (!ch.T.allFinite() || !ch.N.allFinite() || !ch.dbar.allFinite()) {
    throw std::invalid_argument("channel data contains non-finite entries");
  }
}

std::string format_value(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

GaussianChannel make_channel(Matrix T, Matrix N, Vector dbar) {
  if (T.rows() != T.cols() || T.rows() % 2 != 0 || T.rows() == 0) {
    throw std::invalid_argument("T must be square with even size");
  }
  GaussianChannel ch{static_cast<int>(T.rows() / 2), std::move(T), std::move(N),
                     std::move(dbar)};
  check_channel_shapes(ch);
  return ch;
}

GaussianChannel identity_channel(int modes) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return GaussianChannel{modes, Matrix::Identity(2 * modes, 2 * modes),
                         Matrix::Zero(2 * modes, 2 * modes), Vector::Zero(2 * modes)};
}

GaussianChannel make_loss(double eta) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::domain_error("loss transmissivity must lie in [0, 1], got " +
                            std::to_string(eta));
  }
  return GaussianChannel{1, std::sqrt(eta) * Matrix::Identity(2, 2),
                         (1.0 - eta) * Matrix::Identity(2, 2), Vector::Zero(2)};
}

GaussianChannel make_amplifier(double gain) {
  if (gain < 1.0) {
    throw std::domain_error("amplifier gain must be >= 1, got " +
                            std::to_string(gain));
  }
  return GaussianChannel{1, std::sqrt(gain) * Matrix::Identity(2, 2),
                         (gain - 1.0) * Matrix::Identity(2, 2), Vector::Zero(2)};
}

GaussianChannel make_rotation(double theta) {
  return GaussianChannel{1, rotation2(theta), Matrix::Zero(2, 2), Vector::Zero(2)};
}

ValidationReport validate_channel(const GaussianChannel& ch, double tol) {
  check_channel_shapes(ch);

  ValidationReport report;
  auto record = [&report](const std::string& check, double measured,
                          double threshold, bool ok) {
    if (!ok) {
      report.ok = false;
      report.violations.push_back({check, measured, threshold});
    }
  };

  const double n_norm = ch.N.norm();
  const double asym = (ch.N - ch.N.transpose()).norm();
  record("N symmetric", asym, tol * n_norm, asym <= tol * n_norm);

  const Matrix omega = symplectic_form(ch.modes);
  const Matrix n_sym = 0.5 * (ch.N + ch.N.transpose());
  Eigen::MatrixXcd herm =
      n_sym.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) *
          (omega - ch.T * omega * ch.T.transpose()).cast<std::complex<double>>();
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .minCoeff();
  record("N+iOmega-iTOmegaT^t PSD", min_eig, -tol, min_eig >= -tol);

  if (ch.modes == 1) {
    // One-mode closed forms, cross-checking the PSD test.
    const double n_min =
        Eigen::SelfAdjointEigenSolver<Matrix>(n_sym, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    record("N PSD", n_min, -tol, n_min >= -tol);
    const double slack =
        n_sym.determinant() - std::pow(ch.T.determinant() - 1.0, 2);
    record("det N >= (det T - 1)^2", slack, -tol, slack >= -tol);
  }

  return report;
}

GaussianState apply(const GaussianChannel& ch, const GaussianState& s) {
  check_channel_shapes(ch);
  if (ch.modes != s.modes) {
    throw std::invalid_argument("channel acts on " + std::to_string(ch.modes) +
                                " modes but state has " + std::to_string(s.modes));
  }
  Matrix v = ch.T * s.V * ch.T.transpose() + ch.N;
  v = 0.5 * (v + v.transpose()).eval();
  return GaussianState{s.modes, std::move(v), ch.T * s.d + ch.dbar};
}

GaussianChannel compose(const GaussianChannel& outer, const GaussianChannel& inner) {
  check_channel_shapes(outer);
  check_channel_shapes(inner);
  if (outer.modes != inner.modes) {
    throw std::invalid_argument("cannot compose channels on different mode counts");
  }
  Matrix noise = outer.T * inner.N * outer.T.transpose() + outer.N;
  noise = 0.5 * (noise + noise.transpose()).eval();
  return GaussianChannel{outer.modes, outer.T * inner.T, std::move(noise),
                         outer.T * inner.dbar + outer.dbar};
}

IncoherentClassification classify_incoherent(const GaussianChannel& ch, double tol) {
  check_channel_shapes(ch);
  const int m = ch.modes;

  auto reject = [](std::string why) {
    IncoherentClassification c;
    c.rejection = std::move(why);
    return c;
  };

  // (a) no displacement
  const double dbar_norm = ch.dbar.norm();
  if (dbar_norm > tol) {
    return reject("dbar != 0 (norm " + format_value(dbar_norm) + ")");
  }

  // (b) T is a block permutation of scaled orthogonals
  const double t_scale = ch.T.norm();
  std::vector<int> row_block(m, -1);
  std::vector<int> col_hits(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (ch.T.block<2, 2>(2 * i, 2 * j).norm() > tol * t_scale) {
        if (row_block[i] >= 0) {
          return reject("T block-row " + std::to_string(i) +
                        " has more than one nonzero 2x2 block");
        }
        row_block[i] = j;
        if (++col_hits[j] > 1) {
          return reject("T block-column " + std::to_string(j) +
                        " has more than one nonzero 2x2 block");
        }
      }
    }
  }

  IncoherentDecomposition dec;
  dec.permutation.assign(m, -1);
  dec.factors.assign(m, IncoherentModeFactor{});

  // Rows and columns with no nonzero block carry t = 0 factors; pair the
  // leftovers in ascending order to complete the permutation.
  std::vector<int> free_cols;
  for (int j = 0; j < m; ++j) {
    if (col_hits[j] == 0) {
      free_cols.push_back(j);
    }
  }
  std::size_t next_free = 0;
  for (int i = 0; i < m; ++i) {
    IncoherentModeFactor& factor = dec.factors[i];
    if (row_block[i] < 0) {
      dec.permutation[i] = free_cols[next_free++];
      continue;
    }
    dec.permutation[i] = row_block[i];
    const Eigen::Matrix2d block = ch.T.block<2, 2>(2 * i, 2 * row_block[i]);
    const Eigen::Matrix2d gram = block * block.transpose();
    const double t_sq = 0.5 * gram.trace();
    const double iso_err = (gram - t_sq * Eigen::Matrix2d::Identity()).norm();
    if (iso_err > tol * std::max(1.0, t_scale * t_scale)) {
      return reject("T block (" + std::to_string(i) + "," +
                    std::to_string(row_block[i]) +
                    ") is not scaled-orthogonal (B B^t deviates from t^2 I by " +
                    format_value(iso_err) + ")");
    }
    factor.t = std::sqrt(t_sq);
    factor.orthogonal = block / factor.t;
    factor.det_o = factor.orthogonal.determinant() >= 0.0 ? 1.0 : -1.0;
    factor.reflect = factor.det_o < 0.0;
    factor.theta = std::atan2(factor.orthogonal(1, 0), factor.orthogonal(0, 0));
  }

  // (c) N = diag(w_1 I, ..., w_m I)
  const double n_scale = ch.N.norm();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Eigen::Matrix2d block = ch.N.block<2, 2>(2 * i, 2 * j);
      if (i != j) {
        if (block.norm() > tol * n_scale) {
          return reject("N couples modes " + std::to_string(i) + " and " +
                        std::to_string(j));
        }
        continue;
      }
      const double w = 0.5 * block.trace();
      const double iso_err = (block - w * Eigen::Matrix2d::Identity()).norm();
      if (iso_err > tol * std::max(1.0, n_scale)) {
        return reject("N block of mode " + std::to_string(i) +
                      " is not isotropic (deviation " + format_value(iso_err) + ")");
      }
      dec.factors[i].w = w;
    }
  }

  // (d) noise bound per mode
  for (int i = 0; i < m; ++i) {
    const IncoherentModeFactor& factor = dec.factors[i];
    const double bound = std::abs(factor.t * factor.t * factor.det_o - 1.0);
    if (factor.w < bound - tol) {
      return reject("mode " + std::to_string(i) + " noise w = " +
                    format_value(factor.w) + " below the incoherence bound |t^2 det O - 1| = " +
                    format_value(bound));
    }
  }

  IncoherentClassification c;
  c.decomposition = std::move(dec);
  return c;
}

namespace {

GaussianChannel assemble(const std::vector<int>& permutation,
                         const std::vector<IncoherentModeFactor>& factors) {
  const int m = static_cast<int>(factors.size());
  Matrix t = Matrix::Zero(2 * m, 2 * m);
  Matrix n = Matrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    t.block<2, 2>(2 * i, 2 * permutation[i]) = factors[i].t * factors[i].orthogonal;
    n.block<2, 2>(2 * i, 2 * i) = factors[i].w * Eigen::Matrix2d::Identity();
  }
  return GaussianChannel{m, std::move(t), std::move(n), Vector::Zero(2 * m)};
}

void check_permutation(const std::vector<int>& perm, int m) {
  std::vector<bool> used(m, false);
  if (static_cast<int>(perm.size()) != m) {
    throw std::invalid_argument("permutation must list each mode exactly once");
  }
  for (int p : perm) {
    if (p < 0 || p >= m || used[p]) {
      throw std::invalid_argument("permutation must list each mode exactly once");
    }
    used[p] = true;
  }
}

}  // namespace

GaussianChannel make_incoherent_channel(const std::vector<IncoherentModeSpec>& modes,
                                        const std::vector<int>& permutation) {
  if (modes.empty()) {
    throw std::invalid_argument("at least one mode specification is required");
  }
  const int m = static_cast<int>(modes.size());
  std::vector<int> perm = permutation;
  if (perm.empty()) {
    perm.resize(m);
    for (int i = 0; i < m; ++i) {
      perm[i] = i;
    }
  }
  check_permutation(perm, m);

  std::vector<IncoherentModeFactor> factors(m);
  for (int i = 0; i < m; ++i) {
    const IncoherentModeSpec& spec = modes[i];
    if (spec.t < 0.0) {
      throw std::domain_error("scale t must be >= 0, got " + std::to_string(spec.t));
    }
    const double det_o = spec.reflect ? -1.0 : 1.0;
    const double bound = std::abs(spec.t * spec.t * det_o - 1.0);
    if (spec.w < bound - kDefaultTol) {
      throw std::domain_error("mode " + std::to_string(i) + ": noise w = " +
                              format_value(spec.w) +
                              " is below the incoherence bound " + format_value(bound));
    }
    IncoherentModeFactor& factor = factors[i];
    factor.t = spec.t;
    factor.theta = spec.theta;
    factor.reflect = spec.reflect;
    factor.det_o = det_o;
    factor.w = spec.w;
    factor.orthogonal = rotation2(spec.theta);
    if (spec.reflect) {
      factor.orthogonal.col(1) *= -1.0;
    }
  }
  return assemble(perm, factors);
}

GaussianChannel reassemble(const IncoherentDecomposition& dec) {
  if (dec.factors.empty() || dec.factors.size() != dec.permutation.size()) {
    throw std::invalid_argument("decomposition is empty or inconsistent");
  }
  check_permutation(dec.permutation, static_cast<int>(dec.factors.size()));
  return assemble(dec.permutation, dec.factors);
}

}  // namespace gqc
