#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gqc/coherence.hpp"
#include "gqc/fock.hpp"
#include "gqc/random.hpp"
#include "gqc/states.hpp"

using namespace gqc;

namespace {

using Complex = std::complex<double>;

// Independent realization of the derivative of exp(xi) at zero: sum over all
// partitions of the index multiset into singletons and pairs, of products of
// the first and second derivatives of xi. Exponential cost, so only usable
// for low orders; that is the point of keeping it as a cross-check.
Complex partition_sum(const std::vector<int>& indices,
                      const QuadraticFormCoefficients& c) {
  if (indices.empty()) {
    return 1.0;
  }
  const Complex first[2] = {0.5 * c.b1(0), 0.5 * c.b1(1)};
  std::vector<int> rest(indices.begin() + 1, indices.end());
  Complex total = first[indices[0]] * partition_sum(rest, c);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<int> remaining = rest;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
    total += c.b2(indices[0], rest[i]) * partition_sum(remaining, c);
  }
  return total;
}

Complex element_by_enumeration(const Eigen::Matrix2d& V, const Eigen::Vector2d& d,
                               int m, int n) {
  const QuadraticFormCoefficients c = quadratic_coeffs(V, d);
  std::vector<int> indices;
  indices.insert(indices.end(), m, 0);
  indices.insert(indices.end(), n, 1);
  double log_fact = 0.0;
  for (int k = 2; k <= m; ++k) {
    log_fact += std::log(static_cast<double>(k));
  }
  for (int k = 2; k <= n; ++k) {
    log_fact += std::log(static_cast<double>(k));
  }
  return (8.0 / std::sqrt(c.det_a)) * std::exp(0.5 * c.b0) *
         partition_sum(indices, c) * std::exp(-0.5 * log_fact);
}

}  // namespace

TEST_CASE("form-matrix determinant identity") {
  CHECK(integral_form_matrix(Eigen::Matrix2d::Identity()).second ==
        doctest::Approx(64.0).epsilon(1e-12));
  CHECK(integral_form_matrix(3.0 * Eigen::Matrix2d::Identity()).second ==
        doctest::Approx(256.0).epsilon(1e-12));

  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const GaussianState s = random_one_mode_state(rng);
    const Eigen::Matrix2d v = s.V.topLeftCorner<2, 2>();
    const auto [form, det] = integral_form_matrix(v);
    const double closed =
        16.0 * (v.determinant() + v(0, 0) + v(1, 1) + 1.0);
    CHECK(std::abs(det - closed) <= 1e-9 * closed);
    CHECK(std::abs(form.determinant() - Complex(closed)) <= 1e-9 * closed);
    CHECK(det > 0.0);
  }
}

TEST_CASE("quadratic coefficients of reference states") {
  SUBCASE("vacuum: everything vanishes") {
    const auto c = quadratic_coeffs(Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero());
    CHECK(c.b2.norm() <= 1e-15);
    CHECK(c.b1.norm() <= 1e-15);
    CHECK(std::abs(c.b0) <= 1e-15);
    CHECK(c.det_a == doctest::Approx(64.0));
  }

  SUBCASE("thermal: only the cross term survives") {
    const auto c =
        quadratic_coeffs(3.0 * Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero());
    CHECK(c.b2(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(c.b2(0, 0)) <= 1e-15);
    CHECK(std::abs(c.b2(1, 1)) <= 1e-15);
    CHECK(c.b1.norm() <= 1e-15);
  }

  SUBCASE("displaced vacuum") {
    Eigen::Vector2d d;
    d << 2.0, 0.0;
    const auto c = quadratic_coeffs(Eigen::Matrix2d::Identity(), d);
    CHECK(c.b0.real() == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(std::abs(c.b0.imag()) <= 1e-15);
    // both components equal 2 alpha for a real displacement
    CHECK(c.b1(0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(c.b1(1).real() == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("fock elements of thermal states are geometric") {
  const double nbar = 1.0;
  const Eigen::Matrix2d v = 3.0 * Eigen::Matrix2d::Identity();
  const Eigen::Vector2d d = Eigen::Vector2d::Zero();
  CHECK(fock_element(v, d, 0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(fock_element(v, d, 1, 1).real() == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(fock_element(v, d, 2, 2).real() ==
        doctest::Approx(nbar * nbar / 8.0).epsilon(1e-13));
  CHECK(std::abs(fock_element(v, d, 0, 1)) <= 1e-15);
  CHECK(std::abs(fock_element(v, d, 3, 1)) <= 1e-15);
}

TEST_CASE("fock elements of coherent states match the closed form") {
  const Complex alpha{0.7, 0.4};
  const GaussianState s = make_coherent(alpha);
  const Eigen::Matrix2d v = s.V.topLeftCorner<2, 2>();
  const Eigen::Vector2d d = s.d.head<2>();
  const double weight = std::exp(-std::norm(alpha));
  double fact_m = 1.0;
  for (int m = 0; m <= 6; ++m) {
    if (m > 0) {
      fact_m *= m;
    }
    double fact_n = 1.0;
    for (int n = 0; n <= 6; ++n) {
      if (n > 0) {
        fact_n *= n;
      }
      const Complex expected = weight * std::pow(alpha, m) *
                               std::pow(std::conj(alpha), n) /
                               std::sqrt(fact_m * fact_n);
      CHECK(std::abs(fock_element(v, d, m, n) - expected) <= 1e-13);
    }
  }

  SUBCASE("first off-diagonal element of a small coherent state") {
    const GaussianState half = make_coherent(0.5);
    const Complex rho01 =
        fock_element(half.V.topLeftCorner<2, 2>(), half.d.head<2>(), 0, 1);
    CHECK(std::abs(rho01 - Complex(std::exp(-0.25) * 0.5)) <= 1e-14);
  }
}

TEST_CASE("fock element of the vacuum") {
  const Eigen::Matrix2d v = Eigen::Matrix2d::Identity();
  const Eigen::Vector2d d = Eigen::Vector2d::Zero();
  CHECK(fock_element(v, d, 0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(fock_element(v, d, 3, 3)) <= 1e-15);
  CHECK_THROWS_AS(fock_element(v, d, 0, 201), std::out_of_range);
  CHECK_THROWS_AS(fock_element(v, d, -1, 0), std::out_of_range);
}

TEST_CASE("recurrence agrees with literal partition enumeration") {
  Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const GaussianState s = random_one_mode_state(rng);
    const Eigen::Matrix2d v = s.V.topLeftCorner<2, 2>();
    const Eigen::Vector2d d = s.d.head<2>();
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; m + n <= 6 && n <= 3; ++n) {
        const Complex fast = fock_element(v, d, m, n);
        const Complex slow = element_by_enumeration(v, d, m, n);
        CHECK(std::abs(fast - slow) <= 1e-12 * std::max(1.0, std::abs(slow)));
      }
    }
  }
}

TEST_CASE("fock_matrix truncation quality on reference states") {
  CHECK(fock_matrix(make_thermal(1.0), 40).trace_deficit <= 1e-10);
  CHECK(fock_matrix(make_coherent(1.0), 30).trace_deficit <= 1e-12);
  CHECK(fock_matrix(make_squeezed(1.0), 60).trace_deficit <= 1e-6);

  SUBCASE("warning flag for undersized cutoffs") {
    const FockMatrix fm = fock_matrix(make_squeezed(3.0), 20);
    CHECK(fm.cutoff_warning);
    CHECK(fm.trace_deficit > 0.01);
  }

  SUBCASE("argument guards") {
    CHECK_THROWS_AS(fock_matrix(make_vacuum(2), 10), std::invalid_argument);
    CHECK_THROWS_AS(fock_matrix(make_vacuum(), 0), std::out_of_range);
    CHECK_THROWS_AS(fock_matrix(make_vacuum(), 201), std::out_of_range);
  }
}

TEST_CASE("truncated matrices are Hermitian with parity zeros and near-positive") {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    GaussianState s = random_one_mode_state(rng);
    if (trial % 2 == 0) {
      s.d.setZero();
    }
    const FockMatrix fm = fock_matrix(s, 45);
    CHECK((fm.elements - fm.elements.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);

    if (trial % 2 == 0) {
      double odd_mass = 0.0;
      for (int m = 0; m <= fm.cutoff; ++m) {
        for (int n = 0; n <= fm.cutoff; ++n) {
          if ((m + n) % 2 == 1) {
            odd_mass = std::max(odd_mass, std::abs(fm.elements(m, n)));
          }
        }
      }
      CHECK(odd_mass <= 1e-12);
    }

    if (fm.trace_deficit <= 1e-6) {
      const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
                                 fm.elements, Eigen::EigenvaluesOnly)
                                 .eigenvalues()
                                 .minCoeff();
      CHECK(min_eig >= -1e-8);
    }
  }
}

TEST_CASE("oracle mean photon numbers") {
  CHECK(oracle_mean_photon(fock_matrix(make_vacuum(), 10)) <= 1e-15);
  CHECK(std::abs(oracle_mean_photon(fock_matrix(make_thermal(1.0), 60)) - 1.0) <= 1e-8);
  CHECK(std::abs(oracle_mean_photon(fock_matrix(make_coherent(1.0), 40)) - 1.0) <=
        1e-10);

  SUBCASE("agreement with the closed form on bounded-energy states") {
    Rng rng(54);
    for (int trial = 0; trial < 25; ++trial) {
      const GaussianState s = random_one_mode_state_capped(rng, 2.0);
      const FockMatrix fm = fock_matrix(s, 60);
      const double closed = mean_photon_numbers(s)[0];
      // the truncated tail carries weight trace_deficit at index > cutoff
      const double bound = std::max(1e-8, 3.0 * (fm.cutoff + 10) * fm.trace_deficit);
      CHECK(std::abs(oracle_mean_photon(fm) - closed) <= bound);
    }
  }

  SUBCASE("precondition on the trace deficit") {
    const FockMatrix fm = fock_matrix(make_squeezed(3.0), 20);
    CHECK_THROWS_AS(oracle_mean_photon(fm), std::invalid_argument);
  }
}

TEST_CASE("oracle coherence agrees with the closed form") {
  CHECK(std::abs(oracle_coherence(fock_matrix(make_thermal(1.0), 60))) <= 1e-6);
  CHECK(std::abs(oracle_coherence(fock_matrix(make_coherent(1.0), 40)) - 2.0) <= 1e-4);
  // closed form at s = sinh^2(0.8), high-precision value
  CHECK(std::abs(oracle_coherence(fock_matrix(make_squeezed(0.8), 60)) -
                 1.7706904335685879969) <= 1e-4);

  SUBCASE("precondition on the trace deficit") {
    CHECK_THROWS_AS(oracle_coherence(fock_matrix(make_squeezed(2.0), 30)),
                    std::invalid_argument);
  }
}

TEST_CASE("diagonality residual separates thermal from coherent and squeezed") {
  CHECK(diagonality_residual(fock_matrix(make_thermal(0.5), 20)) <= 1e-12);
  CHECK(diagonality_residual(fock_matrix(make_coherent(0.5), 20)) >=
        std::exp(-0.25) * 0.5 - 1e-12);
  CHECK(diagonality_residual(fock_matrix(make_squeezed(0.3), 20)) > 1e-3);
}

TEST_CASE("diagonality conditions match the state-space characterization") {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    GaussianState s = random_one_mode_state(rng);
    if (trial % 2 == 0) {
      s = make_thermal(rng.uniform(0.0, 2.0));  // exactly incoherent
    }
    const auto c = quadratic_coeffs(s.V.topLeftCorner<2, 2>(), s.d.head<2>());
    const bool coeffs_flat = std::abs(c.b1(0)) <= 1e-10 && std::abs(c.b1(1)) <= 1e-10 &&
                             std::abs(c.b2(0, 0)) <= 1e-10 &&
                             std::abs(c.b2(1, 1)) <= 1e-10;
    const bool state_flat = is_incoherent(s, 1e-8);
    CHECK(coeffs_flat == state_flat);
  }
}

TEST_CASE("default cutoff tracks the state's energy") {
  CHECK(default_cutoff(make_vacuum()) == 20);
  CHECK(default_cutoff(make_thermal(2.0)) == 30);
  CHECK(default_cutoff(make_thermal(100.0)) == 200);
}
