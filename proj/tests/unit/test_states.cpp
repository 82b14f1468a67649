#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gqc/gaussian.hpp"
#include "gqc/random.hpp"
#include "gqc/states.hpp"

using namespace gqc;

TEST_CASE("thermal states") {
  const GaussianState vac = make_thermal(0.0);
  CHECK((vac.V - Matrix::Identity(2, 2)).norm() == 0.0);
  CHECK(vac.d.norm() == 0.0);

  CHECK((make_thermal(1.0).V - 3.0 * Matrix::Identity(2, 2)).norm() == 0.0);
  CHECK((make_thermal(0.5).V - 2.0 * Matrix::Identity(2, 2)).norm() == 0.0);
  CHECK(symplectic_eigenvalues(make_thermal(0.7)).values[0] ==
        doctest::Approx(2.0 * 0.7 + 1.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_thermal(-0.1), std::domain_error);
}

TEST_CASE("coherent states") {
  const GaussianState zero = make_coherent(0.0);
  CHECK((zero.V - Matrix::Identity(2, 2)).norm() == 0.0);
  CHECK(zero.d.norm() == 0.0);

  const GaussianState one = make_coherent(1.0);
  CHECK(one.d(0) == 2.0);
  CHECK(one.d(1) == 0.0);

  const GaussianState im = make_coherent({0.0, 1.0});
  CHECK(im.d(0) == 0.0);
  CHECK(im.d(1) == 2.0);
}

TEST_CASE("squeezed states") {
  const GaussianState vac = make_squeezed(0.0);
  CHECK((vac.V - Matrix::Identity(2, 2)).norm() <= 1e-15);

  const GaussianState sq = make_squeezed(1.0, 0.0);
  CHECK(sq.V(0, 0) == doctest::Approx(std::exp(2.0)).epsilon(1e-15));
  CHECK(sq.V(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(std::abs(sq.V(0, 1)) <= 1e-16);

  const GaussianState rotated = make_squeezed(1.0, std::numbers::pi / 2);
  CHECK(rotated.V(0, 0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(rotated.V(1, 1) == doctest::Approx(std::exp(2.0)).epsilon(1e-12));

  CHECK(std::abs(sq.V.determinant() - 1.0) <= 1e-14);
}

TEST_CASE("two-mode squeezed vacuum") {
  const GaussianState uncorrelated = make_two_mode_squeezed(0.0);
  CHECK((uncorrelated.V - Matrix::Identity(4, 4)).norm() == 0.0);

  const double r = 1.0;
  const GaussianState tms = make_two_mode_squeezed(r);
  CHECK(tms.V(0, 0) == doctest::Approx(std::cosh(2.0 * r)).epsilon(1e-15));
  CHECK(tms.V(0, 2) == doctest::Approx(std::sinh(2.0 * r)).epsilon(1e-15));
  CHECK(tms.V(1, 3) == doctest::Approx(-std::sinh(2.0 * r)).epsilon(1e-15));
  CHECK(tms.V(0, 3) == 0.0);

  SUBCASE("purity") {
    for (double nu : symplectic_eigenvalues(tms).values) {
      CHECK(std::abs(nu - 1.0) <= 1e-12);
    }
    for (double nu : symplectic_eigenvalues(make_squeezed(0.9, 1.1)).values) {
      CHECK(std::abs(nu - 1.0) <= 1e-12);
    }
  }

  SUBCASE("reduction to one mode is thermal with nbar = sinh^2 r") {
    const GaussianState half = reduce(tms, {1});
    const double nbar = std::sinh(r) * std::sinh(r);
    CHECK((half.V - (2.0 * nbar + 1.0) * Matrix::Identity(2, 2)).norm() <= 1e-14);
  }
}

TEST_CASE("every constructor output validates cleanly") {
  CHECK(validate_state(make_vacuum(3)).ok);
  CHECK(validate_state(make_thermal(4.2)).ok);
  CHECK(validate_state(make_coherent({1.5, -2.0})).ok);
  CHECK(validate_state(make_squeezed(-0.9, 2.0)).ok);
  CHECK(validate_state(make_two_mode_squeezed(1.3)).ok);
  CHECK(validate_state(make_displaced_squeezed_thermal(0.8, 0.5, 1.0, {1.0, 1.0})).ok);

  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(validate_state(random_one_mode_state(rng)).ok);
  }
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(validate_state(random_state(3, rng)).ok);
  }
}

TEST_CASE("displaced squeezed thermal covariance") {
  const double nbar = 0.4;
  const double r = 0.3;
  const double theta = 0.7;
  const GaussianState s = make_displaced_squeezed_thermal(nbar, r, theta, {0.5, -0.25});
  const Eigen::Matrix2d rot = rotation2(theta);
  Eigen::Matrix2d core = Eigen::Matrix2d::Zero();
  core(0, 0) = std::exp(2.0 * r);
  core(1, 1) = std::exp(-2.0 * r);
  const Eigen::Matrix2d expected = (2.0 * nbar + 1.0) * rot * core * rot.transpose();
  CHECK((s.V - expected).norm() <= 1e-15);
  CHECK(s.d(0) == 1.0);
  CHECK(s.d(1) == -0.5);
}

TEST_CASE("random symplectics preserve the symplectic form") {
  Rng rng(22);
  for (int m : {1, 2, 3}) {
    const Matrix omega = symplectic_form(m);
    const Matrix passive = random_passive_symplectic(m, rng);
    CHECK((passive * omega * passive.transpose() - omega).norm() <= 1e-12);
    CHECK((passive * passive.transpose() - Matrix::Identity(2 * m, 2 * m)).norm() <=
          1e-12);
    const Matrix general = random_symplectic(m, rng);
    CHECK((general * omega * general.transpose() - omega).norm() <= 1e-12);
  }
}
