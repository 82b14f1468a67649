#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gqc/gaussian.hpp"
#include "gqc/random.hpp"
#include "gqc/states.hpp"

using namespace gqc;

namespace {

const Violation* find_violation(const ValidationReport& report, const char* check) {
  for (const Violation& v : report.violations) {
    if (v.check == check) {
      return &v;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("symplectic form is antisymmetric and squares to minus identity") {
  for (int m : {1, 2, 4}) {
    const Matrix omega = symplectic_form(m);
    CHECK((omega + omega.transpose()).norm() == 0.0);
    CHECK((omega * omega + Matrix::Identity(2 * m, 2 * m)).norm() == 0.0);
  }
  CHECK_THROWS_AS(symplectic_form(0), std::invalid_argument);
}

TEST_CASE("validate_state accepts physical covariances") {
  CHECK(validate_state(Matrix::Identity(2, 2), Vector::Zero(2), 1).ok);
  CHECK(validate_state(3.0 * Matrix::Identity(2, 2), Vector::Zero(2), 1).ok);

  SUBCASE("sub-vacuum variance fails the PSD check") {
    const auto report = validate_state(0.5 * Matrix::Identity(2, 2), Vector::Zero(2), 1);
    CHECK_FALSE(report.ok);
    const Violation* psd = find_violation(report, "V+iOmega PSD");
    REQUIRE(psd != nullptr);
    CHECK(psd->measured == doctest::Approx(-0.5).epsilon(1e-12));
  }

  SUBCASE("asymmetric covariance is reported") {
    Matrix v(2, 2);
    v << 2.0, 0.3, 0.1, 2.0;
    const auto report = validate_state(v, Vector::Zero(2), 1);
    CHECK_FALSE(report.ok);
    CHECK(find_violation(report, "V symmetric") != nullptr);
  }

  SUBCASE("shape and data errors throw") {
    CHECK_THROWS_AS(validate_state(Matrix::Identity(3, 3), Vector::Zero(2), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_state(Matrix::Identity(2, 2), Vector::Zero(4), 1),
                    std::invalid_argument);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(validate_state(bad, Vector::Zero(2), 1), std::invalid_argument);
  }
}

TEST_CASE("symplectic eigenvalues of standard states") {
  CHECK(symplectic_eigenvalues(make_thermal(1.0)).values[0] ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(symplectic_eigenvalues(make_squeezed(1.0)).values[0] ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto tms = symplectic_eigenvalues(make_two_mode_squeezed(1.0));
  REQUIRE(tms.values.size() == 2);
  CHECK(tms.values[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(tms.values[1] == doctest::Approx(1.0).epsilon(1e-10));

  SUBCASE("unphysical states are refused") {
    const GaussianState bad{1, 0.5 * Matrix::Identity(2, 2), Vector::Zero(2)};
    CHECK_THROWS_AS(symplectic_eigenvalues(bad), std::runtime_error);
  }
}

TEST_CASE("spectrum squares to the determinant and is symplectically invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 3;
    const GaussianState s = random_state(m, rng);
    const auto spectrum = symplectic_eigenvalues(s).values;

    double prod = 1.0;
    for (double nu : spectrum) {
      prod *= nu * nu;
    }
    const double det = s.V.determinant();
    CHECK(std::abs(prod - det) <= 1e-9 * std::abs(det));

    const Matrix sym = random_symplectic(m, rng);
    GaussianState rotated{m, sym * s.V * sym.transpose(), sym * s.d};
    const auto rotated_spectrum = symplectic_eigenvalues(rotated).values;
    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(spectrum[i] - rotated_spectrum[i]) <= 1e-8 * spectrum[i]);
    }
  }
}

TEST_CASE("g function values") {
  CHECK(g_function(1.0) == 0.0);
  CHECK(g_function(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  // High-precision evaluation of 1.5 log2 1.5 - 0.5 log2 0.5.
  CHECK(g_function(2.0) == doctest::Approx(1.3774437510817342722).epsilon(1e-15));
  CHECK_THROWS_AS(g_function(0.999), std::domain_error);
}

TEST_CASE("entropy of standard states") {
  CHECK(entropy(make_vacuum()) == 0.0);
  CHECK(entropy(make_thermal(1.0)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(entropy(tensor(make_thermal(1.0), make_thermal(1.0))) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("entropy is nonnegative, zero on pure states, additive on products") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianState a = random_one_mode_state(rng);
    const GaussianState b = random_state(2, rng);
    CHECK(entropy(a) >= 0.0);
    CHECK(std::abs(entropy(tensor(a, b)) - entropy(a) - entropy(b)) <= 1e-10);

    bool pure = true;
    for (double nu : symplectic_eigenvalues(b).values) {
      if (nu > 1.0 + 1e-9) {
        pure = false;
      }
    }
    CHECK((entropy(b) == 0.0) == pure);
  }
  CHECK(entropy(make_squeezed(0.8, 0.3)) == 0.0);
}

TEST_CASE("tensor stacks covariances and displacements") {
  const GaussianState two_vacua = tensor(make_vacuum(), make_vacuum());
  CHECK(two_vacua.modes == 2);
  CHECK((two_vacua.V - Matrix::Identity(4, 4)).norm() == 0.0);
  CHECK(two_vacua.d.norm() == 0.0);

  const GaussianState thermals = tensor(make_thermal(1.0), make_thermal(2.0));
  Vector expected_diag(4);
  expected_diag << 3.0, 3.0, 5.0, 5.0;
  CHECK((thermals.V.diagonal() - expected_diag).norm() == 0.0);
  CHECK((thermals.V - Matrix(expected_diag.asDiagonal())).norm() == 0.0);

  const GaussianState displaced = tensor(make_coherent(1.0), make_vacuum());
  Vector expected_d(4);
  expected_d << 2.0, 0.0, 0.0, 0.0;
  CHECK((displaced.d - expected_d).norm() == 0.0);
  CHECK((displaced.V - Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("reduce extracts mode blocks") {
  const GaussianState thermals = tensor(make_thermal(1.0), make_thermal(2.0));
  const GaussianState second = reduce(thermals, {1});
  CHECK(second.modes == 1);
  CHECK((second.V - make_thermal(2.0).V).norm() == 0.0);

  const GaussianState tms_half = reduce(make_two_mode_squeezed(1.0), {0});
  CHECK((tms_half.V - std::cosh(2.0) * Matrix::Identity(2, 2)).norm() == 0.0);
  // equals a thermal state with nbar = sinh^2(1)
  const double nbar = std::sinh(1.0) * std::sinh(1.0);
  CHECK(tms_half.V(0, 0) == doctest::Approx(2.0 * nbar + 1.0).epsilon(1e-15));

  const GaussianState one = make_coherent({0.3, -0.2});
  const GaussianState same = reduce(one, {0});
  CHECK((same.V - one.V).norm() == 0.0);
  CHECK((same.d - one.d).norm() == 0.0);

  SUBCASE("index validation") {
    CHECK_THROWS_AS(reduce(thermals, {}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(thermals, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(thermals, {2}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(thermals, {-1}), std::invalid_argument);
  }
}

TEST_CASE("reduce of a tensor factor is bit-exact") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianState a = random_state(2, rng);
    const GaussianState b = random_one_mode_state(rng);
    const GaussianState joint = tensor(a, b);
    const GaussianState back = reduce(joint, {0, 1});
    CHECK(back.V == a.V);
    CHECK(back.d == a.d);
    const GaussianState back_b = reduce(joint, {2});
    CHECK(back_b.V == b.V);
    CHECK(back_b.d == b.d);
  }
}

TEST_CASE("make_state deduces and checks shapes") {
  const GaussianState s = make_state(Matrix::Identity(4, 4), Vector::Zero(4));
  CHECK(s.modes == 2);
  CHECK_THROWS_AS(make_state(Matrix::Identity(3, 3), Vector::Zero(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_state(Matrix::Identity(2, 2), Vector::Zero(4)),
                  std::invalid_argument);
}
