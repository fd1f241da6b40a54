#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "squeezelab/errors.hpp"
#include "squeezelab/fock_oracle.hpp"

TEST_CASE("expm matches Eigen's matrix exponential") {
  std::mt19937 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = 4 + 7 * trial;
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = g(rng) * (0.5 + trial);
    const Eigen::MatrixXd ref = a.exp();
    const Eigen::MatrixXd got = squeezelab::expm(a);
    CHECK((got - ref).norm() / ref.norm() < 1e-11);
  }
  CHECK((squeezelab::expm(Eigen::MatrixXd::Zero(5, 5)) - Eigen::MatrixXd::Identity(5, 5)).norm() == 0.0);
}

TEST_CASE("expm of commuting blocks") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << -2.0, 0.5, 3.0;
  const Eigen::MatrixXd e = squeezelab::expm(d);
  CHECK(e(0, 0) == doctest::Approx(std::exp(-2.0)));
  CHECK(e(1, 1) == doctest::Approx(std::exp(0.5)));
  CHECK(e(2, 2) == doctest::Approx(std::exp(3.0)));
  CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("annihilation operator") {
  const auto a = squeezelab::annihilation(5);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(3, 4) == doctest::Approx(2.0));
  CHECK(a(1, 0) == 0.0);
  const Eigen::MatrixXd number = a.transpose() * a;
  for (int n = 0; n < 5; ++n) CHECK(number(n, n) == doctest::Approx(n));
}

TEST_CASE("squeeze matrix is orthogonal and matches overlap integrals in the trusted block") {
  const auto s = squeezelab::build_squeeze(0.8, 200);
  const Eigen::MatrixXd& mat = s.matrix();
  CHECK((mat.transpose() * mat - Eigen::MatrixXd::Identity(200, 200)).norm() < 1e-10);
  REQUIRE(s.trusted_limit() >= 12);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 12; ++n)
      CHECK(s.amplitude(n, m) == doctest::Approx(oracle::squeeze_overlap(n, m, 0.8)).epsilon(1e-9).scale(1.0));
}

TEST_CASE("trusted block bookkeeping") {
  CHECK(squeezelab::trusted_limit(100, 0.0) == 99);
  CHECK(squeezelab::trusted_limit(200, 0.8) == static_cast<int>(std::floor(0.8 * 200 * std::exp(-1.6))) - 4);
  CHECK(squeezelab::interior_limit(200, 0.8) == squeezelab::trusted_limit(200, 0.8) / 2);
  CHECK(squeezelab::default_dim(0, 0.0) == 64);
  CHECK(squeezelab::default_dim(12, 1.4) == static_cast<int>(std::ceil(4.0 * 22 * std::exp(2.8))));

  const auto s = squeezelab::build_squeeze(1.0, 100);
  const int k = s.trusted_limit();
  CHECK(s.trusted(k, k));
  CHECK_FALSE(s.trusted(k + 1, 0));
  CHECK_THROWS_AS(s.amplitude(k + 1, 0), squeezelab::TrustRegionError);
  CHECK_THROWS_AS(squeezelab::build_squeeze(0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(squeezelab::build_squeeze(2.5, 20), squeezelab::TrustRegionError);
}

TEST_CASE("oracle amplitude convergence under basis growth") {
  for (int m : {0, 3, 8}) {
    for (int n : {0, 1, 6, 11}) {
      const double small = squeezelab::oracle_amplitude(n, m, 0.973);
      const double large = squeezelab::oracle_amplitude(n, m, 0.973, 2 * squeezelab::default_dim(std::max(n, m), 0.973));
      CHECK(small == doctest::Approx(large).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("bogoliubov and eigenrelation residuals") {
  CHECK(squeezelab::bogoliubov_residual(0.8, 200) < 1e-8);
  CHECK(squeezelab::bogoliubov_residual(0.0, 40) < 1e-14);
  CHECK(squeezelab::eigenrelation_residual(0.8, 300, 6) < 1e-8);
  CHECK_THROWS_AS(squeezelab::bogoliubov_residual(0.8, 4), std::invalid_argument);
}
