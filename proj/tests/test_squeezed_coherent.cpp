#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "squeezelab/squeezed_coherent.hpp"

using cplx = std::complex<double>;

namespace {

// S(r)|beta> on a truncated basis using Eigen's own matrix exponential.
Eigen::VectorXcd squeezed_coherent_vector(cplx beta, double r, int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd gen = 0.5 * r * (a * a - a.transpose() * a.transpose());
  const Eigen::MatrixXd s = gen.exp();
  Eigen::VectorXcd coherent(dim);
  cplx c = std::exp(-0.5 * std::norm(beta));
  for (int k = 0; k < dim; ++k) {
    coherent(k) = c;
    c *= beta / std::sqrt(static_cast<double>(k + 1));
  }
  return s.cast<cplx>() * coherent;
}

}  // namespace

TEST_CASE("fock amplitudes of |beta, r> match a truncated matrix exponential") {
  for (double r : {0.2, 0.5}) {
    for (cplx beta : {cplx(0.7, 0.0), cplx(-0.4, 0.9), cplx(1.2, -0.3)}) {
      const Eigen::VectorXcd ref = squeezed_coherent_vector(beta, r, 160);
      for (int n = 0; n <= 25; ++n) {
        const cplx got = squeezelab::fock_amplitude_scs(n, beta, r);
        CHECK(std::abs(got - ref(n)) < 1e-10);
      }
    }
  }
}

TEST_CASE("r = 0 reduces to the coherent state") {
  const cplx beta(0.9, 0.4);
  cplx c = std::exp(-0.5 * std::norm(beta));
  for (int n = 0; n < 20; ++n) {
    CHECK(std::abs(squeezelab::fock_amplitude_scs(n, beta, 0.0) - c) < 1e-14);
    c *= beta / std::sqrt(static_cast<double>(n + 1));
  }
  CHECK(std::abs(squeezelab::overlap_coherent(beta, beta, 0.0) - 1.0) < 1e-14);
}

TEST_CASE("coherent overlap sums the fock expansion") {
  const double r = 0.4;
  const cplx beta(0.5, 0.2);
  for (cplx alpha : {cplx(0.0, 0.0), cplx(1.0, -0.5), cplx(-0.3, 1.1)}) {
    cplx sum = 0.0;
    cplx ca = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < 120; ++n) {
      sum += std::conj(ca) * squeezelab::fock_amplitude_scs(n, beta, r);
      ca *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    CHECK(std::abs(squeezelab::overlap_coherent(alpha, beta, r) - sum) < 1e-12);
  }
}

TEST_CASE("position wave function: normalisation, centre and variance") {
  const double r = 0.8;
  const double beta = 1.3;
  auto density = [&](double q) { return std::norm(squeezelab::position_wf_scs(q, beta, r)); };
  CHECK(oracle::integrate(density, -15.0, 15.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double mean = oracle::integrate([&](double q) { return q * density(q); }, -15.0, 15.0);
  CHECK(mean == doctest::Approx(squeezelab::position_center(beta, r)).epsilon(1e-10));
  const double var = oracle::integrate([&](double q) { return (q - mean) * (q - mean) * density(q); }, -15.0, 15.0);
  CHECK(var == doctest::Approx(squeezelab::position_variance(r)).epsilon(1e-10));
  CHECK(squeezelab::position_variance(r) * squeezelab::momentum_variance(r) == doctest::Approx(0.25));
}

TEST_CASE("momentum wave function: normalisation and variance") {
  const double r = 0.6;
  const double beta = -0.7;
  auto density = [&](double p) { return std::norm(squeezelab::momentum_wf_scs(p, beta, r)); };
  CHECK(oracle::integrate(density, -30.0, 30.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double var = oracle::integrate([&](double p) { return p * p * density(p); }, -30.0, 30.0);
  CHECK(var == doctest::Approx(squeezelab::momentum_variance(r)).epsilon(1e-10));
}

TEST_CASE("position wave function projects onto the fock amplitudes") {
  const double r = 0.5;
  const double beta = 0.8;
  for (int n = 0; n <= 8; ++n) {
    const double proj = oracle::integrate(
        [&](double q) { return oracle::fock_wf(n, q) * squeezelab::position_wf_scs(q, beta, r).real(); }, -15.0, 15.0);
    CHECK(proj == doctest::Approx(squeezelab::fock_amplitude_scs(n, beta, r).real()).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("complex beta is rejected by the quadrature wave functions") {
  CHECK_THROWS_AS(squeezelab::position_wf_scs(0.0, cplx(0.1, 0.2), 0.3), std::invalid_argument);
  CHECK_THROWS_AS(squeezelab::momentum_wf_scs(0.0, cplx(0.1, 0.2), 0.3), std::invalid_argument);
}
