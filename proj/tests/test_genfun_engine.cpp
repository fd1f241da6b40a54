#include <doctest.h>

#include <cmath>
#include <random>

#include "squeezelab/genfun_engine.hpp"
#include "squeezelab/sns_closed_form.hpp"

using squeezelab::BiSeries;
using squeezelab::cplx;
using squeezelab::TruncatedSeries;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  TruncatedSeries s(order);
  for (int j = 1; j <= order; ++j) s[j] = cplx(u(rng), u(rng)) / static_cast<double>(j);
  return s;
}

}  // namespace

TEST_CASE("exp of the variable gives the exponential series") {
  const auto e = squeezelab::exp_series(TruncatedSeries::variable(15));
  double fact = 1.0;
  for (int k = 0; k <= 15; ++k) {
    CHECK(std::abs(e[k] - 1.0 / fact) < 1e-15);
    fact *= k + 1;
  }
}

TEST_CASE("exp(A) exp(B) = exp(A + B) for truncated series") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 18);
    const auto b = random_series(rng, 18);
    const auto lhs = squeezelab::exp_series(a) * squeezelab::exp_series(b);
    const auto rhs = squeezelab::exp_series(a + b);
    for (int k = 0; k <= 18; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-13);
  }
}

TEST_CASE("exp of a constant scales by e^c") {
  TruncatedSeries s = TruncatedSeries::variable(6);
  s[0] = cplx(0.3, -0.2);
  const auto e = squeezelab::exp_series(s);
  const auto plain = squeezelab::exp_series(TruncatedSeries::variable(6));
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(e[k] - std::exp(cplx(0.3, -0.2)) * plain[k]) < 1e-14);
}

TEST_CASE("series arithmetic is linear") {
  std::mt19937 rng(5);
  const auto a = random_series(rng, 10);
  const auto b = random_series(rng, 10);
  const auto c = random_series(rng, 10);
  const cplx s(1.5, -0.5);
  const auto left = (a + b) * c;
  const auto right = a * c + b * c;
  const auto scaled = (s * a) * b;
  const auto scaled2 = s * (a * b);
  for (int k = 0; k <= 10; ++k) {
    CHECK(std::abs(left[k] - right[k]) < 1e-15);
    CHECK(std::abs(scaled[k] - scaled2[k]) < 1e-15);
    CHECK(std::abs((a - a)[k]) == 0.0);
  }
  CHECK_THROWS(a + TruncatedSeries(4));
}

TEST_CASE("bivariate exp(alpha* beta) has diagonal coefficients 1/k!") {
  const auto e = squeezelab::exp_series(BiSeries::var_a(8, 8) * BiSeries::var_b(8, 8));
  double fact = 1.0;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) CHECK(std::abs(e.coeff(i, j) - (i == j ? 1.0 / fact : 0.0)) < 1e-15);
    fact *= i + 1;
  }
}

TEST_CASE("extracted amplitudes match the closed forms") {
  for (double r : {0.3, 0.973, 1.4}) {
    for (int m = 0; m <= 12; ++m) {
      const squeezelab::SqueezedNumberState s{m, r};
      for (int n = 0; n <= 12; ++n) {
        const cplx got = squeezelab::extract_amplitude(squeezelab::FockRep{n}, s);
        CHECK(std::abs(got - squeezelab::fock_amplitude(n, s)) < 1e-10);
      }
      for (double x : {-1.7, 0.0, 0.4}) {
        CHECK(std::abs(squeezelab::extract_amplitude(squeezelab::PositionRep{x}, s) - squeezelab::position_wf(x, s)) <
              1e-10);
        CHECK(std::abs(squeezelab::extract_amplitude(squeezelab::MomentumRep{x}, s) - squeezelab::momentum_wf(x, s)) <
              1e-10);
      }
      const cplx alpha(0.6, -1.1);
      CHECK(std::abs(squeezelab::extract_amplitude(squeezelab::CoherentRep{alpha}, s) -
                     squeezelab::coherent_amplitude(alpha, s)) < 1e-10);
    }
  }
}

TEST_CASE("operator kernels") {
  const double r = 0.7;
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const cplx id = squeezelab::extract_element(n, m, r, squeezelab::identity_kernel);
      const cplx nb = squeezelab::extract_element(n, m, r, squeezelab::number_b_kernel);
      CHECK(std::abs(id - (n == m ? 1.0 : 0.0)) < 1e-12);
      CHECK(std::abs(nb - (n == m ? static_cast<double>(m) : 0.0)) < 1e-12);
    }
    // <m,r| a^dagger a |m,r> = m cosh 2r + sinh^2 r.
    const cplx na = squeezelab::extract_element(m, m, r, squeezelab::number_a_kernel);
    CHECK(std::abs(na - (m * (ch * ch + sh * sh) + sh * sh)) < 1e-11);
    // Off-diagonal entries couple m to m +- 2 only.
    CHECK(std::abs(squeezelab::extract_element(m + 1, m, r, squeezelab::number_a_kernel)) < 1e-12);
    CHECK(std::abs(squeezelab::extract_element(m + 2, m, r, squeezelab::number_a_kernel) +
                   ch * sh * std::sqrt((m + 1.0) * (m + 2.0))) < 1e-11);
  }
}
