#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "squeezelab/special_fn.hpp"

using squeezelab::SignedLogNumber;

TEST_CASE("SignedLogNumber round trips ordinary doubles") {
  for (double x : {0.0, 1.0, -1.0, 3.25, -7.5e-12, 6.02e23}) {
    CHECK(SignedLogNumber::from_double(x).to_double() == doctest::Approx(x).epsilon(1e-14));
  }
  CHECK(SignedLogNumber::zero().is_zero());
  CHECK(std::isinf(SignedLogNumber::zero().log_mag()));
  CHECK(SignedLogNumber::from_double(-2.0).sign() == -1);
}

TEST_CASE("SignedLogNumber arithmetic matches doubles") {
  std::mt19937 rng(20261019);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const auto la = SignedLogNumber::from_double(a);
    const auto lb = SignedLogNumber::from_double(b);
    CHECK((la + lb).to_double() == doctest::Approx(a + b).epsilon(1e-12).scale(100.0));
    CHECK((la - lb).to_double() == doctest::Approx(a - b).epsilon(1e-12).scale(100.0));
    CHECK((la * lb).to_double() == doctest::Approx(a * b).epsilon(1e-13));
    CHECK((la / lb).to_double() == doctest::Approx(a / b).epsilon(1e-13));
  }
}

TEST_CASE("SignedLogNumber cancels exactly and survives overflow ranges") {
  const auto big = SignedLogNumber::from_parts(1, 2000.0);
  CHECK((big - big).is_zero());
  const auto product = big * big;
  CHECK(product.log_mag() == doctest::Approx(4000.0));
  CHECK(std::isinf(product.to_double()));
  CHECK((product / big / big).to_double() == doctest::Approx(1.0));
  const auto tiny = SignedLogNumber::from_parts(1, -2000.0);
  CHECK((big + tiny).log_mag() == doctest::Approx(2000.0));
}

TEST_CASE("SignedLogNumber addition is associative and commutative to rounding") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> logs(-300.0, 300.0);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 300; ++i) {
    SignedLogNumber x[3];
    for (auto& v : x) v = SignedLogNumber::from_parts(coin(rng) ? 1 : -1, logs(rng));
    const auto left = (x[0] + x[1]) + x[2];
    const auto right = x[0] + (x[1] + x[2]);
    const auto swapped = x[2] + x[0] + x[1];
    const double scale = std::max({x[0].log_mag(), x[1].log_mag(), x[2].log_mag()});
    // Compared relative to the largest magnitude.
    const auto norm = SignedLogNumber::from_parts(1, scale);
    CHECK((left / norm).to_double() == doctest::Approx((right / norm).to_double()).epsilon(1e-12).scale(1.0));
    CHECK((left / norm).to_double() == doctest::Approx((swapped / norm).to_double()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("log_factorial") {
  CHECK(squeezelab::log_factorial(0) == 0.0);
  CHECK(squeezelab::log_factorial(1) == 0.0);
  CHECK(squeezelab::log_factorial(10) == doctest::Approx(std::log(3628800.0)));
  CHECK(squeezelab::log_factorial(1000) == doctest::Approx(5912.128178939938));
}

TEST_CASE("hermite agrees with the explicit polynomial") {
  for (int n = 0; n <= 20; ++n) {
    for (double x : {-3.1, -1.0, -0.2, 0.0, 0.5, 1.7, 4.0}) {
      const long double ref = oracle::hermite_explicit(n, x);
      const double got = squeezelab::hermite(n, x).to_double();
      CHECK(got == doctest::Approx(static_cast<double>(ref)).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("hermite stays finite where doubles overflow") {
  // H_n(0) = (-1)^{n/2} n! / (n/2)! for even n.
  for (int n : {200, 400, 1000}) {
    const auto h = squeezelab::hermite(n, 0.0);
    const double expected = squeezelab::log_factorial(n) - squeezelab::log_factorial(n / 2);
    CHECK(h.log_mag() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(h.sign() == ((n / 2) % 2 == 0 ? 1 : -1));
  }
  CHECK(squeezelab::hermite(1001, 0.0).is_zero());
  for (double x : {-25.0, 3.3, 25.0}) {
    const auto big = squeezelab::hermite(300, x);
    const long double ref = oracle::hermite_long(300, x);
    CHECK(big.sign() == (ref < 0 ? -1 : 1));
    CHECK(big.log_mag() == doctest::Approx(static_cast<double>(std::log(std::fabs(ref)))).epsilon(1e-12));
  }
}

TEST_CASE("complex hermite matches the real branch on the real axis") {
  for (int n = 0; n <= 15; ++n) {
    const auto c = squeezelab::hermite(n, std::complex<double>(0.8, 0.0));
    CHECK(c.real() == doctest::Approx(squeezelab::hermite(n, 0.8).to_double()).epsilon(1e-13));
    CHECK(c.imag() == 0.0);
  }
  // H_n(i y) is real for even n and imaginary for odd n.
  const auto h4 = squeezelab::hermite(4, std::complex<double>(0.0, 1.3));
  const auto h5 = squeezelab::hermite(5, std::complex<double>(0.0, 1.3));
  CHECK(std::abs(h4.imag()) < 1e-12);
  CHECK(std::abs(h5.real()) < 1e-12);
}

TEST_CASE("hermite reduction identity") {
  for (int m = 0; m <= 20; ++m) {
    for (double x : {-2.5, -0.7, 0.0, 0.3, 1.9, 3.7}) CHECK(squeezelab::hermite_reduction_check(m, x) < 1e-10);
  }
  CHECK_THROWS(squeezelab::hermite_reduction_check(31, 0.5));
}
