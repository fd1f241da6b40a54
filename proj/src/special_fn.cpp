#include "squeezelab/special_fn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace squeezelab {

SignedLogNumber SignedLogNumber::from_parts(int sign, double log_mag) {
  SignedLogNumber v;
  if (sign == 0 || log_mag == -std::numeric_limits<double>::infinity()) return v;
  v.sign_ = static_cast<std::int8_t>(sign > 0 ? 1 : -1);
  v.log_mag_ = log_mag;
  return v;
}

SignedLogNumber SignedLogNumber::from_double(double x) {
  if (x == 0.0) return {};
  return from_parts(x > 0 ? 1 : -1, std::log(std::abs(x)));
}

double SignedLogNumber::log_mag() const {
  return sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_mag_;
}

double SignedLogNumber::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

SignedLogNumber SignedLogNumber::operator-() const {
  SignedLogNumber v = *this;
  v.sign_ = static_cast<std::int8_t>(-v.sign_);
  return v;
}

SignedLogNumber& SignedLogNumber::operator+=(const SignedLogNumber& other) {
  if (other.sign_ == 0) return *this;
  if (sign_ == 0) return *this = other;
  // Factor out the larger magnitude.
  const bool self_larger = log_mag_ >= other.log_mag_;
  const double hi = self_larger ? log_mag_ : other.log_mag_;
  const double lo = self_larger ? other.log_mag_ : log_mag_;
  const int hi_sign = self_larger ? sign_ : other.sign_;
  const double ratio = std::exp(lo - hi);
  if (sign_ == other.sign_) {
    log_mag_ = hi + std::log1p(ratio);
    sign_ = static_cast<std::int8_t>(hi_sign);
    return *this;
  }
  if (ratio == 1.0) return *this = SignedLogNumber{};
  log_mag_ = hi + std::log1p(-ratio);
  sign_ = static_cast<std::int8_t>(hi_sign);
  return *this;
}

SignedLogNumber& SignedLogNumber::operator-=(const SignedLogNumber& other) { return *this += -other; }

SignedLogNumber& SignedLogNumber::operator*=(const SignedLogNumber& other) {
  if (sign_ == 0 || other.sign_ == 0) return *this = SignedLogNumber{};
  sign_ = static_cast<std::int8_t>(sign_ * other.sign_);
  log_mag_ += other.log_mag_;
  return *this;
}

SignedLogNumber& SignedLogNumber::operator/=(const SignedLogNumber& other) {
  if (other.sign_ == 0) throw std::domain_error("SignedLogNumber: division by zero");
  if (sign_ == 0) return *this;
  sign_ = static_cast<std::int8_t>(sign_ * other.sign_);
  log_mag_ -= other.log_mag_;
  return *this;
}

double log_factorial(long long n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n <= 1) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0);
}

SignedLogNumber hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: negative order");
  if (n == 0) return SignedLogNumber::one();
  // h_prev, h_cur carry H_{k-1}, H_k divided by exp(log_scale).
  double h_prev = 1.0;
  double h_cur = 2.0 * x;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double h_next = 2.0 * x * h_cur - 2.0 * k * h_prev;
    h_prev = h_cur;
    h_cur = h_next;
    const double mag = std::max(std::abs(h_cur), std::abs(h_prev));
    if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
      const double shift = std::log(mag);
      h_prev /= mag;
      h_cur /= mag;
      log_scale += shift;
    }
  }
  if (h_cur == 0.0) return SignedLogNumber::zero();
  return SignedLogNumber::from_parts(h_cur > 0 ? 1 : -1, std::log(std::abs(h_cur)) + log_scale);
}

std::complex<double> hermite(int n, std::complex<double> z) {
  if (n < 0) throw std::invalid_argument("hermite: negative order");
  if (n == 0) return 1.0;
  std::complex<double> h_prev = 1.0;
  std::complex<double> h_cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> h_next = 2.0 * z * h_cur - 2.0 * static_cast<double>(k) * h_prev;
    h_prev = h_cur;
    h_cur = h_next;
  }
  return h_cur;
}

double hermite_reduction_check(int m, double x) {
  if (m < 0 || m > 30) throw std::invalid_argument("hermite_reduction_check: need 0 <= m <= 30");
  const SignedLogNumber lhs = hermite(m, x) / SignedLogNumber::from_parts(1, log_factorial(m));

  SignedLogNumber rhs;
  SignedLogNumber abs_sum;
  const double x_half = x / std::sqrt(2.0);
  for (int k = m % 2; k <= m; k += 2) {
    const double log_coeff = 0.5 * k * std::log(2.0) - log_factorial(k) - log_factorial((m - k) / 2);
    const SignedLogNumber term = SignedLogNumber::from_parts(1, log_coeff) * hermite(k, x_half);
    rhs += term;
    if (!term.is_zero()) abs_sum += SignedLogNumber::from_parts(1, term.log_mag());
  }

  const SignedLogNumber diff = lhs - rhs;
  if (diff.is_zero()) return 0.0;
  const double log_den = std::max(lhs.log_mag(), abs_sum.log_mag());
  return std::exp(diff.log_mag() - log_den);
}

}  // namespace squeezelab
