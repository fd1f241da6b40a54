#pragma once

#include <complex>
#include <cstdint>

namespace squeezelab {

/// Real number stored as a sign and the natural log of its magnitude.
///
/// Factorials and powers of cosh(r) in the squeezed-state sums overflow a
/// double near n = 170; products and sums of these values stay finite here
/// for log magnitudes up to roughly 1e300.
class SignedLogNumber {
 public:
  constexpr SignedLogNumber() = default;

  /// Build from sign (-1, 0, +1) and log magnitude. A zero sign ignores log_mag.
  static SignedLogNumber from_parts(int sign, double log_mag);
  static SignedLogNumber from_double(double x);
  static constexpr SignedLogNumber zero() { return SignedLogNumber{}; }
  static SignedLogNumber one() { return from_parts(1, 0.0); }

  int sign() const { return sign_; }
  /// Natural log of |value|; -inf for zero.
  double log_mag() const;
  bool is_zero() const { return sign_ == 0; }

  double to_double() const;

  SignedLogNumber operator-() const;
  SignedLogNumber& operator+=(const SignedLogNumber& other);
  SignedLogNumber& operator-=(const SignedLogNumber& other);
  SignedLogNumber& operator*=(const SignedLogNumber& other);
  SignedLogNumber& operator/=(const SignedLogNumber& other);

  friend SignedLogNumber operator+(SignedLogNumber a, const SignedLogNumber& b) { return a += b; }
  friend SignedLogNumber operator-(SignedLogNumber a, const SignedLogNumber& b) { return a -= b; }
  friend SignedLogNumber operator*(SignedLogNumber a, const SignedLogNumber& b) { return a *= b; }
  friend SignedLogNumber operator/(SignedLogNumber a, const SignedLogNumber& b) { return a /= b; }

 private:
  std::int8_t sign_ = 0;
  double log_mag_ = 0.0;
};

/// ln(n!). Exact zero for n <= 1.
double log_factorial(long long n);

/// Physicists' Hermite polynomial H_n(x) evaluated by the three-term
/// recurrence, rescaled so that no intermediate overflows.
SignedLogNumber hermite(int n, double x);

/// H_n(z) for complex z by the plain three-term recurrence (no rescaling).
std::complex<double> hermite(int n, std::complex<double> z);

/// Relative residual of the Hermite reduction identity
///   H_m(x)/m! = sum_k 2^{k/2} / (k! ((m-k)/2)!) H_k(x/sqrt 2),  k = m mod 2, m mod 2 + 2, ...
/// normalised by max(|lhs|, sum of |rhs terms|). Requires m <= 30.
double hermite_reduction_check(int m, double x);

}  // namespace squeezelab
