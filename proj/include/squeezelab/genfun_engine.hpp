#pragma once

#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "squeezelab/types.hpp"

namespace squeezelab {

using cplx = std::complex<double>;

/// Polynomial in one formal variable truncated at a fixed order:
/// coeffs[j] multiplies beta^j, j = 0..order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<cplx> coeffs);

  static TruncatedSeries constant(int order, cplx value);
  /// The series beta itself (zero when order == 0).
  static TruncatedSeries variable(int order);

  int order() const { return order_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  cplx& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(cplx scale);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, cplx s) { return a *= s; }
  friend TruncatedSeries operator*(cplx s, TruncatedSeries a) { return a *= s; }
  /// Cauchy product, truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  int order_;
  std::vector<cplx> coeffs_;
};

/// exp(poly) to the series order, via k f_k = sum_j j p_j f_{k-j}.
TruncatedSeries exp_series(const TruncatedSeries& poly);

/// Polynomial in two formal variables (alpha*, beta): coeff(i, j) multiplies
/// alpha*^i beta^j.
class BiSeries {
 public:
  BiSeries(int order_a, int order_b);

  static BiSeries constant(int order_a, int order_b, cplx value);
  static BiSeries var_a(int order_a, int order_b);
  static BiSeries var_b(int order_a, int order_b);

  int order_a() const { return order_a_; }
  int order_b() const { return order_b_; }
  cplx coeff(int i, int j) const { return coeffs_[index(i, j)]; }
  cplx& coeff(int i, int j) { return coeffs_[index(i, j)]; }

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator*=(cplx scale);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator*(BiSeries a, cplx s) { return a *= s; }
  friend BiSeries operator*(cplx s, BiSeries a) { return a *= s; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

 private:
  std::size_t index(int i, int j) const;
  void check_shape(const BiSeries& other) const;

  int order_a_;
  int order_b_;
  std::vector<cplx> coeffs_;
};

BiSeries exp_series(const BiSeries& poly);

// Representations a squeezed number state can be projected on.
struct FockRep {
  int n = 0;
};
struct PositionRep {
  double q = 0.0;
};
struct MomentumRep {
  double p = 0.0;
};
struct CoherentRep {
  cplx alpha = 0.0;
};
using AmplitudeRep = std::variant<FockRep, PositionRep, MomentumRep, CoherentRep>;

/// Generating function e^{|beta|^2/2} <rep | beta, r> in cancelled (entire)
/// form, expanded in beta to the given order.
TruncatedSeries generating_series(const AmplitudeRep& rep, double r, int order);

/// <rep | m, r> = sqrt(m!) * [beta^m] e^{|beta|^2/2} <rep | beta, r>.
cplx extract_amplitude(const AmplitudeRep& rep, const SqueezedNumberState& state);

/// Builds e^{|alpha|^2/2} e^{|beta|^2/2} <alpha, r| R |beta, r> as a BiSeries
/// for the requested orders. Receives (r, order_a, order_b).
using OperatorKernel = std::function<BiSeries(double, int, int)>;

/// <n, r| R |m, r> = sqrt(n! m!) * [alpha*^n beta^m] of the kernel.
cplx extract_element(int n, int m, double r, const OperatorKernel& kernel);

/// R = 1: exp(alpha* beta).
BiSeries identity_kernel(double r, int order_a, int order_b);
/// R = b^dagger b with b = S a S^dagger: alpha* beta exp(alpha* beta).
BiSeries number_b_kernel(double r, int order_a, int order_b);
/// R = a^dagger a, through S^dagger a S = cosh(r) a - sinh(r) a^dagger.
BiSeries number_a_kernel(double r, int order_a, int order_b);

}  // namespace squeezelab
