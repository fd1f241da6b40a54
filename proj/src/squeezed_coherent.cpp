#include "squeezelab/squeezed_coherent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "squeezelab/special_fn.hpp"

namespace squeezelab {

namespace {

constexpr double kZeroSqueeze = 1e-12;

void check_r(double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("squeeze parameter must be finite");
}

double real_beta(std::complex<double> beta) {
  if (beta.imag() != 0.0)
    throw std::invalid_argument("quadrature wave functions are defined for real beta only");
  if (!std::isfinite(beta.real())) throw std::invalid_argument("beta must be finite");
  return beta.real();
}

}  // namespace

std::complex<double> overlap_coherent(std::complex<double> alpha, std::complex<double> beta, double r) {
  check_r(r);
  const double c = std::cosh(r);
  const double t = std::tanh(r);
  const std::complex<double> ac = std::conj(alpha);
  const std::complex<double> exponent = -0.5 * std::norm(alpha) - 0.5 * std::norm(beta) - 0.5 * t * ac * ac +
                                        0.5 * t * beta * beta + ac * beta / c;
  return std::exp(exponent) / std::sqrt(c);
}

std::complex<double> fock_amplitude_scs(int n, std::complex<double> beta, double r) {
  check_r(r);
  if (n < 0) throw std::invalid_argument("photon number must be nonnegative");
  if (std::abs(r) < kZeroSqueeze) {
    if (beta == 0.0) return n == 0 ? 1.0 : 0.0;
    const double log_mag = -0.5 * std::norm(beta) + n * std::log(std::abs(beta)) - 0.5 * log_factorial(n);
    return std::polar(std::exp(log_mag), n * std::arg(beta));
  }
  const double c = std::cosh(r);
  const double t = std::tanh(r);
  // g_k = tanh^{k/2} H_k(beta / sqrt(2 sinh cosh)) / sqrt(2^k k!)
  std::complex<double> g_prev = 0.0;
  std::complex<double> g_cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const std::complex<double> g_next =
        beta / c * g_cur / std::sqrt(kd + 1.0) - t * std::sqrt(kd / (kd + 1.0)) * g_prev;
    g_prev = g_cur;
    g_cur = g_next;
  }
  return g_cur / std::sqrt(c) * std::exp(-0.5 * std::norm(beta) + 0.5 * t * beta * beta);
}

double position_center(double beta, double r) { return std::numbers::sqrt2 * std::exp(-r) * beta; }
double position_variance(double r) { return 0.5 * std::exp(-2.0 * r); }
double momentum_variance(double r) { return 0.5 * std::exp(2.0 * r); }

std::complex<double> position_wf_scs(double q, std::complex<double> beta, double r) {
  check_r(r);
  const double b = real_beta(beta);
  const double var = position_variance(r);
  const double d = q - position_center(b, r);
  return std::pow(2.0 * std::numbers::pi * var, -0.25) * std::exp(-d * d / (4.0 * var));
}

std::complex<double> momentum_wf_scs(double p, std::complex<double> beta, double r) {
  check_r(r);
  const double b = real_beta(beta);
  const double var = position_variance(r);
  const double q0 = position_center(b, r);
  const double mag = std::pow(2.0 * var / std::numbers::pi, 0.25) * std::exp(-p * p * var);
  return std::polar(mag, -p * q0);
}

}  // namespace squeezelab
