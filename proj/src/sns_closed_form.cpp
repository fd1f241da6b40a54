#include "squeezelab/sns_closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "squeezelab/errors.hpp"
#include "squeezelab/special_fn.hpp"

namespace squeezelab {

namespace {

const double kLogPi = std::log(std::numbers::pi);
const double kLog2 = std::numbers::ln2;

}  // namespace

double fock_amplitude(int n, const SqueezedNumberState& state) {
  validate(state);
  if (n < 0) throw std::invalid_argument("photon number must be nonnegative");
  const int m = state.m;
  if ((n + m) % 2 != 0) return 0.0;
  if (state.r == 0.0) return n == m ? 1.0 : 0.0;

  const double ch = std::cosh(state.r);
  const double sh = std::sinh(state.r);
  const double log_half_sh = std::log(std::abs(sh) / 2.0);
  const int sh_sign = sh < 0.0 ? -1 : 1;

  SignedLogNumber positive;
  SignedLogNumber negative;
  for (int k = m % 2; k <= std::min(m, n); k += 2) {
    const int power = (n + m - 2 * k) / 2;
    int sign = ((n - k) / 2) % 2 == 0 ? 1 : -1;
    if (power % 2 != 0) sign *= sh_sign;
    const double log_term =
        power * log_half_sh - log_factorial(k) - log_factorial((m - k) / 2) - log_factorial((n - k) / 2);
    const SignedLogNumber term = SignedLogNumber::from_parts(1, log_term);
    if (sign > 0) {
      positive += term;
    } else {
      negative += term;
    }
  }
  const double log_prefactor = 0.5 * (log_factorial(m) + log_factorial(n)) - 0.5 * (n + m + 1) * std::log(ch);
  return ((positive - negative) * SignedLogNumber::from_parts(1, log_prefactor)).to_double();
}

DistributionTable photon_distribution(const SqueezedNumberState& state, double tail_eps, long cap) {
  validate(state);
  if (!(tail_eps > 0.0 && tail_eps < 1.0)) throw std::invalid_argument("tail_eps must lie in (0, 1)");
  const int parity = state.m % 2;
  const auto window = static_cast<std::size_t>(std::ceil(10.0 * std::exp(2.0 * std::abs(state.r))));

  DistributionTable table;
  table.meta.state = state;
  table.meta.representation = Representation::photon;
  table.meta.parity_gapped = true;

  std::vector<double> same_parity;
  double cumulative = 0.0;
  for (long n = 0;; ++n) {
    if (n > cap) throw NonConvergenceError("photon distribution did not converge within " + std::to_string(cap) + " terms");
    double prob = 0.0;
    if (n % 2 == parity) {
      const double a = fock_amplitude(static_cast<int>(n), state);
      prob = a * a;
    }
    table.coords.push_back(static_cast<double>(n));
    table.probs.push_back(prob);
    if (n % 2 != parity) continue;

    cumulative += prob;
    same_parity.push_back(prob);
    if (cumulative < 1.0 - tail_eps) continue;
    const std::size_t len = std::min(window, same_parity.size());
    const auto first = same_parity.end() - static_cast<std::ptrdiff_t>(len);
    if (std::is_sorted(first, same_parity.end(), std::greater<>())) break;
  }
  table.meta.truncation = table.coords.size() - 1;
  table.meta.captured_mass = cumulative;
  return table;
}

double position_wf(double q, const SqueezedNumberState& state) {
  validate(state);
  const int m = state.m;
  const double x = std::exp(state.r) * q;
  const SignedLogNumber h = hermite(m, x);
  if (h.is_zero()) return 0.0;
  const double log_mag =
      -0.25 * kLogPi + 0.5 * state.r - 0.5 * x * x - 0.5 * m * kLog2 - 0.5 * log_factorial(m) + h.log_mag();
  return h.sign() * std::exp(log_mag);
}

std::complex<double> momentum_wf(double p, const SqueezedNumberState& state) {
  validate(state);
  const int m = state.m;
  const double x = std::exp(-state.r) * p;
  const SignedLogNumber h = hermite(m, x);
  if (h.is_zero()) return 0.0;
  const double log_mag =
      -0.25 * kLogPi - 0.5 * state.r - 0.5 * x * x - 0.5 * m * kLog2 - 0.5 * log_factorial(m) + h.log_mag();
  const double value = h.sign() * std::exp(log_mag);
  // (-i)^m
  switch (m % 4) {
    case 0: return {value, 0.0};
    case 1: return {0.0, -value};
    case 2: return {-value, 0.0};
    default: return {0.0, value};
  }
}

std::complex<double> coherent_amplitude(std::complex<double> alpha, const SqueezedNumberState& state) {
  validate(state);
  const int m = state.m;
  const double ch = std::cosh(state.r);
  const double sh = std::sinh(state.r);
  const double t = std::tanh(state.r);
  const std::complex<double> ac = std::conj(alpha);
  const std::complex<double> exponent = -0.5 * std::norm(alpha) - 0.5 * t * ac * ac;
  const double log_base = 0.5 * log_factorial(m) - 0.5 * std::log(ch) + exponent.real();
  const double log_abs_ac = std::log(std::abs(ac));
  const double arg_ac = std::arg(ac);

  std::complex<double> sum = 0.0;
  for (int p = 0; 2 * p <= m; ++p) {
    const int j = m - 2 * p;
    if (sh == 0.0 && p > 0) break;
    if (ac == 0.0 && j > 0) continue;
    double log_term = log_base - p * kLog2 + (p - m) * std::log(ch) - log_factorial(j) - log_factorial(p);
    if (p > 0) log_term += p * std::log(std::abs(sh));
    if (j > 0) log_term += j * log_abs_ac;
    const double sign = (sh < 0.0 && p % 2 == 1) ? -1.0 : 1.0;
    sum += sign * std::polar(std::exp(log_term), j * arg_ac + exponent.imag());
  }
  return sum;
}

double q_function(std::complex<double> alpha, const SqueezedNumberState& state) {
  return std::norm(coherent_amplitude(alpha, state)) / std::numbers::pi;
}

std::vector<double> q_grid(const SqueezedNumberState& state, const GridSpec& grid, unsigned threads) {
  validate(state);
  grid.validate();
  std::vector<double> out(grid.size());
  const std::size_t total = out.size();
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const int i = static_cast<int>(idx % static_cast<std::size_t>(grid.n_re));
      const int j = static_cast<int>(idx / static_cast<std::size_t>(grid.n_re));
      out[idx] = q_function({grid.re_at(i), grid.im_at(j)}, state);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 256)));
  if (threads <= 1) {
    fill(0, total);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(fill, begin, end);
    }
  }
  return out;
}

}  // namespace squeezelab
