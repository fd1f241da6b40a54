#include "squeezelab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "squeezelab/errors.hpp"
#include "squeezelab/sns_closed_form.hpp"

namespace squeezelab {

namespace {

// Vertex of the parabola through (-1, a), (0, b), (1, c), as (offset, value).
std::pair<double, double> parabola_vertex(double a, double b, double c) {
  const double denom = a - 2.0 * b + c;
  if (denom >= 0.0) return {0.0, b};
  const double offset = 0.5 * (a - c) / denom;
  return {offset, b - 0.25 * (a - c) * offset};
}

template <class Fn>
DistributionTable sample_symmetric(const SqueezedNumberState& state, Representation rep, double half_width,
                                   double step, Fn&& density) {
  if (!(step > 0.0) || !(half_width > 0.0)) throw std::invalid_argument("sampling step and range must be positive");
  const long half = static_cast<long>(std::ceil(half_width / step));
  DistributionTable table;
  table.meta.state = state;
  table.meta.representation = rep;
  table.coords.reserve(static_cast<std::size_t>(2 * half + 1));
  table.probs.reserve(static_cast<std::size_t>(2 * half + 1));
  for (long i = -half; i <= half; ++i) {
    const double x = static_cast<double>(i) * step;
    table.coords.push_back(x);
    table.probs.push_back(density(x));
  }
  table.meta.truncation = table.coords.size();
  return table;
}

}  // namespace

MaximaReport find_maxima(const DistributionTable& table, const MaximaOptions& options) {
  if (table.size() < 3 || table.probs.size() != table.coords.size())
    throw std::invalid_argument("find_maxima needs a table with at least 3 entries");
  if (!(options.floor >= 0.0)) throw std::invalid_argument("maxima floor must be nonnegative");

  std::vector<std::size_t> idx;
  if (table.meta.parity_gapped) {
    const long parity = table.meta.state.m % 2;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (static_cast<long>(std::llround(table.coords[i])) % 2 == parity) idx.push_back(i);
    }
  } else {
    idx.resize(table.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  }

  std::vector<double> vals(idx.size());
  for (std::size_t s = 0; s < idx.size(); ++s) vals[s] = table.probs[idx[s]];
  const double global = vals.empty() ? 0.0 : *std::max_element(vals.begin(), vals.end());
  const double threshold = options.floor * global;

  MaximaReport report;
  if (global <= 0.0) return report;
  const bool lower_edge = table.meta.parity_gapped;
  for (std::size_t s = 0; s < vals.size(); ++s) {
    const double v = vals[s];
    const bool rises = s == 0 ? lower_edge : v > vals[s - 1];
    if (!rises || !(v > threshold)) continue;
    std::size_t e = s;
    while (e + 1 < vals.size() && vals[e + 1] == v) ++e;
    if (e + 1 >= vals.size() || !(vals[e + 1] < v)) continue;

    double pos = table.coords[idx[s]];
    double value = v;
    if (options.refine && e == s && s > 0) {
      const auto [offset, peak] = parabola_vertex(vals[s - 1], v, vals[s + 1]);
      const double spacing = 0.5 * (table.coords[idx[s + 1]] - table.coords[idx[s - 1]]);
      pos += offset * spacing;
      value = peak;
    }
    report.positions.push_back(pos);
    report.values.push_back(value);
  }
  report.count = static_cast<int>(report.positions.size());
  return report;
}

int maxima_count_law(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  return m % 2 == 0 ? m / 2 + 1 : (m + 1) / 2;
}

DistributionTable momentum_density_table(const SqueezedNumberState& state, double p_max, double step) {
  validate(state);
  const double scale = std::exp(state.r);
  if (step <= 0.0) step = 0.01 * scale;
  if (p_max <= 0.0) p_max = scale * (std::sqrt(2.0 * state.m + 1.0) + 6.0);
  return sample_symmetric(state, Representation::momentum, p_max, step,
                          [&](double p) { return std::norm(momentum_wf(p, state)); });
}

DistributionTable position_density_table(const SqueezedNumberState& state, double q_max, double step) {
  validate(state);
  const double scale = std::exp(-state.r);
  if (step <= 0.0) step = 0.01 * scale;
  if (q_max <= 0.0) q_max = scale * (std::sqrt(2.0 * state.m + 1.0) + 6.0);
  return sample_symmetric(state, Representation::position, q_max, step, [&](double q) {
    const double psi = position_wf(q, state);
    return psi * psi;
  });
}

DistributionTable q_slice_table(const SqueezedNumberState& state, double y_max, double step) {
  validate(state);
  if (y_max <= 0.0) y_max = std::exp(state.r) * (std::sqrt(2.0 * state.m + 1.0) + 3.0) + 3.0;
  return sample_symmetric(state, Representation::q_slice, y_max, step,
                          [&](double y) { return q_function({0.0, y}, state); });
}

std::vector<double> momentum_zeros(const SqueezedNumberState& state, double tol) {
  validate(state);
  // i^m <p|m,r> is real.
  std::complex<double> rot = 1.0;
  for (int k = 0; k < state.m % 4; ++k) rot *= std::complex<double>(0.0, 1.0);
  auto f = [&](double p) { return (rot * momentum_wf(p, state)).real(); };

  const double scale = std::exp(state.r);
  const double step = 0.01 * scale;
  const double p_max = scale * (std::sqrt(2.0 * state.m + 1.0) + 6.0);
  const long half = static_cast<long>(std::ceil(p_max / step));

  std::vector<double> zeros;
  double x_prev = -static_cast<double>(half) * step;
  double f_prev = f(x_prev);
  for (long i = -half + 1; i <= half; ++i) {
    const double x = static_cast<double>(i) * step;
    const double fx = f(x);
    if (fx == 0.0) {
      zeros.push_back(x);
    } else if (f_prev != 0.0 && (fx > 0.0) != (f_prev > 0.0)) {
      double lo = x_prev;
      double hi = x;
      double f_lo = f_prev;
      for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0.0) == (f_lo > 0.0)) {
          lo = mid;
          f_lo = fm;
        } else {
          hi = mid;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    x_prev = x;
    f_prev = fx;
  }
  return zeros;
}

TransitionResult transition_scan(int m, double r_lo, double r_hi, double step) {
  if (m < 2) throw std::invalid_argument("transition_scan needs m >= 2");
  if (!(r_lo < r_hi) || !(step > 0.0)) throw std::invalid_argument("transition_scan needs r_lo < r_hi and step > 0");

  TransitionResult result;
  const long n = static_cast<long>(std::floor((r_hi - r_lo) / step + 1e-9)) + 1;
  for (long i = 0; i < n; ++i) {
    const double r = r_lo + static_cast<double>(i) * step;
    const DistributionTable slice = q_slice_table({m, r});
    const int count = find_maxima(slice, {.floor = kProminenceFloor}).count;
    result.trace.emplace_back(r, count);
  }

  std::size_t first_stable = result.trace.size();
  for (std::size_t i = result.trace.size(); i-- > 0;) {
    if (result.trace[i].second != m + 1) break;
    first_stable = i;
  }

  auto describe = [&]() {
    std::ostringstream os;
    os << "trace:";
    for (const auto& [r, c] : result.trace) os << ' ' << r << ':' << c;
    return os.str();
  };
  if (first_stable == result.trace.size())
    throw NonConvergenceError("Q-slice maxima count never stabilises at m+1 in range; " + describe());
  if (first_stable == 0)
    throw NonConvergenceError("Q-slice maxima count already stable at r_lo; transition lies below range; " + describe());
  result.r_star = result.trace[first_stable].first;
  return result;
}

std::vector<QPhotonPair> qmax_to_nmax(const SqueezedNumberState& state) {
  validate(state);
  const DistributionTable photon = photon_distribution(state);
  const MaximaReport n_maxima = find_maxima(photon);
  const DistributionTable slice = q_slice_table(state, 0.0, 0.005);
  const MaximaReport q_maxima = find_maxima(slice, {.refine = true});

  std::vector<QPhotonPair> pairs;
  if (n_maxima.count == 0) return pairs;
  for (double y : q_maxima.positions) {
    if (y < 1.0) continue;
    QPhotonPair pair;
    pair.alpha_max_sq = y * y;
    double best = INFINITY;
    for (double n : n_maxima.positions) {
      const double d = std::abs(n - pair.alpha_max_sq);
      if (d < best) {
        best = d;
        pair.n_max = static_cast<int>(std::llround(n));
      }
    }
    pair.mismatch = best / (pair.n_max > 0 ? pair.n_max : pair.alpha_max_sq);
    pairs.push_back(pair);
  }
  return pairs;
}

std::vector<std::pair<double, int>> support_widening(int m, const std::vector<double>& r_values) {
  std::vector<std::pair<double, int>> rows;
  for (double r : r_values) {
    const MaximaReport report = find_maxima(photon_distribution({m, r}));
    const int last = report.count > 0 ? static_cast<int>(std::llround(report.positions.back())) : -1;
    rows.emplace_back(r, last);
  }
  return rows;
}

}  // namespace squeezelab
