#include "squeezelab/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "squeezelab/analysis.hpp"
#include "squeezelab/sns_closed_form.hpp"

namespace squeezelab {

namespace {

void check(const OverlapParams& p) {
  if (p.m < 0) throw std::invalid_argument("m must be nonnegative");
  if (!std::isfinite(p.r) || !std::isfinite(p.y)) throw std::invalid_argument("r and y must be finite");
  if (!in_validity_region(p))
    throw std::domain_error("classically forbidden: y outside the area-of-overlap validity region (WKB invalid)");
}

}  // namespace

double overlap_margin(const OverlapParams& p) {
  const double s = p.y * std::exp(-p.r);
  return p.m + 0.5 - s * s;
}

bool in_validity_region(const OverlapParams& p) { return overlap_margin(p) > 0.0; }

double classical_boundary(int m, double r) { return std::sqrt(m + 0.5) * std::exp(r); }

double area_weight(const OverlapParams& p) {
  check(p);
  const double u = overlap_margin(p);
  return std::exp(-2.0 * u * std::exp(-2.0 * p.r)) / std::sqrt(2.0 * std::numbers::pi * u);
}

double interference_phase(const OverlapParams& p) {
  check(p);
  const double h = p.m + 0.5;
  const double s = std::abs(p.y) * std::exp(-p.r);
  const double u = h - s * s;
  // atan(sqrt(u)/s) written with atan2 so s = 0 gives the pi/2 limit.
  return h * std::atan2(std::sqrt(u), s) - s * std::sqrt(u) - 0.25 * std::numbers::pi;
}

double approx_p(const OverlapParams& p) {
  const double c = std::cos(interference_phase(p));
  return 4.0 * area_weight(p) * c * c;
}

SemiclassicalComparison compare_slice(int m, double r, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const SqueezedNumberState state{m, r};
  validate(state);
  SemiclassicalComparison out;
  const double boundary = classical_boundary(m, r);
  out.interior_limit = 0.8 * boundary;

  const long n = static_cast<long>(std::ceil(boundary / step));
  for (long i = 1; i <= n; ++i) {
    const double y = static_cast<double>(i) * step;
    const OverlapParams params{m, r, y};
    const bool valid = in_validity_region(params);
    out.y.push_back(y);
    out.valid.push_back(valid);
    out.approx.push_back(valid ? approx_p(params) : 0.0);
    out.exact.push_back(q_function({0.0, y}, state));
  }

  double num = 0.0;
  double den = 0.0;
  double exact_peak = 0.0;
  DistributionTable approx_table;
  DistributionTable exact_table;
  for (std::size_t i = 0; i < out.y.size(); ++i) {
    exact_peak = std::max(exact_peak, out.exact[i]);
    if (out.y[i] >= out.interior_limit) continue;
    num += out.approx[i] * out.exact[i];
    den += out.approx[i] * out.approx[i];
    approx_table.coords.push_back(out.y[i]);
    approx_table.probs.push_back(out.approx[i]);
    exact_table.coords.push_back(out.y[i]);
    exact_table.probs.push_back(out.exact[i]);
  }
  out.scale = den > 0.0 ? num / den : 0.0;

  if (approx_table.size() >= 3) {
    out.approx_maxima = find_maxima(approx_table, {.refine = true}).positions;
    out.exact_maxima = find_maxima(exact_table, {.refine = true}).positions;
  }

  for (std::size_t i = 0; i < out.y.size(); ++i) {
    if (!out.valid[i] || exact_peak <= 0.0) continue;
    const double dev = std::abs(out.scale * out.approx[i] - out.exact[i]) / exact_peak;
    if (out.y[i] < out.interior_limit) {
      out.interior_deviation = std::max(out.interior_deviation, dev);
    } else if (out.y[i] >= 0.9 * boundary) {
      out.boundary_deviation = std::max(out.boundary_deviation, dev);
    }
  }
  return out;
}

}  // namespace squeezelab
