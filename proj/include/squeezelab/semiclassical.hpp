#pragma once

#include <vector>

namespace squeezelab {

/// Slice point alpha = i y of the Q function for |m, r>.
struct OverlapParams {
  int m = 0;
  double r = 0.0;
  double y = 0.0;
};

/// m + 1/2 - y^2 e^{-2r}; the area-of-overlap construction needs it > 0.
double overlap_margin(const OverlapParams& p);
bool in_validity_region(const OverlapParams& p);
/// Classical boundary y_b = sqrt(m + 1/2) e^r.
double classical_boundary(int m, double r);

/// A_m = exp(-2u e^{-2r}) / sqrt(2 pi u) with u = overlap_margin(p).
/// Throws std::domain_error outside the validity region.
double area_weight(const OverlapParams& p);

/// phi = (m+1/2) arctan(sqrt((m+1/2 - s^2)/s^2)) - s sqrt(m+1/2 - s^2) - pi/4,
/// s = |y| e^{-r}; at y = 0 the arctan term takes its limit (m+1/2) pi/2.
double interference_phase(const OverlapParams& p);

/// |sqrt(A) e^{i phi} + sqrt(A) e^{-i phi}|^2 = 4 A cos^2(phi).
double approx_p(const OverlapParams& p);

/// Comparison of the area-of-overlap slice with the exact Q(i y) on y > 0.
struct SemiclassicalComparison {
  std::vector<double> y;
  std::vector<double> approx;   // raw 4 A cos^2 phi (0 outside validity)
  std::vector<double> exact;    // Q(i y)
  std::vector<bool> valid;
  double scale = 0.0;           // least-squares factor mapping approx onto exact over the interior window
  double interior_limit = 0.0;  // 0.8 of the classical boundary
  std::vector<double> approx_maxima;  // interior maxima of approx, parabola-refined
  std::vector<double> exact_maxima;   // interior maxima of exact on the same window
  /// Largest |scale*approx - exact| / max(exact) on the outer band [0.9, 1) of the boundary.
  double boundary_deviation = 0.0;
  /// Same measure over the interior window.
  double interior_deviation = 0.0;
};

/// Samples y in (0, classical boundary) with the given step.
SemiclassicalComparison compare_slice(int m, double r, double step = 0.005);

}  // namespace squeezelab
