#pragma once

#include <utility>
#include <vector>

#include "squeezelab/types.hpp"

namespace squeezelab {

inline constexpr double kDefaultMaximaFloor = 1e-6;
/// Relative height a Q-slice maximum needs to count as part of the
/// oscillation pattern in transition_scan.
inline constexpr double kProminenceFloor = 0.1;

struct MaximaReport {
  std::vector<double> positions;
  std::vector<double> values;
  int count = 0;
};

struct MaximaOptions {
  double floor = kDefaultMaximaFloor;
  /// Refine positions and values with a three-point parabola (continuous tables).
  bool refine = false;
};

/// Strict local maxima with value > floor * global max. A plateau counts
/// once, at its left edge. Parity-gapped tables (photon distributions) are
/// compared against same-parity neighbours only, and their first realised
/// index (n = m mod 2) is the physical lower edge of the support, so it
/// counts when it exceeds its neighbour. Throws std::invalid_argument for
/// tables with fewer than 3 entries or a negative floor.
MaximaReport find_maxima(const DistributionTable& table, const MaximaOptions& options = {});

/// Stabilised number of photon-distribution maxima at large squeezing:
/// m/2 + 1 for even m, (m+1)/2 for odd m.
int maxima_count_law(int m);

/// Sampled |<p|m,r>|^2 on [-p_max, p_max]; step <= 0 selects 0.01 e^r and
/// p_max <= 0 selects e^r (sqrt(2m+1) + 6).
DistributionTable momentum_density_table(const SqueezedNumberState& state, double p_max = 0.0, double step = 0.0);

/// Sampled |<q|m,r>|^2; defaults use the scale e^{-r}.
DistributionTable position_density_table(const SqueezedNumberState& state, double q_max = 0.0, double step = 0.0);

/// Q(i y) for y in [-y_max, y_max]; y_max <= 0 selects e^r (sqrt(2m+1) + 3) + 3, default step 0.01.
DistributionTable q_slice_table(const SqueezedNumberState& state, double y_max = 0.0, double step = 0.01);

/// Zeros of <p|m,r> located by sign changes of i^m <p|m,r> and bisection.
std::vector<double> momentum_zeros(const SqueezedNumberState& state, double tol = 1e-12);

struct TransitionResult {
  double r_star = 0.0;
  /// (r, maxima count of the Q slice) for every scanned r.
  std::vector<std::pair<double, int>> trace;
};

/// Smallest scanned r from which the Im-axis Q slice keeps exactly m + 1
/// maxima above kProminenceFloor of its peak through r_hi. Throws
/// NonConvergenceError (carrying the trace in its message) when the count
/// never stabilises, and when it is already stable at r_lo (transition below
/// the scanned range).
TransitionResult transition_scan(int m, double r_lo, double r_hi, double step = 0.02);

struct QPhotonPair {
  double alpha_max_sq = 0.0;  // |alpha_max|^2 of a Q-slice maximum alpha_max = i|alpha_max|
  int n_max = 0;              // closest photon-distribution maximum
  double mismatch = 0.0;      // |n_max - |alpha_max|^2| / n_max
};

/// Pairs each Q-slice maximum on the positive Im axis with |alpha_max| >= 1
/// to the nearest photon-number maximum.
std::vector<QPhotonPair> qmax_to_nmax(const SqueezedNumberState& state);

/// (r, position of the last photon-distribution maximum) for each r.
std::vector<std::pair<double, int>> support_widening(int m, const std::vector<double>& r_values);

}  // namespace squeezelab
