#pragma once

#include <complex>
#include <vector>

#include "squeezelab/types.hpp"

namespace squeezelab {

inline constexpr double kDefaultTailEps = 1e-10;
inline constexpr long kDefaultPhotonCap = 100000;

/// <n | m, r>. Exactly zero when n + m is odd. The alternating sum is
/// accumulated in log domain as separate positive and negative parts.
double fock_amplitude(int n, const SqueezedNumberState& state);

/// P_{n,m} = |<n|m,r>|^2 for n = 0..N. N is the first index at which the
/// captured mass reaches 1 - tail_eps and the trailing ceil(10 e^{2|r|})
/// same-parity probabilities are non-increasing. Rows of the opposite parity
/// are kept as explicit zeros. Throws NonConvergenceError past `cap` rows.
DistributionTable photon_distribution(const SqueezedNumberState& state, double tail_eps = kDefaultTailEps,
                                      long cap = kDefaultPhotonCap);

/// <q | m, r>: the Fock wave function of the compressed variable e^r q.
double position_wf(double q, const SqueezedNumberState& state);

/// <p | m, r>: (-i)^m times the Fock wave function of e^{-r} p, scaled by e^{-r/2}.
std::complex<double> momentum_wf(double p, const SqueezedNumberState& state);

/// <alpha | m, r> from the finite sum over (alpha*)^{m-2p}.
std::complex<double> coherent_amplitude(std::complex<double> alpha, const SqueezedNumberState& state);

/// Husimi function Q(alpha) = |<alpha|m,r>|^2 / pi.
double q_function(std::complex<double> alpha, const SqueezedNumberState& state);

/// Q over a rectangular grid, row-major with Im(alpha) as the slow axis:
/// out[j * n_re + i] = Q(re_at(i) + i im_at(j)). Points are independent, so
/// the result does not depend on `threads` (0 = hardware concurrency).
std::vector<double> q_grid(const SqueezedNumberState& state, const GridSpec& grid, unsigned threads = 1);

}  // namespace squeezelab
