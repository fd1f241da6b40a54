#pragma once

#include <complex>

namespace squeezelab {

/// Amplitudes of two-photon coherent states |beta, r> = S(r)|beta> for a real
/// squeeze parameter r. The squeeze operator follows the convention in which
/// b = S a S^dagger = cosh(r) a + sinh(r) a^dagger annihilates |beta, r> with
/// eigenvalue beta, i.e. S(r) = exp((r/2) a^2 - (r/2) a^dagger^2): position
/// is compressed by e^{-r} and momentum stretched by e^{r}.
///
/// Quadratures are q = (a + a^dagger)/sqrt 2 and p = (a - a^dagger)/(i sqrt 2).

/// <alpha | beta, r>.
std::complex<double> overlap_coherent(std::complex<double> alpha, std::complex<double> beta, double r);

/// <n | beta, r>. Uses the Hermite form with a normalised recurrence; the
/// |r| < 1e-12 branch falls back to the plain coherent-state coefficient.
std::complex<double> fock_amplitude_scs(int n, std::complex<double> beta, double r);

/// Centre of the position wave packet, sqrt(2) e^{-r} beta.
double position_center(double beta, double r);
/// Position variance e^{-2r}/2.
double position_variance(double r);
/// Momentum variance e^{2r}/2.
double momentum_variance(double r);

/// <q | beta, r> for real beta. Throws std::invalid_argument if beta has a
/// nonzero imaginary part.
std::complex<double> position_wf_scs(double q, std::complex<double> beta, double r);

/// <p | beta, r> for real beta, same restriction as position_wf_scs.
std::complex<double> momentum_wf_scs(double p, std::complex<double> beta, double r);

}  // namespace squeezelab
