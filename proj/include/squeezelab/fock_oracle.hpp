#pragma once

#include <Eigen/Dense>

namespace squeezelab {

/// Dense squeeze operator on the truncated number basis {|0>, ..., |dim-1>}.
///
/// S(r) = exp((r/2)(A^2 - A^dagger^2)) with A[n-1, n] = sqrt(n). For real r
/// the generator is real antisymmetric, so S is stored as a real orthogonal
/// matrix. Truncation contaminates entries near the basis edge and the
/// contamination reaches further down as r grows; only the leading block
/// [0, trusted_limit()]^2 is reliable.
class FockMatrix {
 public:
  FockMatrix(double r, Eigen::MatrixXd entries);

  double r() const { return r_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const { return entries_; }

  /// Highest index (inclusive) of the trusted block; -1 when empty.
  int trusted_limit() const { return trusted_limit_; }
  bool trusted(int n, int m) const;

  /// <n| S(r) |m>; throws TrustRegionError outside the trusted block.
  double amplitude(int n, int m) const;

 private:
  double r_;
  Eigen::MatrixXd entries_;
  int trusted_limit_;
};

/// Truncated annihilation operator, A[n-1, n] = sqrt(n).
Eigen::MatrixXd annihilation(int dim);

/// Matrix exponential by scaling and squaring with a [13/13] Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Default basis size for amplitudes up to index m: max(64, ceil(4 (m + 10) e^{2|r|})).
int default_dim(int m, double r);

/// floor(0.8 dim e^{-2|r|}) - 4, capped at dim - 1; the whole basis when r == 0.
int trusted_limit(int dim, double r);

/// Highest index of the block on which S A S^dagger is compared with the
/// Bogoliubov form: half the trusted block.
int interior_limit(int dim, double r);

/// Requires dim >= 2; throws TrustRegionError when the trusted block is empty.
FockMatrix build_squeeze(double r, int dim);

/// Entry (n, m) of build_squeeze(r, dim). dim <= 0 selects default_dim(max(n, m), r).
double oracle_amplitude(int n, int m, double r, int dim = 0);

/// Largest singular value of S A S^dagger - (cosh r A + sinh r A^dagger) on
/// the interior block. Requires dim >= 8.
double bogoliubov_residual(double r, int dim);

/// max over m <= m_max of || (b^dagger b - m) S e_m || on the interior block,
/// with b = cosh r A + sinh r A^dagger built independently of S.
double eigenrelation_residual(double r, int dim, int m_max);

}  // namespace squeezelab
