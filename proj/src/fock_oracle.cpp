#include "squeezelab/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "squeezelab/errors.hpp"

namespace squeezelab {

namespace {

// [13/13] Pade coefficients and the 1-norm bound below which no scaling is
// needed (Higham 2005).
constexpr double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                              1187353796428800.0,  129060195264000.0,   10559470521600.0,
                              670442572800.0,      33522128640.0,       1323241920.0,
                              40840800.0,          960960.0,            16380.0,
                              182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

// Generator (r/2)(A^2 - A^dagger^2) restricted to one parity sector. The
// generator only couples n to n +- 2, so the two sectors exponentiate
// independently.
Eigen::MatrixXd sector_generator(double r, int dim, int parity) {
  const int size = (dim - parity + 1) / 2;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i + 1 < size; ++i) {
    const double n = 2.0 * i + parity;
    // <n| A^2 |n+2> = sqrt((n+1)(n+2))
    const double v = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
    g(i, i + 1) = v;
    g(i + 1, i) = -v;
  }
  return g;
}

}  // namespace

FockMatrix::FockMatrix(double r, Eigen::MatrixXd entries)
    : r_(r), entries_(std::move(entries)), trusted_limit_(squeezelab::trusted_limit(static_cast<int>(entries_.rows()), r)) {}

bool FockMatrix::trusted(int n, int m) const {
  return n >= 0 && m >= 0 && n <= trusted_limit_ && m <= trusted_limit_;
}

double FockMatrix::amplitude(int n, int m) const {
  if (!trusted(n, m))
    throw TrustRegionError("oracle entry (" + std::to_string(n) + ", " + std::to_string(m) +
                           ") lies outside the trusted block [0, " + std::to_string(trusted_limit_) + "]");
  return entries_(n, m);
}

Eigen::MatrixXd annihilation(int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 == 0.0) return Eigen::MatrixXd::Identity(n, n);
  int squarings = 0;
  if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  const Eigen::MatrixXd x = a / std::ldexp(1.0, squarings);

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd x2 = x * x;
  const Eigen::MatrixXd x4 = x2 * x2;
  const Eigen::MatrixXd x6 = x4 * x2;
  const double* b = kPade13;
  Eigen::MatrixXd inner = b[13] * x6 + b[11] * x4 + b[9] * x2;
  Eigen::MatrixXd odd = x6 * inner;
  odd += b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id;
  const Eigen::MatrixXd u = x * odd;
  inner = b[12] * x6 + b[10] * x4 + b[8] * x2;
  Eigen::MatrixXd v = x6 * inner;
  v += b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

  Eigen::MatrixXd result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

int default_dim(int m, double r) {
  if (m < 0) throw std::invalid_argument("index must be nonnegative");
  const double want = 4.0 * (m + 10) * std::exp(2.0 * std::abs(r));
  return std::max(64, static_cast<int>(std::ceil(want)));
}

int trusted_limit(int dim, double r) {
  if (dim <= 0) return -1;
  if (r == 0.0) return dim - 1;
  const int limit = static_cast<int>(std::floor(0.8 * dim * std::exp(-2.0 * std::abs(r)))) - 4;
  return std::min(limit, dim - 1);
}

int interior_limit(int dim, double r) {
  const int trusted = trusted_limit(dim, r);
  return trusted < 0 ? -1 : trusted / 2;
}

FockMatrix build_squeeze(double r, int dim) {
  if (!std::isfinite(r)) throw std::invalid_argument("squeeze parameter must be finite");
  if (dim < 2) throw std::invalid_argument("basis dimension must be at least 2");
  if (trusted_limit(dim, r) < 0)
    throw TrustRegionError("basis dimension " + std::to_string(dim) + " too small for r = " + std::to_string(r));

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::MatrixXd block = expm(sector_generator(r, dim, parity));
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      for (Eigen::Index j = 0; j < block.cols(); ++j) s(2 * i + parity, 2 * j + parity) = block(i, j);
    }
  }
  return FockMatrix(r, std::move(s));
}

double oracle_amplitude(int n, int m, double r, int dim) {
  if (n < 0 || m < 0) throw std::invalid_argument("indices must be nonnegative");
  if (dim <= 0) dim = default_dim(std::max(n, m), r);
  return build_squeeze(r, dim).amplitude(n, m);
}

double bogoliubov_residual(double r, int dim) {
  if (dim < 8) throw std::invalid_argument("bogoliubov_residual needs dim >= 8");
  const FockMatrix s = build_squeeze(r, dim);
  const int k = interior_limit(dim, r) + 1;
  const Eigen::MatrixXd a = annihilation(dim);
  const Eigen::MatrixXd& sm = s.matrix();
  // Rows 0..k-1 of S A S^T only need rows 0..k-1 of S.
  const Eigen::MatrixXd top = sm.topRows(k);
  const Eigen::MatrixXd block = top * a * top.transpose();
  const Eigen::MatrixXd expected = std::cosh(r) * a.topLeftCorner(k, k) + std::sinh(r) * a.topLeftCorner(k, k).transpose();
  const Eigen::MatrixXd diff = block - expected;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  return svd.singularValues()(0);
}

double eigenrelation_residual(double r, int dim, int m_max) {
  const FockMatrix s = build_squeeze(r, dim);
  const int k = interior_limit(dim, r) + 1;
  if (m_max >= k) throw TrustRegionError("eigenrelation check needs m_max inside the interior block");
  const Eigen::MatrixXd a = annihilation(dim);
  const Eigen::MatrixXd b = std::cosh(r) * a + std::sinh(r) * a.transpose();
  const Eigen::MatrixXd nb = b.transpose() * b;
  double worst = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const Eigen::VectorXd col = s.matrix().col(m);
    const Eigen::VectorXd res = (nb * col - m * col).head(k);
    worst = std::max(worst, res.norm());
  }
  return worst;
}

}  // namespace squeezelab
