#include "squeezelab/genfun_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "squeezelab/special_fn.hpp"

namespace squeezelab {

namespace {

constexpr double kZeroSqueeze = 1e-12;

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<cplx> coeffs) : TruncatedSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(int order, cplx value) {
  TruncatedSeries s(order);
  s[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1.0;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries exp_series(const TruncatedSeries& poly) {
  const int order = poly.order();
  TruncatedSeries out(order);
  out[0] = std::exp(poly[0]);
  for (int k = 1; k <= order; ++k) {
    cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * poly[j] * out[k - j];
    out[k] = acc / static_cast<double>(k);
  }
  return out;
}

BiSeries::BiSeries(int order_a, int order_b) : order_a_(order_a), order_b_(order_b) {
  check_order(order_a);
  check_order(order_b);
  coeffs_.assign(static_cast<std::size_t>(order_a + 1) * static_cast<std::size_t>(order_b + 1), 0.0);
}

BiSeries BiSeries::constant(int order_a, int order_b, cplx value) {
  BiSeries s(order_a, order_b);
  s.coeff(0, 0) = value;
  return s;
}

BiSeries BiSeries::var_a(int order_a, int order_b) {
  BiSeries s(order_a, order_b);
  if (order_a >= 1) s.coeff(1, 0) = 1.0;
  return s;
}

BiSeries BiSeries::var_b(int order_a, int order_b) {
  BiSeries s(order_a, order_b);
  if (order_b >= 1) s.coeff(0, 1) = 1.0;
  return s;
}

std::size_t BiSeries::index(int i, int j) const {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_b_ + 1) + static_cast<std::size_t>(j);
}

void BiSeries::check_shape(const BiSeries& other) const {
  if (other.order_a_ != order_a_ || other.order_b_ != order_b_) throw std::invalid_argument("bi-series order mismatch");
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  check_shape(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

BiSeries& BiSeries::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.check_shape(b);
  BiSeries out(a.order_a(), a.order_b());
  for (int i1 = 0; i1 <= a.order_a(); ++i1) {
    for (int j1 = 0; j1 <= a.order_b(); ++j1) {
      const cplx x = a.coeff(i1, j1);
      if (x == 0.0) continue;
      for (int i2 = 0; i1 + i2 <= a.order_a(); ++i2) {
        for (int j2 = 0; j1 + j2 <= a.order_b(); ++j2) out.coeff(i1 + i2, j1 + j2) += x * b.coeff(i2, j2);
      }
    }
  }
  return out;
}

BiSeries exp_series(const BiSeries& poly) {
  // exp(c0 + P) = e^{c0} sum_k P^k / k!; P has no constant term so P^k
  // vanishes beyond total degree order_a + order_b.
  BiSeries nilpotent = poly;
  const cplx c0 = nilpotent.coeff(0, 0);
  nilpotent.coeff(0, 0) = 0.0;
  BiSeries out = BiSeries::constant(poly.order_a(), poly.order_b(), 1.0);
  BiSeries power = out;
  for (int k = 1; k <= poly.order_a() + poly.order_b(); ++k) {
    power = power * nilpotent;
    power *= 1.0 / static_cast<double>(k);
    out += power;
  }
  out *= std::exp(c0);
  return out;
}

namespace {

struct SeriesBuilder {
  double r;
  int order;

  TruncatedSeries operator()(const FockRep& rep) const {
    if (rep.n < 0) throw std::invalid_argument("photon number must be nonnegative");
    if (std::abs(r) < kZeroSqueeze) {
      TruncatedSeries s(order);
      if (rep.n <= order) s[rep.n] = std::exp(-0.5 * log_factorial(rep.n));
      return s;
    }
    const double c = std::cosh(r);
    const double t = std::tanh(r);
    // g_k(beta) = tanh^{k/2} H_k(beta / sqrt(2 sinh cosh)) / sqrt(2^k k!) as series.
    const TruncatedSeries beta_over_c = TruncatedSeries::variable(order) * cplx(1.0 / c);
    TruncatedSeries g_prev(order);
    TruncatedSeries g_cur = TruncatedSeries::constant(order, 1.0);
    for (int k = 0; k < rep.n; ++k) {
      const double kd = static_cast<double>(k);
      TruncatedSeries g_next = beta_over_c * g_cur * cplx(1.0 / std::sqrt(kd + 1.0)) -
                               g_prev * cplx(t * std::sqrt(kd / (kd + 1.0)));
      g_prev = std::move(g_cur);
      g_cur = std::move(g_next);
    }
    TruncatedSeries quad(order);
    if (order >= 2) quad[2] = 0.5 * t;
    return g_cur * exp_series(quad) * cplx(1.0 / std::sqrt(c));
  }

  TruncatedSeries operator()(const PositionRep& rep) const {
    const double er = std::exp(r);
    TruncatedSeries expo(order);
    expo[0] = -0.25 * std::log(std::numbers::pi) + 0.5 * r - 0.5 * er * er * rep.q * rep.q;
    if (order >= 1) expo[1] = std::numbers::sqrt2 * er * rep.q;
    if (order >= 2) expo[2] = -0.5;
    return exp_series(expo);
  }

  TruncatedSeries operator()(const MomentumRep& rep) const {
    const double emr = std::exp(-r);
    TruncatedSeries expo(order);
    expo[0] = -0.25 * std::log(std::numbers::pi) - 0.5 * r - 0.5 * emr * emr * rep.p * rep.p;
    if (order >= 1) expo[1] = cplx(0.0, -std::numbers::sqrt2 * emr * rep.p);
    if (order >= 2) expo[2] = 0.5;
    return exp_series(expo);
  }

  TruncatedSeries operator()(const CoherentRep& rep) const {
    const double c = std::cosh(r);
    const double t = std::tanh(r);
    const cplx ac = std::conj(rep.alpha);
    TruncatedSeries expo(order);
    expo[0] = -0.5 * std::log(c) - 0.5 * std::norm(rep.alpha) - 0.5 * t * ac * ac;
    if (order >= 1) expo[1] = ac / c;
    if (order >= 2) expo[2] = 0.5 * t;
    return exp_series(expo);
  }
};

}  // namespace

TruncatedSeries generating_series(const AmplitudeRep& rep, double r, int order) {
  if (!std::isfinite(r)) throw std::invalid_argument("squeeze parameter must be finite");
  check_order(order);
  return std::visit(SeriesBuilder{r, order}, rep);
}

cplx extract_amplitude(const AmplitudeRep& rep, const SqueezedNumberState& state) {
  validate(state);
  const TruncatedSeries series = generating_series(rep, state.r, state.m);
  return series[state.m] * std::exp(0.5 * log_factorial(state.m));
}

cplx extract_element(int n, int m, double r, const OperatorKernel& kernel) {
  if (n < 0 || m < 0) throw std::invalid_argument("indices must be nonnegative");
  const BiSeries series = kernel(r, n, m);
  if (series.order_a() < n || series.order_b() < m) throw std::invalid_argument("kernel returned a series of too low order");
  return series.coeff(n, m) * std::exp(0.5 * (log_factorial(n) + log_factorial(m)));
}

BiSeries identity_kernel(double /*r*/, int order_a, int order_b) {
  return exp_series(BiSeries::var_a(order_a, order_b) * BiSeries::var_b(order_a, order_b));
}

BiSeries number_b_kernel(double /*r*/, int order_a, int order_b) {
  const BiSeries ab = BiSeries::var_a(order_a, order_b) * BiSeries::var_b(order_a, order_b);
  return ab * exp_series(ab);
}

BiSeries number_a_kernel(double r, int order_a, int order_b) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  const BiSeries a = BiSeries::var_a(order_a, order_b);
  const BiSeries b = BiSeries::var_b(order_a, order_b);
  const BiSeries ab = a * b;
  BiSeries poly = ab * cplx(c * c + s * s);
  poly += (a * a + b * b) * cplx(-c * s);
  poly += BiSeries::constant(order_a, order_b, s * s);
  return poly * exp_series(ab);
}

}  // namespace squeezelab
