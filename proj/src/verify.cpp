#include "squeezelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "squeezelab/analysis.hpp"
#include "squeezelab/fock_oracle.hpp"
#include "squeezelab/genfun_engine.hpp"
#include "squeezelab/sns_closed_form.hpp"

namespace squeezelab {

namespace {

using Suite = std::function<void(const VerifyScope&, std::vector<Check>&)>;

void record(std::vector<Check>& out, const std::string& suite, const std::string& name, double measured,
            double tolerance) {
  out.push_back({suite, name, measured, tolerance, std::isfinite(measured) && measured <= tolerance});
}

std::string label(int m, double r) { return "m=" + std::to_string(m) + " r=" + nlohmann::json(r).dump(); }

// Composite trapezoid on [a, b] with n intervals; exponentially accurate for
// the smooth, rapidly decaying integrands used here.
template <class Fn>
auto trapezoid(Fn&& f, double a, double b, long n) {
  const double h = (b - a) / static_cast<double>(n);
  auto sum = 0.5 * (f(a) + f(b));
  for (long i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
  return sum * h;
}

void parity_suite(const VerifyScope& scope, std::vector<Check>& out) {
  for (double r : scope.r_values) {
    double worst = 0.0;
    for (int m = 0; m <= scope.m_max; ++m) {
      for (int n = 0; n <= scope.m_max; ++n) {
        if ((n + m) % 2 != 0) worst = std::max(worst, std::abs(fock_amplitude(n, {m, r})));
      }
    }
    record(out, "parity", "closed-form mixed-parity amplitudes exactly zero, r=" + nlohmann::json(r).dump(), worst, 0.0);
  }
  double delta = 0.0;
  for (int m = 0; m <= scope.m_max; ++m) {
    for (int n = 0; n <= scope.m_max; ++n) delta = std::max(delta, std::abs(fock_amplitude(n, {m, 0.0}) - (n == m ? 1.0 : 0.0)));
  }
  record(out, "parity", "r=0 gives the Kronecker delta", delta, 0.0);
}

void normalization_suite(const VerifyScope& scope, std::vector<Check>& out) {
  std::vector<double> rs = scope.r_values;
  rs.push_back(0.0);
  for (double r : rs) {
    double worst = 0.0;
    for (int m = 0; m <= scope.m_max; ++m) {
      const DistributionTable t = photon_distribution({m, r}, 1e-12);
      double total = 0.0;
      for (double p : t.probs) total += p;
      worst = std::max(worst, std::abs(total - 1.0));
    }
    record(out, "normalization", "photon sum, all m, r=" + nlohmann::json(r).dump(), worst, 1e-9);
  }
  for (int m : {0, 1, 7}) {
    for (double r : {0.0, 0.5, 1.4}) {
      const SqueezedNumberState s{m, r};
      const double width = std::sqrt(2.0 * m + 1.0) + 9.0;
      const double qw = width * std::exp(-r);
      const double pw = width * std::exp(r);
      const double q_norm = trapezoid([&](double q) { return std::pow(position_wf(q, s), 2); }, -qw, qw, 8000);
      const double p_norm = trapezoid([&](double p) { return std::norm(momentum_wf(p, s)); }, -pw, pw, 8000);
      record(out, "normalization", "position density " + label(m, r), std::abs(q_norm - 1.0), 1e-9);
      record(out, "normalization", "momentum density " + label(m, r), std::abs(p_norm - 1.0), 1e-9);

      const double re_w = std::sqrt(2.0 * m + 1.0) + 8.0;
      const double im_w = std::exp(std::abs(r)) * (std::sqrt(2.0 * m + 1.0) + 8.0);
      const double h = 0.1;
      const long nre = static_cast<long>(std::ceil(2.0 * re_w / h));
      const long nim = static_cast<long>(std::ceil(2.0 * im_w / h));
      const double q_total = trapezoid(
          [&](double y) { return trapezoid([&](double x) { return q_function({x, y}, s); }, -re_w, re_w, nre); }, -im_w,
          im_w, nim);
      record(out, "normalization", "Q function " + label(m, r), std::abs(q_total - 1.0), 1e-6);
    }
  }
}

void oracle_suite(const VerifyScope& scope, std::vector<Check>& out) {
  for (double r : scope.r_values) {
    const FockMatrix s = build_squeeze(r, default_dim(scope.m_max, r));
    double closed_vs_oracle = 0.0;
    double genfun_vs_oracle = 0.0;
    double closed_vs_genfun = 0.0;
    for (int m = 0; m <= scope.m_max; ++m) {
      for (int n = 0; n <= scope.m_max; ++n) {
        const double closed = fock_amplitude(n, {m, r});
        const double oracle = s.amplitude(n, m);
        const cplx gen = extract_amplitude(FockRep{n}, {m, r});
        closed_vs_oracle = std::max(closed_vs_oracle, std::abs(closed - oracle));
        genfun_vs_oracle = std::max(genfun_vs_oracle, std::abs(gen - oracle));
        closed_vs_genfun = std::max(closed_vs_genfun, std::abs(gen - closed));
      }
    }
    const std::string tag = " r=" + nlohmann::json(r).dump();
    record(out, "oracle", "closed form vs matrix exponential" + tag, closed_vs_oracle, 1e-8);
    record(out, "oracle", "generating function vs matrix exponential" + tag, genfun_vs_oracle, 1e-8);
    record(out, "oracle", "closed form vs generating function" + tag, closed_vs_genfun, 1e-8);
  }
  record(out, "oracle", "Bogoliubov residual r=0.8 dim=200", bogoliubov_residual(0.8, 200), 1e-8);
  record(out, "oracle", "Bogoliubov residual r=1.4 dim=600", bogoliubov_residual(1.4, 600), 1e-8);
  const double r = 1.4;
  record(out, "oracle", "b^dagger b eigenrelation m<=12 r=1.4", eigenrelation_residual(r, 700, 12), 1e-7);
}

void genfun_suite(const VerifyScope& scope, std::vector<Check>& out) {
  for (double r : scope.r_values) {
    double pos = 0.0;
    double mom = 0.0;
    double coh = 0.0;
    for (int m = 0; m <= scope.m_max; ++m) {
      const SqueezedNumberState s{m, r};
      for (double x : {-1.3, -0.4, 0.0, 0.3, 0.9, 2.2}) {
        pos = std::max(pos, std::abs(extract_amplitude(PositionRep{x}, s) - position_wf(x, s)));
        const double p = x * std::exp(r);
        mom = std::max(mom, std::abs(extract_amplitude(MomentumRep{p}, s) - momentum_wf(p, s)));
      }
      for (cplx a : {cplx(0.0, 0.0), cplx(0.4, 0.0), cplx(0.0, 0.4), cplx(0.5, 0.5), cplx(-1.1, 2.0)}) {
        coh = std::max(coh, std::abs(extract_amplitude(CoherentRep{a}, s) - coherent_amplitude(a, s)));
      }
    }
    const std::string tag = " r=" + nlohmann::json(r).dump();
    record(out, "genfun", "position extraction vs closed form" + tag, pos, 1e-8);
    record(out, "genfun", "momentum extraction vs closed form" + tag, mom, 1e-8);
    record(out, "genfun", "coherent extraction vs closed form" + tag, coh, 1e-8);
  }
  const int order = std::min(scope.m_max, 8);
  const double r = 0.8;
  const FockMatrix s = build_squeeze(r, default_dim(order, r));
  const Eigen::MatrixXd a = annihilation(s.dim());
  const Eigen::MatrixXd sandwich = s.matrix().transpose() * (a.transpose() * a) * s.matrix();
  double ident = 0.0;
  double nb = 0.0;
  double na = 0.0;
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= order; ++m) {
      const double kron = n == m ? 1.0 : 0.0;
      ident = std::max(ident, std::abs(extract_element(n, m, r, identity_kernel) - kron));
      nb = std::max(nb, std::abs(extract_element(n, m, r, number_b_kernel) - m * kron));
      na = std::max(na, std::abs(extract_element(n, m, r, number_a_kernel) - sandwich(n, m)));
    }
  }
  record(out, "genfun", "double extraction of identity is orthonormal", ident, 1e-12);
  record(out, "genfun", "double extraction of b^dagger b is diagonal m", nb, 1e-12);
  record(out, "genfun", "double extraction of a^dagger a vs oracle sandwich r=0.8", na, 1e-8);
}

void fourier_suite(const VerifyScope& scope, std::vector<Check>& out) {
  const int m_max = std::min(scope.m_max, 8);
  for (double r : {0.0, 0.5, 1.0, 1.5}) {
    double worst = 0.0;
    for (int m = 0; m <= m_max; ++m) {
      const SqueezedNumberState s{m, r};
      const double qw = std::exp(-r) * (std::sqrt(2.0 * m + 1.0) + 9.0);
      for (double x : {-1.7, -0.6, 0.0, 0.45, 1.2, 2.5}) {
        const double p = x * std::exp(r);
        const cplx ft = trapezoid([&](double q) { return std::polar(position_wf(q, s), -p * q); }, -qw, qw, 6000) /
                        std::sqrt(2.0 * std::numbers::pi);
        worst = std::max(worst, std::abs(ft - momentum_wf(p, s)));
      }
    }
    record(out, "fourier", "momentum_wf = Fourier transform of position_wf, m<=8 r=" + nlohmann::json(r).dump(), worst,
           1e-7);
  }
}

void transition_suite(const VerifyScope&, std::vector<Check>& out) {
  for (int m = 3; m <= 9; ++m) {
    const double target = 0.5 * std::log(static_cast<double>(m));
    double measured = INFINITY;
    try {
      measured = std::abs(transition_scan(m, 0.0, target + 1.0, 0.02).r_star - target);
    } catch (const std::exception&) {
    }
    record(out, "transition", "|r_star - ln(m)/2| m=" + std::to_string(m), measured, 0.15);
  }
}

const std::map<std::string, Suite>& suite_table() {
  static const std::map<std::string, Suite> table{
      {"parity", parity_suite},   {"normalization", normalization_suite}, {"oracle", oracle_suite},
      {"genfun", genfun_suite},   {"fourier", fourier_suite},             {"transition", transition_suite},
  };
  return table;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "v1";
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    j["checks"].push_back({{"suite", c.suite},
                           {"name", c.name},
                           {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr)},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  return j;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"parity", "normalization", "oracle", "genfun", "fourier", "transition", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyScope& scope) {
  const auto& table = suite_table();
  if (suite != "all" && !table.contains(suite)) throw std::invalid_argument("unknown verify suite: " + suite);
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  for (const std::string& name : verify_suites()) {
    if (name == "all" || (suite != "all" && suite != name)) continue;
    table.at(name)(scope, report.checks);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace squeezelab
