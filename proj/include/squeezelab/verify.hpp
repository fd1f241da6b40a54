#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace squeezelab {

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  double seconds = 0.0;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

struct VerifyScope {
  int m_max = 12;
  std::vector<double> r_values{0.3, 0.973, 1.4};
};

/// Suites: parity, normalization, oracle, genfun, fourier, transition, all.
/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(const std::string& suite, const VerifyScope& scope = {});

const std::vector<std::string>& verify_suites();

}  // namespace squeezelab
