#include "commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "squeezelab/analysis.hpp"
#include "squeezelab/errors.hpp"
#include "squeezelab/semiclassical.hpp"
#include "squeezelab/sns_closed_form.hpp"
#include "squeezelab/verify.hpp"

namespace squeezelab::cli {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string num(double x) { return fmt::format("{:.17g}", x); }

struct RunConfig {
  std::string command;
  int m = 0;
  double r = 0.0;
  std::string format = "csv";
  std::string out_path;
  double tail_eps = kDefaultTailEps;

  std::string kind = "momentum";
  double lo = 0.0;
  double hi = 0.0;
  int points = 2001;
  bool amplitude = false;

  GridSpec grid;
  std::string slice_out;

  std::string representation = "photon";
  double floor = kDefaultMaximaFloor;

  double r_lo = 0.0;
  double r_hi = 2.0;
  double step = 0.02;

  std::string suite = "all";
  int m_max = 12;

  Fields echo() const {
    Fields f{{"m", std::to_string(m)}, {"r", num(r)}};
    if (command == "photon") {
      f.emplace_back("tail_eps", num(tail_eps));
    } else if (command == "quad") {
      f.emplace_back("kind", kind);
      f.emplace_back("min", num(lo));
      f.emplace_back("max", num(hi));
      f.emplace_back("points", std::to_string(points));
      f.emplace_back("amplitude", amplitude ? "true" : "false");
    } else if (command == "qfunc") {
      f.emplace_back("re_min", num(grid.re_min));
      f.emplace_back("re_max", num(grid.re_max));
      f.emplace_back("im_min", num(grid.im_min));
      f.emplace_back("im_max", num(grid.im_max));
      f.emplace_back("n_re", std::to_string(grid.n_re));
      f.emplace_back("n_im", std::to_string(grid.n_im));
      f.emplace_back("order", "im-major");
    } else if (command == "semiclassical") {
      f.emplace_back("y_min", num(lo));
      f.emplace_back("y_max", num(hi));
      f.emplace_back("points", std::to_string(points));
    } else if (command == "maxima") {
      f.emplace_back("representation", representation);
      f.emplace_back("floor", num(floor));
      f.emplace_back("tail_eps", num(tail_eps));
    } else if (command == "transition") {
      f.erase(f.begin() + 1);
      f.emplace_back("r_lo", num(r_lo));
      f.emplace_back("r_hi", num(r_hi));
      f.emplace_back("step", num(step));
    }
    f.emplace_back("format", format);
    return f;
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Fields info;
};

nlohmann::json fields_json(const Fields& fields) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j;
}

void write_header(std::ostream& os, const RunConfig& cfg, const Fields& info) {
  os << "# squeezelab " << cfg.command << "\n# schema: v1\n# config:";
  for (const auto& [k, v] : cfg.echo()) os << ' ' << k << '=' << v;
  os << '\n';
  for (const auto& [k, v] : info) os << "# " << k << ": " << v << '\n';
}

void write_table(std::ostream& os, const RunConfig& cfg, const Table& table) {
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema"] = "v1";
    j["command"] = cfg.command;
    j["config"] = fields_json(cfg.echo());
    j["info"] = fields_json(table.info);
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    os << j.dump() << '\n';
    return;
  }
  write_header(os, cfg, table.info);
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << num(row[c]);
    os << '\n';
  }
}

// Opens --out (or falls back to `fallback`) and runs `fn` on the stream.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  fn(file);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("need at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("range needs min < max");
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
  return xs;
}

unsigned thread_budget() {
  const char* env = std::getenv("SQUEEZELAB_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    throw std::invalid_argument("SQUEEZELAB_THREADS must be a nonnegative integer");
  }
}

std::string companion_path(const RunConfig& cfg) {
  if (!cfg.slice_out.empty()) return cfg.slice_out;
  if (cfg.out_path.empty()) return {};
  std::filesystem::path p(cfg.out_path);
  const std::string ext = p.extension().string();
  p.replace_extension();
  return p.string() + "_slice" + ext;
}

void cmd_photon(const RunConfig& cfg, std::ostream& out) {
  const DistributionTable dist = photon_distribution({cfg.m, cfg.r}, cfg.tail_eps);
  Table t;
  t.columns = {"n", "probability"};
  for (std::size_t i = 0; i < dist.size(); ++i) t.rows.push_back({dist.coords[i], dist.probs[i]});
  t.info = {{"truncation_N", std::to_string(dist.meta.truncation)}, {"captured_mass", num(dist.meta.captured_mass)}};
  emit(cfg.out_path, out, [&](std::ostream& os) { write_table(os, cfg, t); });
}

void cmd_quad(RunConfig cfg, std::ostream& out) {
  const SqueezedNumberState s{cfg.m, cfg.r};
  validate(s);
  const bool momentum = cfg.kind == "momentum";
  if (!momentum && cfg.kind != "position") throw std::invalid_argument("--kind must be position or momentum");
  if (cfg.lo == 0.0 && cfg.hi == 0.0) {
    const double scale = momentum ? std::exp(cfg.r) : std::exp(-cfg.r);
    cfg.hi = scale * (std::sqrt(2.0 * cfg.m + 1.0) + 6.0);
    cfg.lo = -cfg.hi;
  }
  Table t;
  t.columns = {"coord", "prob"};
  if (cfg.amplitude) {
    t.columns.emplace_back("re");
    t.columns.emplace_back("im");
  }
  for (double x : linspace(cfg.lo, cfg.hi, cfg.points)) {
    const std::complex<double> amp = momentum ? momentum_wf(x, s) : std::complex<double>(position_wf(x, s), 0.0);
    std::vector<double> row{x, std::norm(amp)};
    if (cfg.amplitude) {
      row.push_back(amp.real());
      row.push_back(amp.imag());
    }
    t.rows.push_back(std::move(row));
  }
  emit(cfg.out_path, out, [&](std::ostream& os) { write_table(os, cfg, t); });
}

void cmd_qfunc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SqueezedNumberState s{cfg.m, cfg.r};
  const std::vector<double> q = q_grid(s, cfg.grid, thread_budget());
  const GridSpec& g = cfg.grid;

  emit(cfg.out_path, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::json j;
      j["schema"] = "v1";
      j["command"] = cfg.command;
      j["config"] = fields_json(cfg.echo());
      std::vector<double> re_axis;
      std::vector<double> im_axis;
      for (int i = 0; i < g.n_re; ++i) re_axis.push_back(g.re_at(i));
      for (int k = 0; k < g.n_im; ++k) im_axis.push_back(g.im_at(k));
      std::vector<std::vector<double>> matrix(static_cast<std::size_t>(g.n_im));
      for (int k = 0; k < g.n_im; ++k) {
        const auto begin = q.begin() + static_cast<std::ptrdiff_t>(k) * g.n_re;
        matrix[static_cast<std::size_t>(k)].assign(begin, begin + g.n_re);
      }
      j["re_axis"] = re_axis;
      j["im_axis"] = im_axis;
      j["matrix"] = matrix;
      os << j.dump() << '\n';
      return;
    }
    write_header(os, cfg, {});
    os << "re,im,Q\n";
    for (int k = 0; k < g.n_im; ++k) {
      for (int i = 0; i < g.n_re; ++i) {
        os << num(g.re_at(i)) << ',' << num(g.im_at(k)) << ',' << num(q[static_cast<std::size_t>(k) * g.n_re + i])
           << '\n';
      }
    }
  });

  const std::string slice_path = companion_path(cfg);
  if (slice_path.empty()) {
    err << "note: Im-axis slice not written (pass --out or --slice-out)\n";
    return;
  }
  Table slice;
  slice.columns = {"im", "Q"};
  for (int k = 0; k < g.n_im; ++k) slice.rows.push_back({g.im_at(k), q_function({0.0, g.im_at(k)}, s)});
  slice.info = {{"slice", "Re(alpha) = 0"}};
  emit(slice_path, out, [&](std::ostream& os) { write_table(os, cfg, slice); });
}

void cmd_semiclassical(RunConfig cfg, std::ostream& out, std::ostream& err) {
  const SqueezedNumberState s{cfg.m, cfg.r};
  validate(s);
  const double boundary = classical_boundary(cfg.m, cfg.r);
  if (cfg.lo == 0.0 && cfg.hi == 0.0) cfg.hi = boundary;
  Table t;
  t.columns = {"y", "approx", "exact_slice", "valid"};
  int valid_rows = 0;
  for (double y : linspace(cfg.lo, cfg.hi, cfg.points)) {
    const OverlapParams p{cfg.m, cfg.r, y};
    const bool valid = in_validity_region(p);
    valid_rows += valid ? 1 : 0;
    t.rows.push_back({y, valid ? approx_p(p) : NAN, q_function({0.0, y}, s), valid ? 1.0 : 0.0});
  }
  t.info = {{"classical_boundary", num(boundary)}, {"approx", "raw 4 A_m cos^2(phi), unscaled"}};
  if (valid_rows == 0) {
    err << "warning: no sample lies inside the validity region |y| < " << num(boundary) << '\n';
    t.info.emplace_back("warning", "empty validity window");
  }
  emit(cfg.out_path, out, [&](std::ostream& os) { write_table(os, cfg, t); });
}

void cmd_maxima(const RunConfig& cfg, std::ostream& out) {
  const SqueezedNumberState s{cfg.m, cfg.r};
  DistributionTable table;
  bool refine = true;
  if (cfg.representation == "photon") {
    table = photon_distribution(s, cfg.tail_eps);
    refine = false;
  } else if (cfg.representation == "momentum") {
    table = momentum_density_table(s);
  } else if (cfg.representation == "position") {
    table = position_density_table(s);
  } else if (cfg.representation == "qslice") {
    table = q_slice_table(s);
  } else {
    throw std::invalid_argument("--representation must be photon, momentum, position or qslice");
  }
  const MaximaReport report = find_maxima(table, {.floor = cfg.floor, .refine = refine});
  Table t;
  t.columns = {"position", "value"};
  for (int i = 0; i < report.count; ++i) t.rows.push_back({report.positions[static_cast<std::size_t>(i)], report.values[static_cast<std::size_t>(i)]});
  t.info = {{"count", std::to_string(report.count)}};
  if (cfg.representation == "photon") t.info.emplace_back("count_law", std::to_string(maxima_count_law(cfg.m)));
  emit(cfg.out_path, out, [&](std::ostream& os) { write_table(os, cfg, t); });
}

void cmd_transition(const RunConfig& cfg, std::ostream& out) {
  const TransitionResult result = transition_scan(cfg.m, cfg.r_lo, cfg.r_hi, cfg.step);
  Table t;
  t.columns = {"r", "count"};
  for (const auto& [r, c] : result.trace) t.rows.push_back({r, static_cast<double>(c)});
  t.info = {{"r_star", num(result.r_star)}, {"half_log_m", num(0.5 * std::log(static_cast<double>(cfg.m)))}};
  emit(cfg.out_path, out, [&](std::ostream& os) { write_table(os, cfg, t); });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyScope scope;
  scope.m_max = cfg.m_max;
  const VerifyReport report = run_verify(cfg.suite, scope);
  emit(cfg.out_path, out, [&](std::ostream& os) { os << report.to_json().dump(2) << '\n'; });
  err << "verify " << cfg.suite << ": " << (report.all_pass() ? "pass" : "FAIL") << " (" << report.checks.size()
      << " checks, " << fmt::format("{:.1f}", report.seconds) << " s)\n";
  return report.all_pass() ? kOk : kVerificationFailure;
}

void add_state(CLI::App* sub, RunConfig& cfg, bool with_r = true) {
  sub->add_option("--m", cfg.m, "photon index of |m, r>")->check(CLI::NonNegativeNumber);
  if (with_r) sub->add_option("--r", cfg.r, "real squeeze parameter");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Representations of squeezed number states", "squeezelab"};
  app.require_subcommand(1);

  auto* photon = app.add_subcommand("photon", "photon-number distribution P_{n,m}");
  add_state(photon, cfg);
  photon->add_option("--tail-eps", cfg.tail_eps, "uncaptured probability mass");
  add_output(photon, cfg);

  auto* quad = app.add_subcommand("quad", "position or momentum density");
  add_state(quad, cfg);
  quad->add_option("--kind", cfg.kind, "quadrature")->check(CLI::IsMember({"position", "momentum"}));
  quad->add_option("--min", cfg.lo, "range start (default: symmetric, scaled to the state)");
  quad->add_option("--max", cfg.hi, "range end");
  quad->add_option("--points", cfg.points, "number of samples");
  quad->add_flag("--amplitude", cfg.amplitude, "add re,im amplitude columns");
  add_output(quad, cfg);

  auto* qfunc = app.add_subcommand("qfunc", "Husimi Q over a grid, plus the Im-axis slice");
  add_state(qfunc, cfg);
  qfunc->add_option("--re-min", cfg.grid.re_min);
  qfunc->add_option("--re-max", cfg.grid.re_max);
  qfunc->add_option("--im-min", cfg.grid.im_min);
  qfunc->add_option("--im-max", cfg.grid.im_max);
  qfunc->add_option("--n-re", cfg.grid.n_re);
  qfunc->add_option("--n-im", cfg.grid.n_im);
  qfunc->add_option("--slice-out", cfg.slice_out, "companion slice file (default: <out>_slice.<ext>)");
  add_output(qfunc, cfg);

  auto* semi = app.add_subcommand("semiclassical", "area-of-overlap approximation vs exact Q(i y)");
  add_state(semi, cfg);
  semi->add_option("--y-min", cfg.lo);
  semi->add_option("--y-max", cfg.hi, "default: classical boundary");
  semi->add_option("--points", cfg.points);
  add_output(semi, cfg);

  auto* maxima = app.add_subcommand("maxima", "local maxima of a distribution");
  add_state(maxima, cfg);
  maxima->add_option("--representation", cfg.representation)
      ->check(CLI::IsMember({"photon", "momentum", "position", "qslice"}));
  maxima->add_option("--floor", cfg.floor, "relative floor below which maxima are ignored");
  maxima->add_option("--tail-eps", cfg.tail_eps);
  add_output(maxima, cfg);

  auto* transition = app.add_subcommand("transition", "scan r for the onset of m+1 Q-slice maxima");
  add_state(transition, cfg, false);
  transition->add_option("--r-lo", cfg.r_lo);
  transition->add_option("--r-hi", cfg.r_hi);
  transition->add_option("--step", cfg.step);
  add_output(transition, cfg);

  auto* verify = app.add_subcommand("verify", "run invariant checks, JSON report");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(verify_suites()));
  verify->add_option("--m-max", cfg.m_max)->check(CLI::Range(0, 40));
  verify->add_option("--out", cfg.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "photon") cmd_photon(cfg, out);
    if (cfg.command == "quad") cmd_quad(cfg, out);
    if (cfg.command == "qfunc") cmd_qfunc(cfg, out, err);
    if (cfg.command == "semiclassical") cmd_semiclassical(cfg, out, err);
    if (cfg.command == "maxima") cmd_maxima(cfg, out);
    if (cfg.command == "transition") cmd_transition(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const TrustRegionError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }
  return kOk;
}

}  // namespace squeezelab::cli
