#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "squeezelab/verify.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = squeezelab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("photon csv output") {
  const auto res = run({"photon", "--m", "3", "--r", "0.5"});
  REQUIRE(res.code == 0);
  CHECK(res.out.rfind("# squeezelab photon\n# schema: v1\n# config: m=3 r=0.5", 0) == 0);
  CHECK(res.out.find("\nn,probability\n0,0\n1,0.22340878286880697\n") != std::string::npos);
}

TEST_CASE("json output carries the schema and mirrors the csv rows") {
  const auto res = run({"photon", "--m", "2", "--r", "0.3", "--format", "json"});
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["schema"] == "v1");
  CHECK(j["command"] == "photon");
  CHECK(j["columns"].size() == 2);
  CHECK(j["rows"][1][1].get<double>() == 0.0);
  CHECK(j["config"]["m"] == "2");
}

TEST_CASE("output is byte-for-byte deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"photon", "--m", "7", "--r", "1.4"},
        std::vector<std::string>{"quad", "--m", "4", "--r", "0.8", "--points", "101", "--amplitude"},
        std::vector<std::string>{"maxima", "--m", "7", "--r", "1.4", "--representation", "qslice", "--format", "json"},
        std::vector<std::string>{"semiclassical", "--m", "5", "--r", "1.0", "--points", "50"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("qfunc writes the grid and its slice, independent of thread count") {
  const auto dir = std::filesystem::temp_directory_path() / "squeezelab_cli_test";
  std::filesystem::create_directories(dir);
  const auto grid_path = (dir / "q.csv").string();
  const std::vector<std::string> args{"qfunc", "--m", "2", "--r", "0.6", "--n-re", "9", "--n-im", "11", "--out", grid_path};

  ::setenv("SQUEEZELAB_THREADS", "1", 1);
  REQUIRE(run(args).code == 0);
  const std::string serial = slurp(grid_path);
  ::setenv("SQUEEZELAB_THREADS", "3", 1);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(grid_path) == serial);
  ::unsetenv("SQUEEZELAB_THREADS");

  CHECK(serial.find("re,im,Q\n") != std::string::npos);
  const std::string slice = slurp(dir / "q_slice.csv");
  CHECK(slice.find("im,Q\n") != std::string::npos);

  ::setenv("SQUEEZELAB_THREADS", "many", 1);
  CHECK(run(args).code == 2);
  ::unsetenv("SQUEEZELAB_THREADS");
  std::filesystem::remove_all(dir);
}

TEST_CASE("qfunc json is a dense matrix") {
  const auto res = run({"qfunc", "--m", "1", "--r", "0.2", "--n-re", "3", "--n-im", "2", "--format", "json"});
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["matrix"].size() == 2);
  CHECK(j["matrix"][0].size() == 3);
  CHECK(j["re_axis"].size() == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"photon", "--m", "-2"}).code == 2);
  CHECK(run({"photon", "--m", "2", "--format", "xml"}).code == 2);
  CHECK(run({"photon", "--m", "2", "--r", "0.5", "--tail-eps", "2"}).code == 2);
  CHECK(run({"qfunc", "--n-re", "0"}).code == 2);
  CHECK(run({"photon", "--m", "2", "--r", "9"}).code == 4);
  CHECK(run({"transition", "--m", "5", "--r-lo", "0", "--r-hi", "0.2"}).code == 4);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--suite", "parity"}).code == 0);
}

TEST_CASE("semiclassical warns on an empty validity window") {
  const auto res = run({"semiclassical", "--m", "2", "--r", "0.1", "--y-min", "5", "--y-max", "6", "--points", "4"});
  CHECK(res.code == 0);
  CHECK(res.err.find("warning") != std::string::npos);
}

TEST_CASE("verify report") {
  const auto report = squeezelab::run_verify("parity");
  CHECK(report.all_pass());
  CHECK(report.to_json()["schema"] == "v1");
  CHECK_THROWS_AS(squeezelab::run_verify("nope"), std::invalid_argument);
}
