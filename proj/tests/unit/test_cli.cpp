#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "tricoh/io.hpp"

using namespace tricoh;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tricoh_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze GHZ and product states") {
  const auto ghz = temp_file("ghz.json", io::state_to_json(make_state(std::array<Amplitude, 8>{
                                              1.0 / std::sqrt(2.0), 0, 0, 0, 0, 0, 0, 1.0 / std::sqrt(2.0)}))
                                             .dump());
  auto r = run({"analyze", "--state", ghz.string()});
  REQUIRE(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["format"] == "tricoh-report-v1");
  CHECK(j["command"] == "analyze");
  CHECK(std::abs(j["payload"]["C_abc"].get<double>() - 1.0) < 1e-12);
  CHECK(j["payload"]["region"] == "origin-tetra-OABC");
  CHECK(j["payload"]["vertex"] == "O");

  const auto prod = temp_file("prod.json", io::state_to_json(make_state(std::array<Amplitude, 8>{1, 0, 0, 0, 0, 0, 0, 0})).dump());
  r = run({"analyze", "--state", prod.string()});
  j = json::parse(r.out);
  CHECK(std::abs(j["payload"]["C_abc"].get<double>()) < 1e-12);
  CHECK(j["payload"]["vertex"] == "M");

  r = run({"analyze", "--state", prod.string(), "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("S_a,S_b,S_c,", 0) == 0);
}

TEST_CASE("analyze beam and expanded state give the same payload") {
  BeamParameters p;
  p.alpha = {0.6, 0.0};
  p.beta = {0.0, 0.8};
  p.gx = {Amplitude(0.6, 0), Amplitude(0, 0.8)};
  p.gy = {Amplitude(1, 0), Amplitude(0, 0)};
  p.fx = {Amplitude(std::sqrt(0.5), 0), Amplitude(std::sqrt(0.5), 0)};
  p.fy = {Amplitude(0.28, 0), Amplitude(0.96, 0)};
  const auto beam = temp_file("beam.json", io::beam_to_json(p).dump());
  const auto state = temp_file("expanded.json", io::state_to_json(beam_to_state(p)).dump(-1, ' ', false));
  const auto a = json::parse(run({"analyze", "--state", beam.string()}).out)["payload"];
  const auto b = json::parse(run({"analyze", "--state", state.string()}).out)["payload"];
  for (const char* key : {"C_abc"}) CHECK(std::abs(a[key].get<double>() - b[key].get<double>()) < 1e-12);
  for (const char* key : {"S_a", "S_b", "S_c"})
    CHECK(std::abs(a["separabilities"][key].get<double>() - b["separabilities"][key].get<double>()) < 1e-12);
  CHECK(a["region"] == b["region"]);
  CHECK(a["slacks"].size() == b["slacks"].size());
}

TEST_CASE("input errors exit with code 2 and no payload") {
  const auto bad = temp_file("bad.json", "{\"format\": ");
  auto r = run({"analyze", "--state", bad.string()});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  r = run({"bench", "--name", "E9"});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.out.empty());

  CHECK(run({"geometry", "--cross-section", "4"}).code == cli::kExitInputError);
  CHECK(run({"geometry", "--point", "1,2"}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"bench", "--noise", "gaussian", "--all"}).code == cli::kExitInputError);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("sample is deterministic and records seed and shards") {
  const auto a = run({"sample", "--n", "2000", "--seed", "42"});
  const auto b = run({"sample", "--n", "2000", "--seed", "42"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["shards"] == 1);
  CHECK(j["payload"]["violations"] == 0);
  const auto c = json::parse(run({"sample", "--n", "2000", "--seed", "42", "--shards", "4"}).out);
  CHECK(c["payload"]["histogram"] == j["payload"]["histogram"]);
  const auto one = json::parse(run({"sample", "--n", "1", "--seed", "5", "--bins", "3"}).out);
  CHECK(one["payload"]["n"] == 1);
  CHECK(one["payload"]["histogram"]["counts"].size() == 3);
}

TEST_CASE("seed falls back to the environment") {
  ::setenv("TRICOH_SEED", "42", 1);
  const auto env = run({"sample", "--n", "500"});
  ::unsetenv("TRICOH_SEED");
  const auto flag = run({"sample", "--n", "500", "--seed", "42"});
  CHECK(json::parse(env.out)["payload"] == json::parse(flag.out)["payload"]);
  CHECK(json::parse(run({"sample", "--n", "500"}).out)["seed"] == 0);
}

TEST_CASE("bench reproduces the theory column") {
  auto r = run({"bench", "--all", "--noise", "none"});
  REQUIRE(r.code == 0);
  const auto rows = json::parse(r.out)["payload"]["rows"];
  REQUIRE(rows.size() == 12);
  const std::array<double, 6> c{0.0, 1.0, 2.0 / 3.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(rows[2 * k + 1]["kind"] == "theory");
    CHECK(std::abs(rows[2 * k + 1]["C_abc_T"].get<double>() - c[k]) < 1e-12);
  }

  r = run({"bench", "--name", "E3", "--shots", "10000", "--noise", "poisson", "--seed", "7"});
  const auto e3 = json::parse(r.out)["payload"]["rows"][0];
  for (const char* key : {"S_a", "S_b", "S_c"}) CHECK(std::abs(e3[key].get<double>() - 1.0 / 3.0) < 0.05);
  CHECK(e3["S_a_err"].get<double>() > 0.0);
  CHECK(run({"bench", "--name", "E3", "--shots", "10000", "--noise", "poisson", "--seed", "7"}).out == r.out);

  const auto recipe = temp_file("recipe.json", R"({"format":"tricoh-recipe-v1","settings":{"theta":0.4,"phi":0.9}})");
  r = run({"bench", "--recipe", recipe.string(), "--noise", "none", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("custom,theory") != std::string::npos);
}

TEST_CASE("geometry subcommands") {
  auto j = json::parse(run({"geometry", "--point", "0,1,1"}).out);
  CHECK(j["payload"]["region"] == "excluded-BCMD");
  j = json::parse(run({"geometry", "--cross-section", "1.0"}).out);
  CHECK(std::abs(j["payload"]["area"].get<double>() - std::sqrt(3.0) / 2.0) < 1e-12);
  j = json::parse(run({"geometry", "--volume", "--n", "1000000", "--seed", "1"}).out);
  CHECK(std::abs(j["payload"]["estimate"].get<double>() - 0.5) < 0.001);
  CHECK(j["seed"] == 1);
  const auto off = run({"geometry", "--mesh", "-"});
  CHECK(off.out.rfind("OFF", 0) == 0);
  const auto path = std::filesystem::temp_directory_path() / "tricoh_cli_test_mesh.off";
  CHECK(run({"geometry", "--mesh", path.string()}).code == 0);
  CHECK(std::filesystem::exists(path));
}

}
