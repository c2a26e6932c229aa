#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tricoh/bench.hpp"
#include "tricoh/error.hpp"
#include "tricoh/geometry.hpp"
#include "tricoh/io.hpp"
#include "tricoh/measures.hpp"
#include "tricoh/sampling.hpp"

namespace tricoh::cli {

namespace {

using io::Json;

Json envelope(const std::string& command, const std::vector<std::string>& args) {
  Json j;
  j["format"] = kReportFormat;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["args"] = args;
  return j;
}

Json subsystem_map(const std::array<Json, 3>& values) {
  Json j;
  j["a"] = values[0];
  j["b"] = values[1];
  j["c"] = values[2];
  return j;
}

Json analysis_payload(const ThreeQubitState& s) {
  std::array<Json, 3> matrices, stokes, det_route;
  for (auto sub : kSubsystems) {
    const auto i = static_cast<std::size_t>(sub);
    const auto w = reduced_matrix(s, sub);
    const auto st = stokes_vector(w);
    matrices[i] = io::matrix_to_json(w.matrix());
    stokes[i] = Json::array({st.s1, st.s2, st.s3});
    det_route[i] = separability_det(w);
  }
  const auto v = separabilities(s);
  const auto slacks = constraint_slacks(v);
  const auto directed = directed_coherences(v);

  Json p;
  p["state"] = io::state_to_json(s)["amplitudes"];
  p["separabilities"] = io::coherence_vector_to_json(v);
  p["separabilities_det"] = subsystem_map(det_route);
  p["coherence_matrices"] = subsystem_map(matrices);
  p["stokes"] = subsystem_map(stokes);
  p["slacks"] = {{"slack_a", slacks.slack_a}, {"slack_b", slacks.slack_b}, {"slack_c", slacks.slack_c}};
  p["directed"] = {{"C_a_bc", directed.c_a_bc}, {"C_b_ca", directed.c_b_ca}, {"C_c_ab", directed.c_c_ab}};
  p["C_abc"] = genuine_coherence(v);
  Json argmin = Json::array();
  for (auto sub : genuine_coherence_argmin(v)) argmin.push_back(std::string(1, to_char(sub)));
  p["C_abc_argmin"] = std::move(argmin);
  p["region"] = std::string(to_string(classify_point(v)));
  p["vertex"] = nearest_vertex(v);
  return p;
}

std::string analysis_csv(const ThreeQubitState& s) {
  const auto v = separabilities(s);
  const auto slacks = constraint_slacks(v);
  const auto d = directed_coherences(v);
  std::ostringstream out;
  out.precision(17);
  out << "S_a,S_b,S_c,slack_a,slack_b,slack_c,C_a_bc,C_b_ca,C_c_ab,C_abc,region,vertex\n";
  out << v.sa << ',' << v.sb << ',' << v.sc << ',' << slacks.slack_a << ',' << slacks.slack_b << ','
      << slacks.slack_c << ',' << d.c_a_bc << ',' << d.c_b_ca << ',' << d.c_c_ab << ',' << genuine_coherence(v)
      << ',' << to_string(classify_point(v)) << ',' << nearest_vertex(v) << '\n';
  return out.str();
}

CoherenceVector parse_point(const std::string& text) {
  std::array<double, 3> xyz{};
  std::stringstream in(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(in, item, ',')) {
    if (count == 3) throw Error(ErrorCode::ParseError, "--point expects X,Y,Z");
    try {
      std::size_t used = 0;
      xyz[count] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--point component '" + item + "' is not a number");
    }
    ++count;
  }
  if (count != 3) throw Error(ErrorCode::ParseError, "--point expects X,Y,Z");
  return {xyz[0], xyz[1], xyz[2]};
}

Noise parse_noise(const std::string& text) {
  if (text == "none") return Noise::None;
  if (text == "poisson") return Noise::Poisson;
  throw Error(ErrorCode::ParseError, "unknown noise model '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separability coherences and genuine three-party coherence of three-qubit pure states", "tricoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::uint64_t seed = 0;
  std::string format = "json";

  auto* analyze = app.add_subcommand("analyze", "Coherence analysis of a state or beam file");
  std::string state_path;
  analyze->add_option("--state", state_path, "tricoh-state-v1 or tricoh-beam-v1 JSON file")->required();
  analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* sample = app.add_subcommand("sample", "Haar-random sweep of the coherence constraints");
  std::uint64_t n = 100000;
  unsigned bins = 20;
  unsigned shards = 1;
  sample->add_option("--n", n, "number of states")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "seed")->envname("TRICOH_SEED");
  sample->add_option("--bins", bins, "C_abc histogram bins")->check(CLI::PositiveNumber);
  sample->add_option("--shards", shards, "parallel shards")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Simulated preparation and tomography of bench beams");
  std::string recipe_name, recipe_path, noise_text = "poisson";
  bool all = false;
  std::uint64_t shots = 10000;
  auto* name_opt = bench->add_option("--name", recipe_name, "benchmark beam E1..E6");
  auto* recipe_opt = bench->add_option("--recipe", recipe_path, "tricoh-recipe-v1 JSON file");
  auto* all_opt = bench->add_flag("--all", all, "all six benchmark beams");
  name_opt->excludes(recipe_opt)->excludes(all_opt);
  recipe_opt->excludes(all_opt);
  bench->add_option("--shots", shots, "expected counts per measurement basis")->check(CLI::PositiveNumber);
  bench->add_option("--noise", noise_text, "none or poisson")->check(CLI::IsMember({"none", "poisson"}));
  bench->add_option("--seed", seed, "seed")->envname("TRICOH_SEED");
  bench->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* geometry = app.add_subcommand("geometry", "Coherence-cube geometry");
  std::string point_text, mesh_path;
  std::optional<double> total;
  bool volume = false;
  std::uint64_t volume_n = 1000000;
  auto* point_opt = geometry->add_option("--point", point_text, "classify X,Y,Z");
  auto* section_opt = geometry->add_option("--cross-section", total, "slice area at S_total");
  auto* volume_opt = geometry->add_flag("--volume", volume, "Monte Carlo volume of the allowed region");
  auto* mesh_opt = geometry->add_option("--mesh", mesh_path, "write OFF mesh (- for stdout)");
  geometry->add_option("--n", volume_n, "Monte Carlo samples")->check(CLI::PositiveNumber);
  geometry->add_option("--seed", seed, "seed")->envname("TRICOH_SEED");
  geometry->add_option("--shards", shards, "parallel shards")->check(CLI::PositiveNumber);
  point_opt->excludes(section_opt)->excludes(volume_opt)->excludes(mesh_opt);
  section_opt->excludes(volume_opt)->excludes(mesh_opt);
  volume_opt->excludes(mesh_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) {
      const auto state = io::to_state(io::read_state_file(state_path));
      if (format == "csv") {
        out << analysis_csv(state);
        return kExitOk;
      }
      Json report = envelope("analyze", args);
      report["payload"] = analysis_payload(state);
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (sample->parsed()) {
      const auto st = sweep(n, seed, bins, shards);
      Json report = envelope("sample", args);
      report["seed"] = seed;
      report["shards"] = shards;
      report["payload"] = io::sweep_to_json(st);
      out << report.dump(2) << '\n';
      if (st.violations > 0) {
        err << "tricoh: " << st.violations << " constraint violations found\n";
        return kExitViolation;
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      TomographySettings settings;
      settings.shots = shots;
      settings.noise = parse_noise(noise_text);
      settings.seed = seed;
      std::vector<TableRow> rows;
      if (all) {
        rows = reproduce_table(settings);
      } else if (!recipe_name.empty()) {
        const auto info = recipe_info(recipe_name);
        rows = table_rows(info.name, info.pipeline, settings, info.dot, info.reference_c_theory);
      } else if (!recipe_path.empty()) {
        const auto doc = io::read_recipe_file(recipe_path);
        if (doc.named) {
          const auto info = recipe_info(doc.label);
          rows = table_rows(info.name, info.pipeline, settings, info.dot, info.reference_c_theory);
        } else {
          rows = table_rows(doc.label, doc.pipeline, settings);
        }
      } else {
        err << "tricoh bench: one of --name, --recipe or --all is required\n";
        return kExitInputError;
      }
      if (format == "csv") {
        out << io::table_to_csv(rows);
        return kExitOk;
      }
      Json report = envelope("bench", args);
      report["seed"] = seed;
      report["shards"] = 1;
      report["payload"] = {{"shots", shots}, {"noise", noise_text}, {"rows", io::table_to_json(rows)}};
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (geometry->parsed()) {
      Json report = envelope("geometry", args);
      Json payload;
      if (!point_text.empty()) {
        const auto v = parse_point(point_text);
        const auto slacks = constraint_slacks(v);
        payload["point"] = Json::array({v.sa, v.sb, v.sc});
        payload["region"] = std::string(to_string(classify_point(v)));
        payload["vertex"] = nearest_vertex(v);
        payload["slacks"] = {{"slack_a", slacks.slack_a}, {"slack_b", slacks.slack_b}, {"slack_c", slacks.slack_c}};
        payload["C_abc"] = genuine_coherence(v);
      } else if (total) {
        payload["total"] = *total;
        payload["area"] = cross_section_area(*total);
      } else if (volume) {
        report["seed"] = seed;
        report["shards"] = shards;
        payload = io::volume_to_json(allowed_volume_mc(volume_n, seed, shards));
      } else if (!mesh_path.empty()) {
        const auto mesh = mesh_export();
        const auto off = to_off(mesh);
        if (mesh_path == "-") {
          out << off;
          return kExitOk;
        }
        std::ofstream file(mesh_path, std::ios::binary);
        if (!file || !(file << off)) {
          err << "tricoh geometry: cannot write " << mesh_path << '\n';
          return kExitInputError;
        }
        payload = {{"mesh", mesh_path}, {"vertices", mesh.vertices.size()}, {"faces", mesh.faces.size()}};
      } else {
        err << "tricoh geometry: one of --point, --cross-section, --volume or --mesh is required\n";
        return kExitInputError;
      }
      report["payload"] = std::move(payload);
      out << report.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "tricoh: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tricoh::cli
