#include "tricoh/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "tricoh/error.hpp"

namespace tricoh::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) parse_error(where + " must be a number");
  return j.get<double>();
}

Amplitude amplitude(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_error(where + " must be a [re, im] pair");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

std::array<Amplitude, 2> component_vector(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_error(where + " must hold two [re, im] pairs");
  return {amplitude(j[0], where + "[0]"), amplitude(j[1], where + "[1]")};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string format_of(const Json& doc) {
  const auto& f = field(doc, "format");
  if (!f.is_string()) parse_error("\"format\" must be a string");
  return f.get<std::string>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

StateDocument parse_state_document(const std::string& text) {
  const Json doc = parse_json(text);
  const std::string format = format_of(doc);
  if (format == kStateFormat) {
    const auto& arr = field(doc, "amplitudes");
    if (!arr.is_array() || arr.size() != 8) parse_error("\"amplitudes\" must hold eight [re, im] pairs");
    std::array<Amplitude, 8> amps{};
    for (std::size_t i = 0; i < 8; ++i) amps[i] = amplitude(arr[i], "amplitudes[" + std::to_string(i) + "]");
    return make_state(amps, false);
  }
  if (format == kBeamFormat) {
    BeamParameters p;
    p.alpha = amplitude(field(doc, "alpha"), "alpha");
    p.beta = amplitude(field(doc, "beta"), "beta");
    p.gx = component_vector(field(doc, "gx"), "gx");
    p.gy = component_vector(field(doc, "gy"), "gy");
    p.fx = component_vector(field(doc, "fx"), "fx");
    p.fy = component_vector(field(doc, "fy"), "fy");
    p.validate();
    return p;
  }
  parse_error("unknown format \"" + format + "\"");
}

StateDocument read_state_file(const std::filesystem::path& path) { return parse_state_document(read_text_file(path)); }

ThreeQubitState to_state(const StateDocument& doc) {
  if (const auto* s = std::get_if<ThreeQubitState>(&doc)) return *s;
  return beam_to_state(std::get<BeamParameters>(doc));
}

Json amplitude_to_json(Amplitude a) { return Json::array({a.real(), a.imag()}); }

Json matrix_to_json(const Matrix2c& m) {
  return Json::array({Json::array({amplitude_to_json(m(0, 0)), amplitude_to_json(m(0, 1))}),
                      Json::array({amplitude_to_json(m(1, 0)), amplitude_to_json(m(1, 1))})});
}

Json coherence_vector_to_json(const CoherenceVector& v) {
  Json j;
  j["S_a"] = v.sa;
  j["S_b"] = v.sb;
  j["S_c"] = v.sc;
  return j;
}

Json state_to_json(const ThreeQubitState& s) {
  Json j;
  j["format"] = kStateFormat;
  Json amps = Json::array();
  for (const auto& d : s.amplitudes()) amps.push_back(amplitude_to_json(d));
  j["amplitudes"] = std::move(amps);
  return j;
}

Json beam_to_json(const BeamParameters& p) {
  auto vec = [](const std::array<Amplitude, 2>& v) {
    return Json::array({amplitude_to_json(v[0]), amplitude_to_json(v[1])});
  };
  Json j;
  j["format"] = kBeamFormat;
  j["alpha"] = amplitude_to_json(p.alpha);
  j["beta"] = amplitude_to_json(p.beta);
  j["gx"] = vec(p.gx);
  j["gy"] = vec(p.gy);
  j["fx"] = vec(p.fx);
  j["fy"] = vec(p.fy);
  return j;
}

RecipeDocument parse_recipe_document(const std::string& text) {
  const Json doc = parse_json(text);
  const std::string format = format_of(doc);
  if (format != kRecipeFormat) parse_error("unknown format \"" + format + "\"");

  RecipeDocument out;
  if (doc.contains("settings")) {
    const auto& s = doc.at("settings");
    if (!s.is_object()) parse_error("\"settings\" must be an object");
    auto angle = [&](const char* key) {
      if (!s.contains(key)) {
        out.pipeline.free_settings.emplace_back(key);
        return 0.0;
      }
      return number(s.at(key), std::string("settings.") + key);
    };
    out.pipeline.source_theta = angle("theta");
    out.pipeline.hwp_phi = angle("phi");
    out.pipeline.soc0 = {angle("phi0"), angle("theta0")};
    out.pipeline.soc1 = {angle("phi1"), angle("theta1")};
    out.pipeline.delay = angle("delta");
    if (s.contains("combine")) {
      if (!s.at("combine").is_boolean()) parse_error("settings.combine must be a boolean");
      out.pipeline.combine = s.at("combine").get<bool>();
    }
    out.pipeline.validate();
    out.label = "custom";
    if (doc.contains("name")) {
      if (!doc.at("name").is_string()) parse_error("\"name\" must be a string");
      out.label = doc.at("name").get<std::string>();
    }
    return out;
  }
  const auto& name = field(doc, "name");
  if (!name.is_string()) parse_error("\"name\" must be a string");
  out.label = name.get<std::string>();
  out.pipeline = named_recipe(out.label);
  out.named = true;
  return out;
}

RecipeDocument read_recipe_file(const std::filesystem::path& path) {
  return parse_recipe_document(read_text_file(path));
}

Json recipe_to_json(const std::string& label, const BenchPipeline& p) {
  Json j;
  j["format"] = kRecipeFormat;
  j["name"] = label;
  Json s;
  s["theta"] = p.source_theta;
  s["phi"] = p.hwp_phi;
  s["phi0"] = p.soc0.phi;
  s["theta0"] = p.soc0.theta;
  s["phi1"] = p.soc1.phi;
  s["theta1"] = p.soc1.theta;
  s["delta"] = p.delay;
  s["combine"] = p.combine;
  j["settings"] = std::move(s);
  return j;
}

Json sweep_to_json(const SweepStatistics& st) {
  Json j;
  j["n"] = st.n;
  j["seed"] = st.seed;
  j["shards"] = st.shards;
  j["violations"] = st.violations;
  j["min_slack"] = st.min_slack;
  j["max_c_abc"] = st.max_c_abc;
  j["min_c_abc"] = st.min_c_abc;
  j["s_min"] = coherence_vector_to_json(st.s_min);
  j["s_max"] = coherence_vector_to_json(st.s_max);
  Json hist;
  hist["bins"] = st.bins;
  hist["counts"] = st.counts;
  j["histogram"] = std::move(hist);
  return j;
}

Json volume_to_json(const VolumeEstimate& v) {
  Json j;
  j["n"] = v.n;
  j["seed"] = v.seed;
  j["shards"] = v.shards;
  j["estimate"] = v.estimate;
  j["std_error"] = v.std_error;
  return j;
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["beam"] = r.beam;
    j["kind"] = r.theory ? "theory" : "measured";
    j["S_a"] = r.s.sa;
    j["S_a_err"] = r.s_error.sa;
    j["S_b"] = r.s.sb;
    j["S_b_err"] = r.s_error.sb;
    j["S_c"] = r.s.sc;
    j["S_c_err"] = r.s_error.sc;
    j["S_b+S_c-S_a"] = r.bc_minus_a;
    j["S_c+S_a-S_b"] = r.ca_minus_b;
    j["S_a+S_b-S_c"] = r.ab_minus_c;
    j["C_abc"] = r.c_abc;
    j["C_abc_T"] = r.c_theory;
    j["dot"] = r.dot;
    j["dot_xyz"] = Json::array({r.s.sa, r.s.sb, r.s.sc});
    out.push_back(std::move(j));
  }
  return out;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "beam,kind,S_a,S_a_err,S_b,S_b_err,S_c,S_c_err,S_b+S_c-S_a,S_c+S_a-S_b,S_a+S_b-S_c,C_abc,C_abc_T,dot\n";
  out << std::setprecision(6) << std::fixed;
  for (const auto& r : rows) {
    out << r.beam << ',' << (r.theory ? "theory" : "measured") << ',' << r.s.sa << ',' << r.s_error.sa << ','
        << r.s.sb << ',' << r.s_error.sb << ',' << r.s.sc << ',' << r.s_error.sc << ',' << r.bc_minus_a << ','
        << r.ca_minus_b << ',' << r.ab_minus_c << ',' << r.c_abc << ',' << r.c_theory << ',' << r.dot << '\n';
  }
  return out.str();
}

}  // namespace tricoh::io
