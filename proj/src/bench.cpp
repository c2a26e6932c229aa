#include "tricoh/bench.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tricoh/error.hpp"
#include "tricoh/geometry.hpp"
#include "tricoh/random.hpp"

namespace tricoh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAnyPath = -1;

constexpr int field_index(int a, int b, int c) { return 4 * a + 2 * b + c; }

bool on_path(int c, int path) { return path == kAnyPath || c == path; }

// Real reflection about an axis at `axis` radians: maps direction angle t to 2 axis - t.
// Models both the half-wave plate (polarization) and the Dove prism (mode orientation).
Matrix2c reflection(double axis) {
  Matrix2c j;
  j << std::cos(2 * axis), std::sin(2 * axis), std::sin(2 * axis), -std::cos(2 * axis);
  return j;
}

Field apply_half_wave_plate(const Field& in, double axis, int path) {
  const Matrix2c j = reflection(axis);
  Field out = in;
  for (int b = 0; b < 2; ++b) {
    for (int c = 0; c < 2; ++c) {
      if (!on_path(c, path)) continue;
      const Amplitude x = in(field_index(0, b, c));
      const Amplitude y = in(field_index(1, b, c));
      out(field_index(0, b, c)) = j(0, 0) * x + j(0, 1) * y;
      out(field_index(1, b, c)) = j(1, 0) * x + j(1, 1) * y;
    }
  }
  return out;
}

Field apply_dove_prism(const Field& in, double axis, int path) {
  const Matrix2c j = reflection(axis);
  Field out = in;
  for (int c = 0; c < 2; ++c) {
    if (!on_path(c, path)) continue;
    const Amplitude g10 = in(field_index(1, 0, c));
    const Amplitude g01 = in(field_index(1, 1, c));
    out(field_index(1, 0, c)) = j(0, 0) * g10 + j(0, 1) * g01;
    out(field_index(1, 1, c)) = j(1, 0) * g10 + j(1, 1) * g01;
  }
  return out;
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidParameters, std::string(name) + " must be finite");
}

}  // namespace

void BenchPipeline::validate() const {
  require_finite(source_theta, "source_theta");
  require_finite(hwp_phi, "hwp_phi");
  require_finite(soc0.phi, "soc0.phi");
  require_finite(soc0.theta, "soc0.theta");
  require_finite(soc1.phi, "soc1.phi");
  require_finite(soc1.theta, "soc1.theta");
  require_finite(delay, "delay");
}

bool OpticalElement::norm_preserving() const noexcept {
  // BS1 keeps a quarter of the path-0 intensity; the source discards its input.
  return kind != Kind::BalancedSplitter && kind != Kind::SourceMode;
}

Field OpticalElement::apply(const Field& in) const {
  switch (kind) {
    case Kind::SourceMode: {
      Field out = Field::Zero();
      out(field_index(1, 0, 0)) = std::cos(angle);
      out(field_index(1, 1, 0)) = std::sin(angle);
      return out;
    }
    case Kind::HalfWavePlate:
      return apply_half_wave_plate(in, angle, path);
    case Kind::DovePrism:
      return apply_dove_prism(in, angle, path);
    case Kind::PolarizingSplitter: {
      Field out = in;
      for (int b = 0; b < 2; ++b) {
        out(field_index(1, b, 0)) = in(field_index(1, b, 1));
        out(field_index(1, b, 1)) = in(field_index(1, b, 0));
      }
      return out;
    }
    case Kind::BalancedSplitter: {
      Field out = in;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(field_index(a, b, 0)) *= 0.5;
      return out;
    }
    case Kind::PhaseDelay: {
      Field out = in;
      const Amplitude phase = std::polar(1.0, angle);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(field_index(a, b, 0)) *= phase;
      return out;
    }
    case Kind::SpinOrbitController: {
      // Fast axis halfway between incoming and target polarization, then the
      // prism turns the y arm's mode from input_mode to soc.theta.
      const Field rotated = apply_half_wave_plate(in, 0.5 * (input_polarization + soc.phi), path);
      return apply_dove_prism(rotated, 0.5 * (input_mode + soc.theta), path);
    }
  }
  return in;
}

std::string OpticalElement::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::SourceMode: out << "SourceMode(theta=" << angle << ")"; break;
    case Kind::HalfWavePlate: out << "HalfWavePlate(axis=" << angle << ", path=" << path << ")"; break;
    case Kind::DovePrism: out << "DovePrism(axis=" << angle << ", path=" << path << ")"; break;
    case Kind::PolarizingSplitter: out << "PolarizingSplitter(x->0, y->1)"; break;
    case Kind::BalancedSplitter: out << "BalancedSplitter(path=0, amplitude=1/2)"; break;
    case Kind::PhaseDelay: out << "PhaseDelay(delta=" << angle << ", path=0)"; break;
    case Kind::SpinOrbitController:
      out << "SpinOrbitController(path=" << path << ", phi=" << soc.phi << ", theta=" << soc.theta << ")";
      break;
  }
  return out.str();
}

std::vector<OpticalElement> pipeline_elements(const BenchPipeline& p) {
  p.validate();
  using K = OpticalElement::Kind;
  std::vector<OpticalElement> elements;
  elements.push_back({.kind = K::SourceMode, .angle = p.source_theta});
  // The source is y-polarized; this axis sends |y> to cos(phi)|x> + sin(phi)|y>.
  elements.push_back({.kind = K::HalfWavePlate, .angle = 0.25 * kPi + 0.5 * p.hwp_phi, .path = kAnyPath});
  elements.push_back({.kind = K::PolarizingSplitter});
  elements.push_back({.kind = K::BalancedSplitter, .path = 0});
  elements.push_back({.kind = K::PhaseDelay, .angle = p.delay, .path = 0});
  elements.push_back({.kind = K::SpinOrbitController,
                      .path = 0,
                      .input_polarization = 0.0,
                      .input_mode = p.source_theta,
                      .soc = p.soc0});
  elements.push_back({.kind = K::SpinOrbitController,
                      .path = 1,
                      .input_polarization = 0.5 * kPi,
                      .input_mode = p.source_theta,
                      .soc = p.soc1});
  return elements;
}

Field propagate(const BenchPipeline& p) {
  Field field = Field::Zero();
  for (const auto& element : pipeline_elements(p)) field = element.apply(field);
  return field;
}

ThreeQubitState run_pipeline(const BenchPipeline& p) {
  const Field field = propagate(p);
  std::array<Amplitude, 8> amps{};
  for (int i = 0; i < 8; ++i) amps[static_cast<std::size_t>(i)] = field(i);
  return make_state(amps, true);
}

Field soc_transform(const BranchInput& in, double phi, double theta_i) {
  if (in.path != 0 && in.path != 1) throw Error(ErrorCode::InvalidParameters, "branch path must be 0 or 1");
  require_finite(in.polarization_angle, "polarization_angle");
  require_finite(in.mode_angle, "mode_angle");
  require_finite(phi, "phi");
  require_finite(theta_i, "theta_i");
  Field field = Field::Zero();
  const double pol[2] = {std::cos(in.polarization_angle), std::sin(in.polarization_angle)};
  const double mode[2] = {std::cos(in.mode_angle), std::sin(in.mode_angle)};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) field(field_index(a, b, in.path)) = in.amplitude * pol[a] * mode[b];

  OpticalElement soc{.kind = OpticalElement::Kind::SpinOrbitController,
                     .path = in.path,
                     .input_polarization = in.polarization_angle,
                     .input_mode = in.mode_angle,
                     .soc = {phi, theta_i}};
  return soc.apply(field);
}

namespace {

struct RecipeSpec {
  const char* name;
  double c_theory;
  const char* dot;
};

constexpr RecipeSpec kRecipes[] = {
    {"E1", 0.0, "M"}, {"E2", 1.0, "O"}, {"E3", 2.0 / 3.0, "W"},
    {"E4", 0.0, "A"}, {"E5", 0.0, "B"}, {"E6", 0.0, "C"},
};

ThreeQubitState basis_sum(std::initializer_list<int> indices) {
  std::array<Amplitude, 8> amps{};
  for (int i : indices) amps[static_cast<std::size_t>(i)] = 1.0;
  return make_state(amps, true);
}

// Target beams written directly in the slot basis (index 4a + 2b + c).
ThreeQubitState target_state(std::string_view name) {
  if (name == "E1") return basis_sum({0b111});                  // |y>|HG01>|1>
  if (name == "E2") return basis_sum({0b111, 0b000});           // GHZ-type
  if (name == "E3") return basis_sum({0b110, 0b011, 0b101});    // W-type
  if (name == "E4") return basis_sum({0b011, 0b101});           // |1>(|HG01 x> + |HG10 y>)
  if (name == "E5") return basis_sum({0b110, 0b011});           // |HG01>(|y 0> + |x 1>)
  if (name == "E6") return basis_sum({0b110, 0b101});           // |y>(|HG01 0> + |HG10 1>)
  throw Error(ErrorCode::UnknownRecipe, "unknown recipe '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : kRecipes) out.emplace_back(r.name);
    return out;
  }();
  return names;
}

BenchPipeline named_recipe(std::string_view name) {
  const double half_pi = 0.5 * kPi;
  const double quarter_pi = 0.25 * kPi;
  const double phi_four_fifths = std::acos(std::sqrt(4.0 / 5.0));
  BenchPipeline p;
  p.delay = 0.0;
  p.combine = true;
  if (name == "E1") {
    p.source_theta = 0.0;
    p.hwp_phi = half_pi;
    p.soc1 = {half_pi, half_pi};
    p.soc0 = {0.0, 0.0};
    p.free_settings = {"soc0.phi", "soc0.theta", "delay"};
  } else if (name == "E2") {
    p.source_theta = 0.0;
    p.hwp_phi = phi_four_fifths;
    p.soc1 = {half_pi, half_pi};
    p.soc0 = {0.0, 0.0};
    p.free_settings = {"soc0.theta", "delay"};
  } else if (name == "E3") {
    p.source_theta = half_pi;
    p.hwp_phi = std::acos(std::sqrt(4.0 / 6.0));
    p.soc1 = {quarter_pi, 0.0};
    p.soc0 = {half_pi, half_pi};
    p.free_settings = {"delay"};
  } else if (name == "E4") {
    p.source_theta = half_pi;
    p.hwp_phi = half_pi;
    p.soc1 = {quarter_pi, 0.0};
    p.soc0 = {0.0, 0.0};
    p.free_settings = {"soc0.phi", "soc0.theta", "delay"};
  } else if (name == "E5") {
    p.source_theta = half_pi;
    p.hwp_phi = phi_four_fifths;
    p.soc1 = {0.0, 0.0};
    p.soc0 = {half_pi, half_pi};
    p.free_settings = {"soc1.theta", "delay"};
  } else if (name == "E6") {
    p.source_theta = half_pi;
    p.hwp_phi = phi_four_fifths;
    p.soc1 = {half_pi, 0.0};
    p.soc0 = {half_pi, half_pi};
    p.free_settings = {"delay"};
  } else {
    throw Error(ErrorCode::UnknownRecipe, "unknown recipe '" + std::string(name) + "'");
  }
  return p;
}

RecipeInfo recipe_info(std::string_view name) {
  for (const auto& r : kRecipes) {
    if (name != r.name) continue;
    auto target = target_state(name);
    const auto theory = separabilities(target);
    return {r.name, named_recipe(name), target, theory, r.c_theory, r.dot};
  }
  throw Error(ErrorCode::UnknownRecipe, "unknown recipe '" + std::string(name) + "'");
}

double simulate_projection(const ThreeQubitState& s, Subsystem sub, PauliAxis axis, int sign) {
  if (sign == 0) throw Error(ErrorCode::InvalidParameters, "projection sign must be +1 or -1");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double sgn = sign > 0 ? 1.0 : -1.0;
  Vector2c e;
  switch (axis) {
    case PauliAxis::X: e << inv_sqrt2, sgn * inv_sqrt2; break;
    case PauliAxis::Y: e << inv_sqrt2, Amplitude(0.0, sgn * inv_sqrt2); break;
    case PauliAxis::Z: e = sign > 0 ? Vector2c(1.0, 0.0) : Vector2c(0.0, 1.0); break;
  }
  const int bit = bit_of(sub);
  double p = 0.0;
  for (int rest = 0; rest < 8; ++rest) {
    if (rest & (1 << bit)) continue;
    const Amplitude amp = std::conj(e(0)) * s[static_cast<std::size_t>(rest)] +
                          std::conj(e(1)) * s[static_cast<std::size_t>(rest | (1 << bit))];
    p += std::norm(amp);
  }
  return p;
}

void TomographySettings::validate() const {
  if (shots < 1) throw Error(ErrorCode::InvalidParameters, "shots must be at least 1");
}

CoherenceVector TomographyResult::separabilities() const noexcept {
  return {subsystems[0].separability, subsystems[1].separability, subsystems[2].separability};
}

CoherenceVector TomographyResult::std_errors() const noexcept {
  return {subsystems[0].std_error, subsystems[1].std_error, subsystems[2].std_error};
}

TomographyResult tomography(const ThreeQubitState& s, const TomographySettings& t) {
  t.validate();
  TomographyResult result;
  const auto shots = static_cast<double>(t.shots);
  for (auto sub : kSubsystems) {
    auto& out = result.subsystems[static_cast<std::size_t>(sub)];
    std::array<double, 3> est{};
    std::array<double, 3> var{};
    for (int k = 0; k < 3; ++k) {
      const auto axis = static_cast<PauliAxis>(k);
      const double p_plus = simulate_projection(s, sub, axis, +1);
      const double p_minus = simulate_projection(s, sub, axis, -1);
      double n_plus = shots * p_plus;
      double n_minus = shots * p_minus;
      if (t.noise == Noise::Poisson) {
        CounterRng rng(t.seed, static_cast<std::uint64_t>(3 * static_cast<int>(sub) + k), StreamDomain::Tomography);
        auto draw = [&rng](double mean) -> double {
          if (mean <= 0.0) return 0.0;
          std::poisson_distribution<long long> poisson(mean);
          return static_cast<double>(poisson(rng));
        };
        n_plus = draw(n_plus);
        n_minus = draw(n_minus);
      }
      const double total = n_plus + n_minus;
      if (total <= 0.0) {
        throw Error(ErrorCode::EmptyCounts, std::string("no counts for subsystem ") + to_char(sub) + " axis " +
                                                std::to_string(k));
      }
      out.counts[static_cast<std::size_t>(k)] = {n_plus, n_minus};
      est[static_cast<std::size_t>(k)] = (n_plus - n_minus) / total;
      var[static_cast<std::size_t>(k)] = 4.0 * n_plus * n_minus / (total * total * total);
    }
    out.stokes = {est[0], est[1], est[2]};
    out.stokes_error = {std::sqrt(var[0]), std::sqrt(var[1]), std::sqrt(var[2])};
    const Amplitude i{0.0, 1.0};
    out.reconstructed << 0.5 * (1.0 + est[2]), 0.5 * (est[0] - i * est[1]), 0.5 * (est[0] + i * est[1]),
        0.5 * (1.0 - est[2]);
    out.separability_raw = out.stokes.norm();
    out.clamped = out.separability_raw > 1.0;
    out.separability = std::min(1.0, out.separability_raw);
    // First-order propagation through |s|; at the origin the gradient is
    // undefined and the radius of the noise ball is reported instead.
    double var_s = 0.0;
    if (out.separability_raw > 1e-12) {
      for (std::size_t k = 0; k < 3; ++k) {
        const double g = est[k] / out.separability_raw;
        var_s += g * g * var[k];
      }
    } else {
      var_s = var[0] + var[1] + var[2];
    }
    out.std_error = std::sqrt(var_s);
  }
  return result;
}

std::vector<TableRow> table_rows(const std::string& label, const BenchPipeline& p, const TomographySettings& t,
                                 const std::string& dot, std::optional<double> reference_c_theory) {
  const auto state = run_pipeline(p);
  const auto theory_s = separabilities(state);
  const double c_theory = reference_c_theory.value_or(genuine_coherence(theory_s));
  const auto measured = tomography(state, t);

  auto make_row = [&](bool theory, const CoherenceVector& s, const CoherenceVector& err) {
    TableRow row;
    row.beam = label;
    row.theory = theory;
    row.s = s;
    row.s_error = err;
    row.bc_minus_a = s.sb + s.sc - s.sa;
    row.ca_minus_b = s.sc + s.sa - s.sb;
    row.ab_minus_c = s.sa + s.sb - s.sc;
    row.c_abc = genuine_coherence(s);
    row.c_theory = c_theory;
    row.dot = dot.empty() ? nearest_vertex(s, 0.1) : dot;
    return row;
  };
  return {make_row(false, measured.separabilities(), measured.std_errors()), make_row(true, theory_s, {})};
}

std::vector<TableRow> reproduce_table(const TomographySettings& t) {
  std::vector<TableRow> rows;
  std::uint64_t k = 0;
  for (const auto& r : kRecipes) {
    TomographySettings beam_settings = t;
    beam_settings.seed = derive_seed(t.seed, k++);
    auto beam = table_rows(r.name, named_recipe(r.name), beam_settings, r.dot, r.c_theory);
    rows.insert(rows.end(), beam.begin(), beam.end());
  }
  return rows;
}

}  // namespace tricoh
