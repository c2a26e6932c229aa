#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tricoh/measures.hpp"
#include "tricoh/state.hpp"

namespace tricoh {

// Slot mapping on the bench: a = polarization (|x> = 0, |y> = 1),
// b = transverse mode (HG10 = 0, HG01 = 1), c = interferometer path.
// A first-order mode at orientation theta is |G_theta> = cos theta |HG10> + sin theta |HG01>.

using Field = Eigen::Matrix<Amplitude, 8, 1>;

struct SocSettings {
  double phi = 0.0;    // HWP: branch polarization becomes cos(phi)|x> + sin(phi)|y>
  double theta = 0.0;  // Dove prism: y-polarized mode becomes |G_theta>
};

/// Settings of the preparation interferometer. Angles in radians.
struct BenchPipeline {
  double source_theta = 0.0;  // SLM mode, launched with |y> polarization
  double hwp_phi = 0.0;       // first HWP, sets the PBS split
  SocSettings soc0;           // controller in path 0
  SocSettings soc1;           // controller in path 1
  double delay = 0.0;         // phase delay on path 0
  bool combine = true;        // BS2 superposes the paths (false: parallel outputs)
  /// Settings the recipe leaves unconstrained; they are fixed to 0.
  std::vector<std::string> free_settings;

  void validate() const;
};

/// One optical element acting linearly on the three-slot field.
struct OpticalElement {
  enum class Kind {
    SourceMode,          // replaces the field with |y>|G_theta>|path 0>
    HalfWavePlate,       // reflection about fast axis `angle` on `path` (-1: all paths)
    DovePrism,           // mode reflection about `angle`, y-polarized light on `path`
    PolarizingSplitter,  // x stays in path 0, y is routed to path 1
    BalancedSplitter,    // BS1 double pass on path 0: amplitude 1/2
    PhaseDelay,          // e^{i angle} on path 0
    SpinOrbitController, // HWP then y-conditioned Dove prism on `path`
  };

  Kind kind = Kind::SourceMode;
  double angle = 0.0;
  int path = -1;
  /// SpinOrbitController only: incoming polarization and mode orientations,
  /// and the target settings.
  double input_polarization = 0.0;
  double input_mode = 0.0;
  SocSettings soc;

  /// Whether the operator preserves the norm of every input.
  bool norm_preserving() const noexcept;
  Field apply(const Field& in) const;
  std::string describe() const;
};

/// Ordered element list realizing a pipeline.
std::vector<OpticalElement> pipeline_elements(const BenchPipeline& p);

/// Field after the last element, before renormalization.
Field propagate(const BenchPipeline& p);

/// Post-selected, renormalized output state. Throws ZeroNorm if every branch
/// is extinguished.
ThreeQubitState run_pipeline(const BenchPipeline& p);

/// Path-definite product input |path>|polarization angle>|G_mode>.
struct BranchInput {
  int path = 0;
  double polarization_angle = 0.0;  // 0: |x>, pi/2: |y>
  double mode_angle = 0.0;
  Amplitude amplitude{1.0};
};

/// Output of one controller: cos(phi)|x>|G_mode> + sin(phi)|y>|G_theta_i>
/// on the input path, as a field.
Field soc_transform(const BranchInput& in, double phi, double theta_i);

struct RecipeInfo {
  std::string name;
  BenchPipeline pipeline;
  ThreeQubitState target;
  CoherenceVector theory;   // separabilities of the target state
  double reference_c_theory;  // C^T column of the reference table
  std::string dot;            // label of the point in the cube figure
};

const std::vector<std::string>& recipe_names();
BenchPipeline named_recipe(std::string_view name);
RecipeInfo recipe_info(std::string_view name);

enum class PauliAxis { X = 0, Y = 1, Z = 2 };

/// Probability of the +1 (sign > 0) or -1 outcome of a Pauli measurement on
/// one subsystem.
double simulate_projection(const ThreeQubitState& s, Subsystem sub, PauliAxis axis, int sign);

enum class Noise { None, Poisson };

struct TomographySettings {
  std::uint64_t shots = 10000;  // expected counts per basis pair
  Noise noise = Noise::None;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SubsystemTomography {
  std::array<std::array<double, 2>, 3> counts{};  // [axis][+, -]
  StokesVector stokes;
  StokesVector stokes_error;
  Matrix2c reconstructed = Matrix2c::Zero();  // (I + sum s_k sigma_k) / 2, may be unphysical
  double separability_raw = 0.0;  // |s|
  double separability = 0.0;      // min(1, |s|)
  double std_error = 0.0;
  bool clamped = false;
};

struct TomographyResult {
  std::array<SubsystemTomography, 3> subsystems;

  CoherenceVector separabilities() const noexcept;
  CoherenceVector std_errors() const noexcept;
};

/// Six Pauli projections per subsystem. With Poisson noise the counts are
/// Poisson(shots * p); otherwise they are the expectations. Throws EmptyCounts
/// if a basis pair records nothing.
TomographyResult tomography(const ThreeQubitState& s, const TomographySettings& t);

struct TableRow {
  std::string beam;
  bool theory = false;
  CoherenceVector s;
  CoherenceVector s_error;
  double bc_minus_a = 0.0;  // S_b + S_c - S_a
  double ca_minus_b = 0.0;  // S_c + S_a - S_b
  double ab_minus_c = 0.0;  // S_a + S_b - S_c
  double c_abc = 0.0;
  double c_theory = 0.0;
  std::string dot;
};

/// Measured and theory rows for one prepared beam. `reference_c_theory`, when
/// set, replaces the computed C^T.
std::vector<TableRow> table_rows(const std::string& label, const BenchPipeline& p, const TomographySettings& t,
                                 const std::string& dot = {}, std::optional<double> reference_c_theory = {});

/// Rows for E1..E6 (measured then theory per beam). Beam k uses trial seed
/// derive_seed(t.seed, k).
std::vector<TableRow> reproduce_table(const TomographySettings& t);

}  // namespace tricoh
