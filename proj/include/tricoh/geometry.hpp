#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricoh/measures.hpp"

namespace tricoh {

/// slack_x = 1 - (S_j + S_k - S_x) for {x, j, k} a permutation of {a, b, c}.
/// All three are non-negative for any pure state.
struct ConstraintSlacks {
  double slack_a = 0.0;
  double slack_b = 0.0;
  double slack_c = 0.0;

  double min() const noexcept;
  double operator[](Subsystem sub) const noexcept;
};

/// C_{x->jk} = 1 + S_x - S_j - S_k.
struct DirectedCoherences {
  double c_a_bc = 0.0;
  double c_b_ca = 0.0;
  double c_c_ab = 0.0;

  double operator[](Subsystem sub) const noexcept;
};

/// Regions of the unit coherence cube. The three excluded tetrahedra are the
/// corners cut off by slack_a < 0 (corner (0,1,1)), slack_b < 0 (corner
/// (1,0,1)) and slack_c < 0 (corner (1,1,0)) respectively.
enum class Region {
  OriginTetra,
  ApexTetra,
  SharedFace,
  ExcludedBCMD,
  ExcludedCAME,
  ExcludedABMF,
  Boundary,
};

std::string_view to_string(Region region) noexcept;

inline constexpr double kBoundaryTolerance = 1e-9;

/// Each component must lie in [0, 1] up to 1e-12, otherwise OutOfRange.
void require_in_cube(const CoherenceVector& v);

ConstraintSlacks constraint_slacks(const CoherenceVector& v);
DirectedCoherences directed_coherences(const CoherenceVector& v);

/// Minimum of the three directed coherences.
double genuine_coherence(const CoherenceVector& v);
/// Subsystems whose directed coherence attains the minimum (within 1e-12).
std::vector<Subsystem> genuine_coherence_argmin(const CoherenceVector& v);

Region classify_point(const CoherenceVector& v, double tol = kBoundaryTolerance);

/// Named vertex of the cube figure (O, A, B, C, M, D, E, F) within `tol` of
/// the point, or an empty string.
std::string nearest_vertex(const CoherenceVector& v, double tol = 1e-6);

/// Area of the slice S_a + S_b + S_c = total through the allowed region, in
/// the plane's own metric.
double cross_section_area(double total);

struct VolumeEstimate {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Fraction of uniform cube points whose three slacks are all >= min_slack.
/// Sample i draws from its own counter stream, so the estimate depends only on
/// (n, seed) and not on the number of shards.
VolumeEstimate allowed_volume_mc(std::uint64_t n, std::uint64_t seed, unsigned shards = 1, double min_slack = 0.0);

/// Uniform point in the unit cube for sample `index` of stream `seed`.
CoherenceVector cube_sample(std::uint64_t seed, std::uint64_t index);

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;
};

/// Vertices O, A, B, C, M and the outward-oriented faces of the tetrahedra
/// OABC and MABC (the shared face ABC appears once per solid).
Mesh mesh_export();
std::string to_off(const Mesh& mesh);

}  // namespace tricoh
