#include "tricoh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shards.hpp"
#include "tricoh/error.hpp"
#include "tricoh/random.hpp"

namespace tricoh {

namespace {

constexpr double kCubeSlack = 1e-12;

}  // namespace

double ConstraintSlacks::min() const noexcept { return std::min({slack_a, slack_b, slack_c}); }

double ConstraintSlacks::operator[](Subsystem sub) const noexcept {
  switch (sub) {
    case Subsystem::A: return slack_a;
    case Subsystem::B: return slack_b;
    case Subsystem::C: return slack_c;
  }
  return 0.0;
}

double DirectedCoherences::operator[](Subsystem sub) const noexcept {
  switch (sub) {
    case Subsystem::A: return c_a_bc;
    case Subsystem::B: return c_b_ca;
    case Subsystem::C: return c_c_ab;
  }
  return 0.0;
}

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::OriginTetra: return "origin-tetra-OABC";
    case Region::ApexTetra: return "apex-tetra-MABC";
    case Region::SharedFace: return "shared-face-ABC";
    case Region::ExcludedBCMD: return "excluded-BCMD";
    case Region::ExcludedCAME: return "excluded-CAME";
    case Region::ExcludedABMF: return "excluded-ABMF";
    case Region::Boundary: return "boundary";
  }
  return "unknown";
}

void require_in_cube(const CoherenceVector& v) {
  for (double s : {v.sa, v.sb, v.sc}) {
    if (!std::isfinite(s) || s < -kCubeSlack || s > 1.0 + kCubeSlack) {
      std::ostringstream msg;
      msg << "coherence vector (" << v.sa << ", " << v.sb << ", " << v.sc << ") is outside the unit cube";
      throw Error(ErrorCode::OutOfRange, msg.str());
    }
  }
}

ConstraintSlacks constraint_slacks(const CoherenceVector& v) {
  require_in_cube(v);
  return {1.0 - (v.sb + v.sc - v.sa), 1.0 - (v.sc + v.sa - v.sb), 1.0 - (v.sa + v.sb - v.sc)};
}

DirectedCoherences directed_coherences(const CoherenceVector& v) {
  require_in_cube(v);
  return {1.0 + v.sa - v.sb - v.sc, 1.0 + v.sb - v.sc - v.sa, 1.0 + v.sc - v.sa - v.sb};
}

double genuine_coherence(const CoherenceVector& v) {
  const auto d = directed_coherences(v);
  return std::min({d.c_a_bc, d.c_b_ca, d.c_c_ab});
}

std::vector<Subsystem> genuine_coherence_argmin(const CoherenceVector& v) {
  const auto d = directed_coherences(v);
  const double lowest = std::min({d.c_a_bc, d.c_b_ca, d.c_c_ab});
  std::vector<Subsystem> out;
  for (auto sub : kSubsystems) {
    if (d[sub] - lowest <= 1e-12) out.push_back(sub);
  }
  return out;
}

Region classify_point(const CoherenceVector& v, double tol) {
  const auto s = constraint_slacks(v);
  // At most one slack can be negative: slack_x + slack_y = 2 - 2 S_z >= 0.
  if (s.slack_a < -tol) return Region::ExcludedBCMD;
  if (s.slack_b < -tol) return Region::ExcludedCAME;
  if (s.slack_c < -tol) return Region::ExcludedABMF;
  if (s.min() <= tol) return Region::Boundary;
  const double total = v.total();
  if (std::abs(total - 1.0) <= tol) return Region::SharedFace;
  return total < 1.0 ? Region::OriginTetra : Region::ApexTetra;
}

std::string nearest_vertex(const CoherenceVector& v, double tol) {
  struct Named {
    const char* name;
    double x, y, z;
  };
  static constexpr Named kVertices[] = {
      {"O", 0, 0, 0}, {"A", 0, 0, 1}, {"B", 0, 1, 0}, {"C", 1, 0, 0},
      {"M", 1, 1, 1}, {"D", 0, 1, 1}, {"E", 1, 0, 1}, {"F", 1, 1, 0},
  };
  for (const auto& p : kVertices) {
    if (std::abs(v.sa - p.x) <= tol && std::abs(v.sb - p.y) <= tol && std::abs(v.sc - p.z) <= tol) return p.name;
  }
  return {};
}

double cross_section_area(double total) {
  if (!std::isfinite(total) || total < 0.0 || total > 3.0) {
    throw Error(ErrorCode::OutOfRange, "total separability must lie in [0, 3]");
  }
  // Equilateral slices: side sqrt(2) t below ABC, sqrt(2) (3 - t) / 2 above it.
  const double scale = total <= 1.0 ? total : 0.5 * (3.0 - total);
  return 0.5 * std::numbers::sqrt3 * scale * scale;
}

CoherenceVector cube_sample(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index, StreamDomain::CubeSample);
  const double x = rng.uniform();
  const double y = rng.uniform();
  const double z = rng.uniform();
  return {x, y, z};
}

VolumeEstimate allowed_volume_mc(std::uint64_t n, std::uint64_t seed, unsigned shards, double min_slack) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "sample count must be positive");
  shards = std::max(1u, shards);
  const auto partials = detail::run_sharded<std::uint64_t>(
      n, shards, [&](unsigned, std::uint64_t begin, std::uint64_t end, std::uint64_t& hits) {
        for (std::uint64_t i = begin; i < end; ++i) {
          if (constraint_slacks(cube_sample(seed, i)).min() >= min_slack) ++hits;
        }
      });
  VolumeEstimate out;
  out.n = n;
  out.seed = seed;
  out.shards = shards;
  for (auto h : partials) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(n);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n));
  return out;
}

Mesh mesh_export() {
  Mesh mesh;
  // O, A, B, C, M
  mesh.vertices = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  mesh.faces = {
      // OABC
      {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2},
      // MABC
      {1, 2, 3}, {4, 2, 1}, {4, 3, 2}, {4, 1, 3},
  };
  return mesh;
}

std::string to_off(const Mesh& mesh) {
  std::ostringstream out;
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const auto& v : mesh.vertices) out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  return out.str();
}

}  // namespace tricoh
