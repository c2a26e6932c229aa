#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tricoh/geometry.hpp"
#include "tricoh/measures.hpp"
#include "tricoh/state.hpp"

namespace tricoh {

/// Haar-random pure state: eight standard complex Gaussians, normalized.
/// `index` selects the sample within the seed's stream; sweep(n, seed) visits
/// indices 0 .. n-1.
ThreeQubitState haar_random_state(std::uint64_t seed, std::uint64_t index = 0);

/// Eigen-decomposition of one coherence matrix. Eigenvectors carry the phase
/// convention "first nonzero component real and positive".
struct EigenDecomposition {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Vector2c phi1 = Vector2c::Zero();
  Vector2c phi2 = Vector2c::Zero();
};

EigenDecomposition eigen_decompose(const Matrix2c& w);

/// Coefficients of the state in the product eigenbasis, split along the a-cut:
///   |psi> = sqrt(l1a) |phi1a> sum_j x_j |b c>_j + sqrt(l2a) |phi2a> sum_j y_j |b c>_j
/// with j = 1..4 ordering (b1 c1), (b1 c2), (b2 c1), (b2 c2).
struct AppendixCoefficients {
  std::array<Amplitude, 4> x{};
  std::array<Amplitude, 4> y{};
};

struct Decomposition {
  std::array<EigenDecomposition, 3> eigen;  // indexed by Subsystem
  AppendixCoefficients coefficients;
  /// True when lambda2 of W_a is below kDegenerateLambda: the state factors
  /// across the a|bc cut and y is an arbitrary unit vector orthogonal to x.
  bool degenerate_branch = false;
};

inline constexpr double kDegenerateLambda = 1e-12;

enum class DegeneratePolicy { SingleBranch, Throw };

/// Throws DegenerateBranch under DegeneratePolicy::Throw when the a-cut is a
/// product; otherwise completes y by Gram-Schmidt.
Decomposition decompose_in_eigenbases(const ThreeQubitState& s,
                                      DegeneratePolicy policy = DegeneratePolicy::SingleBranch);

/// Rebuilds the state from its eigenbasis expansion.
ThreeQubitState reconstruct(const Decomposition& d);

struct Check {
  double value = 0.0;  // residual, or bound violation (positive = violated)
  bool pass = false;
};

/// Constructive verification of the a-cut inequality 1 + S_a >= S_b + S_c
/// through the eigenbasis expansion, plus a direct check of all three slacks.
struct ProofReport {
  bool degenerate_branch = false;
  double tolerance = 0.0;

  Check reconstruction;   // ||psi - rebuilt||, global phase removed
  Check norm_x;           // | sum |x_j|^2 - 1 |
  Check norm_y;           // | sum |y_j|^2 - 1 |
  Check orthogonality;    // | sum x_j conj(y_j) |
  std::array<Check, 4> eigen_identities;  // lambda1b, lambda2b, lambda1c, lambda2c

  // Inequality chain for S_b + S_c; each bound must not fall below the previous.
  double sum_bc = 0.0;         // S_b + S_c from the reduced matrices
  double expansion = 0.0;      // 2 - 2 l1a (|x2|^2+|x3|^2+2|x4|^2) - 2 l2a (...)
  double bound_drop_x4 = 0.0;  // 2 - 2 l1a sum_{2..4}|x|^2 - 2 l2a sum_{2..4}|y|^2
  double bound_lambda2 = 0.0;  // 2 - 2 l2a sum_{2..4}(|x|^2+|y|^2)
  double first_weight = 0.0;   // |x1|^2 + |y1|^2, at most 1
  double final_bound = 0.0;    // 2 - 2 l2a
  double one_plus_sa = 0.0;    // 1 + S_a
  Check expansion_identity;    // |sum_bc - expansion|
  Check chain_step1;           // expansion <= bound_drop_x4
  Check chain_step2;           // bound_drop_x4 <= bound_lambda2
  Check chain_step3;           // first_weight <= 1
  Check chain_final;           // bound_lambda2 <= final_bound and final_bound == 1 + S_a
  Check inequality;            // sum_bc <= 1 + S_a

  ConstraintSlacks slacks;
  Check all_slacks;            // min slack >= -tol

  bool all_pass() const noexcept;
};

ProofReport verify_appendix(const ThreeQubitState& s, double tol = 1e-9);

struct SweepStatistics {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  std::uint64_t violations = 0;  // states with a slack below -1e-9
  double min_slack = 0.0;
  double min_c_abc = 0.0;
  double max_c_abc = 0.0;
  CoherenceVector s_min;
  CoherenceVector s_max;
  unsigned bins = 0;
  std::vector<std::uint64_t> counts;  // C_abc histogram over [0, 1]

  bool operator==(const SweepStatistics&) const = default;
};

inline constexpr double kViolationTolerance = 1e-9;

/// Samples haar_random_state(seed, i) for i < n. Results are identical for any
/// shard count.
SweepStatistics sweep(std::uint64_t n, std::uint64_t seed, unsigned bins = 20, unsigned shards = 1);

}  // namespace tricoh
