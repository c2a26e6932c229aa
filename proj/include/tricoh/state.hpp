#pragma once

#include <array>
#include <complex>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace tricoh {

using Amplitude = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

/// Tolerance on the norm of a constructed state.
inline constexpr double kNormTolerance = 1e-12;
/// Tolerance accepted on the norm of caller-supplied amplitudes.
inline constexpr double kInputNormTolerance = 1e-9;

enum class Subsystem { A = 0, B = 1, C = 2 };

inline constexpr std::array<Subsystem, 3> kSubsystems{Subsystem::A, Subsystem::B, Subsystem::C};

char to_char(Subsystem sub) noexcept;
Subsystem subsystem_from_char(char label);

/// Bit position of a subsystem inside the amplitude index: a is the most
/// significant bit, c the least.
constexpr int bit_of(Subsystem sub) noexcept { return 2 - static_cast<int>(sub); }

/// Pure three-qubit state with amplitudes d_000 .. d_111, index = 4a + 2b + c.
/// Always unit norm; construct through make_state or beam_to_state.
class ThreeQubitState {
public:
  using Amplitudes = std::array<Amplitude, 8>;

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t index) const { return amps_[index]; }
  Amplitude at(int a, int b, int c) const { return amps_[static_cast<std::size_t>(4 * a + 2 * b + c)]; }

  double norm() const noexcept;

  friend ThreeQubitState make_state(std::span<const Amplitude, 8> amplitudes, bool normalize);

private:
  explicit ThreeQubitState(const Amplitudes& amps) : amps_(amps) {}
  Amplitudes amps_{};
};

/// Validates amplitudes and returns a unit-norm state. Throws ZeroNorm when the
/// squared norm is below 1e-15 and NotNormalized when `normalize` is false and
/// the norm is off by more than kInputNormTolerance.
ThreeQubitState make_state(std::span<const Amplitude, 8> amplitudes, bool normalize = false);
ThreeQubitState make_state(const std::array<Amplitude, 8>& amplitudes, bool normalize = false);

/// Paraxial beam alpha |x>|G_x>|F_x> + beta |y>|G_y>|F_y>, with the four
/// component vectors given in the orthonormal {|G_0>,|G_1>} and {|F_0>,|F_1>}
/// bases.
struct BeamParameters {
  Amplitude alpha{1.0, 0.0};
  Amplitude beta{0.0, 0.0};
  std::array<Amplitude, 2> gx{Amplitude{1.0}, Amplitude{0.0}};
  std::array<Amplitude, 2> gy{Amplitude{1.0}, Amplitude{0.0}};
  std::array<Amplitude, 2> fx{Amplitude{1.0}, Amplitude{0.0}};
  std::array<Amplitude, 2> fy{Amplitude{1.0}, Amplitude{0.0}};

  /// <G_x|G_y>
  Amplitude delta() const noexcept;
  /// <F_x|F_y>
  Amplitude gamma() const noexcept;

  /// Throws InvalidParameters if any normalization invariant is violated.
  void validate() const;
};

ThreeQubitState beam_to_state(const BeamParameters& p);

/// 2x2 Hermitian, unit-trace, positive-semidefinite coherence matrix.
class CoherenceMatrix {
public:
  static constexpr double kTolerance = 1e-12;

  /// Throws InvalidParameters unless `m` is Hermitian, unit trace and PSD
  /// within kTolerance.
  static CoherenceMatrix from_matrix(const Matrix2c& m);

  const Matrix2c& matrix() const noexcept { return m_; }
  Amplitude operator()(int row, int col) const { return m_(row, col); }

private:
  explicit CoherenceMatrix(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

/// W_sub[m][n] = sum over the other two indices of d(m, rest) conj(d(n, rest)).
CoherenceMatrix reduced_matrix(const ThreeQubitState& s, Subsystem sub);

/// Applies a 2x2 unitary to one tensor factor. Throws NotUnitary when
/// ||u u^dagger - I|| exceeds 1e-10.
ThreeQubitState apply_local_unitary(const ThreeQubitState& s, Subsystem sub, const Matrix2c& u);

/// |<lhs|rhs>|^2
double fidelity(const ThreeQubitState& lhs, const ThreeQubitState& rhs) noexcept;

}  // namespace tricoh
