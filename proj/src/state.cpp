#include "tricoh/state.hpp"

#include <cmath>
#include <sstream>

#include "tricoh/error.hpp"

namespace tricoh {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NumericalDomain: return "NumericalDomain";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateBranch: return "DegenerateBranch";
    case ErrorCode::UnknownRecipe: return "UnknownRecipe";
    case ErrorCode::EmptyCounts: return "EmptyCounts";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

char to_char(Subsystem sub) noexcept {
  switch (sub) {
    case Subsystem::A: return 'a';
    case Subsystem::B: return 'b';
    case Subsystem::C: return 'c';
  }
  return '?';
}

Subsystem subsystem_from_char(char label) {
  switch (label) {
    case 'a': case 'A': return Subsystem::A;
    case 'b': case 'B': return Subsystem::B;
    case 'c': case 'C': return Subsystem::C;
    default: break;
  }
  throw Error(ErrorCode::InvalidParameters, std::string("unknown subsystem label '") + label + "'");
}

double ThreeQubitState::norm() const noexcept {
  double sum = 0.0;
  for (const auto& d : amps_) sum += std::norm(d);
  return std::sqrt(sum);
}

ThreeQubitState make_state(std::span<const Amplitude, 8> amplitudes, bool normalize) {
  ThreeQubitState::Amplitudes amps{};
  double norm2 = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    const Amplitude d = amplitudes[i];
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      throw Error(ErrorCode::InvalidParameters, "amplitude " + std::to_string(i) + " is not finite");
    }
    amps[i] = d;
    norm2 += std::norm(d);
  }
  if (norm2 < 1e-15) throw Error(ErrorCode::ZeroNorm, "amplitudes have vanishing norm");

  const double norm = std::sqrt(norm2);
  if (!normalize && std::abs(norm - 1.0) > kInputNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state norm " << norm << " deviates from 1";
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
  // Always rescale so the stored state meets the 1e-12 construction tolerance.
  for (auto& d : amps) d /= norm;
  return ThreeQubitState(amps);
}

ThreeQubitState make_state(const std::array<Amplitude, 8>& amplitudes, bool normalize) {
  return make_state(std::span<const Amplitude, 8>(amplitudes), normalize);
}

namespace {

Amplitude inner(const std::array<Amplitude, 2>& lhs, const std::array<Amplitude, 2>& rhs) noexcept {
  return std::conj(lhs[0]) * rhs[0] + std::conj(lhs[1]) * rhs[1];
}

void require_unit(const std::array<Amplitude, 2>& v, const char* name) {
  for (const auto& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::InvalidParameters, std::string(name) + " has a non-finite component");
    }
  }
  const double n2 = std::norm(v[0]) + std::norm(v[1]);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::InvalidParameters, std::string(name) + " is not a unit vector");
  }
}

}  // namespace

Amplitude BeamParameters::delta() const noexcept { return inner(gx, gy); }
Amplitude BeamParameters::gamma() const noexcept { return inner(fx, fy); }

void BeamParameters::validate() const {
  for (const auto& c : {alpha, beta}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::InvalidParameters, "alpha/beta must be finite");
    }
  }
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::InvalidParameters, "|alpha|^2 + |beta|^2 must equal 1");
  }
  require_unit(gx, "gx");
  require_unit(gy, "gy");
  require_unit(fx, "fx");
  require_unit(fy, "fy");
}

ThreeQubitState beam_to_state(const BeamParameters& p) {
  p.validate();
  std::array<Amplitude, 8> d{};
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      d[static_cast<std::size_t>(2 * j + k)] = p.alpha * p.gx[j] * p.fx[k];
      d[static_cast<std::size_t>(4 + 2 * j + k)] = p.beta * p.gy[j] * p.fy[k];
    }
  }
  return make_state(d, true);
}

CoherenceMatrix CoherenceMatrix::from_matrix(const Matrix2c& m) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
        throw Error(ErrorCode::InvalidParameters, "coherence matrix has non-finite entries");
      }
    }
  }
  if (std::abs(m(0, 1) - std::conj(m(1, 0))) > kTolerance || std::abs(m(0, 0).imag()) > kTolerance ||
      std::abs(m(1, 1).imag()) > kTolerance) {
    throw Error(ErrorCode::InvalidParameters, "coherence matrix is not Hermitian");
  }
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  if (std::abs(a + d - 1.0) > kTolerance) {
    throw Error(ErrorCode::InvalidParameters, "coherence matrix trace must be 1");
  }
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  if (0.5 * (a + d) - half_gap < -kTolerance) {
    throw Error(ErrorCode::InvalidParameters, "coherence matrix is not positive semidefinite");
  }
  return CoherenceMatrix(m);
}

CoherenceMatrix reduced_matrix(const ThreeQubitState& s, Subsystem sub) {
  const int bit = bit_of(sub);
  Matrix2c w = Matrix2c::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      // Same indices on the traced-out subsystems.
      if (((i ^ k) & ~(1 << bit)) != 0) continue;
      const int m = (i >> bit) & 1;
      const int n = (k >> bit) & 1;
      w(m, n) += s[static_cast<std::size_t>(i)] * std::conj(s[static_cast<std::size_t>(k)]);
    }
  }
  // Enforce exact Hermiticity; the two off-diagonal sums agree to round-off.
  const Amplitude off = 0.5 * (w(0, 1) + std::conj(w(1, 0)));
  w(0, 1) = off;
  w(1, 0) = std::conj(off);
  w(0, 0) = w(0, 0).real();
  w(1, 1) = w(1, 1).real();
  return CoherenceMatrix::from_matrix(w);
}

ThreeQubitState apply_local_unitary(const ThreeQubitState& s, Subsystem sub, const Matrix2c& u) {
  if ((u * u.adjoint() - Matrix2c::Identity()).norm() > 1e-10) {
    throw Error(ErrorCode::NotUnitary, "local operator is not unitary");
  }
  const int bit = bit_of(sub);
  std::array<Amplitude, 8> out{};
  for (int i = 0; i < 8; ++i) {
    const int m = (i >> bit) & 1;
    const int base = i & ~(1 << bit);
    out[static_cast<std::size_t>(i)] =
        u(m, 0) * s[static_cast<std::size_t>(base)] + u(m, 1) * s[static_cast<std::size_t>(base | (1 << bit))];
  }
  return make_state(out, true);
}

double fidelity(const ThreeQubitState& lhs, const ThreeQubitState& rhs) noexcept {
  Amplitude overlap{};
  for (std::size_t i = 0; i < 8; ++i) overlap += std::conj(lhs[i]) * rhs[i];
  return std::norm(overlap);
}

}  // namespace tricoh
