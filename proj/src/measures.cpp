#include "tricoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tricoh/error.hpp"

namespace tricoh {

namespace {

double checked_trace(const Matrix2c& w) {
  const double tr = (w(0, 0) + w(1, 1)).real();
  if (!std::isfinite(tr) || tr <= 0.0) {
    throw Error(ErrorCode::NumericalDomain, "coherence matrix trace must be positive");
  }
  return tr;
}

// Maps a squared separability onto [0, 1], rejecting values that only an
// invalid matrix can produce.
double root_of_radicand(double radicand) {
  if (!std::isfinite(radicand) || radicand < -kRadicandTolerance || radicand > 1.0 + kRadicandTolerance) {
    throw Error(ErrorCode::NumericalDomain, "separability radicand " + std::to_string(radicand) + " outside [0, 1]");
  }
  return std::sqrt(std::clamp(radicand, 0.0, 1.0));
}

}  // namespace

double StokesVector::norm() const noexcept { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

EigenPair hermitian_eigenvalues(const Matrix2c& w) {
  const double a = w(0, 0).real();
  const double d = w(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(w(0, 1)));
  return {mean + half_gap, mean - half_gap};
}

double separability_det(const Matrix2c& w) {
  const double tr = checked_trace(w);
  const Amplitude det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
  return root_of_radicand(1.0 - 4.0 * det.real() / (tr * tr));
}

double separability_det(const CoherenceMatrix& w) { return separability_det(w.matrix()); }

double separability_eig(const Matrix2c& w) {
  checked_trace(w);
  const auto [l1, l2] = hermitian_eigenvalues(w);
  const double ratio = std::abs(l1 - l2) / (l1 + l2);
  if (l2 < -kRadicandTolerance) {
    throw Error(ErrorCode::NumericalDomain, "coherence matrix has a negative eigenvalue");
  }
  return root_of_radicand(ratio * ratio);
}

double separability_eig(const CoherenceMatrix& w) { return separability_eig(w.matrix()); }

CoherenceVector separabilities(const ThreeQubitState& s) {
  return {separability_eig(reduced_matrix(s, Subsystem::A)), separability_eig(reduced_matrix(s, Subsystem::B)),
          separability_eig(reduced_matrix(s, Subsystem::C))};
}

CoherenceVector closed_form_separabilities(const BeamParameters& p) {
  p.validate();
  // 1 - 4|ab|^2 (1 - X) rewritten as ((|a|^2 - |b|^2)^2 + 4|ab|^2 X) / (|a|^2 + |b|^2)^2,
  // which avoids cancellation near S = 0.
  const double a2 = std::norm(p.alpha);
  const double b2 = std::norm(p.beta);
  const double diff2 = (a2 - b2) * (a2 - b2);
  const double ab4 = 4.0 * a2 * b2;
  const double scale = (a2 + b2) * (a2 + b2);
  const double delta2 = std::norm(p.delta());
  const double gamma2 = std::norm(p.gamma());
  return {root_of_radicand((diff2 + ab4 * delta2 * gamma2) / scale), root_of_radicand((diff2 + ab4 * delta2) / scale),
          root_of_radicand((diff2 + ab4 * gamma2) / scale)};
}

StokesVector stokes_vector(const Matrix2c& w) {
  // tr(W sigma_x) = W01 + W10, tr(W sigma_y) = i (W01 - W10), tr(W sigma_z) = W00 - W11.
  const Amplitude i{0.0, 1.0};
  return {(w(0, 1) + w(1, 0)).real(), (i * (w(0, 1) - w(1, 0))).real(), (w(0, 0) - w(1, 1)).real()};
}

StokesVector stokes_vector(const CoherenceMatrix& w) { return stokes_vector(w.matrix()); }

}  // namespace tricoh
