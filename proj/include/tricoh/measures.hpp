#pragma once

#include <array>

#include "tricoh/state.hpp"

namespace tricoh {

/// (S_a, S_b, S_c), each in [0, 1].
struct CoherenceVector {
  double sa = 0.0;
  double sb = 0.0;
  double sc = 0.0;

  double operator[](Subsystem sub) const noexcept {
    switch (sub) {
      case Subsystem::A: return sa;
      case Subsystem::B: return sb;
      case Subsystem::C: return sc;
    }
    return 0.0;
  }
  double total() const noexcept { return sa + sb + sc; }
};

/// Pauli expectations tr(W sigma_k), k = x, y, z.
struct StokesVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double norm() const noexcept;
};

/// Eigenvalues of a 2x2 Hermitian matrix, largest first.
struct EigenPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Closed-form eigenvalues from trace and the off-diagonal gap.
EigenPair hermitian_eigenvalues(const Matrix2c& w);

/// Radicand values in [-1e-9, 0) clamp to zero; further out throws NumericalDomain.
inline constexpr double kRadicandTolerance = 1e-9;

/// sqrt(1 - 4 det(W) / tr(W)^2). Accepts raw matrices so that non-physical
/// inputs reach the NumericalDomain check.
double separability_det(const Matrix2c& w);
double separability_det(const CoherenceMatrix& w);

/// |lambda1 - lambda2| / (lambda1 + lambda2).
double separability_eig(const Matrix2c& w);
double separability_eig(const CoherenceMatrix& w);

/// Separabilities of the three single-subsystem cuts, via the eigenvalue route.
CoherenceVector separabilities(const ThreeQubitState& s);

/// Closed forms in terms of |alpha beta|, delta and gamma.
CoherenceVector closed_form_separabilities(const BeamParameters& p);

StokesVector stokes_vector(const Matrix2c& w);
StokesVector stokes_vector(const CoherenceMatrix& w);

}  // namespace tricoh
