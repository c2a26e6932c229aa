#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical routines.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Amps = std::array<cd, 8>;

inline constexpr double kPi = std::numbers::pi;

inline Amps normalized(Amps a) {
  double n = 0.0;
  for (const auto& x : a) n += std::norm(x);
  n = std::sqrt(n);
  for (auto& x : a) x /= n;
  return a;
}

inline Amps ghz() {
  Amps a{};
  a[0] = a[7] = 1.0 / std::sqrt(2.0);
  return a;
}

inline Amps w_type() {
  Amps a{};
  a[1] = a[2] = a[4] = 1.0 / std::sqrt(3.0);
  return a;
}

inline Amps basis(int a, int b, int c) {
  Amps out{};
  out[static_cast<std::size_t>(4 * a + 2 * b + c)] = 1.0;
  return out;
}

/// 8x8 projector |psi><psi|.
inline Eigen::Matrix<cd, 8, 8> density(const Amps& a) {
  Eigen::Matrix<cd, 8, 1> v;
  for (int i = 0; i < 8; ++i) v(i) = a[static_cast<std::size_t>(i)];
  return v * v.adjoint();
}

/// Partial trace of the full density matrix down to one qubit (0 = a, the
/// most significant bit).
inline Eigen::Matrix2cd partial_trace(const Amps& a, int keep) {
  const auto rho = density(a);
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  const int shift = 2 - keep;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int rest_i = i & ~(1 << shift);
      const int rest_j = j & ~(1 << shift);
      if (rest_i != rest_j) continue;
      out((i >> shift) & 1, (j >> shift) & 1) += rho(i, j);
    }
  }
  return out;
}

/// Separability across the cut keep | rest from the Schmidt spectrum of the
/// complementary 4x4 reduction: the two nonzero eigenvalues equal those of
/// the kept qubit.
inline double schmidt_separability(const Amps& a, int keep) {
  const int shift = 2 - keep;
  Eigen::Matrix<cd, 2, 4> m = Eigen::Matrix<cd, 2, 4>::Zero();
  for (int i = 0; i < 8; ++i) {
    const int bit = (i >> shift) & 1;
    const int low = i & ((1 << shift) - 1);
    const int high = i >> (shift + 1);
    const int rest = (high << shift) | low;
    m(bit, rest) = a[static_cast<std::size_t>(i)];
  }
  const Eigen::Matrix4cd rest_rho = (m.transpose() * m.conjugate()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rest_rho);
  auto ev = solver.eigenvalues();
  std::vector<double> vals(ev.data(), ev.data() + 4);
  std::sort(vals.rbegin(), vals.rend());
  return (vals[0] - vals[1]) / (vals[0] + vals[1]);
}

/// tr(w sigma_k) by explicit matrix products.
inline std::array<double, 3> pauli_traces(const Eigen::Matrix2cd& w) {
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, cd(0, -1), cd(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {(w * sx).trace().real(), (w * sy).trace().real(), (w * sz).trace().real()};
}

/// Prepared beam written out term by term:
///   sin(phi) |1>(cos phi1 |x>|G_theta> + sin phi1 |y>|G_theta1>)
/// + cos(phi)/2 e^{i delta} |0>(cos phi0 |x>|G_theta> + sin phi0 |y>|G_theta0>)
/// normalized. Index = 4 polarization + 2 mode + path.
inline Amps interferometer_state(double theta, double phi, double phi0, double theta0, double phi1, double theta1,
                                 double delta) {
  Amps out{};
  auto add = [&](int path, int pol, double mode_angle, cd weight) {
    out[static_cast<std::size_t>(4 * pol + 0 + path)] += weight * std::cos(mode_angle);
    out[static_cast<std::size_t>(4 * pol + 2 + path)] += weight * std::sin(mode_angle);
  };
  const cd w1 = std::sin(phi);
  const cd w0 = std::cos(phi) / 2.0 * std::exp(cd(0, delta));
  add(1, 0, theta, w1 * std::cos(phi1));
  add(1, 1, theta1, w1 * std::sin(phi1));
  add(0, 0, theta, w0 * std::cos(phi0));
  add(0, 1, theta0, w0 * std::sin(phi0));
  return normalized(out);
}

inline double overlap_fidelity(const Amps& x, const Amps& y) {
  cd ip = 0.0;
  for (std::size_t i = 0; i < 8; ++i) ip += std::conj(x[i]) * y[i];
  return std::norm(ip);
}

/// Random 2x2 unitary from the QR factorization of a complex Gaussian matrix.
inline Eigen::Matrix2cd random_unitary(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = cd(n(gen), n(gen));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  return q;
}

inline Amps random_amps(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Amps a{};
  for (auto& x : a) x = cd(n(gen), n(gen));
  return normalized(a);
}

/// Random density matrix: a Gaussian Hermitian PSD matrix of unit trace.
inline Eigen::Matrix2cd random_density(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = cd(n(gen), n(gen));
  Eigen::Matrix2cd w = g * g.adjoint();
  w /= w.trace().real();
  return w;
}

/// Area of the slice x + y + z = t through the allowed part of the unit cube,
/// computed by clipping the positive-octant triangle against the cube faces
/// and the three slack half-spaces (Sutherland-Hodgman).
inline double clipped_slice_area(double t) {
  using P = Eigen::Vector3d;
  if (t <= 0.0 || t >= 3.0) return 0.0;
  std::vector<P> poly{P(t, 0, 0), P(0, t, 0), P(0, 0, t)};
  // Half-spaces n.p <= c.
  const std::vector<std::pair<P, double>> planes{
      {P(1, 0, 0), 1.0},  {P(0, 1, 0), 1.0},  {P(0, 0, 1), 1.0},
      {P(-1, 1, 1), 1.0}, {P(1, -1, 1), 1.0}, {P(1, 1, -1), 1.0},
  };
  for (const auto& [n, c] : planes) {
    std::vector<P> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const P& cur = poly[i];
      const P& nxt = poly[(i + 1) % poly.size()];
      const double dc = n.dot(cur) - c;
      const double dn = n.dot(nxt) - c;
      if (dc <= 0.0) next.push_back(cur);
      if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) next.push_back(cur + (nxt - cur) * (dc / (dc - dn)));
    }
    poly = std::move(next);
    if (poly.empty()) return 0.0;
  }
  P acc = P::Zero();
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) acc += (poly[i] - poly[0]).cross(poly[i + 1] - poly[0]);
  return 0.5 * acc.norm();
}

/// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Philox4x32-10 known-answer vectors from the Random123 distribution.
struct PhiloxKat {
  std::array<std::uint32_t, 4> counter;
  std::array<std::uint32_t, 2> key;
  std::array<std::uint32_t, 4> expected;
};

inline const std::array<PhiloxKat, 3>& philox_kats() {
  static const std::array<PhiloxKat, 3> kats{{
      {{0, 0, 0, 0}, {0, 0}, {0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}},
      {{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
       {0xffffffff, 0xffffffff},
       {0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}},
      {{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
       {0xa4093822, 0x299f31d0},
       {0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}},
  }};
  return kats;
}

}  // namespace oracle
