#include "tricoh/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shards.hpp"
#include "tricoh/error.hpp"
#include "tricoh/random.hpp"

namespace tricoh {

ThreeQubitState haar_random_state(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index, StreamDomain::HaarState);
  std::array<Amplitude, 8> d{};
  for (auto& amp : d) {
    const auto [re, im] = rng.normal_pair();
    amp = {re, im};
  }
  return make_state(d, true);
}

namespace {

constexpr double kPhaseThreshold = 1e-14;

Vector2c fix_phase(Vector2c v) {
  for (int i = 0; i < 2; ++i) {
    const double mag = std::abs(v(i));
    if (mag > kPhaseThreshold) {
      v *= std::conj(v(i)) / mag;
      v(i) = mag;
      break;
    }
  }
  return v;
}

std::size_t index_of(int a, int b, int c) { return static_cast<std::size_t>(4 * a + 2 * b + c); }

}  // namespace

EigenDecomposition eigen_decompose(const Matrix2c& w) {
  const auto [l1, l2] = hermitian_eigenvalues(w);
  const Amplitude off = w(0, 1);
  const double a = w(0, 0).real();
  const double d = w(1, 1).real();

  // Two candidate eigenvectors for l1; keep the better-conditioned one.
  const Vector2c from_row0(off, l1 - a);
  const Vector2c from_row1(l1 - d, std::conj(off));
  Vector2c phi1 = from_row0.squaredNorm() >= from_row1.squaredNorm() ? from_row0 : from_row1;
  if (phi1.norm() < 1e-150) {
    // Scalar matrix: every vector is an eigenvector.
    phi1 = Vector2c(1.0, 0.0);
  }
  phi1.normalize();
  phi1 = fix_phase(phi1);
  Vector2c phi2(-std::conj(phi1(1)), std::conj(phi1(0)));
  phi2 = fix_phase(phi2);
  return {l1, l2, phi1, phi2};
}

Decomposition decompose_in_eigenbases(const ThreeQubitState& s, DegeneratePolicy policy) {
  Decomposition out;
  for (auto sub : kSubsystems) {
    out.eigen[static_cast<std::size_t>(sub)] = eigen_decompose(reduced_matrix(s, sub).matrix());
  }
  const auto& ea = out.eigen[0];
  const auto& eb = out.eigen[1];
  const auto& ec = out.eigen[2];

  // Projections <phi_p^a phi_m^b phi_n^c | psi>.
  std::array<std::array<Amplitude, 4>, 2> proj{};
  const Vector2c* pa[2] = {&ea.phi1, &ea.phi2};
  const Vector2c* pb[2] = {&eb.phi1, &eb.phi2};
  const Vector2c* pc[2] = {&ec.phi1, &ec.phi2};
  for (int p = 0; p < 2; ++p) {
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        Amplitude acc{};
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
              acc += std::conj((*pa[p])(i) * (*pb[m])(j) * (*pc[n])(k)) * s[index_of(i, j, k)];
            }
          }
        }
        proj[static_cast<std::size_t>(p)][static_cast<std::size_t>(2 * m + n)] = acc;
      }
    }
  }

  auto& x = out.coefficients.x;
  auto& y = out.coefficients.y;
  const double root1 = std::sqrt(ea.lambda1);
  for (std::size_t j = 0; j < 4; ++j) x[j] = proj[0][j] / root1;

  if (ea.lambda2 > kDegenerateLambda) {
    const double root2 = std::sqrt(ea.lambda2);
    for (std::size_t j = 0; j < 4; ++j) y[j] = proj[1][j] / root2;
    return out;
  }

  if (policy == DegeneratePolicy::Throw) {
    throw Error(ErrorCode::DegenerateBranch, "state is a product across the a|bc cut");
  }
  out.degenerate_branch = true;
  // Single-branch convention: y is the first basis vector not parallel to x,
  // orthogonalized against x.
  for (std::size_t e = 0; e < 4; ++e) {
    std::array<Amplitude, 4> cand{};
    cand[e] = 1.0;
    Amplitude overlap{};
    for (std::size_t j = 0; j < 4; ++j) overlap += std::conj(x[j]) * cand[j];
    double n2 = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      cand[j] -= overlap * x[j];
      n2 += std::norm(cand[j]);
    }
    if (n2 > 0.25) {
      const double inv = 1.0 / std::sqrt(n2);
      for (std::size_t j = 0; j < 4; ++j) y[j] = cand[j] * inv;
      break;
    }
  }
  return out;
}

ThreeQubitState reconstruct(const Decomposition& d) {
  const auto& ea = d.eigen[0];
  const auto& eb = d.eigen[1];
  const auto& ec = d.eigen[2];
  const Vector2c* pb[2] = {&eb.phi1, &eb.phi2};
  const Vector2c* pc[2] = {&ec.phi1, &ec.phi2};
  const double r1 = std::sqrt(std::max(ea.lambda1, 0.0));
  const double r2 = std::sqrt(std::max(ea.lambda2, 0.0));

  std::array<Amplitude, 8> amps{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        Amplitude acc{};
        for (int m = 0; m < 2; ++m) {
          for (int n = 0; n < 2; ++n) {
            const auto jj = static_cast<std::size_t>(2 * m + n);
            const Amplitude bc = (*pb[m])(j) * (*pc[n])(k);
            acc += (r1 * ea.phi1(i) * d.coefficients.x[jj] + r2 * ea.phi2(i) * d.coefficients.y[jj]) * bc;
          }
        }
        amps[index_of(i, j, k)] = acc;
      }
    }
  }
  return make_state(amps, true);
}

bool ProofReport::all_pass() const noexcept {
  bool ok = reconstruction.pass && norm_x.pass && norm_y.pass && orthogonality.pass && expansion_identity.pass &&
            chain_step1.pass && chain_step2.pass && chain_step3.pass && chain_final.pass && inequality.pass &&
            all_slacks.pass;
  for (const auto& c : eigen_identities) ok = ok && c.pass;
  return ok;
}

ProofReport verify_appendix(const ThreeQubitState& s, double tol) {
  ProofReport r;
  r.tolerance = tol;
  const auto d = decompose_in_eigenbases(s, DegeneratePolicy::SingleBranch);
  r.degenerate_branch = d.degenerate_branch;
  const auto& x = d.coefficients.x;
  const auto& y = d.coefficients.y;
  const auto& ea = d.eigen[0];
  const auto& eb = d.eigen[1];
  const auto& ec = d.eigen[2];

  auto residual = [tol](double value) { return Check{value, value <= tol}; };
  // A bound check: lhs <= rhs, recorded as the violation lhs - rhs.
  auto at_most = [tol](double lhs, double rhs) { return Check{lhs - rhs, lhs - rhs <= tol}; };

  const auto rebuilt = reconstruct(d);
  double rec = 0.0;
  {
    Amplitude overlap{};
    for (std::size_t i = 0; i < 8; ++i) overlap += std::conj(rebuilt[i]) * s[i];
    const Amplitude phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Amplitude{1.0};
    for (std::size_t i = 0; i < 8; ++i) rec += std::norm(s[i] - phase * rebuilt[i]);
    rec = std::sqrt(rec);
  }
  r.reconstruction = Check{rec, rec < 1e-10};

  double nx = 0.0, ny = 0.0;
  Amplitude xy{};
  std::array<double, 4> wx{}, wy{};
  for (std::size_t j = 0; j < 4; ++j) {
    wx[j] = std::norm(x[j]);
    wy[j] = std::norm(y[j]);
    nx += wx[j];
    ny += wy[j];
    xy += x[j] * std::conj(y[j]);
  }
  r.norm_x = residual(std::abs(nx - 1.0));
  r.norm_y = residual(std::abs(ny - 1.0));
  r.orthogonality = residual(std::abs(xy));

  const double l1a = ea.lambda1;
  const double l2a = ea.lambda2;
  auto mix = [&](std::size_t j) { return l1a * wx[j] + l2a * wy[j]; };
  r.eigen_identities[0] = residual(std::abs(eb.lambda1 - (mix(0) + mix(1))));
  r.eigen_identities[1] = residual(std::abs(eb.lambda2 - (mix(2) + mix(3))));
  r.eigen_identities[2] = residual(std::abs(ec.lambda1 - (mix(0) + mix(2))));
  r.eigen_identities[3] = residual(std::abs(ec.lambda2 - (mix(1) + mix(3))));

  const double sa = ea.lambda1 - ea.lambda2;
  const double sb = eb.lambda1 - eb.lambda2;
  const double sc = ec.lambda1 - ec.lambda2;
  r.sum_bc = sb + sc;
  r.expansion = 2.0 - 2.0 * l1a * (wx[1] + wx[2] + 2.0 * wx[3]) - 2.0 * l2a * (wy[1] + wy[2] + 2.0 * wy[3]);
  r.bound_drop_x4 = 2.0 - 2.0 * l1a * (wx[1] + wx[2] + wx[3]) - 2.0 * l2a * (wy[1] + wy[2] + wy[3]);
  r.bound_lambda2 = 2.0 - 2.0 * l2a * (wx[1] + wx[2] + wx[3] + wy[1] + wy[2] + wy[3]);
  r.first_weight = wx[0] + wy[0];
  r.final_bound = 2.0 - 2.0 * l2a;
  r.one_plus_sa = 1.0 + sa;

  r.expansion_identity = residual(std::abs(r.sum_bc - r.expansion));
  r.chain_step1 = at_most(r.expansion, r.bound_drop_x4);
  r.chain_step2 = at_most(r.bound_drop_x4, r.bound_lambda2);
  r.chain_step3 = at_most(r.first_weight, 1.0);
  {
    const double violation =
        std::max(r.bound_lambda2 - r.final_bound, std::abs(r.final_bound - r.one_plus_sa));
    r.chain_final = Check{violation, violation <= tol};
  }
  r.inequality = at_most(r.sum_bc, r.one_plus_sa);

  r.slacks = constraint_slacks({std::clamp(sa, 0.0, 1.0), std::clamp(sb, 0.0, 1.0), std::clamp(sc, 0.0, 1.0)});
  r.all_slacks = Check{-r.slacks.min(), r.slacks.min() >= -tol};
  return r;
}

SweepStatistics sweep(std::uint64_t n, std::uint64_t seed, unsigned bins, unsigned shards) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "sweep needs at least one sample");
  if (bins == 0) throw Error(ErrorCode::OutOfRange, "histogram needs at least one bin");
  shards = std::max(1u, shards);

  constexpr double inf = std::numeric_limits<double>::infinity();
  auto empty = [&] {
    SweepStatistics st;
    st.min_slack = inf;
    st.min_c_abc = inf;
    st.max_c_abc = -inf;
    st.s_min = {inf, inf, inf};
    st.s_max = {-inf, -inf, -inf};
    st.bins = bins;
    st.counts.assign(bins, 0);
    return st;
  };

  auto partials = detail::run_sharded<SweepStatistics>(
      n, shards, [&](unsigned, std::uint64_t begin, std::uint64_t end, SweepStatistics& st) {
        st = empty();
        for (std::uint64_t i = begin; i < end; ++i) {
          const auto v = separabilities(haar_random_state(seed, i));
          const auto slack = constraint_slacks(v).min();
          const double c = genuine_coherence(v);
          if (slack < -kViolationTolerance) ++st.violations;
          st.min_slack = std::min(st.min_slack, slack);
          st.min_c_abc = std::min(st.min_c_abc, c);
          st.max_c_abc = std::max(st.max_c_abc, c);
          st.s_min = {std::min(st.s_min.sa, v.sa), std::min(st.s_min.sb, v.sb), std::min(st.s_min.sc, v.sc)};
          st.s_max = {std::max(st.s_max.sa, v.sa), std::max(st.s_max.sb, v.sb), std::max(st.s_max.sc, v.sc)};
          const auto bin = static_cast<long>(std::floor(std::clamp(c, 0.0, 1.0) * bins));
          ++st.counts[static_cast<std::size_t>(std::clamp(bin, 0L, static_cast<long>(bins) - 1))];
        }
      });

  SweepStatistics out = empty();
  out.n = n;
  out.seed = seed;
  out.shards = shards;
  for (const auto& p : partials) {
    if (p.counts.empty()) continue;  // empty shard when n < shards
    out.violations += p.violations;
    out.min_slack = std::min(out.min_slack, p.min_slack);
    out.min_c_abc = std::min(out.min_c_abc, p.min_c_abc);
    out.max_c_abc = std::max(out.max_c_abc, p.max_c_abc);
    out.s_min = {std::min(out.s_min.sa, p.s_min.sa), std::min(out.s_min.sb, p.s_min.sb),
                 std::min(out.s_min.sc, p.s_min.sc)};
    out.s_max = {std::max(out.s_max.sa, p.s_max.sa), std::max(out.s_max.sb, p.s_max.sb),
                 std::max(out.s_max.sc, p.s_max.sc)};
    for (unsigned b = 0; b < bins; ++b) out.counts[b] += p.counts[b];
  }
  return out;
}

}  // namespace tricoh
