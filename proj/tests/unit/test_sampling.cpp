#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "tricoh/error.hpp"
#include "tricoh/sampling.hpp"

using namespace tricoh;

TEST_SUITE("sampling") {

TEST_CASE("eigen decomposition of a coherence matrix") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 500; ++i) {
    const Matrix2c w = oracle::random_density(gen);
    const auto e = eigen_decompose(w);
    CHECK(e.lambda1 >= e.lambda2);
    CHECK((w * e.phi1 - e.lambda1 * e.phi1).norm() < 1e-12);
    CHECK((w * e.phi2 - e.lambda2 * e.phi2).norm() < 1e-12);
    CHECK(std::abs(e.phi1.dot(e.phi2)) < 1e-12);
    CHECK(std::abs(e.phi1.norm() - 1.0) < 1e-12);
  }
  const auto scalar = eigen_decompose(Matrix2c::Identity() * 0.5);
  CHECK(std::abs(scalar.phi1(0) - Amplitude(1.0)) < 1e-15);
}

TEST_CASE("product state is a single-branch degenerate case") {
  const auto s = make_state(oracle::basis(0, 0, 0));
  const auto d = decompose_in_eigenbases(s);
  CHECK(d.degenerate_branch);
  CHECK(d.eigen[0].lambda1 == doctest::Approx(1.0));
  CHECK(std::abs(d.eigen[0].lambda2) < 1e-15);
  CHECK(std::abs(d.coefficients.x[0] - Amplitude(1.0)) < 1e-12);
  for (int j = 1; j < 4; ++j) CHECK(std::abs(d.coefficients.x[static_cast<std::size_t>(j)]) < 1e-12);
  CHECK_THROWS_AS(decompose_in_eigenbases(s, DegeneratePolicy::Throw), Error);
  CHECK(fidelity(reconstruct(d), s) == doctest::Approx(1.0));
}

TEST_CASE("GHZ expansion in the computational basis") {
  const auto d = decompose_in_eigenbases(make_state(oracle::ghz()));
  CHECK_FALSE(d.degenerate_branch);
  CHECK(d.eigen[0].lambda1 == doctest::Approx(0.5));
  CHECK(d.eigen[0].lambda2 == doctest::Approx(0.5));
  // Degenerate spectra leave the eigenbasis free; only the branch weights are fixed.
  double wx = 0.0, wy = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    wx += std::norm(d.coefficients.x[j]);
    wy += std::norm(d.coefficients.y[j]);
  }
  CHECK(wx == doctest::Approx(1.0));
  CHECK(wy == doctest::Approx(1.0));
  CHECK(std::abs(d.coefficients.x[0]) == doctest::Approx(1.0));
  CHECK(std::abs(d.coefficients.y[3]) == doctest::Approx(1.0));
}

TEST_CASE("random states reconstruct from their expansion") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto s = haar_random_state(21, i);
    const auto r = reconstruct(decompose_in_eigenbases(s));
    CHECK(1.0 - fidelity(s, r) < 1e-12);
  }
}

TEST_CASE("constructive inequality check on named states") {
  auto g = verify_appendix(make_state(oracle::ghz()));
  CHECK(g.all_pass());
  CHECK(g.norm_x.value < 1e-12);
  CHECK(g.norm_y.value < 1e-12);
  CHECK(std::abs(g.sum_bc) < 1e-12);
  CHECK(g.one_plus_sa == doctest::Approx(1.0));

  auto w = verify_appendix(make_state(oracle::w_type()));
  CHECK(w.all_pass());
  CHECK(w.sum_bc == doctest::Approx(2.0 / 3.0));
  CHECK(w.one_plus_sa == doctest::Approx(4.0 / 3.0));
  CHECK(w.bound_drop_x4 >= w.expansion - 1e-12);
  CHECK(w.final_bound == doctest::Approx(w.one_plus_sa));

  auto p = verify_appendix(make_state(oracle::basis(1, 0, 1)));
  CHECK(p.degenerate_branch);
  CHECK(p.all_pass());
}

TEST_CASE("inequality chain holds for random states") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto r = verify_appendix(haar_random_state(8, i));
    REQUIRE(r.all_pass());
    CHECK(r.expansion <= r.bound_drop_x4 + 1e-12);
    CHECK(r.bound_drop_x4 <= r.bound_lambda2 + 1e-12);
    CHECK(r.first_weight <= 1.0 + 1e-12);
    CHECK(r.sum_bc <= r.one_plus_sa + 1e-12);
  }
}

TEST_CASE("sweep is reproducible across shard counts") {
  const auto a = sweep(5000, 42, 10, 1);
  const auto b = sweep(5000, 42, 10, 3);
  CHECK(a.violations == 0);
  CHECK(a.counts == b.counts);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.max_c_abc == b.max_c_abc);
  CHECK(b.shards == 3);
  std::uint64_t total = 0;
  for (auto c : a.counts) total += c;
  CHECK(total == 5000);
  CHECK(a.max_c_abc <= 1.0 + 1e-9);
  CHECK(a.min_c_abc >= -1e-9);
}

TEST_CASE("single-state sweep reports that state") {
  const auto st = sweep(1, 99, 4);
  const auto s = separabilities(haar_random_state(99, 0));
  CHECK(st.min_slack == doctest::Approx(constraint_slacks(s).min()));
  CHECK(st.min_c_abc == doctest::Approx(genuine_coherence(s)));
  CHECK(st.max_c_abc == st.min_c_abc);
  CHECK(st.s_min.sa == st.s_max.sa);
}

}
