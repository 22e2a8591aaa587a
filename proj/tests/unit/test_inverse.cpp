#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "helpers.hpp"
#include "lnfft/baselines.hpp"
#include "lnfft/error.hpp"
#include "lnfft/fft.hpp"
#include "lnfft/inverse.hpp"
#include "oracles.hpp"

using namespace lnfft;
using lnfft::testing::jittered_grid;
using lnfft::testing::random_vector;
using lnfft::testing::uniform_grid;

namespace {

MethodParams accurate(std::size_t n) { return MethodParams::from_mu(n, 2, 1e-15); }

CVector scaled(std::span<const Complex> v, double s) {
  CVector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

TEST(Inverse, UniformGridType4IsIdft) {
  for (std::size_t n : {8u, 12u, 64u}) {
    const auto plan = build_plan(uniform_grid(n), accurate(n));
    const CVector spec = random_vector(n, n);
    EXPECT_LT(oracle::rel_l2(idft(spec), refine_type4(plan, spec, 1)), 1e-12) << n;
  }
}

TEST(Inverse, UniformGridPlainSolverWithLowAmplification) {
  for (std::size_t n : {8u, 64u, 256u}) {
    const auto plan = build_plan(uniform_grid(n), MethodParams::from_mu(n, 6, 1e-15));
    const CVector spec = random_vector(n, n);
    EXPECT_LT(oracle::rel_l2(idft(spec), type4(plan, spec)), 1e-11) << n;
    EXPECT_LT(oracle::rel_l2(scaled(dft(spec), 1.0 / static_cast<double>(n)), type5(plan, spec)),
              1e-11)
        << n;
  }
}

TEST(Inverse, UniformGridType5IsScaledDft) {
  for (std::size_t n : {8u, 20u, 64u}) {
    const auto plan = build_plan(uniform_grid(n), accurate(n));
    const CVector samples = random_vector(n, 100 + n);
    EXPECT_LT(oracle::rel_l2(scaled(dft(samples), 1.0 / static_cast<double>(n)),
                             refine_type5(plan, samples, 1)),
              1e-12)
        << n;
  }
}

TEST(Inverse, UniformGridNodeWeights) {
  const std::size_t n = 16;
  const auto params = MethodParams::from_mu(n, 6, 1e-15);
  const auto plan = build_plan(uniform_grid(n), params);
  const double h = 1.0 / (std::exp(-kTwoPi * static_cast<double>(n) * params.damping_a) - 1.0);
  const Complex expect = h / static_cast<double>(n);
  for (std::size_t p = 0; p < n; ++p)
    EXPECT_LT(std::abs(plan.node_weights()[p] / expect - 1.0), 1e-11) << p;
}

TEST(Inverse, PlanExposesDampingTables) {
  const auto params = accurate(32);
  const auto plan = build_plan(jittered_grid(32, 1), params);
  ASSERT_EQ(plan.h1_coefficients().size(), 32u);
  ASSERT_EQ(plan.undamping().size(), 32u);
  EXPECT_EQ(plan.h1_coefficients()[0], 1.0);
  for (std::size_t p = 0; p < 32; ++p)
    EXPECT_NEAR(plan.h1_coefficients()[p] * plan.undamping()[p], 1.0 / 32.0, 1e-15);
  EXPECT_GT(plan.build_flops().total_flops, 0u);
}

TEST(Inverse, ConstantSamplesGiveConstantPolynomial) {
  const std::size_t n = 32;
  const auto plan = build_plan(jittered_grid(n, 2), accurate(n));
  const Complex c(0.7, -1.3);
  const CVector s = refine_type5(plan, CVector(n, c), 1);
  EXPECT_LT(std::abs(s[0] - c), 1e-10);
  for (std::size_t p = 1; p < n; ++p) EXPECT_LT(std::abs(s[p]), 1e-10) << p;
}

TEST(Inverse, SingleModeSpectrum) {
  // The spectrum of a unit amplitude at t_k inverts to that unit vector.
  const std::size_t n = 16;
  const auto grid = jittered_grid(n, 3);
  const auto plan = build_plan(grid, accurate(n));
  const std::size_t k = 5;
  CVector spec(n);
  for (std::size_t p = 0; p < n; ++p) spec[p] = unit_phase(-static_cast<std::int64_t>(p), grid[k]);
  const CVector a = refine_type4(plan, spec, 1);
  for (std::size_t q = 0; q < n; ++q)
    EXPECT_LT(std::abs(a[q] - (q == k ? 1.0 : 0.0)), 1e-10) << q;
}

TEST(Inverse, MatchDenseEliminationAtSmallSize) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto grid = jittered_grid(8, 10 + s);
    const auto plan = build_plan(grid, accurate(8));
    const CVector rhs = random_vector(8, 20 + s);
    const CVector ref5 = oracle::dense_solve(oracle::type5_matrix(grid.instants()), rhs);
    const CVector ref4 = oracle::dense_solve(oracle::type4_matrix(grid.instants()), rhs);
    EXPECT_LT(oracle::rel_l2(ref5, refine_type5(plan, rhs, 1)), 1e-9) << s;
    EXPECT_LT(oracle::rel_l2(ref4, refine_type4(plan, rhs, 1)), 1e-9) << s;
  }
}

TEST(Inverse, BitwiseDeterministic) {
  const auto grid = jittered_grid(128, 4);
  const CVector rhs = random_vector(128, 5);
  const auto a = refine_type4(build_plan(grid, accurate(128)), rhs, 1);
  const auto b = refine_type4(build_plan(grid, accurate(128)), rhs, 1);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)), 0);
}

TEST(Inverse, PlanReuseMatchesFreshPlan) {
  const auto grid = jittered_grid(64, 6);
  const auto shared = build_plan(grid, accurate(64));
  for (std::uint64_t s = 0; s < 3; ++s) {
    const CVector rhs = random_vector(64, 30 + s);
    const auto fresh = build_plan(grid, accurate(64));
    EXPECT_EQ(type5(shared, rhs), type5(fresh, rhs));
    EXPECT_EQ(type4(shared, rhs), type4(fresh, rhs));
  }
}

TEST(Inverse, ZeroPassesIsThePlainSolver) {
  const auto plan = build_plan(jittered_grid(32, 7), accurate(32));
  const CVector rhs = random_vector(32, 8);
  RefineReport report;
  EXPECT_EQ(refine_type5(plan, rhs, 0, nullptr, &report), type5(plan, rhs));
  EXPECT_EQ(report.passes, 0);
  EXPECT_EQ(refine_type4(plan, rhs, 0), type4(plan, rhs));
  EXPECT_THROW(refine_type4(plan, rhs, -1), Error);
}

TEST(Inverse, Type5RoundTrip) {
  const std::size_t n = 256;
  const auto grid = jittered_grid(n, 9);
  const auto plan = build_plan(grid, accurate(n));
  const CVector coefs = random_vector(n, 10);
  const CVector samples = nfft_type2_direct(coefs, grid);
  RefineReport report;
  const CVector back = refine_type5(plan, samples, 2, nullptr, &report);
  EXPECT_LT(oracle::rel_l2(coefs, back), 1e-9);
  EXPECT_EQ(report.passes, 2);
  ASSERT_EQ(report.contraction.size(), 2u);
  EXPECT_LT(report.contraction[0], 1e-3);
}

TEST(Inverse, RefinementReducesErrorAgainstDenseTruth) {
  const std::size_t n = 256;
  int better = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto trial = generate_trial(n, 40 + s, 0.6);
    const auto plan = build_plan(trial.grid, MethodParams::from_mu(n, 1, 1e-10));
    const CVector spec = nfft_type1_direct(trial.grid, trial.amplitudes, n);
    const double plain = relative_error(trial.amplitudes, type4(plan, spec));
    const double refined = relative_error(trial.amplitudes, refine_type4(plan, spec, 1));
    if (refined < plain) ++better;
  }
  EXPECT_GE(better, 9);
}

TEST(Inverse, CoarseParametersFailLoudlyOrConverge) {
  // A severely truncated kernel either still contracts or reports NonConvergence;
  // it never returns a silently diverging estimate.
  const std::size_t n = 64;
  const auto grid = jittered_grid(n, 11);
  const auto plan = build_plan(grid, MethodParams::from_mu(n, 1, 1e-2));
  const CVector coefs = random_vector(n, 12);
  const CVector samples = nfft_type2_direct(coefs, grid);
  RefineReport report;
  try {
    const CVector x = refine_type5(plan, samples, 4, nullptr, &report);
    for (double r : report.contraction) EXPECT_LE(r, 1.0);
    (void)x;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonConvergence);
  }
}

TEST(Inverse, InputErrors) {
  const auto grid = jittered_grid(16, 13);
  const auto plan = build_plan(grid, accurate(16));
  try {
    type5(plan, CVector(15));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LengthMismatch);
  }
  CVector bad(16, 1.0);
  bad[3] = Complex(std::nan(""), 0.0);
  try {
    type4(plan, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonFinite);
  }
  EXPECT_THROW(build_plan(grid, accurate(32)), Error);
}

TEST(Inverse, FlopReportsOfBothTypesCoincide) {
  const auto grid = jittered_grid(128, 14);
  const auto plan = build_plan(grid, accurate(128));
  const CVector rhs = random_vector(128, 15);
  FlopCounter c4, c5;
  refine_type4(plan, rhs, 1, &c4);
  refine_type5(plan, rhs, 1, &c5);
  EXPECT_EQ(c4.report(), c5.report());
  EXPECT_GT(c4.report().total_flops, 0u);
}
