#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lnfft/error.hpp"
#include "lnfft/types.hpp"

using namespace lnfft;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lnfft::Error thrown";
  return Errc::Parse;
}

}  // namespace

TEST(Grid, KeepsCallerOrderAndSortsACopy) {
  const std::vector<double> t{0.7, 0.1, 0.4};
  const auto g = validate_grid(t);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], 0.7);
  EXPECT_EQ(g.sorted()[0], 0.1);
  EXPECT_EQ(g.sorted()[2], 0.7);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(g.sorted()[k], g[g.order()[k]]);
  EXPECT_NEAR(g.min_gap(), 0.3, 1e-15);
}

TEST(Grid, SingleInstant) {
  const std::vector<double> t{0.25};
  const auto g = validate_grid(t);
  EXPECT_EQ(g.min_gap(), 1.0);
}

TEST(Grid, RejectsOutOfRange) {
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{0.2, 1.0}); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{-1e-17, 0.5}); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{}); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{std::nan(""), 0.5}); }),
            Errc::OutOfRange);
}

TEST(Grid, RejectsDuplicatesIncludingAcrossTheWrap) {
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{0.3, 0.3}); }), Errc::DuplicateNode);
  EXPECT_EQ(code_of([] { validate_grid(std::vector<double>{0.0, 0.5, 1.0 - 1e-14}); }),
            Errc::DuplicateNode);
  EXPECT_NO_THROW(validate_grid(std::vector<double>{0.0, 0.5, 1.0 - 1e-9}));
}

TEST(Grid, EqualityComparesInstants) {
  EXPECT_EQ(validate_grid(std::vector<double>{0.1, 0.2}), validate_grid(std::vector<double>{0.1, 0.2}));
  EXPECT_FALSE(validate_grid(std::vector<double>{0.1, 0.2}) ==
               validate_grid(std::vector<double>{0.2, 0.1}));
}

TEST(Params, DampingRoundTripsThroughTheTruncationRatio) {
  const double a = damping_from_mu(1e-13, 1024, 1);
  EXPECT_GT(a, 0.0);
  EXPECT_NEAR(truncation_ratio(a, 1024, 1) / 1e-13, 1.0, 1e-12);
  for (int eta : {1, 2, 6, 20}) {
    for (double mu : {1e-18, 1e-10, 1e-5}) {
      const double d = damping_from_mu(mu, 256, eta);
      EXPECT_NEAR(truncation_ratio(d, 256, eta) / mu, 1.0, 1e-12) << eta << " " << mu;
    }
  }
}

TEST(Params, RatioAtOrAboveOneHasNoDamping) {
  EXPECT_EQ(code_of([] { damping_from_mu(1.0 / 1023.0, 1024, 1); }), Errc::NonPositiveDamping);
  EXPECT_EQ(code_of([] { damping_from_mu(0.5, 1024, 1); }), Errc::NonPositiveDamping);
  EXPECT_EQ(code_of([] { MethodParams::from_damping(8, 1, 0.0); }), Errc::NonPositiveDamping);
  EXPECT_EQ(code_of([] { MethodParams::from_mu(8, 0, 1e-10); }), Errc::InvalidArgument);
}

TEST(Params, FactoriesAgree) {
  const auto p = MethodParams::from_mu(512, 3, 1e-14, 12, 2);
  const auto q = MethodParams::from_damping(512, 3, p.damping_a, 12, 2);
  EXPECT_EQ(p.size, 512u);
  EXPECT_EQ(p.oversampled_size(), 1536u);
  EXPECT_EQ(p.spread_width, 12);
  EXPECT_EQ(p.refine_passes, 2);
  EXPECT_NEAR(q.mu / p.mu, 1.0, 1e-12);
  EXPECT_EQ(p.phase, PhaseEvaluation::Direct);
}

TEST(UnitPhase, ReducedArgumentStaysAccurateForLargeIndices) {
  const double t = 0.123456789012345;
  for (std::int64_t k : {1LL, 1000LL, 1000000LL, -77777LL}) {
    // Split t so that both partial products are exact in long double.
    const long double t_hi = std::ldexp(std::floor(std::ldexp(static_cast<long double>(t), 32)), -32);
    const long double t_lo = static_cast<long double>(t) - t_hi;
    const long double c_hi = static_cast<long double>(k) * t_hi;
    const long double c_lo = static_cast<long double>(k) * t_lo;
    long double f = (c_hi - std::floor(c_hi)) + (c_lo - std::floor(c_lo));
    f -= std::floor(f);
    const Complex ref(static_cast<double>(std::cos(2 * 3.14159265358979323846264338327950288L * f)),
                      static_cast<double>(std::sin(2 * 3.14159265358979323846264338327950288L * f)));
    EXPECT_LT(std::abs(unit_phase(k, t) - ref), 4e-16) << k;
  }
  EXPECT_LT(std::abs(unit_phase(0.25) - Complex(0, 1)), 1e-16);
}

TEST(RequireFinite, NamesTheArgument) {
  const CVector ok{{1, 2}, {3, 4}};
  EXPECT_NO_THROW(require_finite(ok, "x"));
  const CVector bad{{1, 2}, {std::numeric_limits<double>::infinity(), 0}};
  try {
    require_finite(bad, "spectrum");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonFinite);
    EXPECT_NE(std::string(e.what()).find("spectrum"), std::string::npos);
  }
}
