#include "fracgeo/fracperim.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

using namespace fracgeo;

namespace {

constexpr double pi = std::numbers::pi;

/// P_s([-1,1]^2, B^2) from the trapezoidal X-ray profile of the square. For
/// theta in [0, pi/4] the chord length has plateau 2/cos(theta) of width
/// 2(cos - sin) and two linear ramps of width 2 sin.
double square_ball_oracle(double s) {
  const double p = 1.0 - s;
  auto inner = [&](double th) {
    const double m = 2.0 / std::cos(th);
    const double plateau = 2.0 * (std::cos(th) - std::sin(th));
    return plateau * std::pow(m, p) + 2.0 * 2.0 * std::sin(th) * std::pow(m, p) / (p + 1.0);
  };
  const double q = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(inner, 0.0, pi / 4, 15, 1e-14);
  return 8.0 * q / (s * (1.0 - s));
}

const auto square = cube_body<2>(1.0);
const auto ball = GaugeBody<2>::ball();

}  // namespace

TEST(Xray, SquareMatchesClosedFormProfile) {
  const auto rule = sphere_rule<2>(2048);
  for (double s : {0.1, 0.5, 0.9}) {
    const double oracle = square_ball_oracle(s);
    EXPECT_NEAR(ps_xray(square, ball, s, rule).value, oracle, 1e-5 * oracle) << "s = " << s;
  }
  // Frozen at res 512.
  EXPECT_NEAR(ps_xray(square, ball, 0.5, sphere_rule<2>(512)).value, 76.967089037746405, 1e-9);
}

TEST(Xray, RejectsBadS) {
  const auto rule = sphere_rule<2>(16);
  for (double s : {0.0, 1.0, 1.5, -0.2}) {
    try {
      ps_xray(square, ball, s, rule);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_s);
      EXPECT_STREQ(e.what(), "s must lie in (0,1)");
    }
  }
}

TEST(Xray, Homogeneity) {
  const auto rule = sphere_rule<2>(512);
  const double s = 0.5;
  const double ratio = ps_xray(cube_body<2>(2.0), ball, s, rule).value / ps_xray(square, ball, s, rule).value;
  EXPECT_NEAR(ratio, std::pow(2.0, 2.0 - s), 1e-3 * ratio);
  const auto rule3 = sphere_rule<3>(128);
  const double r3 = ps_xray(cube_body<3>(2.0), GaugeBody<3>::ball(), s, rule3, 32).value /
                    ps_xray(cube_body<3>(1.0), GaugeBody<3>::ball(), s, rule3, 32).value;
  EXPECT_NEAR(r3, std::pow(2.0, 3.0 - s), 1e-3 * r3);
}

TEST(Xray, GaugeScaling) {
  const auto rule = sphere_rule<2>(256);
  const auto pent = regular_polygon(5);
  for (double s : {0.2, 0.8}) {
    const double a = ps_xray(pent, GaugeBody<2>::cube(), s, rule).value;
    const double b = ps_xray(pent, GaugeBody<2>::cube().scaled(2.0), s, rule).value;
    EXPECT_NEAR(b / a, std::pow(2.0, 2.0 + s), 1e-10 * std::pow(2.0, 2.0 + s));
  }
}

TEST(Xray, TranslationAndReflectionInvariance) {
  const auto rule = sphere_rule<2>(512);
  const auto tri = regular_polygon(3, 1.0, 0.2);
  const double base = ps_xray(tri, ball, 0.4, rule).value;
  EXPECT_NEAR(ps_xray(tri.translated(Vec<2>(3.0, -1.0)), ball, 0.4, rule).value, base, 1e-10 * base);
  EXPECT_NEAR(ps_xray(tri.reflected(), ball, 0.4, rule).value, base, 1e-10 * base);
}

TEST(MonteCarlo, AgreesWithXray) {
  const auto rule = sphere_rule<2>(512);
  for (double s : {0.3, 0.5, 0.7}) {
    const double x = ps_xray(square, ball, s, rule).value;
    const auto mc = ps_montecarlo(square, ball, s, 400000, RandomSource(1));
    EXPECT_LT(std::abs(mc.value - x), 3.0 * mc.std_error) << "s = " << s;
  }
}

TEST(MonteCarlo, PairedEstimatorAgrees) {
  const double x = ps_xray(square, ball, 0.3, sphere_rule<2>(512)).value;
  const auto mc = ps_montecarlo(square, ball, 0.3, 400000, RandomSource(4), {McEstimator::paired});
  EXPECT_LT(std::abs(mc.value - x), 3.0 * mc.std_error);
}

TEST(MonteCarlo, MirroredReflectionIsExact) {
  const auto tri = regular_polygon(3, 1.0, 0.2);
  const auto gauge = GaugeBody<2>::cube();
  const auto a = ps_montecarlo(tri, gauge, 0.5, 50000, RandomSource(7));
  const auto b = ps_montecarlo(tri.reflected(), gauge, 0.5, 50000, RandomSource(7), {McEstimator::chord, true});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(MonteCarlo, StandardErrorFollowsSquareRoot) {
  const auto a = ps_montecarlo(square, ball, 0.5, 100000, RandomSource(3));
  const auto b = ps_montecarlo(square, ball, 0.5, 400000, RandomSource(3));
  EXPECT_NEAR(a.std_error / b.std_error, 2.0, 0.6);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  set_num_threads(1);
  const auto a = ps_montecarlo(square, ball, 0.5, 100000, RandomSource(3));
  set_num_threads(4);
  const auto b = ps_montecarlo(square, ball, 0.5, 100000, RandomSource(3));
  set_num_threads(0);
  EXPECT_EQ(a.value, b.value);
}

TEST(MonteCarlo, CubeAgreesWithXray) {
  const auto cube = cube_body<3>(1.0);
  const auto b3 = GaugeBody<3>::ball();
  const double x = ps_xray(cube, b3, 0.5, sphere_rule<3>(256), 64).value;
  const auto mc = ps_montecarlo(cube, b3, 0.5, 200000, RandomSource(2));
  EXPECT_LT(std::abs(mc.value - x), 3.0 * mc.std_error + 0.01 * x);
}

TEST(LineSample, AgreesWithXray) {
  const double x = ps_xray(square, ball, 0.3, sphere_rule<2>(512)).value;
  const auto ls = ps_linesample(square, 0.3, 400000, RandomSource(1));
  EXPECT_LT(std::abs(ls.value - x), 3.0 * ls.std_error);
}

TEST(LineSample, MonotoneUnderInclusion) {
  const auto small = ps_linesample(square, 0.5, 200000, RandomSource(6));
  const auto big = ps_linesample(cube_body<2>(1.5), 0.5, 200000, RandomSource(6));
  EXPECT_GT(big.value - small.value, 3.0 * std::hypot(big.std_error, small.std_error));
}

TEST(Ludwig, EndpointLimitsOnSquare) {
  const auto t = ludwig_limits(square, ball, {0.5, 0.2, 0.05, 0.01, 0.9, 0.95, 0.99}, sphere_rule<2>(512));
  EXPECT_NEAR(t.target_s0, 8.0 * pi, 1e-12);
  EXPECT_NEAR(t.target_s1, 16.0, 1e-3);
  EXPECT_NEAR(t.rows[3].s_times_ps / t.target_s0, 1.0, 0.02);
  EXPECT_NEAR(t.rows[6].one_minus_s_times_ps / t.target_s1, 1.0, 0.03);
  // Monotone approach on the s -> 0 side.
  for (int k = 1; k < 4; ++k) {
    EXPECT_LT(std::abs(t.rows[k].s_times_ps - t.target_s0), std::abs(t.rows[k - 1].s_times_ps - t.target_s0));
  }
  for (int k = 5; k < 7; ++k) {
    EXPECT_LT(std::abs(t.rows[k].one_minus_s_times_ps - t.target_s1),
              std::abs(t.rows[k - 1].one_minus_s_times_ps - t.target_s1));
  }
}
