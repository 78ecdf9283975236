#include "fracgeo/limits.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

using namespace fracgeo;

namespace {

constexpr double pi = std::numbers::pi;

/// int over the inner half circle of (2 cos theta)^{-s}: the chord integral
/// of the unit disc at a boundary point, via tanh-sinh after reflecting
/// theta to pi/2 - u.
double disc_chord_oracle(double s) {
  boost::math::quadrature::tanh_sinh<double> ts;
  // t = u^{1-s} absorbs the u^{-s} endpoint singularity.
  const double e = 1.0 / (1.0 - s);
  auto f = [&](double t) {
    const double u = std::pow(t, e);
    return u > 0.0 ? std::pow(2.0 * std::sin(u) / u, -s) : std::pow(2.0, -s);
  };
  return 2.0 * e * ts.integrate(f, 0.0, std::pow(pi / 2, 1.0 - s));
}

}  // namespace

TEST(ChordIntegral, DiscMatchesTanhSinh) {
  for (double s : {0.2, 0.5, 0.9, 0.99}) {
    const double oracle = disc_chord_oracle(s);
    const double closed = std::pow(2.0, -s) * std::sqrt(pi) * std::tgamma((1 - s) / 2) / std::tgamma(1 - s / 2);
    EXPECT_NEAR(oracle, closed, 1e-8 * closed);
    const double got = detail::hemisphere_chord_integral(SmoothBody<2>::ball(), GaugeBody<2>::ball(),
                                                         Vec<2>(1, 0), s, 0);
    EXPECT_NEAR(got, oracle, 1e-8 * oracle) << "s = " << s;
  }
}

TEST(ChordIntegral, BallIsTwoToMinusSOfTheLimit) {
  // On B^3 the integral is 2 pi 2^{-s} / (1 - s), so (1-s) times it is pi 2^{1-s}.
  for (double s : {0.5, 0.9}) {
    const double got = detail::hemisphere_chord_integral(SmoothBody<3>::ball(), GaugeBody<3>::ball(),
                                                         Vec<3>(0, 0, 1), s, 64);
    EXPECT_NEAR((1 - s) * got, pi * std::pow(2.0, 1.0 - s), 1e-8);
  }
}

TEST(LemmaConv, RightSideClosedForms) {
  EXPECT_NEAR(lemma_conv_check(SmoothBody<2>::ball(), GaugeBody<2>::ball(), Vec<2>(1, 0), {0.5}).front().rhs, 2.0, 1e-14);
  EXPECT_NEAR(lemma_conv_check(SmoothBody<3>::ball(), GaugeBody<3>::ball(), Vec<3>(0, 1, 0), {0.5}, 64).front().rhs,
              2 * pi, 1e-12);
  // Ellipse (2,1) at (2,0): two tangent directions with curvature 2.
  const SmoothBody<2> e(Vec<2>(2.0, 1.0));
  EXPECT_NEAR(lemma_conv_check(e, GaugeBody<2>::ball(), Vec<2>(1, 0), {0.5}).front().rhs, 4.0, 1e-14);
}

TEST(LemmaConv, LimitIsHalfTheCurvatureIntegral) {
  const SmoothBody<2> e(Vec<2>(2.0, 1.0));
  const auto b2 = lemma_conv_check(SmoothBody<2>::ball(), GaugeBody<2>::ball(), Vec<2>(1, 0), {0.99}).front();
  const auto b3 = lemma_conv_check(SmoothBody<3>::ball(), GaugeBody<3>::ball(), Vec<3>(0, 0, 1), {0.99}, 256).front();
  const auto el = lemma_conv_check(e, GaugeBody<2>::ball(), Vec<2>(1, 0), {0.995}).front();
  for (const auto& r : {b2, b3, el}) EXPECT_NEAR(2.0 * r.ratio, 1.0, 0.03);
}

TEST(LemmaConv, RatioApproachesLimitMonotonically) {
  const SmoothBody<3> e(Vec<3>(2.0, 1.0, 1.5));
  const Vec<3> v = Vec<3>(1, 2, -1).normalized();
  const auto rows = lemma_conv_check(e, GaugeBody<3>::ellipsoid(Vec<3>(1.0, 1.3, 0.8)), v, {0.9, 0.97, 0.99}, 128);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_LT(std::abs(2.0 * rows[k].ratio - 1.0), std::abs(2.0 * rows[k - 1].ratio - 1.0));
  }
}

TEST(MixedAreaDensity, HalfLimit) {
  const auto rows = mixed_area_density_check(SmoothBody<3>(Vec<3>(1.5, 1.0, 0.7)), GaugeBody<3>::ball(),
                                             Vec<3>(0.0, 0.6, 0.8), {0.99}, 128);
  EXPECT_NEAR(2.0 * rows.front().ratio, 1.0, 0.03);
}

TEST(ProjectionCurvature, ExactOnEllipsoids) {
  RandomSource rng(4);
  const SmoothBody<3> e(Vec<3>(3.0, 2.0, 1.0));
  for (int k = 0; k < 50; ++k) {
    const Vec<3> v = rng.unit_vector<3>();
    Vec<3> u = rng.unit_vector<3>();
    u = (u - u.dot(v) * v).normalized();
    EXPECT_LT(lemma_xzlem_check(e, v, u).rel_error, 1e-8);
  }
}

TEST(ProjectionCurvature, RequiresTangentDirection) {
  const SmoothBody<3> e(Vec<3>(3.0, 2.0, 1.0));
  try {
    lemma_xzlem_check(e, Vec<3>(0, 0, 1), Vec<3>(0, 0.6, 0.8));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::not_tangent);
  }
}

TEST(NormalCurvature, SphereOfRadiusR) {
  const auto b = SmoothBody<3>::ball(2.0);
  EXPECT_NEAR(normal_curvature(b, Vec<3>(0, 0, 1), Vec<3>(1, 0, 0)), 0.5, 1e-14);
}

TEST(LimitS0, RatioTendsToDimension) {
  const auto disc = Discretization<2>::make(512, 128, 64);
  const auto square = cube_body<2>(1.0);
  for (const auto& gauge : {GaugeBody<2>::ball(), GaugeBody<2>::cube()}) {
    const auto rows = limit_s0_check(square, gauge, {0.01}, disc);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& r : rows) EXPECT_NEAR(r.ratio / 2.0, 1.0, 0.02);
  }
}

TEST(LimitS0, GaugeScalingLeavesRatio) {
  const auto disc = Discretization<2>::make(256, 128, 28);
  const auto pent = regular_polygon(5);
  const auto a = limit_s0_check(pent, GaugeBody<2>::cube(), {0.1}, disc);
  const auto b = limit_s0_check(pent, GaugeBody<2>::cube().scaled(1.7), {0.1}, disc);
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Both sides carry lambda^n; the left side an extra lambda^s.
    EXPECT_NEAR(b[i].ratio / a[i].ratio, std::pow(1.7, 0.1), 1e-6);
  }
}

TEST(GaugeVolume, MatchesExact) {
  const auto rule = sphere_rule<2>(2048);
  EXPECT_NEAR(gauge_volume(GaugeBody<2>::cube(), rule), 4.0, 1e-5);
  EXPECT_NEAR(gauge_volume(GaugeBody<2>::ellipsoid(Vec<2>(2.0, 0.5)), rule), pi, 1e-6);
}
