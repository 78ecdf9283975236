#include "fracgeo/quadrature.hpp"

#include <gtest/gtest.h>

using namespace fracgeo;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(SphereRule, FourNodesInTheFlatCase) {
  const auto r = sphere_rule<2>(4);
  ASSERT_EQ(r.size(), 4u);
  for (double w : r.weights) EXPECT_NEAR(w, pi / 2, 1e-15);
}

TEST(SphereRule, WeightsSumToSphereArea) {
  for (int res : {8, 63, 512}) {
    const auto r2 = sphere_rule<2>(res);
    const auto r3 = sphere_rule<3>(res);
    EXPECT_NEAR(r2.integrate([](const Vec<2>&) { return 1.0; }), 2 * pi, 1e-10);
    EXPECT_NEAR(r3.integrate([](const Vec<3>&) { return 1.0; }), 4 * pi, 1e-10);
    Vec<3> m = Vec<3>::Zero();
    for (std::size_t k = 0; k < r3.size(); ++k) m += r3.weights[k] * r3.nodes[k];
    EXPECT_LT(m.norm(), 1e-8);
  }
  EXPECT_THROW(sphere_rule<2>(3), Error);
}

TEST(SphereRule, SecondMoments) {
  const auto r2 = sphere_rule<2>(64);
  EXPECT_NEAR(r2.integrate([](const Vec<2>& u) { return u.x() * u.x(); }), pi, 1e-10);
  const auto r3 = sphere_rule<3>(10000);
  EXPECT_NEAR(r3.integrate([](const Vec<3>& u) { return u.x() * u.x(); }), 4 * pi / 3, 1e-3);
}

TEST(SphereRule, ConvergesForAsymmetricIntegrand) {
  // int |u.e1|^3 over S^2 is pi.
  auto err = [](int res) {
    return std::abs(sphere_rule<3>(res).integrate([](const Vec<3>& u) {
      return std::pow(std::abs(u.x()), 3);
    }) - pi);
  };
  const double e1 = err(1000), e2 = err(4000);
  EXPECT_LT(e2, e1);
  EXPECT_GT(std::log2(e1 / e2) / 2.0, 1.0 - 0.3);
}

TEST(BoundaryRule, SquareMidpoints) {
  const auto sq = cube_body<2>(1.0);
  const auto bq = boundary_rule(sq, 1);
  ASSERT_EQ(bq.size(), 4u);
  for (const auto& smp : bq.samples) {
    EXPECT_NEAR(smp.weight, 2.0, 1e-15);
    EXPECT_NEAR(smp.z.norm(), 1.0, 1e-15);
    EXPECT_NEAR(smp.z.dot(sq.normals()[smp.facet]), 1.0, 1e-15);
  }
}

TEST(BoundaryRule, WeightsAndBalance) {
  const auto pent = regular_polygon(5, 1.0, 0.4);
  const auto cube = cube_body<3>(1.0);
  for (auto scheme : {BoundaryScheme::uniform, BoundaryScheme::graded}) {
    for (int pf : {3, 28, 64}) {
      const auto bq = boundary_rule(pent, pf, scheme, 0.5);
      double perim = 0.0;
      for (const auto& f : pent.facets()) perim += f.area;
      EXPECT_NEAR(bq.total_weight(), perim, 1e-12 * perim);
      Vec<2> bal = Vec<2>::Zero();
      for (const auto& smp : bq.samples) bal += smp.weight * pent.normals()[smp.facet];
      EXPECT_LT(bal.norm(), 1e-6 * perim);
    }
  }
  for (int pf : {1, 3}) {
    EXPECT_NEAR(boundary_rule(cube, pf).total_weight(), 24.0, 1e-12);
  }
}

TEST(BoundaryRule, GradedSingularPanelIntegratesEndpointPower) {
  // int_0^1 x^{-s} (1-x)^{-s} dx = B(1-s, 1-s).
  for (double s : {0.3, 0.7, 0.95}) {
    double acc = 0.0;
    for (const auto& e : detail::graded_edge_rule(4, s)) acc += e.w * std::pow(e.x, -s) * std::pow(1 - e.x, -s);
    const double exact = std::exp(2 * std::lgamma(1 - s) - std::lgamma(2 - 2 * s));
    EXPECT_NEAR(acc, exact, 1e-6 * exact) << "s = " << s;
  }
}

TEST(SampleInterior, MeanAndMembership) {
  const auto sq = cube_body<2>(1.0);
  RandomSource rng(42);
  const auto smp = sample_interior(sq, 100000, rng);
  Vec<2> mean = Vec<2>::Zero();
  for (const auto& x : smp.points) {
    EXPECT_TRUE(sq.contains(x, 0.0));
    mean += x;
  }
  mean /= static_cast<double>(smp.points.size());
  const double sigma = std::sqrt(1.0 / 3.0 / smp.points.size());
  EXPECT_LT(std::abs(mean.x()), 3 * sigma);
  EXPECT_LT(std::abs(mean.y()), 3 * sigma);
  EXPECT_NEAR(smp.acceptance, 1.0, 1e-12);
}

TEST(SampleInterior, FixedSeedReproduces) {
  const auto pent = regular_polygon(5);
  RandomSource a(9), b(9);
  const auto pa = sample_interior(pent, 10, a).points;
  const auto pb = sample_interior(pent, 10, b).points;
  for (int k = 0; k < 10; ++k) EXPECT_EQ(pa[k], pb[k]);
}

TEST(SampleInterior, RejectsThinBodies) {
  const auto thin = wulff_shape<2>({Vec<2>(1, 1).normalized(), Vec<2>(-1, -1).normalized(),
                                    Vec<2>(1, -1).normalized(), Vec<2>(-1, 1).normalized()},
                                   {1e-6, 1e-6, 1.0, 1.0});
  RandomSource rng(1);
  EXPECT_THROW(sample_interior(thin, 10, rng), Error);
}

TEST(Random, SubstreamsAreIndependentOfOrder) {
  RandomSource base(123);
  auto s1 = base.substream(5);
  auto s2 = RandomSource(123).substream(5);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(s1.uniform(), s2.uniform());
}
