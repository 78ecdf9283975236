#include "fracgeo/bodies.hpp"
#include "fracgeo/quadrature.hpp"

#include <gtest/gtest.h>

using namespace fracgeo;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<Vec<2>> octagon_normals() { return uniform_fan(8, 0.0); }

/// Largest t with z + t u inside K, by bisection on membership.
template <int N>
double radial_by_bisection(const PolytopeBody<N>& k, const Vec<N>& z, const Vec<N>& u) {
  double lo = 0.0, hi = 4.0 * k.radius() + (z - k.center()).norm();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (k.max_violation(Vec<N>(z + mid * u)) <= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST(Wulff, SquareFromAxisNormals) {
  const auto sq = cube_body<2>(1.0);
  EXPECT_NEAR(sq.volume(), 4.0, 1e-12);
  ASSERT_EQ(sq.vertices().size(), 4u);
  for (const auto& f : sq.facets()) EXPECT_NEAR(f.area, 2.0, 1e-12);
}

TEST(Wulff, CubeFromAxisNormals) {
  const auto c = cube_body<3>(1.0);
  EXPECT_NEAR(c.volume(), 8.0, 1e-12);
  EXPECT_EQ(c.vertices().size(), 8u);
  for (const auto& f : c.facets()) EXPECT_NEAR(f.area, 4.0, 1e-12);
}

TEST(Wulff, RaisedDiagonalSupportMakesFacetInactive) {
  std::vector<double> h(8, 1.0);
  h[1] = 2.0;
  const auto k = wulff_shape<2>(octagon_normals(), h);
  EXPECT_EQ(k.facets()[1].area, 0.0);
  EXPECT_FALSE(k.facets()[1].active());
  // Same body as the intersection of the remaining seven half-planes.
  auto normals = octagon_normals();
  normals.erase(normals.begin() + 1);
  const auto seven = wulff_shape<2>(normals, std::vector<double>(7, 1.0));
  EXPECT_NEAR(k.volume(), seven.volume(), 1e-12);
  EXPECT_EQ(k.vertices().size(), seven.vertices().size());
}

TEST(Wulff, FacetAreasSatisfyMinkowskiRelation) {
  RandomSource rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec<2>> fan;
    std::vector<double> h;
    for (int k = 0; k < 7; ++k) {
      fan.push_back(Vec<2>(std::cos(2 * pi * k / 7 + rng.uniform(-0.3, 0.3)),
                           std::sin(2 * pi * k / 7 + rng.uniform(-0.3, 0.3)))
                        .normalized());
      h.push_back(rng.uniform(0.5, 1.5));
    }
    const auto k = wulff_shape<2>(fan, h);
    Vec<2> sum = Vec<2>::Zero();
    for (std::size_t i = 0; i < k.size(); ++i) sum += k.facets()[i].area * k.normals()[i];
    EXPECT_LT(sum.norm(), 1e-12);
    // Volume as (1/n) sum h_i a_i.
    double v = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) v += h[i] * k.facets()[i].area / 2.0;
    EXPECT_NEAR(v, k.volume(), 1e-12);
  }
}

TEST(Wulff, VolumeMatchesMonteCarloOracle) {
  const auto pent = regular_polygon(5, 1.0, 0.3);
  RandomSource rng(5);
  const std::size_t n = 200000;
  std::size_t hits = 0;
  const double r = pent.radius() + pent.center().norm();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec<2> x(rng.uniform(-r, r), rng.uniform(-r, r));
    if (pent.max_violation(x) <= 0.0) ++hits;
  }
  const double p = static_cast<double>(hits) / n;
  const double est = p * 4 * r * r;
  const double sigma = 4 * r * r * std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(est, pent.volume(), 4 * sigma);
  // Regular pentagon with inradius 1: 5 tan(pi/5).
  EXPECT_NEAR(pent.volume(), 5 * std::tan(pi / 5), 1e-12);
}

TEST(Wulff, RejectsUnboundedAndEmpty) {
  try {
    wulff_shape<2>({Vec<2>(1, 0), Vec<2>(0, 1), Vec<2>(-1, 0)}, {1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unbounded);
  }
  try {
    wulff_shape<2>(axis_normals<2>(), {1, -2, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::empty);
  }
}

TEST(Support, SquareExamples) {
  const auto sq = cube_body<2>(1.0);
  EXPECT_NEAR(support(sq, Vec<2>(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(support(sq, Vec<2>(1, 1).normalized().eval()), std::sqrt(2.0), 1e-14);
}

TEST(Support, PentagonAgainstIndependentVertices) {
  const auto pent = regular_polygon(5, 1.0, 0.0);
  // Circumradius 1/cos(pi/5), vertices halfway between the normals.
  const double rc = 1.0 / std::cos(pi / 5);
  RandomSource rng(3);
  for (int k = 0; k < 50; ++k) {
    const Vec<2> v = rng.unit_vector<2>();
    double best = -1e300;
    for (int j = 0; j < 5; ++j) {
      const double a = 2 * pi * j / 5 + pi / 5;
      best = std::max(best, rc * (std::cos(a) * v.x() + std::sin(a) * v.y()));
    }
    EXPECT_NEAR(support(pent, v), best, 1e-12);
  }
}

TEST(Radial, SquareExamples) {
  const auto sq = cube_body<2>(1.0);
  EXPECT_NEAR(radial(sq, Vec<2>(0, 0), Vec<2>(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(radial(sq, Vec<2>(1, 0), Vec<2>(-1, 0)), 2.0, 1e-15);
  EXPECT_EQ(radial(sq, Vec<2>(1, 0), Vec<2>(1, 0)), 0.0);
  EXPECT_THROW(radial(sq, Vec<2>(3, 0), Vec<2>(1, 0)), Error);
}

TEST(Radial, MatchesBisectionOracle) {
  const auto c = cube_body<3>(1.0).translated(Vec<3>(0.2, -0.1, 0.3));
  const auto hex = regular_polygon(6, 1.3, 0.1);
  RandomSource rng(17);
  for (int k = 0; k < 100; ++k) {
    const Vec<3> z(rng.uniform(-0.7, 1.1), rng.uniform(-1.0, 0.8), rng.uniform(-0.6, 1.2));
    const Vec<3> u = rng.unit_vector<3>();
    EXPECT_NEAR(radial(c, z, u), radial_by_bisection(c, z, u), 1e-12);
    const Vec<2> y(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec<2> w = rng.unit_vector<2>();
    EXPECT_NEAR(radial(hex, y, w), radial_by_bisection(hex, y, w), 1e-12);
  }
}

TEST(Xray, SquareExamples) {
  const auto sq = cube_body<2>(1.0);
  EXPECT_NEAR(xray(sq, Vec<2>(0, 0), Vec<2>(1, 0)), 2.0, 1e-15);
  EXPECT_EQ(xray(sq, Vec<2>(0, 2), Vec<2>(1, 0)), 0.0);
  // Sum of radial functions in both directions.
  const Vec<2> u = Vec<2>(0.6, 0.8);
  const Vec<2> y(0.2, -0.3);
  EXPECT_NEAR(xray(sq, y, u), radial(sq, y, u) + radial(sq, y, Vec<2>(-u)), 1e-14);
}

TEST(Gauge, BallAndSquare) {
  const auto ball = GaugeBody<2>::ball();
  const auto sq = GaugeBody<2>::cube();
  const Vec<2> d = Vec<2>(1, 1).normalized();
  EXPECT_NEAR(ball.rho(d), 1.0, 1e-15);
  EXPECT_NEAR(ball.norm(Vec<2>(3, 4)), 5.0, 1e-14);
  EXPECT_NEAR(sq.rho(d), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(sq.norm(Vec<2>(3, -4)), 4.0, 1e-14);
  EXPECT_NEAR(sq.support(Vec<2>(3, -4)), 7.0, 1e-14);
  EXPECT_NEAR(sq.volume(), 4.0, 1e-14);
}

TEST(Gauge, EllipsoidNormAndSupportAreDual) {
  const auto e = GaugeBody<3>::ellipsoid(Vec<3>(2.0, 1.0, 0.5));
  RandomSource rng(2);
  for (int k = 0; k < 50; ++k) {
    const Vec<3> u = rng.unit_vector<3>();
    const Vec<3> boundary = e.rho(u) * u;
    EXPECT_NEAR(e.norm(boundary), 1.0, 1e-13);
    // h_L(v) >= x.v on the boundary, with equality at the maximiser.
    EXPECT_GE(e.support(u) + 1e-13, boundary.dot(u));
  }
  EXPECT_NEAR(e.volume(), 4.0 * pi / 3.0, 1e-13);
}

TEST(Gauge, PolytopeMustBeSymmetric) {
  EXPECT_THROW(GaugeBody<2>::polytope(regular_polygon(3)), Error);
  const auto hex = GaugeBody<2>::support_sampled(uniform_fan(6), std::vector<double>(6, 1.0));
  EXPECT_NEAR(hex.volume(), 6 * std::tan(pi / 6), 1e-12);
}

TEST(MomentBody, BallValues) {
  const auto r2 = sphere_rule<2>(4096);
  const auto r3 = sphere_rule<3>(20000);
  EXPECT_NEAR(moment_body_support(GaugeBody<2>::ball(), Vec<2>(0.6, 0.8), r2), 2.0, 1e-6);
  EXPECT_NEAR(moment_body_support(GaugeBody<3>::ball(), Vec<3>(0, 0, 1), r3), pi, 1e-3);
}

TEST(AnisotropicPerimeter, SquareExamples) {
  const auto sq = cube_body<2>(1.0);
  EXPECT_NEAR(anisotropic_perimeter(sq, GaugeBody<2>::ball()), 8.0, 1e-13);
  EXPECT_NEAR(anisotropic_perimeter(sq, GaugeBody<2>::ball(2.0)), 16.0, 1e-13);
  const auto rule = sphere_rule<2>(4096);
  const double zb = anisotropic_perimeter<2>(
      sq, [&](const Vec<2>& v) { return moment_body_support(GaugeBody<2>::ball(), v, rule); });
  EXPECT_NEAR(zb, 16.0, 1e-5);
}

TEST(SmoothBody, CurvaturesOfEllipse) {
  const SmoothBody<2> e(Vec<2>(2.0, 1.0));
  // At (2, 0): kappa = a / b^2 = 2; at (0, 1): b / a^2 = 1/4.
  EXPECT_NEAR(e.gauss_curvature(Vec<2>(1, 0)), 2.0, 1e-14);
  EXPECT_NEAR(e.normal_curvature(Vec<2>(1, 0), Vec<2>(0, 1)), 2.0, 1e-14);
  EXPECT_NEAR(e.gauss_curvature(Vec<2>(0, 1)), 0.25, 1e-14);
  EXPECT_THROW(e.normal_curvature(Vec<2>(1, 0), Vec<2>(1, 0)), Error);
}

TEST(SmoothBody, GaussCurvatureIsProductOfPrincipal) {
  const SmoothBody<3> e(Vec<3>(3.0, 2.0, 1.0));
  RandomSource rng(8);
  for (int k = 0; k < 20; ++k) {
    const Vec<3> v = rng.unit_vector<3>();
    const auto p = e.principal(v);
    EXPECT_NEAR(p.curvatures[0] * p.curvatures[1], e.gauss_curvature(v), 1e-12);
    EXPECT_NEAR(e.normal_at(e.boundary_point(v)).dot(v), 1.0, 1e-12);
  }
}

TEST(Perturbation, TranslationFieldTranslates) {
  const auto pent = regular_polygon(5);
  const Vec<2> x0(0.3, -0.2);
  const auto moved = perturbed(pent, translation_field(pent, x0), 1.0);
  EXPECT_NEAR(moved.volume(), pent.volume(), 1e-12);
  EXPECT_NEAR((moved.center() - pent.center() - x0).norm(), 0.0, 1e-12);
  EXPECT_THROW(perturbed(pent, PerturbationField{{1.0}}, 0.1), Error);
}
