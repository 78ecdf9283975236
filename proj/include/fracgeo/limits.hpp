#pragma once

// Limits of the fractional area measure: s -> 0 on polytopes, and pointwise
// s -> 1 curvature integrals on ellipsoids.

#include "fracgeo/measures.hpp"

namespace fracgeo {

struct LimitRow {
  double s;
  /// Facet index, or -1 for a single boundary point.
  int id;
  double lhs;
  double rhs;
  double ratio;
};

/// |L| = (1/n) int rho_L^n on the given rule.
template <int N>
double gauge_volume(const GaugeBody<N>& gauge, const QuadratureRule<N>& rule) {
  return rule.integrate([&](const Vec<N>& u) { return std::pow(gauge.rho(u), N); }) / N;
}

/// Per active facet and per s: s A_i against (|L|/2) a_i.
template <int N>
std::vector<LimitRow> limit_s0_check(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                     const std::vector<double>& s_list,
                                     const Discretization<N>& disc) {
  const double lvol = gauge_volume(gauge, disc.rule);
  std::vector<LimitRow> rows;
  for (double s : s_list) {
    const auto m = disc.measure(body, gauge, s);
    for (std::size_t i = 0; i < body.size(); ++i) {
      const double a = body.facets()[i].area;
      if (a <= 0.0) continue;
      const double lhs = s * m.atoms[i].w;
      const double rhs = 0.5 * lvol * a;
      rows.push_back({s, static_cast<int>(i), lhs, rhs, lhs / rhs});
    }
  }
  return rows;
}

template <int N>
double normal_curvature(const SmoothBody<N>& body, const Vec<N>& v, const Vec<N>& theta) {
  return body.normal_curvature(v, theta);
}

namespace detail {

/// int_0^{pi/2} F(phi) phi^{-s} dphi where F is smooth. On [0, phi0] the
/// substitution phi = t^{1/(1-s)} turns phi^{-s} dphi into a constant
/// multiple of dt; the rest is plain composite Gauss-Legendre.
template <class F>
double weakly_singular_integral(F&& f, double s) {
  constexpr double phi0 = 0.05;
  constexpr int outer_panels = 8;
  const double p = 1.0 / (1.0 - s);
  const double tmax = std::pow(phi0, 1.0 - s);
  std::vector<double> terms;
  for (const auto& [x, w] : unit_gauss20()) {
    const double t = tmax * x;
    terms.push_back(tmax * w * p * f(std::pow(t, p)));
  }
  const double width = (0.5 * std::numbers::pi - phi0) / outer_panels;
  for (int k = 0; k < outer_panels; ++k) {
    for (const auto& [x, w] : unit_gauss20()) {
      const double phi = phi0 + (k + x) * width;
      terms.push_back(width * w * f(phi) * std::pow(phi, -s));
    }
  }
  return pairwise_sum(terms);
}

/// int_{S_z^+} rho_L(u)^{n+s} X_E(z,u)^{-s} du at z = grad h(v). Directions
/// are u = cos(phi) theta - sin(phi) v with theta tangent; the chord is
/// X = 2 sin(phi) |g| / (u^T A u) with g = A z, A = diag(1/a^2), which stays
/// accurate at grazing angles.
template <int N>
double hemisphere_chord_integral(const SmoothBody<N>& body, const GaugeBody<N>& gauge,
                                 const Vec<N>& v, double s, int circle_res) {
  require_s(s);
  const Vec<N> z = body.boundary_point(v);
  const Vec<N> inv_a2 = body.axes().cwiseProduct(body.axes()).cwiseInverse();
  const double g = z.cwiseProduct(inv_a2).norm();
  auto along = [&](const Vec<N>& theta) {
    // Integrand with phi^{-s} factored out; includes the area element.
    return weakly_singular_integral(
        [&](double phi) {
          const Vec<N> u = std::cos(phi) * theta - std::sin(phi) * v;
          const double quad = u.cwiseProduct(u).dot(inv_a2);
          const double x_over_phi = 2.0 * (phi > 0.0 ? std::sin(phi) / phi : 1.0) * g / quad;
          const double jac = N == 3 ? std::cos(phi) : 1.0;
          return jac * std::pow(gauge.rho(u), N + s) * std::pow(x_over_phi, -s);
        },
        s);
  };
  if constexpr (N == 2) {
    const Vec<2> t = perp(v);
    return along(t) + along(Vec<2>(-t));
  } else {
    if (circle_res < 4) throw Error(ErrorKind::invalid_input, "circle_res must be >= 4");
    const auto [e1, e2] = tangent_basis(v);
    const auto parts = parallel_map(static_cast<std::size_t>(circle_res), [&](std::size_t k) {
      const double psi = 2.0 * std::numbers::pi * (k + 0.5) / circle_res;
      return along(Vec<3>(std::cos(psi) * e1 + std::sin(psi) * e2));
    });
    return pairwise_sum(parts) * 2.0 * std::numbers::pi / circle_res;
  }
}

/// int_{S^{n-1} cap v^perp} rho_L(theta)^{n+1} kappa(z, theta): two points
/// with counting measure for n = 2, a midpoint circle rule for n = 3.
template <int N>
double tangent_curvature_integral(const SmoothBody<N>& body, const GaugeBody<N>& gauge,
                                  const Vec<N>& v, int circle_res) {
  if constexpr (N == 2) {
    const Vec<2> t = perp(v);
    return std::pow(gauge.rho(t), 3) * body.normal_curvature(v, t) +
           std::pow(gauge.rho(Vec<2>(-t)), 3) * body.normal_curvature(v, Vec<2>(-t));
  } else {
    if (circle_res < 4) throw Error(ErrorKind::invalid_input, "circle_res must be >= 4");
    const auto [e1, e2] = tangent_basis(v);
    std::vector<double> terms(circle_res);
    for (int k = 0; k < circle_res; ++k) {
      const double psi = 2.0 * std::numbers::pi * (k + 0.5) / circle_res;
      Vec<3> theta = std::cos(psi) * e1 + std::sin(psi) * e2;
      theta -= theta.dot(v) * v;
      theta.normalize();
      terms[k] = std::pow(gauge.rho(theta), 4) * body.normal_curvature(v, theta);
    }
    return pairwise_sum(terms) * 2.0 * std::numbers::pi / circle_res;
  }
}

}  // namespace detail

/// (1-s) int_{S_z^+} rho_L^{n+s} X^{-s} against
/// int_{S cap v^perp} rho_L^{n+1} kappa(z, theta), per s.
template <int N>
std::vector<LimitRow> lemma_conv_check(const SmoothBody<N>& body, const GaugeBody<N>& gauge,
                                       const Vec<N>& v, const std::vector<double>& s_list,
                                       int circle_res = 256) {
  const double rhs = detail::tangent_curvature_integral(body, gauge, v, circle_res);
  std::vector<LimitRow> rows;
  for (double s : s_list) {
    const double lhs = (1.0 - s) * detail::hemisphere_chord_integral(body, gauge, v, s, circle_res);
    rows.push_back({s, -1, lhs, rhs, lhs / rhs});
  }
  return rows;
}

struct ProjectionCurvatureCheck {
  /// Curvature of the projected ellipse at z|u^perp.
  double projected;
  /// kappa(z) / kappa(z, u).
  double predicted;
  double rel_error;
};

/// Curvature of E|u^perp at the image of z = grad h(v), against
/// kappa(z)/kappa(z,u). The shadow of {x^T M^{-1} x <= 1} on a plane with
/// orthonormal basis P is the ellipse with matrix P^T M P.
inline ProjectionCurvatureCheck lemma_xzlem_check(const SmoothBody<3>& body, const Vec<3>& v,
                                                  const Vec<3>& u) {
  const double kz = body.gauss_curvature(v);
  const double kzu = body.normal_curvature(v, u);
  const auto [e1, e2] = tangent_basis(u);
  Eigen::Matrix<double, 3, 2> p;
  p.col(0) = e1;
  p.col(1) = e2;
  const Vec<3> a2 = body.axes().cwiseProduct(body.axes());
  const Eigen::Matrix2d m = p.transpose() * a2.asDiagonal() * p;
  const Eigen::Vector2d w = p.transpose() * v;
  const double projected = std::pow(w.dot(m * w), 1.5) / m.determinant();
  const double predicted = kz / kzu;
  return {projected, predicted, std::abs(projected - predicted) / predicted};
}

/// (1-s)(n/s) Vt_{n+s}(E, L, z), the density of (1-s) A_s at z = grad h(v),
/// against int_{S cap v^perp} rho_L^{n+1} kappa(z, theta).
template <int N>
std::vector<LimitRow> mixed_area_density_check(const SmoothBody<N>& body,
                                               const GaugeBody<N>& gauge, const Vec<N>& v,
                                               const std::vector<double>& s_list,
                                               int circle_res = 256) {
  const double rhs = detail::tangent_curvature_integral(body, gauge, v, circle_res);
  std::vector<LimitRow> rows;
  for (double s : s_list) {
    const double vt = detail::hemisphere_chord_integral(body, gauge, v, s, circle_res) / N;
    const double lhs = (1.0 - s) * (N / s) * vt;
    rows.push_back({s, -1, lhs, rhs, lhs / rhs});
  }
  return rows;
}

}  // namespace fracgeo
