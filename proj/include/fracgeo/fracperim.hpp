#pragma once

// Anisotropic fractional s-perimeter P_s(K, L) of a convex polytope:
//
//   P_s(K, L) = 1/(s(1-s)) int_{S^{n-1}} rho_L(u)^{n+s} int_{u^perp} X_K(y,u)^{1-s} dy du
//             = 1/s        int_{S^{n-1}} rho_L(u)^{n+s} int_K rho_{K,y}(u)^{-s} dy du
//
// computed by one deterministic route and two Monte-Carlo routes.

#include "fracgeo/bodies.hpp"
#include "fracgeo/quadrature.hpp"
#include "fracgeo/random.hpp"

namespace fracgeo {

enum class Route { xray, montecarlo, linesample };

inline const char* to_string(Route r) {
  switch (r) {
    case Route::xray: return "xray";
    case Route::montecarlo: return "montecarlo";
    case Route::linesample: return "linesample";
  }
  return "?";
}

struct PerimeterEstimate {
  double value = 0.0;
  Route route = Route::xray;
  double std_error = 0.0;
  std::size_t cost = 0;
};

namespace detail {

/// int_{u^perp} X_K(y,u)^{1-s} dy for n = 2. X is piecewise linear in y with
/// breaks at the projected vertices, so each piece integrates in closed form.
inline double projected_chord_power(const PolytopeBody<2>& body, const Vec<2>& u, double s,
                                    int /*proj_res*/) {
  const Vec<2> w = perp(u);
  std::vector<double> ys;
  ys.reserve(body.vertices().size());
  for (const auto& x : body.vertices()) ys.push_back(x.dot(w));
  std::sort(ys.begin(), ys.end());
  const double p = 1.0 - s;
  double total = 0.0;
  double y0 = ys.front();
  double x0 = xray(body, Vec<2>(y0 * w), u);
  for (std::size_t k = 1; k < ys.size(); ++k) {
    const double y1 = ys[k];
    const double len = y1 - y0;
    if (len <= 0.0) continue;
    const double x1 = xray(body, Vec<2>(y1 * w), u);
    const double dx = x1 - x0;
    if (std::abs(dx) <= 1e-12 * std::max(x0, x1)) {
      total += len * std::pow(0.5 * (x0 + x1), p);
    } else {
      total += len * (std::pow(x1, p + 1.0) - std::pow(x0, p + 1.0)) / ((p + 1.0) * dx);
    }
    y0 = y1;
    x0 = x1;
  }
  return total;
}

/// Same integral for n = 3 by a proj_res x proj_res midpoint grid on the
/// bounding rectangle of the projection (X = 0 outside the shadow).
inline double projected_chord_power(const PolytopeBody<3>& body, const Vec<3>& u, double s,
                                    int proj_res) {
  const auto [e1, e2] = tangent_basis(u);
  double lo1 = std::numeric_limits<double>::infinity(), hi1 = -lo1;
  double lo2 = lo1, hi2 = -lo1;
  for (const auto& x : body.vertices()) {
    lo1 = std::min(lo1, x.dot(e1));
    hi1 = std::max(hi1, x.dot(e1));
    lo2 = std::min(lo2, x.dot(e2));
    hi2 = std::max(hi2, x.dot(e2));
  }
  const double d1 = (hi1 - lo1) / proj_res;
  const double d2 = (hi2 - lo2) / proj_res;
  std::vector<double> rows(proj_res);
  for (int a = 0; a < proj_res; ++a) {
    double row = 0.0;
    const double c1 = lo1 + (a + 0.5) * d1;
    for (int b = 0; b < proj_res; ++b) {
      const double c2 = lo2 + (b + 0.5) * d2;
      const double x = xray(body, Vec<3>(c1 * e1 + c2 * e2), u);
      if (x > 0.0) row += std::pow(x, 1.0 - s);
    }
    rows[a] = row;
  }
  return pairwise_sum(rows) * d1 * d2;
}

}  // namespace detail

/// Deterministic route: outer sphere rule, inner chord-power integral over
/// the projection (closed form for n = 2, midpoint grid for n = 3).
template <int N>
PerimeterEstimate ps_xray(const PolytopeBody<N>& body, const GaugeBody<N>& gauge, double s,
                          const QuadratureRule<N>& rule, int proj_res = 128) {
  require_s(s);
  if (proj_res < 1) throw Error(ErrorKind::invalid_input, "proj_res must be >= 1");
  const auto terms = parallel_map(rule.size(), [&](std::size_t k) {
    const Vec<N>& u = rule.nodes[k];
    return rule.weights[k] * std::pow(gauge.rho(u), N + s) *
           detail::projected_chord_power(body, u, s, proj_res);
  });
  PerimeterEstimate est;
  est.value = pairwise_sum(terms) / (s * (1.0 - s));
  est.route = Route::xray;
  est.cost = rule.size() * (N == 2 ? body.vertices().size()
                                   : static_cast<std::size_t>(proj_res) * proj_res);
  return est;
}

enum class McEstimator {
  /// rho_{K,y}(u)^{-s} replaced by its mean over the chord through y,
  /// X^{-s}/(1-s). Finite variance for every s in (0,1).
  chord,
  /// Average of rho_{K,y}(u)^{-s} and rho_{K,y}(-u)^{-s}. Infinite variance
  /// for s >= 1/2.
  paired,
};

struct McOptions {
  McEstimator estimator = McEstimator::chord;
  /// Reflect every draw (U -> 1-U, u -> -u); -K sampled this way reproduces
  /// the estimate for K exactly.
  bool mirrored = false;
};

namespace detail {

inline constexpr std::size_t mc_block = 8192;

struct BlockMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;
};

inline PerimeterEstimate finish_mc(const std::vector<BlockMoments>& blocks, double scale,
                                   Route route) {
  std::vector<double> sums, sqs;
  std::size_t n = 0;
  for (const auto& b : blocks) {
    sums.push_back(b.sum);
    sqs.push_back(b.sum_sq);
    n += b.count;
  }
  const double mean = pairwise_sum(sums) / n;
  const double var = std::max(0.0, pairwise_sum(sqs) / n - mean * mean) * n / std::max<std::size_t>(1, n - 1);
  PerimeterEstimate est;
  est.value = scale * mean;
  est.std_error = scale * std::sqrt(var / n);
  est.route = route;
  est.cost = n;
  return est;
}

}  // namespace detail

/// Monte-Carlo route on the (y, u) double integral: y uniform in K, u uniform
/// on the sphere.
template <int N>
PerimeterEstimate ps_montecarlo(const PolytopeBody<N>& body, const GaugeBody<N>& gauge, double s,
                                std::size_t samples, const RandomSource& rng,
                                McOptions opts = {}) {
  require_s(s);
  if (samples < 2) throw Error(ErrorKind::invalid_input, "need at least 2 samples");
  Vec<N> lo = body.vertices().front(), hi = lo;
  for (const auto& x : body.vertices()) {
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  const Vec<N> mid = 0.5 * (lo + hi);
  const Vec<N> width = hi - lo;
  if (!(body.volume() / width.prod() >= 1e-4)) {
    throw Error(ErrorKind::degenerate_body, "rejection acceptance below 1e-4");
  }
  const std::size_t nblocks = (samples + detail::mc_block - 1) / detail::mc_block;
  const auto blocks = parallel_map(nblocks, [&](std::size_t b) {
    RandomSource r = rng.substream(b);
    detail::BlockMoments m;
    const std::size_t count = std::min(detail::mc_block, samples - b * detail::mc_block);
    while (m.count < count) {
      Vec<N> y;
      for (int k = 0; k < N; ++k) {
        const double t = r.uniform();
        y[k] = mid[k] + ((opts.mirrored ? 0.5 - t : t - 0.5) * width[k]);
      }
      Vec<N> u = r.template unit_vector<N>();
      if (opts.mirrored) u = -u;
      if (body.max_violation(y) > 0.0) continue;
      double f = 0.0;
      if (opts.estimator == McEstimator::chord) {
        const double x = xray(body, y, u);
        if (x < 1e-12) continue;
        f = std::pow(x, -s) / (1.0 - s);
      } else {
        const double rp = radial(body, y, u);
        const double rm = radial(body, y, Vec<N>(-u));
        if (rp < 1e-12 || rm < 1e-12) continue;
        f = 0.5 * (std::pow(rp, -s) + std::pow(rm, -s));
      }
      f *= std::pow(gauge.rho(u), N + s);
      m.sum += f;
      m.sum_sq += f * f;
      ++m.count;
    }
    return m;
  });
  return detail::finish_mc(blocks, sphere_area(N) * body.volume() / s, Route::montecarlo);
}

/// Random-line route for the Euclidean gauge: u uniform on the sphere, y
/// uniform in a cube of u^perp that covers every projection of K.
template <int N>
PerimeterEstimate ps_linesample(const PolytopeBody<N>& body, double s, std::size_t samples,
                                const RandomSource& rng) {
  require_s(s);
  if (samples < 2) throw Error(ErrorKind::invalid_input, "need at least 2 samples");
  const Vec<N> c = body.center();
  const double r = body.radius();
  const std::size_t nblocks = (samples + detail::mc_block - 1) / detail::mc_block;
  const auto blocks = parallel_map(nblocks, [&](std::size_t b) {
    RandomSource g = rng.substream(b);
    detail::BlockMoments m;
    const std::size_t count = std::min(detail::mc_block, samples - b * detail::mc_block);
    for (; m.count < count; ++m.count) {
      const Vec<N> u = g.template unit_vector<N>();
      Vec<N> y = c;
      if constexpr (N == 2) {
        y += g.uniform(-r, r) * perp(u);
      } else {
        const auto [e1, e2] = tangent_basis(u);
        y += g.uniform(-r, r) * e1;
        y += g.uniform(-r, r) * e2;
      }
      const double x = xray(body, y, u);
      const double f = x > 0.0 ? std::pow(x, 1.0 - s) : 0.0;
      m.sum += f;
      m.sum_sq += f * f;
    }
    return m;
  });
  const double scale = sphere_area(N) * std::pow(2.0 * r, N - 1) / (s * (1.0 - s));
  return detail::finish_mc(blocks, scale, Route::linesample);
}

struct LudwigRow {
  double s;
  double s_times_ps;
  double one_minus_s_times_ps;
  double ps;
};

struct LudwigTable {
  std::vector<LudwigRow> rows;
  /// n |K| |L|, the s -> 0 limit of s P_s.
  double target_s0;
  /// P(K, ZL), the s -> 1 limit of (1-s) P_s.
  double target_s1;
};

template <int N>
LudwigTable ludwig_limits(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                          const std::vector<double>& s_list, const QuadratureRule<N>& rule,
                          int proj_res = 128) {
  LudwigTable table;
  table.target_s0 = N * body.volume() * gauge.volume();
  table.target_s1 = anisotropic_perimeter<N>(
      body, [&](const Vec<N>& v) { return moment_body_support(gauge, v, rule); });
  for (double s : s_list) {
    const double ps = ps_xray(body, gauge, s, rule, proj_res).value;
    table.rows.push_back({s, s * ps, (1.0 - s) * ps, ps});
  }
  return table;
}

}  // namespace fracgeo
