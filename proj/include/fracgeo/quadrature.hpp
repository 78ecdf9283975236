#pragma once

// Integration rules on the boundary and interior of a polytope. Sphere rules
// live in sphere_rule.hpp.

#include "fracgeo/bodies.hpp"
#include "fracgeo/random.hpp"
#include "fracgeo/sphere_rule.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace fracgeo {

/// Sample points z_j on facet interiors with outward normal index and area
/// weight. Samples are grouped by facet in fan order.
template <int N>
struct BoundaryQuadrature {
  struct Sample {
    Vec<N> z;
    int facet;
    double weight;
    /// Nearest vertex for edge samples (n = 2), else -1. With `offset` =
    /// z - vertex it resolves distances far below the rounding error of z.
    int anchor = -1;
    Vec<N> offset = Vec<N>::Zero();
  };
  std::vector<Sample> samples;

  std::size_t size() const noexcept { return samples.size(); }

  double total_weight() const {
    std::vector<double> w;
    for (const auto& s : samples) w.push_back(s.weight);
    return pairwise_sum(w);
  }
};

enum class BoundaryScheme {
  /// Equal-weight grid: midpoints of equal subintervals (n = 2) or centroids
  /// of a uniform triangle subdivision (n = 3).
  uniform,
  /// n = 2 only: Gauss-Legendre on panels refined geometrically toward both
  /// edge endpoints, where the dual mixed volume behaves like dist^{-s}.
  /// Falls back to `uniform` for n = 3.
  graded,
};

namespace detail {

/// Ratio of consecutive breakpoints of the graded edge panels.
inline const std::vector<std::pair<double, double>>& unit_gauss7() {
  static const std::vector<std::pair<double, double>> rule = [] {
    using G = boost::math::quadrature::gauss<double, 7>;
    std::vector<std::pair<double, double>> out;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.emplace_back(0.5 + 0.5 * x[i], 0.5 * w[i]);
      if (x[i] != 0.0) out.emplace_back(0.5 - 0.5 * x[i], 0.5 * w[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return rule;
}

inline const std::vector<std::pair<double, double>>& unit_gauss20() {
  static const std::vector<std::pair<double, double>> rule = [] {
    using G = boost::math::quadrature::gauss<double, 20>;
    std::vector<std::pair<double, double>> out;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.emplace_back(0.5 + 0.5 * x[i], 0.5 * w[i]);
      if (x[i] != 0.0) out.emplace_back(0.5 - 0.5 * x[i], 0.5 * w[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return rule;
}

/// Ratio between consecutive panels of the graded edge rule.
inline constexpr double graded_ratio = 0.3;

/// Node on an edge [a, b]: fraction `x` of the edge measured from a (or from
/// b when `from_b`), and weight as a fraction of the edge length.
struct EdgeNode {
  double x;
  double w;
  bool from_b;
};

/// `panels` geometrically graded Gauss panels on each half of an edge,
/// weights summing to 1. When `singular_s` > 0 the panel touching each
/// endpoint is mapped by x = b t^{1/(1-s)}, which makes integrands behaving
/// like x^{-s} smooth in t. Distances are kept relative to the nearer
/// endpoint so nodes far below machine epsilon survive.
inline std::vector<EdgeNode> graded_edge_rule(int panels, double singular_s = 0.0) {
  std::vector<std::pair<double, double>> half;
  // Breakpoints 0 < b_1 < ... < b_P = 1/2, b_k = (1/2) ratio^{P-k}.
  double lo = 0.0;
  for (int k = 1; k <= panels; ++k) {
    const double hi = 0.5 * std::pow(graded_ratio, panels - k);
    if (k == 1 && singular_s > 0.0) {
      const double p = 1.0 / (1.0 - singular_s);
      for (const auto& [t, w] : unit_gauss7()) {
        half.emplace_back(hi * std::pow(t, p), hi * w * p * std::pow(t, p - 1.0));
      }
    } else {
      for (const auto& [x, w] : unit_gauss7()) half.emplace_back(lo + (hi - lo) * x, (hi - lo) * w);
    }
    lo = hi;
  }
  std::vector<EdgeNode> out;
  for (const auto& [x, w] : half) out.push_back({x, w, false});
  for (auto it = half.rbegin(); it != half.rend(); ++it) out.push_back({it->first, it->second, true});
  return out;
}

}  // namespace detail

/// Boundary rule with `per_facet` points per active facet (n = 2), or
/// per_facet^2 points per facet triangle (n = 3). For the graded scheme the
/// point count per edge is 14 * max(1, per_facet / 14), and `singular_s`
/// selects the endpoint singularity the end panels are adapted to. Weights on
/// each facet sum to its area.
template <int N>
BoundaryQuadrature<N> boundary_rule(const PolytopeBody<N>& body, int per_facet,
                                    BoundaryScheme scheme = BoundaryScheme::uniform,
                                    double singular_s = 0.0) {
  if (per_facet < 1) throw Error(ErrorKind::invalid_input, "per_facet must be >= 1");
  BoundaryQuadrature<N> bq;
  const auto& verts = body.vertices();
  for (std::size_t i = 0; i < body.size(); ++i) {
    const Facet& f = body.facets()[i];
    if (!f.active()) continue;
    const int fi = static_cast<int>(i);
    if constexpr (N == 2) {
      const Vec<2> a = verts[f.polygon[0]];
      const Vec<2> b = verts[f.polygon[1]];
      auto emit = [&](double x, double w, bool from_b) {
        const int anchor = from_b ? f.polygon[1] : f.polygon[0];
        const Vec<2> offset = from_b ? Vec<2>(x * (a - b)) : Vec<2>(x * (b - a));
        bq.samples.push_back({verts[anchor] + offset, fi, w, anchor, offset});
      };
      if (scheme == BoundaryScheme::graded) {
        for (const auto& e : detail::graded_edge_rule(std::max(1, per_facet / 14), singular_s)) {
          emit(e.x, e.w * f.area, e.from_b);
        }
      } else {
        for (int k = 0; k < per_facet; ++k) {
          const double t = (k + 0.5) / per_facet;
          emit(t <= 0.5 ? t : 1.0 - t, f.area / per_facet, t > 0.5);
        }
      }
    } else {
      Vec<3> c = Vec<3>::Zero();
      for (int k : f.polygon) c += verts[k];
      c /= static_cast<double>(f.polygon.size());
      const int k = per_facet;
      for (std::size_t e = 0; e < f.polygon.size(); ++e) {
        const Vec<3> p = verts[f.polygon[e]];
        const Vec<3> q = verts[f.polygon[(e + 1) % f.polygon.size()]];
        const double tri = 0.5 * (p - c).cross(q - c).norm();
        if (tri <= 0.0) continue;
        auto emit = [&](double bp, double bq_) {
          bq.samples.push_back({c + bp * (p - c) + bq_ * (q - c), fi, tri / (k * k)});
        };
        for (int a = 0; a < k; ++a) {
          for (int b = 0; a + b < k; ++b) {
            emit((a + 1.0 / 3.0) / k, (b + 1.0 / 3.0) / k);
            if (a + b < k - 1) emit((a + 2.0 / 3.0) / k, (b + 2.0 / 3.0) / k);
          }
        }
      }
    }
  }
  return bq;
}

template <int N>
struct InteriorSamples {
  std::vector<Vec<N>> points;
  double acceptance;
};

/// N i.i.d. uniform points in K by bounding-box rejection.
template <int N>
InteriorSamples<N> sample_interior(const PolytopeBody<N>& body, std::size_t count,
                                   RandomSource& rng) {
  Vec<N> lo = body.vertices().front();
  Vec<N> hi = lo;
  for (const auto& x : body.vertices()) {
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  const double box = (hi - lo).prod();
  const double acceptance = body.volume() / box;
  if (!(acceptance >= 1e-4)) {
    throw Error(ErrorKind::degenerate_body, "rejection acceptance below 1e-4");
  }
  InteriorSamples<N> out{{}, acceptance};
  out.points.reserve(count);
  while (out.points.size() < count) {
    Vec<N> x;
    for (int k = 0; k < N; ++k) x[k] = rng.uniform(lo[k], hi[k]);
    if (body.max_violation(x) <= 0.0) out.points.push_back(x);
  }
  return out;
}

}  // namespace fracgeo
