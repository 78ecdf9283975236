#pragma once

// Convex bodies and gauges: Wulff shapes on a fixed normal fan, origin
// symmetric gauges, and analytic ellipsoids.

#include "fracgeo/core.hpp"
#include "fracgeo/sphere_rule.hpp"

#include <limits>
#include <optional>
#include <variant>

namespace fracgeo {

/// One facet of a Wulff shape, index-aligned with the input normal fan.
/// `polygon` lists vertex indices: for n = 2 the (start, end) pair in
/// counter-clockwise boundary order, for n = 3 the facet polygon ordered
/// counter-clockwise as seen from outside. Inactive facets have area 0.
struct Facet {
  double area = 0.0;
  std::vector<int> polygon;

  bool active() const noexcept { return area > 0.0; }
};

template <int N>
class PolytopeBody;

template <int N>
PolytopeBody<N> wulff_shape(std::vector<Vec<N>> normals, std::vector<double> support);

/// Convex polytope {x : x.v_i <= h_i}. Immutable; all derived data is built
/// by wulff_shape().
template <int N>
class PolytopeBody {
  static_assert(N == 2 || N == 3);

 public:
  static constexpr int dim = N;

  const std::vector<Vec<N>>& normals() const noexcept { return normals_; }
  const std::vector<double>& support_values() const noexcept { return support_; }
  const std::vector<Vec<N>>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return normals_.size(); }
  double volume() const noexcept { return volume_; }
  bool origin_interior() const noexcept { return origin_interior_; }

  /// Vertex centroid; lies in the interior.
  const Vec<N>& center() const noexcept { return center_; }

  /// Largest distance from center() to a vertex.
  double radius() const noexcept { return radius_; }

  /// Absolute tolerance used for membership and facet incidence.
  double tolerance() const noexcept { return tol_; }

  /// Active facets in counter-clockwise order of their normals (n = 2).
  const std::vector<int>& ccw_active() const noexcept { return ccw_active_; }

  /// Largest constraint violation max_i (x.v_i - h_i); negative inside.
  double max_violation(const Vec<N>& x) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      worst = std::max(worst, x.dot(normals_[i]) - support_[i]);
    }
    return worst;
  }

  bool contains(const Vec<N>& x, double slack = 1e-9) const {
    return max_violation(x) <= slack;
  }

  std::vector<double> facet_areas() const {
    std::vector<double> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(f.area);
    return out;
  }

  PolytopeBody translated(const Vec<N>& offset) const {
    std::vector<double> h = support_;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += offset.dot(normals_[i]);
    return wulff_shape<N>(normals_, std::move(h));
  }

  PolytopeBody scaled(double factor) const {
    std::vector<double> h = support_;
    for (double& x : h) x *= factor;
    return wulff_shape<N>(normals_, std::move(h));
  }

  /// -K on the reflected fan.
  PolytopeBody reflected() const {
    std::vector<Vec<N>> v = normals_;
    for (auto& x : v) x = -x;
    return wulff_shape<N>(std::move(v), support_);
  }

 private:
  friend PolytopeBody wulff_shape<N>(std::vector<Vec<N>>, std::vector<double>);
  PolytopeBody() = default;

  std::vector<Vec<N>> normals_;
  std::vector<double> support_;
  std::vector<Vec<N>> vertices_;
  std::vector<Facet> facets_;
  std::vector<int> ccw_active_;
  Vec<N> center_ = Vec<N>::Zero();
  double radius_ = 0.0;
  double volume_ = 0.0;
  double tol_ = 0.0;
  bool origin_interior_ = false;
};

namespace detail {

template <int N>
std::optional<Vec<N>> solve_planes(const std::vector<Vec<N>>& normals,
                                   const std::vector<double>& h,
                                   const std::array<int, N>& idx) {
  Mat<N> a;
  Vec<N> b;
  for (int r = 0; r < N; ++r) {
    a.row(r) = normals[idx[r]].transpose();
    b[r] = h[idx[r]];
  }
  if (std::abs(a.determinant()) < 1e-12) return std::nullopt;
  return Vec<N>(a.partialPivLu().solve(b));
}

/// True when some nonzero d has d.v_i <= 0 for every normal. The recession
/// cone of the half-space system is polyhedral, so if it is nontrivial it
/// contains a ray on which n-1 independent constraints are tight.
template <int N>
bool has_recession_direction(const std::vector<Vec<N>>& normals) {
  auto is_recession = [&](const Vec<N>& d) {
    for (const auto& v : normals) {
      if (d.dot(v) > 1e-12) return false;
    }
    return true;
  };
  const std::size_t m = normals.size();
  for (std::size_t i = 0; i < m; ++i) {
    if constexpr (N == 2) {
      const Vec<2> d = perp(normals[i]);
      if (is_recession(d) || is_recession(-d)) return true;
    } else {
      for (std::size_t j = i + 1; j < m; ++j) {
        Vec<3> d = normals[i].cross(normals[j]);
        const double len = d.norm();
        if (len < 1e-12) continue;
        d /= len;
        if (is_recession(d) || is_recession(-d)) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Wulff shape {x : x.v_i <= h_i for all i}. Vertices come from exhaustive
/// n-subset plane intersections filtered by feasibility; facets that do not
/// touch the body are kept with area 0 so measures stay index-aligned with
/// the fan.
template <int N>
PolytopeBody<N> wulff_shape(std::vector<Vec<N>> normals, std::vector<double> support) {
  static_assert(N == 2 || N == 3);
  if (normals.size() != support.size()) {
    throw Error(ErrorKind::invalid_input, "normals and support differ in length");
  }
  if (normals.size() < static_cast<std::size_t>(N + 1)) {
    throw Error(ErrorKind::unbounded, "need at least n+1 normals");
  }
  double hmax = 0.0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const double len = normals[i].norm();
    if (std::abs(len - 1.0) > 1e-9) {
      throw Error(ErrorKind::invalid_input,
                  "normal " + std::to_string(i) + " is not a unit vector");
    }
    if (!std::isfinite(support[i])) {
      throw Error(ErrorKind::invalid_input, "support values must be finite");
    }
    normals[i] /= len;
    hmax = std::max(hmax, std::abs(support[i]));
  }
  if (detail::has_recession_direction<N>(normals)) {
    throw Error(ErrorKind::unbounded, "normals do not positively span R^n");
  }

  PolytopeBody<N> body;
  body.normals_ = std::move(normals);
  body.support_ = std::move(support);
  const auto& v = body.normals_;
  const auto& h = body.support_;
  const std::size_t m = v.size();
  const double scale = std::max(1.0, hmax);
  body.tol_ = 1e-9 * scale;
  const double feasible_tol = 1e-10 * scale;

  auto add_vertex = [&](const Vec<N>& x) {
    for (std::size_t i = 0; i < m; ++i) {
      if (x.dot(v[i]) - h[i] > feasible_tol) return;
    }
    for (const auto& y : body.vertices_) {
      if ((x - y).norm() <= body.tol_) return;
    }
    body.vertices_.push_back(x);
  };
  if constexpr (N == 2) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::array<int, 2> idx{static_cast<int>(i), static_cast<int>(j)};
        if (auto x = detail::solve_planes<2>(v, h, idx)) add_vertex(*x);
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
          const std::array<int, 3> idx{static_cast<int>(i), static_cast<int>(j),
                                       static_cast<int>(k)};
          if (auto x = detail::solve_planes<3>(v, h, idx)) add_vertex(*x);
        }
      }
    }
  }
  if (body.vertices_.size() < static_cast<std::size_t>(N + 1)) {
    throw Error(ErrorKind::empty, "half-space intersection has no interior");
  }

  body.center_ = Vec<N>::Zero();
  for (const auto& x : body.vertices_) body.center_ += x;
  body.center_ /= static_cast<double>(body.vertices_.size());
  for (const auto& x : body.vertices_) {
    body.radius_ = std::max(body.radius_, (x - body.center_).norm());
  }

  body.facets_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> on;
    for (std::size_t k = 0; k < body.vertices_.size(); ++k) {
      if (std::abs(body.vertices_[k].dot(v[i]) - h[i]) <= body.tol_) {
        on.push_back(static_cast<int>(k));
      }
    }
    Facet& f = body.facets_[i];
    if constexpr (N == 2) {
      if (on.size() < 2) continue;
      const Vec<2> t = perp(v[i]);
      auto by_t = [&](int a, int b) {
        return body.vertices_[a].dot(t) < body.vertices_[b].dot(t);
      };
      const int lo = *std::min_element(on.begin(), on.end(), by_t);
      const int hi = *std::max_element(on.begin(), on.end(), by_t);
      const double len = (body.vertices_[hi] - body.vertices_[lo]).dot(t);
      if (len <= body.tol_) continue;
      f.polygon = {lo, hi};
      f.area = len;
    } else {
      if (on.size() < 3) continue;
      Vec<3> c = Vec<3>::Zero();
      for (int k : on) c += body.vertices_[k];
      c /= static_cast<double>(on.size());
      const auto [e1, e2] = tangent_basis(v[i]);
      std::sort(on.begin(), on.end(), [&](int a, int b) {
        const Vec<3> pa = body.vertices_[a] - c;
        const Vec<3> pb = body.vertices_[b] - c;
        return std::atan2(pa.dot(e2), pa.dot(e1)) < std::atan2(pb.dot(e2), pb.dot(e1));
      });
      // tangent_basis gives e1 x e2 = v, so increasing angle is CCW from outside.
      double area = 0.0;
      for (std::size_t k = 0; k < on.size(); ++k) {
        const Vec<3> p = body.vertices_[on[k]] - c;
        const Vec<3> q = body.vertices_[on[(k + 1) % on.size()]] - c;
        area += 0.5 * p.cross(q).dot(v[i]);
      }
      if (area <= body.tol_ * body.tol_) continue;
      f.polygon = std::move(on);
      f.area = area;
    }
  }

  double vol = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    vol += body.facets_[i].area * (h[i] - body.center_.dot(v[i]));
  }
  body.volume_ = vol / N;
  if (!(body.volume_ > 1e-12 * std::pow(scale, N))) {
    throw Error(ErrorKind::empty, "half-space intersection has no interior");
  }

  body.origin_interior_ = std::all_of(h.begin(), h.end(), [](double x) { return x > 0.0; });

  if constexpr (N == 2) {
    for (std::size_t i = 0; i < m; ++i) {
      if (body.facets_[i].active()) body.ccw_active_.push_back(static_cast<int>(i));
    }
    std::sort(body.ccw_active_.begin(), body.ccw_active_.end(), [&](int a, int b) {
      return std::atan2(v[a].y(), v[a].x()) < std::atan2(v[b].y(), v[b].x());
    });
  }
  return body;
}

/// h_K(v) = max over vertices of x.v.
template <int N>
double support(const PolytopeBody<N>& body, const Vec<N>& v) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& x : body.vertices()) best = std::max(best, x.dot(v));
  return best;
}

/// rho_{K,z}(u) = max{t >= 0 : z + t u in K}. Zero when z is on the boundary
/// and u points out of K.
template <int N>
double radial(const PolytopeBody<N>& body, const Vec<N>& z, const Vec<N>& u) {
  if (body.max_violation(z) > 1e-9) {
    throw Error(ErrorKind::point_outside, "radial: base point lies outside the body");
  }
  const auto& v = body.normals();
  const auto& h = body.support_values();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = u.dot(v[i]);
    if (d > 0.0) best = std::min(best, (h[i] - z.dot(v[i])) / d);
  }
  return std::max(0.0, best);
}

/// X_K(y, u): length of K intersected with the line y + R u.
template <int N>
double xray(const PolytopeBody<N>& body, const Vec<N>& y, const Vec<N>& u) {
  const auto& v = body.normals();
  const auto& h = body.support_values();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = u.dot(v[i]);
    const double c = h[i] - y.dot(v[i]);
    if (std::abs(d) < 1e-15) {
      if (c < 0.0) return 0.0;
      continue;
    }
    if (d > 0.0) {
      hi = std::min(hi, c / d);
    } else {
      lo = std::max(lo, c / d);
    }
    if (hi <= lo) return 0.0;
  }
  return std::max(0.0, hi - lo);
}

template <int N>
double volume(const PolytopeBody<N>& body) {
  return body.volume();
}

// ---------------------------------------------------------------------------
// Gauges

/// Origin-symmetric convex body L used as the unit ball of a norm.
template <int N>
class GaugeBody {
 public:
  struct Ball {
    double radius;
  };
  struct Ellipsoid {
    Vec<N> axes;
  };
  struct Polytope {
    PolytopeBody<N> body;
  };

  static GaugeBody ball(double radius = 1.0) {
    if (!(radius > 0.0)) throw Error(ErrorKind::invalid_input, "ball radius must be positive");
    return GaugeBody(Ball{radius});
  }

  static GaugeBody ellipsoid(const Vec<N>& axes) {
    if (!(axes.minCoeff() > 0.0)) {
      throw Error(ErrorKind::invalid_input, "ellipsoid semi-axes must be positive");
    }
    return GaugeBody(Ellipsoid{axes});
  }

  /// Requires an origin-symmetric polytope with the origin in its interior.
  static GaugeBody polytope(PolytopeBody<N> body) {
    if (!(body.max_violation(Vec<N>::Zero()) < -body.tolerance())) {
      throw Error(ErrorKind::invalid_input, "polytope gauge must contain the origin in its interior");
    }
    for (const auto& x : body.vertices()) {
      const bool mirrored = std::any_of(body.vertices().begin(), body.vertices().end(),
                                        [&](const Vec<N>& y) {
                                          return (x + y).norm() <= 1e3 * body.tolerance();
                                        });
      if (!mirrored) {
        throw Error(ErrorKind::invalid_input, "polytope gauge must be origin symmetric");
      }
    }
    return GaugeBody(Polytope{std::move(body)});
  }

  /// Gauge given by support values on a node set: the Wulff shape of the
  /// table. The table must be even (h(u) = h(-u) on antipodal nodes).
  static GaugeBody support_sampled(const std::vector<Vec<N>>& nodes,
                                   const std::vector<double>& h) {
    return polytope(wulff_shape<N>(nodes, h));
  }

  /// [-1,1]^n.
  static GaugeBody cube() {
    std::vector<Vec<N>> normals;
    for (int k = 0; k < N; ++k) {
      normals.push_back(Vec<N>::Unit(k));
      normals.push_back(-Vec<N>::Unit(k));
    }
    return polytope(wulff_shape<N>(normals, std::vector<double>(normals.size(), 1.0)));
  }

  /// rho_L(u) for a unit vector u.
  double rho(const Vec<N>& u) const {
    return std::visit(
        [&](const auto& g) -> double {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Ball>) {
            return g.radius;
          } else if constexpr (std::is_same_v<T, Ellipsoid>) {
            return 1.0 / std::sqrt(u.cwiseQuotient(g.axes).squaredNorm());
          } else {
            return radial(g.body, Vec<N>::Zero().eval(), u);
          }
        },
        kind_);
  }

  /// ||x||_L = |x| / rho_L(x/|x|).
  double norm(const Vec<N>& x) const {
    const double len = x.norm();
    if (len == 0.0) return 0.0;
    return len / rho(x / len);
  }

  /// h_L(v); equals the dual norm ||v||_{L*}.
  double support(const Vec<N>& v) const {
    return std::visit(
        [&](const auto& g) -> double {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Ball>) {
            return g.radius * v.norm();
          } else if constexpr (std::is_same_v<T, Ellipsoid>) {
            return v.cwiseProduct(g.axes).norm();
          } else {
            return fracgeo::support(g.body, v);
          }
        },
        kind_);
  }

  /// Exact |L|.
  double volume() const {
    return std::visit(
        [&](const auto& g) -> double {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Ball>) {
            return unit_ball_volume(N) * std::pow(g.radius, N);
          } else if constexpr (std::is_same_v<T, Ellipsoid>) {
            return unit_ball_volume(N) * g.axes.prod();
          } else {
            return g.body.volume();
          }
        },
        kind_);
  }

  GaugeBody scaled(double factor) const {
    return std::visit(
        [&](const auto& g) -> GaugeBody {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Ball>) {
            return ball(g.radius * factor);
          } else if constexpr (std::is_same_v<T, Ellipsoid>) {
            return ellipsoid(g.axes * factor);
          } else {
            return polytope(g.body.scaled(factor));
          }
        },
        kind_);
  }

  std::string kind_name() const {
    switch (kind_.index()) {
      case 0: return "ball";
      case 1: return "ellipsoid";
      default: return "polytope";
    }
  }

  const std::variant<Ball, Ellipsoid, Polytope>& kind() const noexcept { return kind_; }

 private:
  template <class T>
  explicit GaugeBody(T g) : kind_(std::move(g)) {}

  std::variant<Ball, Ellipsoid, Polytope> kind_;
};

template <int N>
double gauge_rho(const GaugeBody<N>& gauge, const Vec<N>& u) {
  return gauge.rho(u);
}

template <int N>
double gauge_norm(const GaugeBody<N>& gauge, const Vec<N>& x) {
  return gauge.norm(x);
}

/// h_{ZL}(v) = ((n+1)/2) int_L |v.x| dx, evaluated in polar coordinates as
/// (1/2) int_{S^{n-1}} rho_L(u)^{n+1} |v.u| du.
template <int N>
double moment_body_support(const GaugeBody<N>& gauge, const Vec<N>& v,
                           const QuadratureRule<N>& rule) {
  return 0.5 * rule.integrate([&](const Vec<N>& u) {
    return std::pow(gauge.rho(u), N + 1) * std::abs(v.dot(u));
  });
}

/// P(K, M) = sum_i a_i h_M(v_i), for any support evaluator h_M.
template <int N, class SupportFn>
  requires std::is_invocable_r_v<double, SupportFn, const Vec<N>&>
double anisotropic_perimeter(const PolytopeBody<N>& body, SupportFn&& support_of_m) {
  std::vector<double> terms;
  terms.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const double a = body.facets()[i].area;
    terms.push_back(a > 0.0 ? a * support_of_m(body.normals()[i]) : 0.0);
  }
  return pairwise_sum(terms);
}

template <int N>
double anisotropic_perimeter(const PolytopeBody<N>& body, const GaugeBody<N>& m) {
  return anisotropic_perimeter<N>(body, [&](const Vec<N>& v) { return m.support(v); });
}

// ---------------------------------------------------------------------------
// Smooth bodies

/// Axis-aligned ellipsoid sum x_k^2 / a_k^2 <= 1 with analytic support
/// function, boundary map and curvatures.
template <int N>
class SmoothBody {
 public:
  explicit SmoothBody(const Vec<N>& axes) : axes_(axes) {
    if (!(axes.minCoeff() > 0.0)) {
      throw Error(ErrorKind::invalid_input, "ellipsoid semi-axes must be positive");
    }
  }

  static SmoothBody ball(double r = 1.0) { return SmoothBody(Vec<N>::Constant(r)); }

  const Vec<N>& axes() const noexcept { return axes_; }

  double support(const Vec<N>& v) const { return v.cwiseProduct(axes_).norm(); }

  /// z(v) = grad h(v): the boundary point with outer normal v.
  Vec<N> boundary_point(const Vec<N>& v) const {
    const Vec<N> a2 = axes_.cwiseProduct(axes_);
    return a2.cwiseProduct(v) / support(v);
  }

  /// Outer unit normal at a boundary point.
  Vec<N> normal_at(const Vec<N>& z) const { return half_gradient(z).normalized(); }

  /// Length of the chord from boundary point z in direction u (0 when u
  /// points outward).
  double chord_from_boundary(const Vec<N>& z, const Vec<N>& u) const {
    const Vec<N> g = half_gradient(z);
    const double quad = u.cwiseQuotient(axes_).squaredNorm();
    return std::max(0.0, -2.0 * g.dot(u) / quad);
  }

  /// X_E(y, u) for an arbitrary line.
  double xray(const Vec<N>& y, const Vec<N>& u) const {
    const Vec<N> yu = y.cwiseQuotient(axes_);
    const Vec<N> uu = u.cwiseQuotient(axes_);
    const double a = uu.squaredNorm();
    const double b = 2.0 * yu.dot(uu);
    const double c = yu.squaredNorm() - 1.0;
    const double disc = b * b - 4.0 * a * c;
    return disc > 0.0 ? std::sqrt(disc) / a : 0.0;
  }

  /// Gauss curvature at z(v): h(v)^{n+1} / prod a_k^2.
  double gauss_curvature(const Vec<N>& v) const {
    const Vec<N> a2 = axes_.cwiseProduct(axes_);
    return std::pow(support(v), N + 1) / a2.prod();
  }

  /// Normal curvature at z(v) in the tangent direction theta, from the
  /// second fundamental form of the implicit surface.
  double normal_curvature(const Vec<N>& v, const Vec<N>& theta) const {
    if (std::abs(theta.dot(v)) > 1e-10 || std::abs(theta.norm() - 1.0) > 1e-10) {
      throw Error(ErrorKind::not_tangent, "direction is not a unit tangent vector");
    }
    const Vec<N> z = boundary_point(v);
    return theta.cwiseQuotient(axes_).squaredNorm() / half_gradient(z).norm();
  }

  struct Principal {
    std::array<double, N - 1> curvatures;
    std::array<Vec<N>, N - 1> directions;
  };

  /// Principal curvatures and directions at z(v).
  Principal principal(const Vec<N>& v) const {
    Principal out;
    const Vec<N> z = boundary_point(v);
    const double g = half_gradient(z).norm();
    if constexpr (N == 2) {
      const Vec<2> t = perp(v);
      out.directions[0] = t;
      out.curvatures[0] = t.cwiseQuotient(axes_).squaredNorm() / g;
    } else {
      const auto [e1, e2] = tangent_basis(v);
      Eigen::Matrix<double, 3, 2> basis;
      basis.col(0) = e1;
      basis.col(1) = e2;
      const Vec<3> inv_a2 = axes_.cwiseProduct(axes_).cwiseInverse();
      const Eigen::Matrix2d shape =
          basis.transpose() * inv_a2.asDiagonal() * basis / g;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(shape);
      for (int k = 0; k < 2; ++k) {
        out.curvatures[k] = eig.eigenvalues()[k];
        out.directions[k] = basis * eig.eigenvectors().col(k);
      }
    }
    return out;
  }

 private:
  Vec<N> half_gradient(const Vec<N>& z) const {
    return z.cwiseQuotient(axes_.cwiseProduct(axes_));
  }

  Vec<N> axes_;
};

/// Perturbation f sampled on a normal fan.
struct PerturbationField {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// f_i = x0.v_i: the field whose Wulff perturbation is a translation.
template <int N>
PerturbationField translation_field(const PolytopeBody<N>& body, const Vec<N>& x0) {
  PerturbationField f;
  for (const auto& v : body.normals()) f.values.push_back(x0.dot(v));
  return f;
}

template <int N>
PolytopeBody<N> perturbed(const PolytopeBody<N>& body, const PerturbationField& f, double t) {
  if (f.size() != body.size()) {
    throw Error(ErrorKind::invalid_input, "perturbation field length differs from the fan");
  }
  std::vector<double> h = body.support_values();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!std::isfinite(f.values[i])) {
      throw Error(ErrorKind::invalid_input, "perturbation values must be finite");
    }
    h[i] += t * f.values[i];
  }
  try {
    return wulff_shape<N>(body.normals(), std::move(h));
  } catch (const Error& e) {
    throw Error(ErrorKind::wulff_degenerate, std::string("perturbed body degenerates: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Stock bodies

template <int N>
std::vector<Vec<N>> axis_normals() {
  std::vector<Vec<N>> normals;
  for (int k = 0; k < N; ++k) {
    normals.push_back(Vec<N>::Unit(k));
    normals.push_back(-Vec<N>::Unit(k));
  }
  return normals;
}

/// m unit normals at angles phase + 2 pi k / m.
inline std::vector<Vec<2>> uniform_fan(int m, double phase = 0.0) {
  std::vector<Vec<2>> out;
  for (int k = 0; k < m; ++k) {
    const double a = phase + 2.0 * std::numbers::pi * k / m;
    out.emplace_back(std::cos(a), std::sin(a));
  }
  return out;
}

/// [-r, r]^n.
template <int N>
PolytopeBody<N> cube_body(double r = 1.0) {
  auto normals = axis_normals<N>();
  return wulff_shape<N>(normals, std::vector<double>(normals.size(), r));
}

/// Regular m-gon with inradius r.
inline PolytopeBody<2> regular_polygon(int m, double inradius = 1.0, double phase = 0.0) {
  return wulff_shape<2>(uniform_fan(m, phase), std::vector<double>(m, inradius));
}

}  // namespace fracgeo
