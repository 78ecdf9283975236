#pragma once

// Dual mixed volumes at boundary points and the anisotropic s-fractional area
// measure A_s(K, L, .) of a polytope, which is atomic on the facet normals:
//
//   Vt_{n+s}(K, L, z) = (1/n) int_{S_z^+} rho_{K,z}(u)^{-s} rho_L(u)^{n+s} du
//   A_s(K, L, {v_i}) = (n/s) int_{facet i} Vt_{n+s}(K, L, z) dH^{n-1}(z)

#include "fracgeo/bodies.hpp"
#include "fracgeo/fracperim.hpp"
#include "fracgeo/quadrature.hpp"

namespace fracgeo {

/// Finite list of (unit vector, nonnegative weight) atoms.
template <int N>
struct AtomicSphericalMeasure {
  struct Atom {
    Vec<N> v;
    double w;
  };
  std::vector<Atom> atoms;

  std::size_t size() const noexcept { return atoms.size(); }

  double mass() const {
    std::vector<double> w;
    for (const auto& a : atoms) w.push_back(a.w);
    return pairwise_sum(w);
  }

  std::vector<double> weights() const {
    std::vector<double> w;
    for (const auto& a : atoms) w.push_back(a.w);
    return w;
  }

  AtomicSphericalMeasure scaled(double factor) const {
    AtomicSphericalMeasure out = *this;
    for (auto& a : out.atoms) a.w *= factor;
    return out;
  }
};

/// sum_i w_i v_i.
template <int N>
Vec<N> centroid(const AtomicSphericalMeasure<N>& m) {
  Vec<N> out = Vec<N>::Zero();
  for (int k = 0; k < N; ++k) {
    std::vector<double> terms;
    for (const auto& a : m.atoms) terms.push_back(a.w * a.v[k]);
    out[k] = pairwise_sum(terms);
  }
  return out;
}

struct DualMixedVolumeValue {
  double value;
  double s;
};

enum class VtildeScheme {
  /// Midpoint rule on the inward hemisphere in a frame aligned with the
  /// facet, using half the sphere rule's node count. The hemisphere edge
  /// never cuts a cell.
  aligned,
  /// The sphere rule itself; nodes with rho = 0 are skipped.
  global,
};

namespace detail {

/// Index of the facet whose constraint is tightest at z; throws unless z is
/// on the boundary.
template <int N>
int boundary_facet(const PolytopeBody<N>& body, const Vec<N>& z) {
  int best = -1;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!body.facets()[i].active()) continue;
    const double g = z.dot(body.normals()[i]) - body.support_values()[i];
    if (g > worst) {
      worst = g;
      best = static_cast<int>(i);
    }
  }
  if (best < 0 || std::abs(worst) > 1e3 * body.tolerance()) {
    throw Error(ErrorKind::point_not_on_boundary, "point does not lie on the boundary");
  }
  return best;
}

/// Active facets seen from a boundary point, with slacks h_j - z.v_j. For
/// anchored samples the slack is taken from the anchor vertex (exactly 0 on
/// incident facets) minus offset.v_j, so it stays accurate at any distance
/// from the vertex.
template <int N>
struct BoundaryView {
  std::vector<Vec<N>> normals;
  std::vector<double> slack;

  BoundaryView(const PolytopeBody<N>& body, const Vec<N>& z, int anchor = -1,
               const Vec<N>& offset = Vec<N>::Zero()) {
    for (std::size_t j = 0; j < body.size(); ++j) {
      if (!body.facets()[j].active()) continue;
      const Vec<N>& v = body.normals()[j];
      double sl;
      if (anchor >= 0) {
        double base = body.support_values()[j] - body.vertices()[anchor].dot(v);
        if (std::abs(base) <= body.tolerance()) base = 0.0;
        sl = base - offset.dot(v);
      } else {
        sl = body.support_values()[j] - z.dot(v);
      }
      normals.push_back(v);
      slack.push_back(sl);
    }
  }

  /// Index (into this view) of the facet through which z + t u leaves K.
  int exit_facet(const Vec<N>& u) const {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      const double d = u.dot(normals[j]);
      if (d > 0.0 && slack[j] / d < best) {
        best = slack[j] / d;
        arg = static_cast<int>(j);
      }
    }
    return arg;
  }

  /// rho_{K,z}(u); 0 for outward directions.
  double radial(const Vec<N>& u) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < normals.size(); ++j) {
      const double d = u.dot(normals[j]);
      if (d > 0.0) best = std::min(best, slack[j] / d);
    }
    return std::max(0.0, best);
  }
};

/// Directions (as angles from the facet tangent, in (0, pi)) where the
/// integrand of Vt has kinks: towards vertices of K and of a polytope gauge.
inline std::vector<double> kink_angles(const PolytopeBody<2>& body, const GaugeBody<2>& gauge,
                                       const Vec<2>& t, const Vec<2>& inward, int anchor,
                                       const Vec<2>& offset, const Vec<2>& z) {
  std::vector<double> out{0.0, std::numbers::pi};
  auto add = [&](const Vec<2>& d) {
    if (d.norm() <= 0.0) return;
    const double a = std::atan2(d.dot(inward), d.dot(t));
    if (a > 0.0 && a < std::numbers::pi) out.push_back(a);
  };
  for (std::size_t k = 0; k < body.vertices().size(); ++k) {
    if (anchor >= 0) {
      if (static_cast<int>(k) == anchor) continue;
      add(Vec<2>(body.vertices()[k] - body.vertices()[anchor] - offset));
    } else {
      add(Vec<2>(body.vertices()[k] - z));
    }
  }
  if (const auto* poly = std::get_if<GaugeBody<2>::Polytope>(&gauge.kind())) {
    for (const auto& x : poly->body.vertices()) {
      add(x);
      add(Vec<2>(-x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return b - a < 1e-14; }),
            out.end());
  return out;
}

/// Vt at a boundary point of facet `facet` over the inward directions. For
/// n = 2: composite Gauss-Legendre between consecutive kink angles, with
/// about `nodes` nodes in total (at least one 20-point panel per piece). For
/// n = 3: midpoint rule on an aligned hemisphere grid of about `nodes` cells.
template <int N>
double vtilde_aligned(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                      const BoundaryView<N>& view, int facet, double s, int nodes,
                      int anchor = -1, const Vec<N>& offset = Vec<N>::Zero(),
                      const Vec<N>& z = Vec<N>::Zero()) {
  const Vec<N> inward = -body.normals()[facet];
  std::vector<double> terms;
  auto eval = [&](const Vec<N>& u) {
    const double rho = view.radial(u);
    return rho > 0.0 ? std::pow(rho, -s) * std::pow(gauge.rho(u), N + s) : 0.0;
  };
  if constexpr (N == 2) {
    const Vec<2> t = perp(inward);
    const auto cuts = kink_angles(body, gauge, t, inward, anchor, offset, z);
    const int pieces = static_cast<int>(cuts.size()) - 1;
    const int sub = std::max(1, nodes / (20 * pieces));
    for (int k = 0; k < pieces; ++k) {
      // Between kinks the ray leaves K through a single facet.
      const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
      const int exit = view.exit_facet(Vec<2>(std::cos(mid) * t + std::sin(mid) * inward));
      const double width = (cuts[k + 1] - cuts[k]) / sub;
      for (int j = 0; j < sub; ++j) {
        const double lo = cuts[k] + j * width;
        for (const auto& [x, w] : unit_gauss20()) {
          const double theta = lo + x * width;
          const Vec<2> u = std::cos(theta) * t + std::sin(theta) * inward;
          const double d = exit >= 0 ? u.dot(view.normals[exit]) : 0.0;
          const double rho = d > 0.0 ? std::max(0.0, view.slack[exit] / d) : view.radial(u);
          const double f = rho > 0.0 ? std::pow(rho, -s) * std::pow(gauge.rho(u), 2.0 + s) : 0.0;
          terms.push_back(width * w * f);
        }
      }
    }
    return 0.5 * pairwise_sum(terms);
  } else {
    const auto [e1, e2] = tangent_basis(inward);
    const int n_mu = std::max(2, static_cast<int>(std::lround(std::sqrt(nodes / (2.0 * std::numbers::pi)))));
    const int n_phi = std::max(4, nodes / n_mu);
    for (int a = 0; a < n_mu; ++a) {
      const double mu = (a + 0.5) / n_mu;
      const double r = std::sqrt(1.0 - mu * mu);
      for (int b = 0; b < n_phi; ++b) {
        const double phi = 2.0 * std::numbers::pi * (b + 0.5) / n_phi;
        terms.push_back(eval(Vec<3>(r * (std::cos(phi) * e1 + std::sin(phi) * e2) + mu * inward)));
      }
    }
    const double cell = (1.0 / n_mu) * (2.0 * std::numbers::pi / n_phi);
    return pairwise_sum(terms) * cell / 3.0;
  }
}

template <int N>
double vtilde_global(const GaugeBody<N>& gauge, const BoundaryView<N>& view, double s,
                     const QuadratureRule<N>& rule) {
  return rule.integrate([&](const Vec<N>& u) {
    const double rho = view.radial(u);
    return rho > 0.0 ? std::pow(rho, -s) * std::pow(gauge.rho(u), N + s) : 0.0;
  }) / N;
}

template <int N>
int half_nodes(const QuadratureRule<N>& rule) {
  return std::max(2, static_cast<int>(rule.size() / 2));
}

}  // namespace detail

/// Vt_{n+s}(K, L, z) for z on the boundary of K.
template <int N>
DualMixedVolumeValue dual_mixed_volume(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                       const Vec<N>& z, double s, const QuadratureRule<N>& rule,
                                       VtildeScheme scheme = VtildeScheme::aligned) {
  require_s(s);
  const int facet = detail::boundary_facet(body, z);
  const detail::BoundaryView<N> view(body, z);
  if (scheme == VtildeScheme::aligned) {
    return {detail::vtilde_aligned(body, gauge, view, facet, s, detail::half_nodes(rule), -1,
                                  Vec<N>::Zero().eval(), z),
            s};
  }
  return {detail::vtilde_global(gauge, view, s, rule), s};
}

/// Vt_{n+s} at every sample of a boundary rule.
template <int N>
std::vector<double> vtilde_samples(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                   double s, const BoundaryQuadrature<N>& bq,
                                   const QuadratureRule<N>& rule,
                                   VtildeScheme scheme = VtildeScheme::aligned) {
  require_s(s);
  const int half = detail::half_nodes(rule);
  return parallel_map(bq.size(), [&](std::size_t j) {
    const auto& smp = bq.samples[j];
    const detail::BoundaryView<N> view(body, smp.z, smp.anchor, smp.offset);
    if (scheme == VtildeScheme::aligned) {
      return detail::vtilde_aligned(body, gauge, view, smp.facet, s, half, smp.anchor, smp.offset,
                                    smp.z);
    }
    return detail::vtilde_global(gauge, view, s, rule);
  });
}

/// A_s(K, L, .) as atoms on K's normal fan; inactive facets carry weight 0.
template <int N>
AtomicSphericalMeasure<N> area_measure(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                       double s, const BoundaryQuadrature<N>& bq,
                                       const QuadratureRule<N>& rule,
                                       VtildeScheme scheme = VtildeScheme::aligned) {
  const auto vt = vtilde_samples(body, gauge, s, bq, rule, scheme);
  std::vector<std::vector<double>> per_facet(body.size());
  for (std::size_t j = 0; j < bq.size(); ++j) {
    per_facet[bq.samples[j].facet].push_back(bq.samples[j].weight * vt[j]);
  }
  AtomicSphericalMeasure<N> m;
  for (std::size_t i = 0; i < body.size(); ++i) {
    m.atoms.push_back({body.normals()[i], (N / s) * pairwise_sum(per_facet[i])});
  }
  return m;
}

/// Everything needed to evaluate the measure-level identities at one
/// resolution.
template <int N>
struct Discretization {
  QuadratureRule<N> rule;
  int proj_res = 128;
  int per_facet = 64;
  BoundaryScheme boundary = N == 2 ? BoundaryScheme::graded : BoundaryScheme::uniform;
  VtildeScheme vtilde = VtildeScheme::aligned;

  static Discretization make(int sphere_res, int proj_res, int per_facet) {
    return Discretization{sphere_rule<N>(sphere_res), proj_res, per_facet};
  }

  BoundaryQuadrature<N> boundary_for(const PolytopeBody<N>& body, double s) const {
    return boundary_rule(body, per_facet, boundary, s);
  }

  AtomicSphericalMeasure<N> measure(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                    double s) const {
    return area_measure(body, gauge, s, boundary_for(body, s), rule, vtilde);
  }

  double perimeter(const PolytopeBody<N>& body, const GaugeBody<N>& gauge, double s) const {
    return ps_xray(body, gauge, s, rule, proj_res).value;
  }
};

struct IdentityCheck {
  double lhs;
  double rhs;
  double rel_error;
};

/// P_s(K, L) against (2/(n-s)) sum_i h_i A_i.
template <int N>
IdentityCheck identity_asint_check(const PolytopeBody<N>& body, const GaugeBody<N>& gauge,
                                   double s, const Discretization<N>& disc) {
  const double ps = disc.perimeter(body, gauge, s);
  const auto m = disc.measure(body, gauge, s);
  std::vector<double> terms;
  for (std::size_t i = 0; i < body.size(); ++i) {
    terms.push_back(body.support_values()[i] * m.atoms[i].w);
  }
  const double rhs = 2.0 / (N - s) * pairwise_sum(terms);
  return {ps, rhs, std::abs(ps - rhs) / ps};
}

/// Both sides of
///   2n int_{dK} f(nu) Vt dH = int_S rho_L^{n+s} int_{dK} X_K(z,u)^{-s} f(nu) dH du.
/// The left side uses the dual mixed volume; the right side the global sphere
/// rule with chord lengths.
template <int N>
IdentityCheck lemma_id_check(const PolytopeBody<N>& body, const GaugeBody<N>& gauge, double s,
                             const PerturbationField& f, const Discretization<N>& disc) {
  require_s(s);
  if (f.size() != body.size()) {
    throw Error(ErrorKind::invalid_input, "perturbation field length differs from the fan");
  }
  const auto bq = disc.boundary_for(body, s);
  const auto vt = vtilde_samples(body, gauge, s, bq, disc.rule, disc.vtilde);
  std::vector<double> left(bq.size());
  for (std::size_t j = 0; j < bq.size(); ++j) {
    left[j] = bq.samples[j].weight * f.values[bq.samples[j].facet] * vt[j];
  }
  const double lhs = 2.0 * N * pairwise_sum(left);
  std::vector<detail::BoundaryView<N>> views;
  for (const auto& smp : bq.samples) views.emplace_back(body, smp.z, smp.anchor, smp.offset);
  const auto right = parallel_map(disc.rule.size(), [&](std::size_t k) {
    const Vec<N>& u = disc.rule.nodes[k];
    std::vector<double> inner(bq.size());
    for (std::size_t j = 0; j < bq.size(); ++j) {
      const auto& smp = bq.samples[j];
      const double fv = f.values[smp.facet];
      // Chord through a boundary point: rho(u) + rho(-u), one of them 0.
      const double x = fv == 0.0 ? 0.0 : views[j].radial(u) + views[j].radial(Vec<N>(-u));
      inner[j] = x > 0.0 ? smp.weight * fv * std::pow(x, -s) : 0.0;
    }
    return disc.rule.weights[k] * std::pow(gauge.rho(u), N + s) * pairwise_sum(inner);
  });
  const double rhs = pairwise_sum(right);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return {lhs, rhs, scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0};
}

struct VariationalRow {
  double t;
  /// Central difference (P_s(K_t) - P_s(K_{-t})) / (2t).
  double fd;
  /// sum_i f_i A_i.
  double f_dot_a;
  /// 2n sum_i f_i A_i.
  double predicted;
  /// |fd - predicted| / |predicted|.
  double rel_error;
};

template <int N>
std::vector<VariationalRow> variational_check(const PolytopeBody<N>& body,
                                              const GaugeBody<N>& gauge, double s,
                                              const PerturbationField& f,
                                              const std::vector<double>& t_list,
                                              const Discretization<N>& disc) {
  require_s(s);
  const auto m = disc.measure(body, gauge, s);
  std::vector<double> terms;
  for (std::size_t i = 0; i < body.size(); ++i) terms.push_back(f.values.at(i) * m.atoms[i].w);
  const double fa = pairwise_sum(terms);
  std::vector<VariationalRow> rows;
  for (double t : t_list) {
    const double plus = disc.perimeter(perturbed(body, f, t), gauge, s);
    const double minus = disc.perimeter(perturbed(body, f, -t), gauge, s);
    const double fd = (plus - minus) / (2.0 * t);
    const double predicted = 2.0 * N * fa;
    rows.push_back({t, fd, fa, predicted,
                    predicted != 0.0 ? std::abs(fd - predicted) / std::abs(predicted)
                                     : std::abs(fd)});
  }
  return rows;
}

}  // namespace fracgeo
