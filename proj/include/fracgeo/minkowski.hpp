#pragma once

// Discrete Minkowski problem for A_s and the fractional isoperimetric search,
// both as scale-invariant descent over support vectors on a fixed fan.

#include "fracgeo/measures.hpp"

#include <functional>

namespace fracgeo {

struct TargetDiagnostics {
  double mass = 0.0;
  double centroid_norm = 0.0;
  /// Smallest eigenvalue of sum_i w_i v_i v_i^T.
  double min_eigenvalue = 0.0;
  bool centroid_ok = false;
  bool spread_ok = false;
  bool pass = false;
};

/// Checks |centroid| <= centroid_tol * mass and
/// lambda_min(second moment) >= eigen_tol * mass.
template <int N>
TargetDiagnostics validate_target(const AtomicSphericalMeasure<N>& mu,
                                  double centroid_tol = 1e-8, double eigen_tol = 1e-6) {
  TargetDiagnostics d;
  d.mass = mu.mass();
  d.centroid_norm = centroid(mu).norm();
  Mat<N> moment = Mat<N>::Zero();
  for (const auto& a : mu.atoms) moment += a.w * a.v * a.v.transpose();
  d.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Mat<N>>(moment).eigenvalues().minCoeff();
  const bool weights_ok = std::all_of(mu.atoms.begin(), mu.atoms.end(), [](const auto& a) {
    return std::isfinite(a.w) && a.w >= 0.0;
  });
  d.centroid_ok = weights_ok && d.mass > 0.0 && d.centroid_norm <= centroid_tol * d.mass;
  d.spread_ok = weights_ok && d.mass > 0.0 && d.min_eigenvalue >= eigen_tol * d.mass;
  d.pass = d.centroid_ok && d.spread_ok;
  return d;
}

template <int N>
struct MinkowskiProblem {
  AtomicSphericalMeasure<N> target;
  GaugeBody<N> gauge;
  double s;
  /// Normal fan; must contain every atom direction of the target.
  std::vector<Vec<N>> fan;

  /// Problem on the fan given by the target's own atoms.
  static MinkowskiProblem on_support(AtomicSphericalMeasure<N> target, GaugeBody<N> gauge,
                                     double s) {
    std::vector<Vec<N>> fan;
    for (const auto& a : target.atoms) fan.push_back(a.v);
    return {std::move(target), std::move(gauge), s, std::move(fan)};
  }

  /// Target weights index-aligned with the fan.
  std::vector<double> weights_on_fan() const {
    std::vector<double> w(fan.size(), 0.0);
    for (const auto& a : target.atoms) {
      std::size_t best = fan.size();
      for (std::size_t i = 0; i < fan.size(); ++i) {
        if ((fan[i] - a.v).norm() <= 1e-9) best = i;
      }
      if (best == fan.size()) {
        throw Error(ErrorKind::invalid_target, "target atom direction is not in the fan");
      }
      w[best] += a.w;
    }
    return w;
  }
};

struct DescentOptions {
  int max_iterations = 500;
  /// Stop once |KKT residual| <= kkt_tol * |mu|.
  double kkt_tol = 1e-4;
  /// Stop once the objective drops by less than this (relative) over `window`
  /// iterations.
  double rel_decrease = 1e-8;
  int window = 10;
  double armijo = 1e-4;
  int max_backtracks = 40;
  /// First trial step, relative to the mean support value.
  double initial_step = 0.1;
};

template <int N>
struct SolveReport {
  PolytopeBody<N> solution;
  double scale;
  /// max_i |A_i - mu_i| / max(mu_i, eps), evaluated on `solution`.
  double residual;
  /// The scale (2n/(n-s))^{1/(n-s)} and the residual it would give.
  double paper_scale;
  double paper_residual;
  double kkt;
  int iterations;
  std::vector<double> objective_trace;
};

template <int N>
struct IsoperimetricReport {
  PolytopeBody<N> optimizer;
  double gamma_estimate;
  /// max/min - 1 of Vt_{n+s} at the midpoints of active facets.
  double vtilde_spread;
  /// max/min - 1 of A_i / a_i over active facets.
  double ratio_spread;
  /// max/min - 1 of the support values.
  double support_spread;
  double kkt;
  int iterations;
  std::vector<double> objective_trace;
};

namespace detail {

inline double spread(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi / *lo - 1.0;
}

inline double norm2(const std::vector<double>& x) {
  std::vector<double> sq;
  for (double v : x) sq.push_back(v * v);
  return std::sqrt(pairwise_sum(sq));
}

/// Support vector of the translate whose area-weighted Steiner proxy
/// sum a_i h_i v_i vanishes.
template <int N>
std::vector<double> recentered(const PolytopeBody<N>& body) {
  Mat<N> lhs = Mat<N>::Zero();
  Vec<N> rhs = Vec<N>::Zero();
  for (std::size_t i = 0; i < body.size(); ++i) {
    const double a = body.facets()[i].area;
    const Vec<N>& v = body.normals()[i];
    lhs += a * v * v.transpose();
    rhs += a * body.support_values()[i] * v;
  }
  const Vec<N> x0 = lhs.ldlt().solve(rhs);
  std::vector<double> h = body.support_values();
  for (std::size_t i = 0; i < h.size(); ++i) h[i] -= x0.dot(body.normals()[i]);
  return h;
}

/// State of one iterate: the body (after normalisation and recentering), the
/// objective and its gradient.
template <int N>
struct Iterate {
  PolytopeBody<N> body;
  double objective;
  std::vector<double> gradient;
  double kkt;
};

/// Shared Armijo descent. `evaluate` maps a raw support vector to a
/// normalised iterate; `objective` gives the scale-invariant objective of a
/// raw support vector (throws on degenerate bodies).
template <int N>
std::pair<Iterate<N>, std::vector<double>> descend(
    std::vector<double> h, const std::function<Iterate<N>(const std::vector<double>&)>& evaluate,
    const std::function<double(const std::vector<double>&)>& objective,
    const DescentOptions& opts, int& iterations) {
  Iterate<N> it = evaluate(h);
  std::vector<double> trace{it.objective};
  double step = 0.0;
  for (iterations = 0; iterations < opts.max_iterations; ++iterations) {
    if (it.kkt <= opts.kkt_tol) break;
    const int w = opts.window;
    if (static_cast<int>(trace.size()) > w) {
      const double old = trace[trace.size() - 1 - w];
      if ((old - trace.back()) <= opts.rel_decrease * std::abs(old)) break;
    }
    const auto& hc = it.body.support_values();
    std::vector<double> abs_h;
    for (double x : hc) abs_h.push_back(std::abs(x));
    const double hscale = pairwise_sum(abs_h) / hc.size();
    double gmax = 0.0;
    for (double g : it.gradient) gmax = std::max(gmax, std::abs(g));
    const double gnorm2 = std::pow(norm2(it.gradient), 2);
    double alpha = opts.initial_step * hscale / gmax;
    if (step > 0.0) alpha = std::min(alpha, 2.0 * step);
    bool accepted = false;
    std::vector<double> trial(hc.size());
    for (int b = 0; b < opts.max_backtracks; ++b, alpha *= 0.5) {
      for (std::size_t i = 0; i < hc.size(); ++i) trial[i] = hc[i] - alpha * it.gradient[i];
      double value;
      try {
        value = objective(trial);
      } catch (const Error&) {
        continue;
      }
      if (value <= it.objective - opts.armijo * alpha * gnorm2) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw Error(ErrorKind::stalled, "line search found no descent step (KKT residual " +
                                          std::to_string(it.kkt) + ")");
    }
    step = alpha;
    it = evaluate(trial);
    trace.push_back(it.objective);
  }
  return {std::move(it), std::move(trace)};
}

}  // namespace detail

/// Minimises G(h) = (sum mu_i h_i) P_s([h], L)^{-1/(n-s)} with dP_s/dh_i =
/// 2 A_i, then returns c K0 with K0 normalised to P_s = 1 and
/// c = (2 m / (n-s))^{1/(n-1-s)}, m = sum mu_i h_{K0,i}.
template <int N>
SolveReport<N> solve_minkowski(const MinkowskiProblem<N>& p, const Discretization<N>& disc,
                               const DescentOptions& opts = {},
                               std::optional<std::vector<double>> start = std::nullopt) {
  require_s(p.s);
  const auto diag = validate_target(p.target);
  if (!diag.pass) {
    throw Error(ErrorKind::invalid_target,
                diag.centroid_ok ? "target is concentrated on a subsphere"
                                 : "target centroid is not at the origin");
  }
  const std::vector<double> mu = p.weights_on_fan();
  const double mu_norm = detail::norm2(mu);
  const double ns = N - p.s;
  auto dot_mu = [&](const std::vector<double>& h) {
    std::vector<double> t;
    for (std::size_t i = 0; i < h.size(); ++i) t.push_back(mu[i] * h[i]);
    return pairwise_sum(t);
  };
  auto objective = [&](const std::vector<double>& h) {
    const auto body = wulff_shape<N>(p.fan, h);
    return dot_mu(h) * std::pow(disc.perimeter(body, p.gauge, p.s), -1.0 / ns);
  };
  auto evaluate = [&](const std::vector<double>& raw) {
    const auto first = wulff_shape<N>(p.fan, raw);
    const double scale = std::pow(disc.perimeter(first, p.gauge, p.s), -1.0 / ns);
    auto body = wulff_shape<N>(p.fan, detail::recentered(first.scaled(scale)));
    const auto a = disc.measure(body, p.gauge, p.s);
    const double m = dot_mu(body.support_values());
    std::vector<double> grad(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) grad[i] = mu[i] - (2.0 * m / ns) * a.atoms[i].w;
    const double kkt = detail::norm2(grad) / mu_norm;
    return detail::Iterate<N>{std::move(body), m, std::move(grad), kkt};
  };
  std::vector<double> h0 = start ? *start : std::vector<double>(p.fan.size(), 1.0);
  int iterations = 0;
  auto [it, trace] = detail::descend<N>(std::move(h0), evaluate, objective, opts, iterations);

  // A_s is homogeneous of degree n-1-s in K.
  const double m = dot_mu(it.body.support_values());
  const double eps = 1e-12 * diag.mass;
  auto residual_at = [&](double scale) {
    const auto a = disc.measure(it.body.scaled(scale), p.gauge, p.s);
    double r = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      r = std::max(r, std::abs(a.atoms[i].w - mu[i]) / std::max(mu[i], eps));
    }
    return r;
  };
  const double c = std::pow(2.0 * m / ns, 1.0 / (ns - 1.0));
  const double c_paper = std::pow(2.0 * N / ns, 1.0 / ns);
  const double residual = residual_at(c);
  const double residual_paper = residual_at(c_paper);
  auto solution = it.body.scaled(c);
  return {std::move(solution), c, residual, c_paper, residual_paper, it.kkt, iterations,
          std::move(trace)};
}

/// Minimises psi(h) = P_s([h], L) / |[h]|^{(n-s)/n} on the fan.
template <int N>
IsoperimetricReport<N> isoperimetric_search(const GaugeBody<N>& gauge, double s,
                                            const std::vector<Vec<N>>& fan,
                                            const Discretization<N>& disc,
                                            const DescentOptions& opts = {},
                                            std::optional<std::vector<double>> start = std::nullopt) {
  require_s(s);
  const double expo = (N - s) / N;
  // Cutting a corner lowers psi (P drops like t^{2-s}, the volume like t^2),
  // but an inactive facet has zero gradient and could never come back; so
  // trial steps that deactivate a facet are rejected.
  auto objective = [&](const std::vector<double>& h) {
    const auto body = wulff_shape<N>(fan, h);
    for (const auto& f : body.facets()) {
      if (!f.active()) throw Error(ErrorKind::wulff_degenerate, "step deactivates a facet");
    }
    return disc.perimeter(body, gauge, s) / std::pow(body.volume(), expo);
  };
  auto evaluate = [&](const std::vector<double>& raw) {
    const auto first = wulff_shape<N>(fan, raw);
    auto body = wulff_shape<N>(fan, detail::recentered(first.scaled(std::pow(first.volume(), -1.0 / N))));
    const double per = disc.perimeter(body, gauge, s);
    const double vol = body.volume();
    const auto a = disc.measure(body, gauge, s);
    std::vector<double> grad(fan.size());
    std::vector<double> proj(fan.size());
    for (std::size_t i = 0; i < fan.size(); ++i) {
      const double ai = body.facets()[i].area;
      grad[i] = (2.0 * a.atoms[i].w * vol - expo * per * ai) / std::pow(vol, expo + 1.0);
      proj[i] = 2.0 * a.atoms[i].w;
    }
    const double kkt = detail::norm2(grad) / detail::norm2(proj);
    return detail::Iterate<N>{std::move(body), per / std::pow(vol, expo), std::move(grad), kkt};
  };
  std::vector<double> h0 = start ? *start : std::vector<double>(fan.size(), 1.0);
  {
    // Pull inactive facets of the start slightly inside so every facet is active.
    const auto body = wulff_shape<N>(fan, h0);
    const double cut = 1e-3 * body.radius();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (!body.facets()[i].active()) h0[i] = support(body, fan[i]) - cut;
    }
  }
  int iterations = 0;
  auto [it, trace] = detail::descend<N>(std::move(h0), evaluate, objective, opts, iterations);

  const auto& body = it.body;
  const auto a = disc.measure(body, gauge, s);
  std::vector<double> ratios, vts;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const Facet& f = body.facets()[i];
    if (!f.active()) continue;
    ratios.push_back(a.atoms[i].w / f.area);
    Vec<N> mid = Vec<N>::Zero();
    for (int k : f.polygon) mid += body.vertices()[k];
    mid /= static_cast<double>(f.polygon.size());
    vts.push_back(dual_mixed_volume(body, gauge, mid, s, disc.rule, disc.vtilde).value);
  }
  const double gamma = disc.perimeter(body, gauge, s) / std::pow(body.volume(), expo);
  return {body,
          gamma,
          detail::spread(vts),
          detail::spread(ratios),
          detail::spread(body.support_values()),
          it.kkt,
          iterations,
          std::move(trace)};
}

}  // namespace fracgeo
