#pragma once

// Named experiments, one per acceptance criterion. Each returns a pass flag
// and a JSON record of every number it looked at. Records hold no timings, so
// reruns with the same seed serialise to identical bytes.

#include "fracgeo/io.hpp"
#include "fracgeo/limits.hpp"
#include "fracgeo/minkowski.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace fracgeo::presets {

using io::json;

struct PresetOptions {
  std::uint64_t seed = 20240917;
};

struct PresetResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// One-line human summary.
  std::string summary;
  json details;
};

struct Preset {
  int id;
  std::string name;
  std::string title;
  std::function<PresetResult(const PresetOptions&)> run;
};

namespace detail {

inline std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

inline PresetResult result(int id, std::string name, bool pass, std::string summary, json details) {
  return {id, std::move(name), pass, std::move(summary), std::move(details)};
}

/// Triangle with no symmetry.
inline PolytopeBody<2> asymmetric_triangle() {
  std::vector<Vec<2>> fan;
  for (double a : {0.5 * std::numbers::pi, 1.25 * std::numbers::pi, 1.8 * std::numbers::pi}) {
    fan.emplace_back(std::cos(a), std::sin(a));
  }
  return wulff_shape<2>(fan, {1.0, 0.8, 1.2});
}

/// Hexagon with jittered normals and supports.
inline PolytopeBody<2> random_hexagon(std::uint64_t seed) {
  RandomSource rng(seed, 7);
  std::vector<Vec<2>> fan;
  std::vector<double> h;
  for (int k = 0; k < 6; ++k) {
    const double a = std::numbers::pi * k / 3.0 + rng.uniform(-0.25, 0.25);
    fan.emplace_back(std::cos(a), std::sin(a));
    h.push_back(rng.uniform(0.7, 1.3));
  }
  return wulff_shape<2>(fan, h);
}

inline std::vector<std::pair<std::string, PolytopeBody<2>>> centroid_suite(std::uint64_t seed) {
  return {{"square", cube_body<2>(1.0)},
          {"triangle", asymmetric_triangle()},
          {"random-hexagon", random_hexagon(seed)}};
}

inline PolytopeBody<2> irregular_pentagon() {
  return wulff_shape<2>(uniform_fan(5, 0.2), {1.0, 0.6, 1.3, 0.9, 1.1});
}

inline json rows_json(const std::vector<LimitRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"s", r.s}, {"id", r.id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}});
  }
  return out;
}

}  // namespace detail

// 1 -------------------------------------------------------------------------
inline PresetResult route_agreement(const PresetOptions& o) {
  constexpr std::size_t samples = 1000000;
  const auto disc2 = Discretization<2>::make(512, 128, 64);
  const auto disc3 = Discretization<3>::make(512, 128, 16);
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  auto record = [&](const std::string& body, const std::string& gauge, double s, double x,
                    const PerimeterEstimate& mc) {
    const double diff = std::abs(x - mc.value);
    const double allowed = 3.0 * mc.std_error + 0.01 * x;
    const bool ok = diff <= allowed;
    pass = pass && ok;
    worst = std::max(worst, diff / allowed);
    rows.push_back({{"body", body}, {"gauge", gauge}, {"s", s}, {"xray", x},
                    {"montecarlo", mc.value}, {"std_error", mc.std_error},
                    {"allowed", allowed}, {"pass", ok}});
  };
  int stream = 0;
  for (const auto& [body, gauge, s] :
       std::vector<std::tuple<std::string, std::string, double>>{{"square", "ball", 0.3},
                                                                 {"square", "square", 0.5},
                                                                 {"pentagon", "ball", 0.7},
                                                                 {"pentagon", "square", 0.3}}) {
    const auto k = io::builtin_body<2>(body);
    const auto l = *io::builtin_gauge<2>(gauge);
    const double x = ps_xray(k, l, s, disc2.rule, disc2.proj_res).value;
    record(body, gauge, s, x, ps_montecarlo(k, l, s, samples, RandomSource(o.seed, ++stream)));
  }
  {
    const auto k = cube_body<3>(1.0);
    const auto l = GaugeBody<3>::ball();
    const double x = ps_xray(k, l, 0.5, disc3.rule, disc3.proj_res).value;
    record("cube", "ball", 0.5, x, ps_montecarlo(k, l, 0.5, samples, RandomSource(o.seed, ++stream)));
  }
  return detail::result(1, "route-agreement", pass,
                        "worst |xray - mc| / (3 stderr + 1%) = " + detail::fmt(worst),
                        {{"samples", samples}, {"res", 512}, {"rows", rows}});
}

// 2 -------------------------------------------------------------------------
inline PresetResult homogeneity(const PresetOptions&) {
  const std::vector<double> lambdas{1.0, 2.0, 4.0};
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  auto fit = [&](const std::string& name, int n, double s, auto&& per) {
    std::vector<double> x, y;
    for (double lam : lambdas) {
      x.push_back(std::log(lam));
      y.push_back(std::log(per(lam)));
    }
    const double mx = (x[0] + x[1] + x[2]) / 3.0, my = (y[0] + y[1] + y[2]) / 3.0;
    double sxy = 0.0, sxx = 0.0;
    for (int k = 0; k < 3; ++k) {
      sxy += (x[k] - mx) * (y[k] - my);
      sxx += (x[k] - mx) * (x[k] - mx);
    }
    const double slope = sxy / sxx;
    const double err = std::abs(slope - (n - s));
    pass = pass && err <= 1e-3;
    worst = std::max(worst, err);
    rows.push_back({{"body", name}, {"s", s}, {"slope", slope}, {"expected", n - s}, {"error", err}});
  };
  const auto rule2 = sphere_rule<2>(512);
  const auto rule3 = sphere_rule<3>(256);
  for (double s : {0.3, 0.5, 0.7}) {
    fit("square", 2, s, [&](double lam) {
      return ps_xray(cube_body<2>(lam), GaugeBody<2>::ball(), s, rule2).value;
    });
  }
  fit("pentagon/square-gauge", 2, 0.5, [&](double lam) {
    return ps_xray(regular_polygon(5, lam), GaugeBody<2>::cube(), 0.5, rule2).value;
  });
  fit("cube", 3, 0.5, [&](double lam) {
    return ps_xray(cube_body<3>(lam), GaugeBody<3>::ball(), 0.5, rule3, 64).value;
  });
  return detail::result(2, "homogeneity", pass, "worst |slope - (n-s)| = " + detail::fmt(worst),
                        {{"lambdas", lambdas}, {"rows", rows}});
}

// 3 -------------------------------------------------------------------------
inline PresetResult centroid_check(const PresetOptions& o) {
  constexpr double s = 0.5;
  const auto coarse = Discretization<2>::make(512, 128, 64);
  const auto fine = Discretization<2>::make(1024, 128, 128);
  const auto ball = GaugeBody<2>::ball();
  json rows = json::array();
  bool pass = true;
  for (const auto& [name, body] : detail::centroid_suite(o.seed)) {
    const auto mc = coarse.measure(body, ball, s);
    const auto mf = fine.measure(body, ball, s);
    const double dc = centroid(mc).norm() / mc.mass();
    const double df = centroid(mf).norm() / mf.mass();
    const bool small = dc <= 1e-3;
    // Both at round-off level means the discretisation error is already gone.
    const bool floor = dc <= 1e-12 && df <= 1e-12;
    const double ratio = dc > 0.0 ? df / dc : 0.0;
    const bool halves = floor || ratio <= 0.65;
    pass = pass && small && halves;
    rows.push_back({{"body", name}, {"relative_centroid", dc}, {"relative_centroid_refined", df},
                    {"refinement_ratio", ratio}, {"below_1e-3", small}, {"halves", halves}});
  }
  return detail::result(3, "centroid-check", pass,
                        "|centroid|/mass <= 1e-3 and shrinks under refinement on 3 bodies",
                        {{"s", s}, {"gauge", "ball"}, {"rows", rows}});
}

// 4 -------------------------------------------------------------------------
inline PresetResult identity_asint(const PresetOptions& o) {
  const auto disc = Discretization<2>::make(512, 128, 64);
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  for (const auto& [name, body] : detail::centroid_suite(o.seed)) {
    for (const auto& [gname, gauge] : std::vector<std::pair<std::string, GaugeBody<2>>>{
             {"ball", GaugeBody<2>::ball()}, {"square", GaugeBody<2>::cube()}}) {
      for (double s : {0.3, 0.5, 0.7}) {
        const auto c = identity_asint_check(body, gauge, s, disc);
        pass = pass && c.rel_error < 0.01;
        worst = std::max(worst, c.rel_error);
        rows.push_back({{"body", name}, {"gauge", gname}, {"s", s}, {"perimeter", c.lhs},
                        {"support_pairing", c.rhs}, {"rel_error", c.rel_error}});
      }
    }
  }
  return detail::result(4, "identity-asint", pass, "worst relative error " + detail::fmt(worst),
                        {{"rows", rows}});
}

// 5 -------------------------------------------------------------------------
inline PresetResult variational(const PresetOptions&) {
  constexpr double s = 0.5;
  constexpr double t = 1e-3;
  const auto disc = Discretization<2>::make(512, 128, 64);
  const auto body = cube_body<2>(1.0);
  const auto gauge = GaugeBody<2>::ball();
  const std::vector<std::pair<std::string, PerturbationField>> fields{
      {"one-facet", {{1.0, 0.0, 0.0, 0.0}}},
      {"dilation", {{1.0, 1.0, 1.0, 1.0}}},
      {"mixed", {{0.5, -0.3, 0.2, 0.7}}}};
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  for (const auto& [name, f] : fields) {
    const auto r = variational_check(body, gauge, s, f, {t}, disc).front();
    pass = pass && r.rel_error <= 0.02;
    worst = std::max(worst, r.rel_error);
    rows.push_back({{"field", name}, {"t", t}, {"fd", r.fd}, {"predicted_2n_sum_fA", r.predicted},
                    {"rel_error", r.rel_error}, {"fd_over_2_sum_fA", r.fd / (2.0 * r.f_dot_a)}});
  }
  const auto tf = translation_field(body, Vec<2>(0.3, 0.2));
  const auto tr = variational_check(body, gauge, s, tf, {t}, disc).front();
  const double mass = disc.measure(body, gauge, s).mass();
  const bool trans_ok = std::abs(tr.fd) <= 1e-3 * mass;
  pass = pass && trans_ok;
  return detail::result(
      5, "variational", pass,
      "worst |FD - 2n sum fA| / |2n sum fA| = " + detail::fmt(worst) +
          ", translation |FD| / mass = " + detail::fmt(std::abs(tr.fd) / mass),
      {{"s", s},
       {"rows", rows},
       {"translation", {{"fd", tr.fd}, {"mass", mass}, {"pass", trans_ok}}}});
}

// 6 -------------------------------------------------------------------------
inline PresetResult lemma_id(const PresetOptions& o) {
  constexpr double s = 0.5;
  const auto disc = Discretization<2>::make(512, 128, 64);
  const auto body = cube_body<2>(1.0);
  const auto gauge = GaugeBody<2>::ball();
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    RandomSource rng(o.seed, 100 + k);
    PerturbationField f;
    for (std::size_t i = 0; i < body.size(); ++i) f.values.push_back(rng.uniform(-1.0, 1.0));
    const auto c = lemma_id_check(body, gauge, s, f, disc);
    pass = pass && c.rel_error <= 0.02;
    worst = std::max(worst, c.rel_error);
    rows.push_back({{"f", f.values}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"rel_error", c.rel_error}});
  }
  return detail::result(6, "lemma-id", pass, "worst relative gap " + detail::fmt(worst),
                        {{"s", s}, {"rows", rows}});
}

// 7 -------------------------------------------------------------------------
inline PresetResult limit_s0(const PresetOptions&) {
  const auto disc = Discretization<2>::make(512, 128, 64);
  const std::vector<double> s_list{0.3, 0.1, 0.03, 0.01};
  const auto body = cube_body<2>(1.0);
  json gauges = json::array();
  bool pass = true;
  std::string summary;
  for (const auto& [gname, gauge] : std::vector<std::pair<std::string, GaugeBody<2>>>{
           {"ball", GaugeBody<2>::ball()}, {"square", GaugeBody<2>::cube()}}) {
    const auto rows = limit_s0_check(body, gauge, s_list, disc);
    std::vector<double> dev(s_list.size(), 0.0), dev_n(s_list.size(), 0.0);
    bool in_band = true;
    for (const auto& r : rows) {
      const auto k = static_cast<std::size_t>(std::find(s_list.begin(), s_list.end(), r.s) - s_list.begin());
      dev[k] = std::max(dev[k], std::abs(r.ratio - 1.0));
      dev_n[k] = std::max(dev_n[k], std::abs(r.ratio / 2.0 - 1.0));
      if (r.s == 0.01) in_band = in_band && r.ratio >= 0.98 && r.ratio <= 1.02;
    }
    const bool decreasing = std::is_sorted(dev.rbegin(), dev.rend());
    pass = pass && in_band && decreasing;
    summary += gname + ": max ratio dev at s=0.01 " + detail::fmt(dev.back()) +
               " (ratio/n dev " + detail::fmt(dev_n.back()) + ") ";
    gauges.push_back({{"gauge", gname}, {"rows", detail::rows_json(rows)},
                      {"max_deviation", dev}, {"max_deviation_of_ratio_over_n", dev_n},
                      {"in_band_at_0.01", in_band}, {"deviation_decreasing", decreasing}});
  }
  return detail::result(7, "limit-s0", pass, summary, {{"s_list", s_list}, {"gauges", gauges}});
}

// 8 -------------------------------------------------------------------------
inline PresetResult limit_s1(const PresetOptions&) {
  constexpr double s = 0.99;
  json rows = json::array();
  bool pass = true;
  std::string summary;
  auto record = [&](const std::string& name, const LimitRow& r) {
    const bool ok = r.ratio >= 0.97 && r.ratio <= 1.03;
    pass = pass && ok;
    summary += name + " " + detail::fmt(r.ratio) + " ";
    rows.push_back({{"body", name}, {"s", r.s}, {"lhs", r.lhs}, {"rhs", r.rhs},
                    {"ratio", r.ratio}, {"twice_ratio", 2.0 * r.ratio}, {"pass", ok}});
  };
  record("disc", lemma_conv_check(SmoothBody<2>::ball(), GaugeBody<2>::ball(), Vec<2>(1.0, 0.0), {s}).front());
  record("ball3", lemma_conv_check(SmoothBody<3>::ball(), GaugeBody<3>::ball(), Vec<3>(0.0, 0.0, 1.0), {s}, 256).front());
  record("ellipse(2,1)", lemma_conv_check(SmoothBody<2>(Vec<2>(2.0, 1.0)), GaugeBody<2>::ball(),
                                          Vec<2>(1.0, 0.0), {s}).front());
  return detail::result(8, "limit-s1", pass, "ratios " + summary, {{"rows", rows}});
}

// 9 -------------------------------------------------------------------------
inline PresetResult ludwig(const PresetOptions&) {
  const auto t = ludwig_limits(cube_body<2>(1.0), GaugeBody<2>::ball(), {0.01, 0.99}, sphere_rule<2>(512));
  const double r0 = t.rows[0].s_times_ps / t.target_s0;
  const double r1 = t.rows[1].one_minus_s_times_ps / t.target_s1;
  const bool pass = std::abs(r0 - 1.0) <= 0.02 && std::abs(r1 - 1.0) <= 0.03;
  return detail::result(9, "ludwig", pass,
                        "sP/(n|K||L|) = " + detail::fmt(r0) + ", (1-s)P/P(K,ZL) = " + detail::fmt(r1),
                        {{"target_s0", t.target_s0}, {"target_s1", t.target_s1},
                         {"s_times_ps_at_0.01", t.rows[0].s_times_ps},
                         {"one_minus_s_times_ps_at_0.99", t.rows[1].one_minus_s_times_ps},
                         {"ratio_s0", r0}, {"ratio_s1", r1}});
}

// 10 ------------------------------------------------------------------------
inline PresetResult projection_curvature(const PresetOptions& o) {
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  for (const auto& axes : {Vec<3>(3.0, 2.0, 1.0), Vec<3>(1.5, 1.0, 0.7), Vec<3>(1.0, 1.0, 1.0)}) {
    const SmoothBody<3> e(axes);
    RandomSource rng(o.seed, 200);
    for (int k = 0; k < 4; ++k) {
      const Vec<3> v = rng.unit_vector<3>();
      Vec<3> u = rng.unit_vector<3>();
      u -= u.dot(v) * v;
      u.normalize();
      const auto c = lemma_xzlem_check(e, v, u);
      pass = pass && c.rel_error <= 1e-8;
      worst = std::max(worst, c.rel_error);
      rows.push_back({{"axes", io::to_json<3>(axes)}, {"v", io::to_json<3>(v)}, {"u", io::to_json<3>(u)},
                      {"projected", c.projected}, {"predicted", c.predicted}, {"rel_error", c.rel_error}});
    }
  }
  return detail::result(10, "projection-curvature", pass, "worst relative error " + detail::fmt(worst),
                        {{"rows", rows}});
}

// 11 ------------------------------------------------------------------------
inline PresetResult minkowski_roundtrip(const PresetOptions&) {
  constexpr double s = 0.5;
  const auto disc = Discretization<2>::make(512, 128, 64);
  const auto k0 = detail::irregular_pentagon();
  const auto gauge = GaugeBody<2>::ball();
  const auto mu = disc.measure(k0, gauge, s);
  const auto problem = MinkowskiProblem<2>::on_support(mu, gauge, s);
  const auto rep = solve_minkowski(problem, disc);
  // Recovery up to translation: least-squares x0 with h_i + x0.v_i ~ h0_i.
  Mat<2> lhs = Mat<2>::Zero();
  Vec<2> rhs = Vec<2>::Zero();
  const auto& h = rep.solution.support_values();
  const auto& h0 = k0.support_values();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec<2>& v = k0.normals()[i];
    lhs += v * v.transpose();
    rhs += (h0[i] - h[i]) * v;
  }
  const Vec<2> x0 = lhs.ldlt().solve(rhs);
  double recovery = 0.0;
  std::vector<double> shifted;
  for (std::size_t i = 0; i < h.size(); ++i) {
    shifted.push_back(h[i] + x0.dot(k0.normals()[i]));
    recovery = std::max(recovery, std::abs(shifted.back() - h0[i]) / h0[i]);
  }
  const bool pass = rep.residual <= 0.02 && recovery <= 0.02 && rep.iterations < 500;
  return detail::result(
      11, "minkowski-roundtrip", pass,
      "residual " + detail::fmt(rep.residual) + ", support recovery " + detail::fmt(recovery) +
          ", " + std::to_string(rep.iterations) + " iterations",
      {{"s", s},
       {"original_support", h0},
       {"target", io::to_json(mu)},
       {"solution", io::to_json(rep.solution)},
       {"translation", io::to_json<2>(x0)},
       {"recovered_support", shifted},
       {"residual", rep.residual},
       {"recovery_error", recovery},
       {"scale", rep.scale},
       {"alternative_scale", rep.paper_scale},
       {"alternative_residual", rep.paper_residual},
       {"kkt", rep.kkt},
       {"iterations", rep.iterations}});
}

// 12 ------------------------------------------------------------------------
inline PresetResult subsphere_rejection(const PresetOptions&) {
  AtomicSphericalMeasure<2> pair;
  pair.atoms = {{Vec<2>(1.0, 0.0), 1.0}, {Vec<2>(-1.0, 0.0), 1.0}};
  AtomicSphericalMeasure<2> triple;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    triple.atoms.push_back({Vec<2>(std::cos(a), std::sin(a)), 1.0});
  }
  const auto dp = validate_target(pair);
  const auto dt = validate_target(triple);
  const double eig_error = std::abs(dt.min_eigenvalue - dt.mass / 2.0) / dt.mass;
  const bool pass = !dp.pass && dt.pass && eig_error <= 1e-12;
  auto diag = [](const TargetDiagnostics& d) {
    return json{{"mass", d.mass}, {"centroid_norm", d.centroid_norm},
                {"min_eigenvalue", d.min_eigenvalue}, {"pass", d.pass}};
  };
  return detail::result(12, "subsphere-rejection", pass,
                        std::string("pair ") + (dp.pass ? "accepted" : "rejected") + ", triple " +
                            (dt.pass ? "accepted" : "rejected") + ", eigenvalue error " +
                            detail::fmt(eig_error),
                        {{"antipodal_pair", diag(dp)}, {"triple", diag(dt)},
                         {"triple_eigenvalue_error", eig_error}});
}

// 13 ------------------------------------------------------------------------
inline PresetResult isoperimetric(const PresetOptions&) {
  constexpr double s = 0.5;
  const auto disc = Discretization<2>::make(512, 128, 64);
  const auto fan = uniform_fan(64, 0.0);
  auto report = [](const IsoperimetricReport<2>& r) {
    return json{{"gamma", r.gamma_estimate}, {"support_spread", r.support_spread},
                {"ratio_spread", r.ratio_spread}, {"vtilde_spread", r.vtilde_spread},
                {"kkt", r.kkt}, {"iterations", r.iterations},
                {"support", r.optimizer.support_values()}};
  };
  // Euclidean gauge, started away from the disc.
  std::vector<double> ellipse;
  for (const auto& v : fan) ellipse.push_back(std::sqrt(2.25 * v.x() * v.x() + v.y() * v.y()));
  const auto rb = isoperimetric_search(GaugeBody<2>::ball(), s, fan, disc, {}, ellipse);
  const auto rs = isoperimetric_search(GaugeBody<2>::cube(), s, fan, disc);
  const bool ball_ok = rb.support_spread <= 1e-3 && rb.ratio_spread <= 0.02;
  const bool square_ok = rs.vtilde_spread <= 0.05 && rs.support_spread > 0.05;
  return detail::result(
      13, "isoperimetric", ball_ok && square_ok,
      "ball: h spread " + detail::fmt(rb.support_spread) + ", A/a spread " +
          detail::fmt(rb.ratio_spread) + "; square: Vt spread " + detail::fmt(rs.vtilde_spread) +
          ", h spread " + detail::fmt(rs.support_spread),
      {{"s", s}, {"fan_size", fan.size()}, {"ball", report(rb)}, {"square", report(rs)},
       {"ball_pass", ball_ok}, {"square_pass", square_ok}});
}

/// Serialised record of a preset run; the unit compared for determinism.
inline std::string serialise(const PresetResult& r) {
  return io::dump({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"summary", r.summary},
                   {"details", r.details}});
}

const std::vector<Preset>& registry();

// 14 ------------------------------------------------------------------------
/// Runs every other preset twice and compares the serialised output. A map of
/// first-run outputs (by name) may be supplied to skip the first runs.
inline PresetResult determinism(const PresetOptions& o,
                                const std::map<std::string, std::string>& first = {}) {
  json rows = json::array();
  bool pass = true;
  for (const auto& p : registry()) {
    if (p.id == 14) continue;
    const auto it = first.find(p.name);
    const std::string a = it != first.end() ? it->second : serialise(p.run(o));
    const std::string b = serialise(p.run(o));
    const bool same = a == b;
    pass = pass && same;
    rows.push_back({{"preset", p.name}, {"identical", same}, {"bytes", a.size()}});
  }
  return detail::result(14, "determinism", pass,
                        pass ? "all presets byte-identical on rerun" : "some preset output differs",
                        {{"seed", o.seed}, {"rows", rows}});
}

inline const std::vector<Preset>& registry() {
  static const std::vector<Preset> presets{
      {1, "route-agreement", "X-ray and Monte-Carlo perimeter agree", route_agreement},
      {2, "homogeneity", "P_s(lambda K) scales like lambda^(n-s)", homogeneity},
      {3, "centroid-check", "A_s has centroid zero", centroid_check},
      {4, "identity-asint", "P_s = 2/(n-s) sum h_i A_i", identity_asint},
      {5, "variational", "dP_s against 2n sum f_i A_i", variational},
      {6, "lemma-id", "boundary identity with chord lengths", lemma_id},
      {7, "limit-s0", "s A_i against (|L|/2) a_i", limit_s0},
      {8, "limit-s1", "pointwise s -> 1 curvature limit", limit_s1},
      {9, "ludwig", "endpoint limits of P_s", ludwig},
      {10, "projection-curvature", "curvature of ellipsoid shadows", projection_curvature},
      {11, "minkowski-roundtrip", "forward measure then inverse solve", minkowski_roundtrip},
      {12, "subsphere-rejection", "targets on a great subsphere are rejected", subsphere_rejection},
      {13, "isoperimetric", "fractional isoperimetric search", isoperimetric},
      {14, "determinism", "reruns are byte-identical",
       [](const PresetOptions& o) { return determinism(o); }},
  };
  return presets;
}

inline const Preset* find(const std::string& name) {
  for (const auto& p : registry()) {
    if (p.name == name || std::to_string(p.id) == name) return &p;
  }
  return nullptr;
}

}  // namespace fracgeo::presets
