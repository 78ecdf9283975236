// fracgeo command-line driver.
//
//   fracgeo perimeter --body square --gauge ball --s 0.5 --route xray --res 256
//   fracgeo area-measure --body data/pentagon.json --gauge ball --s 0.5
//   fracgeo limits --body square --gauge ball --s-list 0.3,0.1,0.01
//   fracgeo solve --target data/triangle_target.json --gauge ball --s 0.5
//   fracgeo isoperimetric --gauge square --s 0.5 --fan 64
//   fracgeo preset centroid-check
//
// Exit status: 0 success, 2 invalid input, 1 numerical failure (or a failed
// preset).

#include "fracgeo/fracgeo.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

namespace {

using namespace fracgeo;
using io::json;

struct RunConfig {
  std::string body = "square";
  std::string gauge = "ball";
  std::string target;
  double s = 0.5;
  std::vector<double> s_list{0.3, 0.1, 0.03, 0.01};
  std::string route = "xray";
  int res = 512;
  int proj_res = 128;
  int per_facet = 64;
  std::size_t samples = 1000000;
  std::uint64_t seed = presets::PresetOptions{}.seed;
  std::string out;
  int threads = 0;
  bool trace = false;
  int fan = 64;
  int max_iterations = 500;
  std::string preset;
};

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + cfg.out);
  f << text;
}

/// Dimension implied by a body argument (built-in name or JSON file).
int body_dimension(const std::string& arg) {
  if (auto d = io::builtin_body_dim(arg)) return *d;
  return io::dimension(io::read_file(arg));
}

template <int N>
PolytopeBody<N> load_body(const std::string& arg) {
  if (io::builtin_body_dim(arg)) return io::builtin_body<N>(arg);
  return io::parse_body<N>(io::read_file(arg));
}

template <int N>
GaugeBody<N> load_gauge(const std::string& arg) {
  if (auto g = io::builtin_gauge<N>(arg)) return *g;
  return io::parse_gauge<N>(io::read_file(arg));
}

template <int N>
Discretization<N> discretization(const RunConfig& cfg) {
  if (cfg.res < 4) throw Error(ErrorKind::invalid_input, "--res must be >= 4");
  if (cfg.proj_res < 1) throw Error(ErrorKind::invalid_input, "--proj-res must be >= 1");
  if (cfg.per_facet < 1) throw Error(ErrorKind::invalid_input, "--per-facet must be >= 1");
  return Discretization<N>::make(cfg.res, cfg.proj_res, cfg.per_facet);
}

template <int N>
int run_perimeter(const RunConfig& cfg) {
  require_s(cfg.s);
  const auto body = load_body<N>(cfg.body);
  const auto gauge = load_gauge<N>(cfg.gauge);
  const auto disc = discretization<N>(cfg);
  PerimeterEstimate est;
  if (cfg.route == "xray") {
    est = ps_xray(body, gauge, cfg.s, disc.rule, disc.proj_res);
  } else if (cfg.route == "montecarlo") {
    est = ps_montecarlo(body, gauge, cfg.s, cfg.samples, RandomSource(cfg.seed));
  } else if (cfg.route == "linesample") {
    if (gauge.kind_name() != "ball") {
      throw Error(ErrorKind::invalid_input, "linesample route needs the Euclidean gauge");
    }
    est = ps_linesample(body, cfg.s, cfg.samples, RandomSource(cfg.seed));
    est.value *= std::pow(gauge.rho(Vec<N>::Unit(0)), N + cfg.s);
  } else {
    throw Error(ErrorKind::invalid_input, "unknown route '" + cfg.route + "'");
  }
  json j{{"s", cfg.s}, {"route", to_string(est.route)}, {"value", est.value},
         {"std_error", est.std_error}, {"cost", est.cost}, {"dim", N}};
  if (est.route != Route::xray) j["seed"] = cfg.seed;
  write_output(cfg, io::dump(j));
  return 0;
}

template <int N>
int run_area_measure(const RunConfig& cfg) {
  require_s(cfg.s);
  const auto body = load_body<N>(cfg.body);
  const auto gauge = load_gauge<N>(cfg.gauge);
  const auto disc = discretization<N>(cfg);
  const auto m = disc.measure(body, gauge, cfg.s);
  json j = io::to_json(m);
  j["s"] = cfg.s;
  j["mass"] = m.mass();
  j["centroid"] = io::to_json<N>(centroid(m));
  j["body"] = io::to_json(body);
  write_output(cfg, io::dump(j));
  return 0;
}

template <int N>
int run_limits(const RunConfig& cfg) {
  for (double s : cfg.s_list) require_s(s);
  const auto body = load_body<N>(cfg.body);
  const auto gauge = load_gauge<N>(cfg.gauge);
  const auto rows = limit_s0_check(body, gauge, cfg.s_list, discretization<N>(cfg));
  std::string csv = "s,id,lhs,rhs,ratio\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g,%.17g\n", r.s, r.id, r.lhs, r.rhs, r.ratio);
    csv += buf;
  }
  write_output(cfg, csv);
  return 0;
}

DescentOptions descent_options(const RunConfig& cfg) {
  if (cfg.max_iterations < 1) throw Error(ErrorKind::invalid_input, "--max-iterations must be >= 1");
  DescentOptions o;
  o.max_iterations = cfg.max_iterations;
  return o;
}

template <int N>
int run_solve(const RunConfig& cfg, const json& target_json) {
  require_s(cfg.s);
  const auto target = io::parse_measure<N>(target_json);
  const auto gauge = load_gauge<N>(cfg.gauge);
  const auto problem = MinkowskiProblem<N>::on_support(target, gauge, cfg.s);
  const auto rep = solve_minkowski(problem, discretization<N>(cfg), descent_options(cfg));
  json j{{"s", cfg.s},
         {"solution", io::to_json(rep.solution)},
         {"scale", rep.scale},
         {"residual", rep.residual},
         {"alternative_scale", rep.paper_scale},
         {"alternative_residual", rep.paper_residual},
         {"kkt", rep.kkt},
         {"iterations", rep.iterations}};
  if (cfg.trace) j["objective_trace"] = rep.objective_trace;
  write_output(cfg, io::dump(j));
  return 0;
}

int run_isoperimetric(const RunConfig& cfg) {
  require_s(cfg.s);
  if (cfg.fan < 3) throw Error(ErrorKind::invalid_input, "--fan must be >= 3");
  const auto gauge = load_gauge<2>(cfg.gauge);
  const auto rep = isoperimetric_search(gauge, cfg.s, uniform_fan(cfg.fan), discretization<2>(cfg),
                                        descent_options(cfg));
  json j{{"s", cfg.s},
         {"optimizer", io::to_json(rep.optimizer)},
         {"gamma", rep.gamma_estimate},
         {"support_spread", rep.support_spread},
         {"ratio_spread", rep.ratio_spread},
         {"vtilde_spread", rep.vtilde_spread},
         {"kkt", rep.kkt},
         {"iterations", rep.iterations}};
  if (cfg.trace) j["objective_trace"] = rep.objective_trace;
  write_output(cfg, io::dump(j));
  return 0;
}

int run_preset(const RunConfig& cfg) {
  const auto* p = presets::find(cfg.preset);
  if (!p) {
    std::string names;
    for (const auto& q : presets::registry()) names += " " + q.name;
    throw Error(ErrorKind::invalid_input, "unknown preset '" + cfg.preset + "'; known:" + names);
  }
  const auto r = p->run({cfg.seed});
  write_output(cfg, presets::serialise(r));
  std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.summary << "\n";
  return r.pass ? 0 : 1;
}

int dispatch(const std::string& cmd, const RunConfig& cfg) {
  if (cmd == "perimeter") {
    return body_dimension(cfg.body) == 2 ? run_perimeter<2>(cfg) : run_perimeter<3>(cfg);
  }
  if (cmd == "area-measure") {
    return body_dimension(cfg.body) == 2 ? run_area_measure<2>(cfg) : run_area_measure<3>(cfg);
  }
  if (cmd == "limits") {
    return body_dimension(cfg.body) == 2 ? run_limits<2>(cfg) : run_limits<3>(cfg);
  }
  if (cmd == "solve") {
    const json t = io::read_file(cfg.target);
    return io::measure_dimension(t) == 2 ? run_solve<2>(cfg, t) : run_solve<3>(cfg, t);
  }
  if (cmd == "isoperimetric") return run_isoperimetric(cfg);
  if (cmd == "preset") return run_preset(cfg);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anisotropic fractional perimeters, area measures and Minkowski problems"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("FRACGEO_THREADS")) cfg.threads = std::max(0, std::atoi(env));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--res", cfg.res, "sphere rule resolution")->capture_default_str();
    sub->add_option("--proj-res", cfg.proj_res, "projection grid per axis (n = 3)")->capture_default_str();
    sub->add_option("--per-facet", cfg.per_facet, "boundary nodes per facet")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--threads", cfg.threads, "worker cap (default FRACGEO_THREADS or all cores)");
  };
  auto body_gauge = [&](CLI::App* sub) {
    sub->add_option("--body", cfg.body, "built-in name or body JSON")->capture_default_str();
    sub->add_option("--gauge", cfg.gauge, "ball, square, cube or gauge JSON")->capture_default_str();
  };
  auto descent = [&](CLI::App* sub) {
    sub->add_flag("--trace", cfg.trace, "include the objective trace");
    sub->add_option("--max-iterations", cfg.max_iterations)->capture_default_str();
  };

  auto* perimeter = app.add_subcommand("perimeter", "P_s(K, L)");
  body_gauge(perimeter);
  common(perimeter);
  perimeter->add_option("--s", cfg.s)->capture_default_str();
  perimeter->add_option("--route", cfg.route, "xray, montecarlo or linesample")->capture_default_str();
  perimeter->add_option("--samples", cfg.samples)->capture_default_str();
  perimeter->add_option("--seed", cfg.seed)->capture_default_str();

  auto* area = app.add_subcommand("area-measure", "A_s(K, L, .) on the facet normals");
  body_gauge(area);
  common(area);
  area->add_option("--s", cfg.s)->capture_default_str();

  auto* limits = app.add_subcommand("limits", "s A_i against (|L|/2) a_i as CSV");
  body_gauge(limits);
  common(limits);
  limits->add_option("--s-list", cfg.s_list)->delimiter(',')->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Minkowski problem for a target measure");
  solve->add_option("--target", cfg.target, "measure JSON")->required();
  solve->add_option("--gauge", cfg.gauge)->capture_default_str();
  solve->add_option("--s", cfg.s)->capture_default_str();
  common(solve);
  descent(solve);

  auto* iso = app.add_subcommand("isoperimetric", "minimise P_s / |K|^((n-s)/n) on a fan");
  iso->add_option("--gauge", cfg.gauge)->capture_default_str();
  iso->add_option("--s", cfg.s)->capture_default_str();
  iso->add_option("--fan", cfg.fan, "number of uniform normals")->capture_default_str();
  common(iso);
  descent(iso);

  auto* preset = app.add_subcommand("preset", "run a named acceptance experiment");
  preset->add_option("name", cfg.preset, "preset name or number")->required();
  preset->add_option("--seed", cfg.seed)->capture_default_str();
  preset->add_option("--out", cfg.out);
  preset->add_option("--threads", cfg.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  set_num_threads(cfg.threads);
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
