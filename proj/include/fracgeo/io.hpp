#pragma once

// JSON descriptions of bodies, gauges and measures.
//
//   body:    {"dim": 2, "normals": [[1,0], ...], "support": [1, ...]}
//   gauge:   {"kind": "ball", "radius": 1}
//            {"kind": "ellipsoid", "axes": [2, 1]}
//            {"kind": "polytope", "dim": 2, "normals": [...], "support": [...]}
//            {"kind": "support-sampled", "dim": 2, "nodes": [...], "support": [...]}
//   measure: {"atoms": [{"v": [1, 0], "w": 2.5}, ...]}
//
// Schema errors name the offending JSON path, e.g. "$.normals[2][1]".

#include "fracgeo/minkowski.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace fracgeo::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::invalid_input, "schema error at " + path + ": " + what);
}

inline const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  if (!j.contains(key)) schema_error(path + "." + key, "missing");
  return j.at(key);
}

inline double number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error(path, "expected a finite number");
  return x;
}

inline std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(number(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

template <int N>
Vec<N> vector(const json& j, const std::string& path) {
  const auto xs = numbers(j, path);
  if (xs.size() != static_cast<std::size_t>(N)) {
    schema_error(path, "expected " + std::to_string(N) + " components");
  }
  Vec<N> v;
  for (int k = 0; k < N; ++k) v[k] = xs[k];
  return v;
}

template <int N>
std::vector<Vec<N>> vectors(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of vectors");
  std::vector<Vec<N>> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(vector<N>(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace detail

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, path + ": " + e.what());
  }
}

/// "dim" of a description, 2 or 3.
inline int dimension(const json& j, const std::string& path = "$") {
  const double d = detail::number(detail::member(j, path, "dim"), path + ".dim");
  if (d != 2.0 && d != 3.0) detail::schema_error(path + ".dim", "must be 2 or 3");
  return static_cast<int>(d);
}

template <int N>
PolytopeBody<N> parse_body(const json& j, const std::string& path = "$") {
  if (dimension(j, path) != N) detail::schema_error(path + ".dim", "dimension mismatch");
  const auto normals = detail::vectors<N>(detail::member(j, path, "normals"), path + ".normals");
  const auto support = detail::numbers(detail::member(j, path, "support"), path + ".support");
  if (normals.size() != support.size()) {
    detail::schema_error(path + ".support", "length differs from normals");
  }
  return wulff_shape<N>(normals, support);
}

template <int N>
GaugeBody<N> parse_gauge(const json& j, const std::string& path = "$") {
  const auto& kind_j = detail::member(j, path, "kind");
  if (!kind_j.is_string()) detail::schema_error(path + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "ball") {
    const double r = j.contains("radius") ? detail::number(j.at("radius"), path + ".radius") : 1.0;
    return GaugeBody<N>::ball(r);
  }
  if (kind == "ellipsoid") {
    return GaugeBody<N>::ellipsoid(detail::vector<N>(detail::member(j, path, "axes"), path + ".axes"));
  }
  if (kind == "polytope") return GaugeBody<N>::polytope(parse_body<N>(j, path));
  if (kind == "support-sampled") {
    if (dimension(j, path) != N) detail::schema_error(path + ".dim", "dimension mismatch");
    const auto nodes = detail::vectors<N>(detail::member(j, path, "nodes"), path + ".nodes");
    const auto h = detail::numbers(detail::member(j, path, "support"), path + ".support");
    if (nodes.size() != h.size()) detail::schema_error(path + ".support", "length differs from nodes");
    return GaugeBody<N>::support_sampled(nodes, h);
  }
  detail::schema_error(path + ".kind", "unknown gauge kind '" + kind + "'");
}

template <int N>
AtomicSphericalMeasure<N> parse_measure(const json& j, const std::string& path = "$") {
  const auto& atoms = detail::member(j, path, "atoms");
  if (!atoms.is_array()) detail::schema_error(path + ".atoms", "expected an array");
  AtomicSphericalMeasure<N> m;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string p = path + ".atoms[" + std::to_string(k) + "]";
    Vec<N> v = detail::vector<N>(detail::member(atoms[k], p, "v"), p + ".v");
    if (std::abs(v.norm() - 1.0) > 1e-9) detail::schema_error(p + ".v", "not a unit vector");
    const double w = detail::number(detail::member(atoms[k], p, "w"), p + ".w");
    if (w < 0.0) detail::schema_error(p + ".w", "weight must be nonnegative");
    m.atoms.push_back({v, w});
  }
  return m;
}

/// Dimension of a measure description (length of the first atom's vector).
inline int measure_dimension(const json& j) {
  const auto& atoms = detail::member(j, "$", "atoms");
  if (!atoms.is_array() || atoms.empty()) detail::schema_error("$.atoms", "expected a nonempty array");
  const auto& v = detail::member(atoms[0], "$.atoms[0]", "v");
  if (!v.is_array() || (v.size() != 2 && v.size() != 3)) {
    detail::schema_error("$.atoms[0].v", "expected 2 or 3 components");
  }
  return static_cast<int>(v.size());
}

// ---------------------------------------------------------------------------
// Built-in shapes

/// Names accepted wherever a body file is expected.
inline const std::vector<std::string>& builtin_body_names() {
  static const std::vector<std::string> names{"square", "triangle", "pentagon", "hexagon", "cube"};
  return names;
}

inline std::optional<int> builtin_body_dim(const std::string& name) {
  if (name == "cube") return 3;
  for (const auto& n : builtin_body_names()) {
    if (n == name) return 2;
  }
  return std::nullopt;
}

template <int N>
PolytopeBody<N> builtin_body(const std::string& name) {
  if constexpr (N == 2) {
    if (name == "square") return cube_body<2>(1.0);
    if (name == "triangle") return regular_polygon(3, 1.0, std::numbers::pi / 2.0);
    if (name == "pentagon") return regular_polygon(5, 1.0, 0.0);
    if (name == "hexagon") return regular_polygon(6, 1.0, 0.0);
  } else {
    if (name == "cube") return cube_body<3>(1.0);
  }
  throw Error(ErrorKind::invalid_input, "unknown built-in body '" + name + "' in dimension " +
                                            std::to_string(N));
}

/// "ball", "square" (the cube [-1,1]^n as a gauge) or "cube".
template <int N>
std::optional<GaugeBody<N>> builtin_gauge(const std::string& name) {
  if (name == "ball") return GaugeBody<N>::ball();
  if (name == "square" || name == "cube") return GaugeBody<N>::cube();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Output

template <int N>
json to_json(const Vec<N>& v) {
  json out = json::array();
  for (int k = 0; k < N; ++k) out.push_back(v[k]);
  return out;
}

template <int N>
json to_json(const PolytopeBody<N>& body) {
  json normals = json::array();
  json areas = json::array();
  json vertices = json::array();
  for (const auto& v : body.normals()) normals.push_back(to_json<N>(v));
  for (const auto& f : body.facets()) areas.push_back(f.area);
  for (const auto& x : body.vertices()) vertices.push_back(to_json<N>(x));
  return {{"dim", N},
          {"normals", normals},
          {"support", body.support_values()},
          {"facet_areas", areas},
          {"vertices", vertices},
          {"volume", body.volume()}};
}

template <int N>
json to_json(const AtomicSphericalMeasure<N>& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"v", to_json<N>(a.v)}, {"w", a.w}});
  return {{"atoms", atoms}};
}

/// Serialisation used for every output file: sorted keys, two-space indent,
/// shortest round-trip doubles.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fracgeo::io
