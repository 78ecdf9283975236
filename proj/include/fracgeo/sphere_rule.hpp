#pragma once

#include "fracgeo/core.hpp"

namespace fracgeo {

/// Nodes and positive weights on S^{n-1}; weights sum to |S^{n-1}|.
template <int N>
struct QuadratureRule {
  std::vector<Vec<N>> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Sum of w_k f(u_k), reduced pairwise.
  template <class F>
  double integrate(F&& f) const {
    std::vector<double> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) terms[k] = weights[k] * f(nodes[k]);
    return pairwise_sum(terms);
  }
};

/// n = 2: midpoint rule on `resolution` equal angular cells (antipodally
/// symmetric for even resolution, symmetrised otherwise).
/// n = 3: Fibonacci spiral with `resolution` points, unioned with its
/// antipodes; all weights equal.
template <int N>
QuadratureRule<N> sphere_rule(int resolution) {
  static_assert(N == 2 || N == 3);
  if (resolution < 4) {
    throw Error(ErrorKind::invalid_input, "sphere rule resolution must be >= 4");
  }
  QuadratureRule<N> rule;
  if constexpr (N == 2) {
    const double cell = 2.0 * std::numbers::pi / resolution;
    for (int k = 0; k < resolution; ++k) {
      const double phi = (k + 0.5) * cell;
      rule.nodes.emplace_back(std::cos(phi), std::sin(phi));
    }
    if (resolution % 2 == 1) {
      for (int k = 0; k < resolution; ++k) rule.nodes.push_back(-rule.nodes[k]);
    }
  } else {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < resolution; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / resolution;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * k;
      rule.nodes.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    for (int k = 0; k < resolution; ++k) rule.nodes.push_back(-rule.nodes[k]);
  }
  rule.weights.assign(rule.nodes.size(), sphere_area(N) / rule.nodes.size());
  return rule;
}

}  // namespace fracgeo
