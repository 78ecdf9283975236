#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fracgeo {

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

template <int N>
using Mat = Eigen::Matrix<double, N, N>;

/// Failure categories shared by every module. The CLI maps them to exit codes.
enum class ErrorKind {
  invalid_input,
  unbounded,
  empty,
  point_outside,
  point_not_on_boundary,
  degenerate_body,
  invalid_s,
  wulff_degenerate,
  not_tangent,
  invalid_target,
  stalled,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::unbounded: return "Unbounded";
    case ErrorKind::empty: return "Empty";
    case ErrorKind::point_outside: return "PointOutside";
    case ErrorKind::point_not_on_boundary: return "PointNotOnBoundary";
    case ErrorKind::degenerate_body: return "DegenerateBody";
    case ErrorKind::invalid_s: return "InvalidS";
    case ErrorKind::wulff_degenerate: return "WulffDegenerate";
    case ErrorKind::not_tangent: return "NotTangent";
    case ErrorKind::invalid_target: return "InvalidTarget";
    case ErrorKind::stalled: return "Stalled";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Validation failures (bad input) versus numerical failures.
  bool is_validation() const noexcept {
    return kind_ == ErrorKind::invalid_input || kind_ == ErrorKind::invalid_s ||
           kind_ == ErrorKind::invalid_target || kind_ == ErrorKind::not_tangent ||
           kind_ == ErrorKind::point_outside ||
           kind_ == ErrorKind::point_not_on_boundary;
  }

 private:
  ErrorKind kind_;
};

inline void require_s(double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw Error(ErrorKind::invalid_s, "s must lie in (0,1)");
  }
}

/// Volume of the unit ball in R^n.
constexpr double unit_ball_volume(int n) {
  switch (n) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default: return 0.0;
  }
}

/// Surface area of S^{n-1}.
constexpr double sphere_area(int n) { return n * unit_ball_volume(n); }

/// Pairwise summation. The order of operations depends only on the length,
/// so results are reproducible regardless of how the terms were produced.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace detail {
inline std::atomic<int>& thread_setting() {
  static std::atomic<int> value{0};
  return value;
}
}  // namespace detail

/// Worker cap for parallel loops. 0 means: FRACGEO_THREADS, else hardware.
inline void set_num_threads(int n) { detail::thread_setting() = std::max(0, n); }

inline int num_threads() {
  int n = detail::thread_setting();
  if (n > 0) return n;
  if (const char* env = std::getenv("FRACGEO_THREADS")) {
    n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i in [0, count) and stores results by index. Reductions
/// over the returned vector are therefore independent of the thread count.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(num_threads()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  // Rethrow the first failure by chunk order, independent of timing.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Unit vector orthogonal to u in the plane (rotation by +90 degrees).
inline Vec<2> perp(const Vec<2>& u) { return Vec<2>(-u.y(), u.x()); }

/// Orthonormal basis (e1, e2) of u-perp in R^3.
inline std::pair<Vec<3>, Vec<3>> tangent_basis(const Vec<3>& u) {
  const Vec<3> helper =
      std::abs(u.x()) < 0.9 ? Vec<3>(1.0, 0.0, 0.0) : Vec<3>(0.0, 1.0, 0.0);
  Vec<3> e1 = helper - helper.dot(u) * u;
  e1.normalize();
  Vec<3> e2 = u.cross(e1);
  return {e1, e2};
}

}  // namespace fracgeo
