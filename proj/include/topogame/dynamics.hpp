#pragma once

// Floating-point RK4 integration of the follower dynamics, used to confirm the
// exact steady-state results by an independent route.

#include "topogame/containment.hpp"
#include "topogame/error.hpp"
#include "topogame/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topogame {

struct SimConfig {
  double dt = 0.0;  // 0 selects the default step policy
  double t_end = 100.0;
  double convergence_tol = 1e-9;
  std::size_t record_stride = 1;
};

enum class Termination { Converged, Horizon };

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  Termination termination = Termination::Horizon;

  const std::vector<double>& terminal() const { return states.back(); }
  bool converged() const { return termination == Termination::Converged; }
};

// Gershgorin: spectrum of L + diag(b + d) lies in [0, 2 * max_degree + 2].
inline double stable_step_bound(const Graph& g) { return 1.0 / (2.0 * (g.max_degree() + 2)); }

inline double default_step(const Graph& g) { return std::min(0.01, stable_step_bound(g)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {

// Dense float copy of the grounded matrix and forcing term.
struct LinearSystem {
  std::size_t n;
  std::vector<double> a;  // row-major L + diag(b + d)
  std::vector<double> c;  // b*y0 + d*y1

  // out = -A x + c
  void rate(const std::vector<double>& x, std::vector<double>& out) const {
    for (std::size_t i = 0; i < n; ++i) {
      double s = c[i];
      for (std::size_t j = 0; j < n; ++j) s -= a[i * n + j] * x[j];
      out[i] = s;
    }
  }
};

}  // namespace detail

inline Trajectory simulate(const Graph& g, const LeaderLinks& links, const std::vector<double>& x0,
                           const LeaderStates& ys, const SimConfig& cfg = {}) {
  const auto n = static_cast<std::size_t>(g.order());
  if (x0.size() != n || links.size() != n) throw InputError("dimension mismatch between graph, links and initial state");
  require_connected(g);
  if (links.b_empty() || links.d_empty()) throw InputError("each leader must link to at least one follower");
  if (!(cfg.t_end > 0) || !(cfg.convergence_tol > 0) || cfg.dt < 0 || cfg.record_stride == 0)
    throw InputError("invalid simulation configuration");
  const double bound = stable_step_bound(g);
  const double dt = cfg.dt == 0.0 ? default_step(g) : cfg.dt;
  if (dt > bound) throw InputError("step size " + std::to_string(dt) + " above stability bound " + std::to_string(bound));

  detail::LinearSystem sys{n, std::vector<double>(n * n), std::vector<double>(n)};
  const IntegerMatrix m = grounded(g, links);
  const double y0 = to_double(ys.y0), y1 = to_double(ys.y1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys.a[i * n + j] = m(i, j).convert_to<double>();
    sys.c[i] = links.b[i] * y0 + links.d[i] * y1;
  }

  Trajectory traj;
  std::vector<double> x = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  // Step count is fixed up front so time does not drift with accumulated sums.
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_end / dt - 1e-9));
  for (std::size_t step = 1; step <= steps; ++step) {
    sys.rate(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    sys.rate(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    sys.rate(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    sys.rate(tmp, k4);
    double increment = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      x[i] += dx;
      increment = std::max(increment, std::abs(dx));
      if (!std::isfinite(x[i])) throw std::runtime_error("simulation diverged");
    }
    const double t = static_cast<double>(step) * dt;
    const bool converged = increment / dt < cfg.convergence_tol;
    const bool last = converged || step == steps;
    if (step % cfg.record_stride == 0 || last) {
      traj.times.push_back(t);
      traj.states.push_back(x);
    }
    if (converged) {
      traj.termination = Termination::Converged;
      return traj;
    }
  }
  traj.termination = Termination::Horizon;
  return traj;
}

struct AverageDistances {
  std::vector<double> d0;  // (1/n) sum |x_i - y0|
  std::vector<double> d1;  // (1/n) sum |x_i - y1|
};

inline AverageDistances average_distances(const Trajectory& traj, const LeaderStates& ys) {
  const double y0 = to_double(ys.y0), y1 = to_double(ys.y1);
  AverageDistances out;
  for (const auto& x : traj.states) {
    double s0 = 0, s1 = 0;
    for (double xi : x) {
      s0 += std::abs(xi - y0);
      s1 += std::abs(xi - y1);
    }
    const auto n = static_cast<double>(x.size());
    out.d0.push_back(s0 / n);
    out.d1.push_back(s1 / n);
  }
  return out;
}

struct SymmetryResidual {
  Rational analytic;  // |(x_i - y0) - (y1 - x_j)| at the exact limit
  double simulated;   // same quantity from the simulated terminal state
  Termination termination;
};

// Leader l0 linked to follower i, l1 to follower j: in the limit follower i is as
// close to y0 as follower j is to y1.
inline SymmetryResidual check_property5(const Graph& g, int i, int j, const LeaderStates& ys, const SimConfig& cfg = {}) {
  g.check_vertex(i);
  g.check_vertex(j);
  const auto links = LeaderLinks::single(g.order(), i, j);
  const auto exact = steady_state(g, links, ys);
  const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  Rational analytic = (exact[ii] - ys.y0) - (ys.y1 - exact[jj]);
  if (analytic < 0) analytic = -analytic;

  const auto traj = simulate(g, links, std::vector<double>(static_cast<std::size_t>(g.order()), 0.0), ys, cfg);
  const auto& x = traj.terminal();
  const double simulated = std::abs((x[ii] - to_double(ys.y0)) - (to_double(ys.y1) - x[jj]));
  return {analytic, simulated, traj.termination};
}

}  // namespace topogame
