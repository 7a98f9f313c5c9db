#pragma once

// Runs the library's invariant suite against one graph and reports each check.

#include "topogame/containment.hpp"
#include "topogame/dynamics.hpp"
#include "topogame/exact.hpp"
#include "topogame/game.hpp"
#include "topogame/graph.hpp"
#include "topogame/io.hpp"
#include "topogame/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace topogame {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;  // counterexample when failing
};

namespace detail {

// Records the first counterexample only.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.detail = describe();
    }
  }

  Check done() && { return std::move(check_); }

 private:
  Check check_;
};

inline std::string vertex_list(const std::vector<int>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t t = 0; t < v.size(); ++t) s << (t ? "," : "") << v[t];
  s << '}';
  return s.str();
}

inline std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace detail

// Invariants of the general game G^k built from an outcome matrix.
inline std::vector<Check> check_game_structure(const OutcomeMatrix& m) {
  using detail::CheckBuilder;
  const std::string suffix = " (k=" + std::to_string(m.k) + ")";
  const Rational half(1, 2);
  const std::size_t n = m.size();
  std::vector<Check> out;

  CheckBuilder involution("outcome-involution" + suffix);
  CheckBuilder diagonal("outcome-diagonal-half" + suffix);
  for (std::size_t i = 0; i < n; ++i) {
    diagonal.expect(m.u(i, i) == half, [&] { return "u_ii = " + to_fraction_string(m.u(i, i)) + " at strategy " + detail::vertex_list(m.strategies[i].vertices); });
    for (std::size_t j = 0; j < n; ++j)
      involution.expect(m.u(i, j) + m.u(j, i) == 1, [&] {
        return "u_ij + u_ji != 1 for " + detail::vertex_list(m.strategies[i].vertices) + "," + detail::vertex_list(m.strategies[j].vertices);
      });
  }
  out.push_back(std::move(involution).done());
  out.push_back(std::move(diagonal).done());

  const GameReport r = nash_equilibria(m);
  CheckBuilder bounds("value-bounds" + suffix);
  bounds.expect(r.lower <= half && half <= r.upper, [&] {
    return "lower " + to_fraction_string(r.lower) + ", upper " + to_fraction_string(r.upper);
  });
  out.push_back(std::move(bounds).done());

  CheckBuilder security("security-set-symmetry" + suffix);
  security.expect(r.row_security == r.column_security, [] { return std::string("row and column security sets differ"); });
  out.push_back(std::move(security).done());

  CheckBuilder pinning("nash-value-pinning" + suffix);
  if (!r.nash_pairs.empty()) {
    pinning.expect(r.nash_value && *r.nash_value == half && r.upper == half && r.lower == half,
                   [] { return std::string("equilibria exist but value is not 1/2"); });
  }
  pinning.expect(r.nash_pairs == saddle_points(m.u), [] { return std::string("security-product pairs differ from saddle scan"); });
  out.push_back(std::move(pinning).done());
  return out;
}

inline std::vector<Check> verify_graph(const Graph& g, int k, std::uint64_t seed, std::size_t cap = kDefaultStrategyCap) {
  using detail::CheckBuilder;
  using detail::pair_text;
  require_connected(g);
  const int n = g.order();
  const auto sn = static_cast<std::size_t>(n);
  const IntegerMatrix lap = laplacian(g);
  const Integer tau = spanning_tree_count(g);
  const Rational half(1, 2);
  std::vector<Check> out;

  CheckBuilder lap_check("laplacian-structure");
  for (std::size_t i = 0; i < sn; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < sn; ++j) {
      row += lap(i, j);
      lap_check.expect(lap(i, j) == lap(j, i), [&] { return "asymmetric at " + pair_text(int(i) + 1, int(j) + 1); });
    }
    lap_check.expect(row == 0, [&] { return "nonzero row sum at row " + std::to_string(i + 1); });
    lap_check.expect(lap(i, i) == g.degree(int(i) + 1), [&] { return "diagonal differs from degree at " + std::to_string(i + 1); });
  }
  out.push_back(std::move(lap_check).done());

  CheckBuilder cofactors("matrix-tree-cofactors");
  const IntegerMatrix adj = adjugate(lap);
  for (std::size_t i = 0; i < sn; ++i)
    for (std::size_t j = 0; j < sn; ++j)
      cofactors.expect(adj(i, j) == tau, [&] { return "adj(L) entry " + pair_text(int(i) + 1, int(j) + 1) + " = " + adj(i, j).str() + ", tau = " + tau.str(); });
  cofactors.expect(determinant(lap) == 0, [] { return std::string("det L != 0"); });
  out.push_back(std::move(cofactors).done());

  CheckBuilder grounded_det("grounded-determinant-equals-tau");
  for (int i = 1; i <= n; ++i) {
    const Integer d = determinant(detail::laplacian_plus_unit(g, i));
    grounded_det.expect(d == tau, [&] { return "det(L+diag e_" + std::to_string(i) + ") = " + d.str(); });
  }
  out.push_back(std::move(grounded_det).done());

  CheckBuilder pd("principal-submatrix-positive-definite");
  std::vector<std::vector<int>> keeps;
  if (n <= 8) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) keep.push_back(v + 1);
      keeps.push_back(keep);
    }
  } else {
    for (int drop = 1; drop <= n; ++drop) {
      std::vector<int> keep;
      for (int v = 1; v <= n; ++v)
        if (v != drop) keep.push_back(v);
      keeps.push_back(keep);
    }
  }
  for (const auto& keep : keeps) {
    const IntegerMatrix sub = principal_submatrix(lap, keep);
    pd.expect(is_positive_definite(sub), [&] { return "not positive definite on " + detail::vertex_list(keep); });
    const IntegerMatrix sub_adj = adjugate(sub);
    bool nonnegative = true;
    for (std::size_t a = 0; a < sub.rows(); ++a)
      for (std::size_t b = 0; b < sub.cols(); ++b) nonnegative = nonnegative && sub_adj(a, b) >= 0;
    pd.expect(nonnegative, [&] { return "inverse has a negative entry on " + detail::vertex_list(keep); });
  }
  out.push_back(std::move(pd).done());

  // Random leader links drawn from the seed.
  std::mt19937_64 rng(seed);
  CheckBuilder weights("convex-weights");
  CheckBuilder sim("simulated-steady-state");
  const LeaderStates ys(-1, 1);
  SimConfig cfg;
  cfg.t_end = 1000.0;
  for (int draw = 0; draw < 5; ++draw) {
    const LeaderLinks links(random_nonempty_indicator(rng, n), random_nonempty_indicator(rng, n));
    const ConvexWeights w = convex_weights(g, links);
    for (std::size_t i = 0; i < sn; ++i) {
      weights.expect(w.alpha[i] + w.beta[i] == 1 && w.alpha[i] > 0 && w.beta[i] > 0 && w.alpha[i] < 1 && w.beta[i] < 1,
                     [&] { return "alpha/beta out of range at follower " + std::to_string(i + 1) + " in draw " + std::to_string(draw); });
    }
    const auto exact = steady_state(g, links, ys);
    const auto traj = simulate(g, links, std::vector<double>(sn, 0.0), ys, cfg);
    for (std::size_t i = 0; i < sn; ++i) {
      const double err = std::abs(traj.terminal()[i] - to_double(exact[i]));
      sim.expect(err < 1e-6, [&] { return "follower " + std::to_string(i + 1) + " off by " + format_sig12(err) + " in draw " + std::to_string(draw); });
    }
  }
  out.push_back(std::move(weights).done());
  out.push_back(std::move(sim).done());

  const OutcomeMatrix game1 = outcome_matrix(g, 1, cap);
  for (auto& c : check_game_structure(game1)) out.push_back(std::move(c));
  if (k != 1) {
    const OutcomeMatrix gamek = outcome_matrix(g, k, cap);
    for (auto& c : check_game_structure(gamek)) out.push_back(std::move(c));
  }

  CheckBuilder theorem1("half-comparison-consistency");
  CheckBuilder theorem3("neighborhood-dominance-soundness");
  CheckBuilder eq12("adjugate-sum-identity");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Rational& u = game1.u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      const auto expected = three_way(u, half);
      theorem1.expect(compare_half(g, i, j) == expected, [&] { return "mismatch at " + pair_text(i, j) + ", u = " + to_fraction_string(u); });
      const Dominance dom = neighborhood_dominance(g, i, j);
      const bool sound = (dom == Dominance::StrictSuperset && u < half) || (dom == Dominance::Equal && u == half) ||
                         (dom == Dominance::StrictSubset && u > half) || dom == Dominance::Incomparable;
      theorem3.expect(sound, [&] { return to_string(dom) + " at " + pair_text(i, j) + " but u = " + to_fraction_string(u); });
      const Integer lhs = adjugate_column_sum(g, i, j);
      const Integer rhs = n * tau + m_ij(g, i, j);
      eq12.expect(lhs == rhs, [&] { return "at " + pair_text(i, j) + ": " + lhs.str() + " != " + rhs.str(); });
    }
  out.push_back(std::move(theorem1).done());
  out.push_back(std::move(theorem3).done());
  out.push_back(std::move(eq12).done());

  const GameReport r1 = nash_equilibria(game1);
  CheckBuilder se("se-set-equals-security-set");
  std::vector<int> security_vertices;
  for (auto idx : r1.security_set) security_vertices.push_back(game1.strategies[idx].vertices.front());
  const auto se_vertices = se_set(g);
  se.expect(se_vertices == security_vertices, [&] {
    return "S_e " + detail::vertex_list(se_vertices) + " vs security set " + detail::vertex_list(security_vertices);
  });
  out.push_back(std::move(se).done());

  CheckBuilder shortcut("shortcut-agreement");
  const auto sc = shortcut_optimal(g);
  if (sc && sc->kind == Shortcut::Kind::AllPairs) {
    bool all_half = true;
    for (std::size_t i = 0; i < sn; ++i)
      for (std::size_t j = 0; j < sn; ++j) all_half = all_half && game1.u(i, j) == half;
    shortcut.expect(all_half && r1.nash_pairs.size() == sn * sn, [] { return std::string("circulant graph but not every pair is a Nash pair"); });
  } else if (sc) {
    const auto c = static_cast<std::size_t>(sc->center - 1);
    const bool found = std::find(r1.nash_pairs.begin(), r1.nash_pairs.end(), StrategyPair{c, c}) != r1.nash_pairs.end();
    shortcut.expect(found, [&] { return "center " + std::to_string(sc->center) + " self-pair is not a Nash pair"; });
  }
  out.push_back(std::move(shortcut).done());
  if (sc && sc->kind == Shortcut::Kind::AllPairs) {
    CheckBuilder all_pairs("all-pairs-Nash");
    all_pairs.expect(r1.nash_pairs.size() == sn * sn, [&] { return std::to_string(r1.nash_pairs.size()) + " Nash pairs"; });
    out.push_back(std::move(all_pairs).done());
  }

  CheckBuilder symmetry("limit-distance-symmetry");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto x = steady_state(g, LeaderLinks::single(n, i, j), ys);
      const Rational lhs = x[static_cast<std::size_t>(i - 1)] - ys.y0;
      const Rational rhs = ys.y1 - x[static_cast<std::size_t>(j - 1)];
      symmetry.expect(lhs == rhs, [&] { return "at " + pair_text(i, j) + ": " + to_fraction_string(lhs) + " vs " + to_fraction_string(rhs); });
    }
  out.push_back(std::move(symmetry).done());
  return out;
}

}  // namespace topogame
