#pragma once

// The leader topology game: each leader links to k followers, l0 minimizes and
// l1 maximizes u_ij = (1/n) 1^T (L + diag(s_i + s_j))^-1 s_j.

#include "topogame/containment.hpp"
#include "topogame/error.hpp"
#include "topogame/exact.hpp"
#include "topogame/graph.hpp"
#include "topogame/matrix.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace topogame {

inline constexpr std::size_t kDefaultStrategyCap = 20000;

// A k-subset of followers; `index` is its position in lexicographic order.
struct Strategy {
  std::vector<int> vertices;  // ascending, 1-based
  std::size_t index = 0;

  std::vector<int> indicator(int n) const { return LeaderLinks::indicator(n, vertices); }
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// C(n, k), or nullopt once it exceeds `cap`.
inline std::optional<std::size_t> binomial_capped(int n, int k, std::size_t cap) {
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int t = 1; t <= k; ++t) {
    c = c * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    if (c > cap) return std::nullopt;
  }
  if (c > cap) return std::nullopt;
  return static_cast<std::size_t>(c);
}

inline std::vector<Strategy> enumerate_strategies(int n, int k, std::size_t cap = kDefaultStrategyCap) {
  if (n < 1) throw InputError("vertex count must be at least 1");
  if (k < 1 || k > n) throw InputError("k must satisfy 1 <= k <= n");
  const auto count = binomial_capped(n, k, cap);
  if (!count) throw InputError("C(n,k) exceeds the strategy cap of " + std::to_string(cap));
  std::vector<Strategy> out;
  out.reserve(*count);
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) current[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.push_back({current, out.size()});
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t) current[static_cast<std::size_t>(t)] = current[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

inline Rational outcome_entry(const Graph& g, const Strategy& row, const Strategy& col) {
  const int n = g.order();
  const LeaderLinks links(row.indicator(n), col.indicator(n));
  const ConvexWeights w = convex_weights(g, links);
  Rational sum = 0;
  for (const auto& b : w.beta) sum += b;
  return sum / n;
}

struct OutcomeMatrix {
  Graph graph;
  int k;
  std::vector<Strategy> strategies;
  RationalMatrix u;

  std::size_t size() const { return strategies.size(); }
};

inline OutcomeMatrix outcome_matrix(const Graph& g, int k, std::size_t cap = kDefaultStrategyCap) {
  require_connected(g);
  auto strategies = enumerate_strategies(g.order(), k, cap);
  RationalMatrix u(strategies.size(), strategies.size());
  for (std::size_t i = 0; i < strategies.size(); ++i)
    for (std::size_t j = 0; j < strategies.size(); ++j) u(i, j) = outcome_entry(g, strategies[i], strategies[j]);
  return {g, k, std::move(strategies), std::move(u)};
}

using StrategyPair = std::pair<std::size_t, std::size_t>;

struct GameReport {
  Rational upper;  // min_i max_j u_ij
  Rational lower;  // max_j min_i u_ij
  std::vector<std::size_t> row_security;     // argmin_i max_j u_ij
  std::vector<std::size_t> column_security;  // argmax_j min_i u_ij
  std::vector<std::size_t> security_set;     // row_security; equals column_security for this game
  std::vector<StrategyPair> nash_pairs;      // lexicographic
  std::optional<Rational> nash_value;

  std::optional<StrategyPair> canonical_pair() const {
    if (nash_pairs.empty()) return std::nullopt;
    return nash_pairs.front();
  }
};

inline GameReport game_values(const RationalMatrix& u) {
  GameReport r;
  const std::size_t rows = u.rows(), cols = u.cols();
  if (rows == 0 || cols == 0) throw InputError("empty outcome matrix");
  std::vector<Rational> row_max(rows), col_min(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    row_max[i] = u(i, 0);
    for (std::size_t j = 1; j < cols; ++j) row_max[i] = std::max(row_max[i], u(i, j));
  }
  for (std::size_t j = 0; j < cols; ++j) {
    col_min[j] = u(0, j);
    for (std::size_t i = 1; i < rows; ++i) col_min[j] = std::min(col_min[j], u(i, j));
  }
  r.upper = *std::min_element(row_max.begin(), row_max.end());
  r.lower = *std::max_element(col_min.begin(), col_min.end());
  for (std::size_t i = 0; i < rows; ++i)
    if (row_max[i] == r.upper) r.row_security.push_back(i);
  for (std::size_t j = 0; j < cols; ++j)
    if (col_min[j] == r.lower) r.column_security.push_back(j);
  r.security_set = r.row_security;
  return r;
}

inline GameReport game_values(const OutcomeMatrix& m) { return game_values(m.u); }

// Pure saddle points u_{i*j} <= u_{i*j*} <= u_{ij*}, by direct scan.
inline std::vector<StrategyPair> saddle_points(const RationalMatrix& u) {
  std::vector<StrategyPair> out;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Rational& v = u(i, j);
      bool saddle = true;
      for (std::size_t c = 0; c < u.cols() && saddle; ++c) saddle = u(i, c) <= v;
      for (std::size_t r = 0; r < u.rows() && saddle; ++r) saddle = v <= u(r, j);
      if (saddle) out.emplace_back(i, j);
    }
  return out;
}

inline GameReport nash_equilibria(const RationalMatrix& u) {
  GameReport r = game_values(u);
  if (r.upper == r.lower) {
    for (std::size_t i : r.row_security)
      for (std::size_t j : r.column_security) r.nash_pairs.emplace_back(i, j);
    r.nash_value = r.upper;
  } else {
    // No pure equilibrium can exist; the scan double-checks that.
    r.nash_pairs = saddle_points(u);
    if (!r.nash_pairs.empty()) r.nash_value = u(r.nash_pairs.front().first, r.nash_pairs.front().second);
  }
  return r;
}

inline GameReport nash_equilibria(const OutcomeMatrix& m) { return nash_equilibria(m.u); }

// Leader-link pairs (s_i*, s_j*) whose induced interaction graph is optimal.
inline std::vector<std::pair<Strategy, Strategy>> optimal_topologies(const Graph& g, int k,
                                                                    std::size_t cap = kDefaultStrategyCap) {
  const OutcomeMatrix m = outcome_matrix(g, k, cap);
  std::vector<std::pair<Strategy, Strategy>> out;
  for (auto [i, j] : nash_equilibria(m).nash_pairs) out.emplace_back(m.strategies[i], m.strategies[j]);
  return out;
}

// ---- single-link game (k = 1) ----

namespace detail {

inline IntegerMatrix laplacian_plus_unit(const Graph& g, int i) {
  IntegerMatrix m = laplacian(g);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) += 1;
  return m;
}

inline void require_distinct_vertices(const Graph& g, int i, int j) {
  g.check_vertex(i);
  g.check_vertex(j);
  if (i == j) throw InputError("vertices must be distinct");
}

}  // namespace detail

// 1^T (L + diag e_i)^-1 e_j; the inverse is entrywise nonnegative so this is its 1-norm.
inline Rational grounded_column_norm(const Graph& g, int i, int j) {
  IntegerVector unit(static_cast<std::size_t>(g.order()), 0);
  unit[static_cast<std::size_t>(j - 1)] = 1;
  Rational sum = 0;
  for (const auto& x : solve_rational(detail::laplacian_plus_unit(g, i), unit)) sum += x;
  return sum;
}

// Vertices i with ||(L+diag e_i)^-1 e_k||_1 <= ||(L+diag e_k)^-1 e_i||_1 for all k.
inline std::vector<int> se_set(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  Matrix<Rational> norm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) norm(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = grounded_column_norm(g, i, j);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    bool member = true;
    for (int k = 1; k <= n && member; ++k)
      member = norm(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) <=
               norm(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(i - 1));
    if (member) out.push_back(i);
  }
  return out;
}

// 1^T adj(L + diag e_i) e_j, a nonnegative integer.
inline Integer adjugate_column_sum(const Graph& g, int i, int j) {
  Integer sum = 0;
  for (const auto& x : adjugate_column(detail::laplacian_plus_unit(g, i), static_cast<std::size_t>(j - 1))) sum += x;
  return sum;
}

// Sign of u_ij - 1/2 for the single-link game, decided on integers only:
// det(L + diag e_i) = det(L + diag e_j) = tau(G), so the two grounded 1-norms
// compare like the adjugate column sums.
inline std::strong_ordering compare_half(const Graph& g, int i, int j) {
  detail::require_distinct_vertices(g, i, j);
  require_connected(g);
  return three_way(adjugate_column_sum(g, i, j), adjugate_column_sum(g, j, i));
}

// det of L with row and column i deleted and row j replaced by ones.
// Satisfies 1^T adj(L + diag e_i) e_j = n * tau(G) + m_ij.
inline Integer m_ij(const Graph& g, int i, int j) {
  detail::require_distinct_vertices(g, i, j);
  require_connected(g);
  const auto di = static_cast<std::size_t>(i - 1);
  IntegerMatrix reduced = minor_matrix(laplacian(g), di, di);
  const std::size_t row = static_cast<std::size_t>(j - 1) - (j > i ? 1 : 0);
  for (std::size_t c = 0; c < reduced.cols(); ++c) reduced(row, c) = 1;
  return determinant(reduced);
}

// How N_i \ {j} relates to N_j \ {i}.
enum class Dominance { StrictSubset, Equal, StrictSuperset, Incomparable };

inline std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictSubset: return "strict-subset";
    case Dominance::Equal: return "equal";
    case Dominance::StrictSuperset: return "strict-superset";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

// StrictSuperset => u_ij < 1/2, Equal => u_ij = 1/2, StrictSubset => u_ij > 1/2.
inline Dominance neighborhood_dominance(const Graph& g, int i, int j) {
  detail::require_distinct_vertices(g, i, j);
  bool i_extra = false, j_extra = false;
  for (int v = 1; v <= g.order(); ++v) {
    if (v == i || v == j) continue;
    const bool in_i = g.adjacent(i, v), in_j = g.adjacent(j, v);
    i_extra |= in_i && !in_j;
    j_extra |= in_j && !in_i;
  }
  if (i_extra && j_extra) return Dominance::Incomparable;
  if (i_extra) return Dominance::StrictSuperset;
  if (j_extra) return Dominance::StrictSubset;
  return Dominance::Equal;
}

struct Shortcut {
  enum class Kind { AllPairs, CenterPair };
  Kind kind;
  int center = 0;  // CenterPair only
};

// Structural answer for the single-link game without building U:
// circulant => U = (1/2) 11^T and every pair is optimal;
// center node c => (e_c, e_c) is a Nash pair.
inline std::optional<Shortcut> shortcut_optimal(const Graph& g) {
  if (is_circulant_labeled(g)) return Shortcut{Shortcut::Kind::AllPairs};
  const auto centers = center_vertices(g);
  if (!centers.empty()) return Shortcut{Shortcut::Kind::CenterPair, centers.front()};
  return std::nullopt;
}

}  // namespace topogame
