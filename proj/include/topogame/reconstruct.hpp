#pragma once

// Brute-force recovery of a follower graph from a (rounded) single-link
// outcome matrix, over graphs in which vertex 1 is a center node.

#include "topogame/game.hpp"
#include "topogame/graph.hpp"
#include "topogame/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace topogame {

// Graphs on n vertices with vertex 1 joined to all others and any subset of the
// remaining C(n-1, 2) "rim" edges, whose k=1 outcome matrix is within `tol`
// of `target` entrywise. Subsets are visited in increasing bitmask order.
inline std::vector<Graph> reconstruct_center_graphs(const RationalMatrix& target, const Rational& tol) {
  if (!target.square() || target.rows() < 2) throw InputError("target must be a square matrix of order >= 2");
  const int n = static_cast<int>(target.rows());
  std::vector<Edge> rim;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) rim.emplace_back(i, j);
  if (rim.size() > 24) throw InputError("too many rim edges to enumerate");

  const auto strategies = enumerate_strategies(n, 1);
  std::vector<Graph> matches;
  for (std::uint32_t mask = 0; mask < (1u << rim.size()); ++mask) {
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    for (std::size_t t = 0; t < rim.size(); ++t)
      if (mask >> t & 1u) edges.push_back(rim[t]);
    const Graph g(n, edges);
    bool ok = true;
    for (std::size_t i = 0; i < target.rows() && ok; ++i)
      for (std::size_t j = 0; j < target.cols() && ok; ++j) {
        Rational diff = outcome_entry(g, strategies[i], strategies[j]) - target(i, j);
        if (diff < 0) diff = -diff;
        ok = diff <= tol;
      }
    if (ok) matches.push_back(g);
  }
  return matches;
}

}  // namespace topogame
