#pragma once

#include "topogame/graph.hpp"

#include <random>
#include <vector>

namespace topogame {

// G(n, p) conditioned on connectivity (rejection sampling).
template <typename Rng>
Graph random_connected_graph(Rng& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

// Nonempty random 0/1 indicator of length n.
template <typename Rng>
std::vector<int> random_nonempty_indicator(Rng& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = coin(rng) ? 1 : 0;
  bool any = false;
  for (int x : out) any |= x != 0;
  if (!any) out[static_cast<std::size_t>(pick(rng))] = 1;
  return out;
}

}  // namespace topogame
