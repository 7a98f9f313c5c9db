#pragma once

#include "topogame/error.hpp"
#include "topogame/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace topogame {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 1..n. Immutable after construction.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw InputError("vertex count must be at least 1");
    adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw InputError("endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!adjacent(u, v)) {
        edges_.emplace_back(u, v);
        at(u, v) = at(v, u) = 1;
      }
    }
    std::sort(edges_.begin(), edges_.end());
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int i, int j) const { return adjacency_[index(i, j)] != 0; }

  int degree(int i) const {
    check_vertex(i);
    int d = 0;
    for (int j = 1; j <= n_; ++j) d += adjacent(i, j);
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int i = 1; i <= n_; ++i) d = std::max(d, degree(i));
    return d;
  }

  // Ascending.
  std::vector<int> neighbors(int i) const {
    check_vertex(i);
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  void check_vertex(int i) const {
    if (i < 1 || i > n_) throw InputError("vertex out of range: " + std::to_string(i));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }
  char& at(int i, int j) { return adjacency_[index(i, j)]; }

  int n_;
  std::vector<Edge> edges_;
  std::vector<char> adjacency_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

enum class GraphKind { Path, Cycle, Star, Complete, Circulant };

// Vertex i is joined to (i + o - 1 mod n) + 1 for every offset o.
inline Graph circulant_graph(int n, std::span<const int> offsets) {
  if (n < 1) throw InputError("vertex count must be at least 1");
  if (offsets.empty()) throw InputError("circulant graph needs at least one offset");
  std::vector<Edge> edges;
  for (int o : offsets) {
    if (o < 1 || o > n / 2) throw InputError("invalid circulant offset " + std::to_string(o));
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, (i + o - 1) % n + 1);
  }
  return Graph(n, edges);
}

inline Graph generate(GraphKind kind, int n, std::span<const int> offsets = {}) {
  if (n < 1) throw InputError("vertex count must be at least 1");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Path:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::Cycle: {
      const int one[] = {1};
      return circulant_graph(n, one);
    }
    case GraphKind::Star:
      // center is vertex 1
      for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
      break;
    case GraphKind::Complete:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      break;
    case GraphKind::Circulant:
      return circulant_graph(n, offsets);
  }
  return Graph(n, edges);
}

// L = D - A.
inline IntegerMatrix laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntegerMatrix lap(n, n);
  for (auto [u, v] : g.edges()) {
    const auto a = static_cast<std::size_t>(u - 1), b = static_cast<std::size_t>(v - 1);
    lap(a, b) -= 1;
    lap(b, a) -= 1;
    lap(a, a) += 1;
    lap(b, b) += 1;
  }
  return lap;
}

inline std::vector<int> neighbors(const Graph& g, int i) { return g.neighbors(i); }

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w = 1; w <= n; ++w) {
      if (!seen[w] && g.adjacent(v, w)) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph not connected");
}

// Vertices adjacent to every other vertex, ascending.
inline std::vector<int> center_vertices(const Graph& g) {
  std::vector<int> out;
  for (int i = 1; i <= g.order(); ++i)
    if (g.degree(i) == g.order() - 1) out.push_back(i);
  return out;
}

// Circulant under the given labeling only: A[i][j] depends on (j - i) mod n.
inline bool is_circulant_labeled(const Graph& g) {
  const int n = g.order();
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int shifted = (j - 2 + n) % n + 1;  // j - 1, cyclically
      if (g.adjacent(i, j) != g.adjacent(i - 1, shifted)) return false;
    }
  return true;
}

}  // namespace topogame
