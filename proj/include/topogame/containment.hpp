#pragma once

// Steady state of the two-leader containment dynamics
//   dx/dt = -(L + diag(b + d)) x + b*y0 + d*y1.

#include "topogame/error.hpp"
#include "topogame/exact.hpp"
#include "topogame/graph.hpp"
#include "topogame/matrix.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace topogame {

// 0/1 indicators of which followers each leader is linked to.
struct LeaderLinks {
  std::vector<int> b;  // leader l0
  std::vector<int> d;  // leader l1

  LeaderLinks(std::vector<int> b_, std::vector<int> d_) : b(std::move(b_)), d(std::move(d_)) {
    auto binary = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int x) { return x == 0 || x == 1; });
    };
    if (!binary(b) || !binary(d)) throw InputError("leader link indicators must be 0/1");
    if (b.size() != d.size()) throw InputError("leader link vectors differ in length");
  }

  // From 1-based follower sets.
  static LeaderLinks from_sets(int n, std::span<const int> to_l0, std::span<const int> to_l1) {
    return LeaderLinks(indicator(n, to_l0), indicator(n, to_l1));
  }

  static LeaderLinks single(int n, int i, int j) {
    const int a[] = {i}, c[] = {j};
    return from_sets(n, a, c);
  }

  static std::vector<int> indicator(int n, std::span<const int> vertices) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int v : vertices) {
      if (v < 1 || v > n) throw InputError("leader link to vertex out of range: " + std::to_string(v));
      out[static_cast<std::size_t>(v - 1)] = 1;
    }
    return out;
  }

  std::size_t size() const { return b.size(); }
  bool b_empty() const { return std::none_of(b.begin(), b.end(), [](int x) { return x != 0; }); }
  bool d_empty() const { return std::none_of(d.begin(), d.end(), [](int x) { return x != 0; }); }
};

struct LeaderStates {
  Rational y0;
  Rational y1;

  LeaderStates(Rational y0_, Rational y1_) : y0(std::move(y0_)), y1(std::move(y1_)) {
    if (!(y0 < y1)) throw InputError("leader states must satisfy y0 < y1");
  }

  Rational gap() const { return y1 - y0; }
};

struct ConvexWeights {
  RationalVector alpha;
  RationalVector beta;
};

// L + diag(b + d).
inline IntegerMatrix grounded(const Graph& g, const LeaderLinks& links) {
  if (links.size() != static_cast<std::size_t>(g.order())) throw InputError("leader links do not match graph order");
  IntegerMatrix m = laplacian(g);
  for (std::size_t i = 0; i < links.size(); ++i) m(i, i) += links.b[i] + links.d[i];
  return m;
}

namespace detail {

inline void require_steady_state_inputs(const Graph& g, const LeaderLinks& links) {
  if (links.size() != static_cast<std::size_t>(g.order())) throw InputError("leader links do not match graph order");
  require_connected(g);
  if (links.b_empty() || links.d_empty()) throw InputError("each leader must link to at least one follower");
}

inline IntegerVector to_integers(const std::vector<int>& v) { return IntegerVector(v.begin(), v.end()); }

}  // namespace detail

// alpha = (L + diag(b + d))^-1 b, beta = (L + diag(b + d))^-1 d.
inline ConvexWeights convex_weights(const Graph& g, const LeaderLinks& links) {
  detail::require_steady_state_inputs(g, links);
  const IntegerMatrix m = grounded(g, links);
  return {solve_rational(m, detail::to_integers(links.b)), solve_rational(m, detail::to_integers(links.d))};
}

inline RationalVector steady_state(const Graph& g, const LeaderLinks& links, const LeaderStates& ys) {
  const ConvexWeights w = convex_weights(g, links);
  RationalVector x(w.alpha.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = w.alpha[i] * ys.y0 + w.beta[i] * ys.y1;
  return x;
}

struct Payoffs {
  Rational u0;  // (y1 - y0) * mean(beta), leader l0's average distance
  Rational u1;  // (y1 - y0) * mean(alpha)
};

inline Payoffs payoffs(const Graph& g, const LeaderLinks& links, const LeaderStates& ys) {
  const ConvexWeights w = convex_weights(g, links);
  Rational sum_alpha = 0, sum_beta = 0;
  for (const auto& a : w.alpha) sum_alpha += a;
  for (const auto& b : w.beta) sum_beta += b;
  const Rational n = g.order();
  return {ys.gap() * sum_beta / n, ys.gap() * sum_alpha / n};
}

}  // namespace topogame
