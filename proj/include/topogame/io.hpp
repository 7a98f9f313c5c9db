#pragma once

// Text formats: edge lists, exact and decimal rationals, trajectory CSV.

#include "topogame/dynamics.hpp"
#include "topogame/error.hpp"
#include "topogame/graph.hpp"
#include "topogame/matrix.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace topogame {

// "num/den" in lowest terms.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// Fixed-point decimal with `precision` fractional digits, ties rounded to even.
inline std::string to_decimal(const Rational& r, int precision) {
  if (precision < 0) throw InputError("precision must be nonnegative");
  Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const Integer scaled = num * boost::multiprecision::pow(Integer(10), static_cast<unsigned>(precision));
  Integer q = scaled / den;
  const Integer twice_rem = 2 * (scaled % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;

  std::string digits = q.str();
  if (digits.size() <= static_cast<std::size_t>(precision))
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  if (precision > 0) digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  if (negative && q != 0) digits.insert(0, "-");
  return digits;
}

// Accepts "p/q", integers and plain decimals such as "-1.25".
namespace detail {
// Decimal digits only; cpp_int's own parser would take "0x.." and leading-0 octal.
inline Integer parse_integer(std::string s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw std::runtime_error("malformed integer");
  s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
  const Integer value(s);
  return negative ? Integer(-value) : value;
}
}  // namespace detail

inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Integer den = detail::parse_integer(text.substr(slash + 1));
      if (den == 0) throw InputError("zero denominator in '" + text + "'");
      return Rational(detail::parse_integer(text.substr(0, slash)), den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(detail::parse_integer(text));
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed number '" + text + "'");
    Rational value(detail::parse_integer(whole + frac), boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size())));
    return negative ? Rational(-value) : value;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed number '" + text + "'");
  }
}

// First line "n m", then m lines "u v"; blank lines and '#' comments are skipped.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("edge list is empty");
  auto parse_pair = [](const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string rest;
    if (!(ss >> a >> b) || (ss >> rest)) throw InputError("malformed edge-list line: '" + line + "'");
  };
  long long n = 0, m = 0;
  parse_pair(lines[0], n, m);
  if (n < 1 || m < 0) throw InputError("bad edge-list header: '" + lines[0] + "'");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw InputError("edge list declares " + std::to_string(m) + " edges but has " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t t = 1; t < lines.size(); ++t) {
    long long u = 0, v = 0;
    parse_pair(lines[t], u, v);
    if (u < 1 || v < 1 || u > n || v > n)
      throw InputError("endpoint out of range: '" + lines[t] + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string format_sig12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

// Header "t,x1,...,xn,d0,d1", one row per recorded sample.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const LeaderStates& ys) {
  const auto dist = average_distances(traj, ys);
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  out << ",d0,d1\n";
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    out << format_sig12(traj.times[s]);
    for (double x : traj.states[s]) out << ',' << format_sig12(x);
    out << ',' << format_sig12(dist.d0[s]) << ',' << format_sig12(dist.d1[s]) << '\n';
  }
}

}  // namespace topogame
