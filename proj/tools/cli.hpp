#pragma once

// Command-line front end. `run_cli` takes explicit streams so tests can drive it.

#include "topogame/containment.hpp"
#include "topogame/dynamics.hpp"
#include "topogame/error.hpp"
#include "topogame/exact.hpp"
#include "topogame/game.hpp"
#include "topogame/graph.hpp"
#include "topogame/io.hpp"
#include "topogame/reconstruct.hpp"
#include "topogame/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace topogame::cli {

using Json = nlohmann::ordered_json;

enum ExitStatus { kSuccess = 0, kInternalFailure = 1, kInvalidInput = 2 };

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream ss(text);
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

inline int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("malformed " + what + ": '" + text + "'");
  }
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part, what));
  if (out.empty()) throw InputError("empty " + what);
  return out;
}

// "path:n", "cycle:n", "star:n", "complete:n", "circulant:n:o1,o2", or an edge-list file.
inline Graph load_graph(const std::string& source) {
  const auto parts = split(source, ':');
  if (parts.size() >= 2) {
    const std::string& kind = parts[0];
    if (kind == "path" || kind == "cycle" || kind == "star" || kind == "complete") {
      if (parts.size() != 2) throw InputError("generator '" + kind + "' takes exactly one argument");
      const int n = parse_int(parts[1], "vertex count");
      const GraphKind k = kind == "path"    ? GraphKind::Path
                          : kind == "cycle" ? GraphKind::Cycle
                          : kind == "star"  ? GraphKind::Star
                                            : GraphKind::Complete;
      return generate(k, n);
    }
    if (kind == "circulant") {
      if (parts.size() != 3) throw InputError("circulant generator syntax is circulant:n:o1,o2,...");
      const auto offsets = parse_int_list(parts[2], "circulant offset");
      return generate(GraphKind::Circulant, parse_int(parts[1], "vertex count"), offsets);
    }
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open graph file '" + source + "'");
  return read_edge_list(in);
}

inline Json strategy_json(const Strategy& s) { return Json(s.vertices); }

inline Json strategy_list_json(const std::vector<Strategy>& all, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(strategy_json(all[i]));
  return out;
}

inline Json pair_list_json(const std::vector<Strategy>& all, const std::vector<StrategyPair>& pairs) {
  Json out = Json::array();
  for (auto [i, j] : pairs) out.push_back(Json::array({strategy_json(all[i]), strategy_json(all[j])}));
  return out;
}

inline Json optional_fraction(const std::optional<Rational>& r) {
  return r ? Json(to_fraction_string(*r)) : Json(nullptr);
}

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.order()}, {"edges", edges}};
}

// Rounded values of the published single-link matrix for the 6-vertex graph
// whose vertex 1 is a center node.
inline RationalMatrix example2_target() {
  const char* rows[6][6] = {
      {"0.5", "0.3889", "0.4455", "0.4712", "0.4712", "0.4455"},
      {"0.6111", "0.5", "0.5526", "0.5753", "0.5753", "0.5526"},
      {"0.5545", "0.4474", "0.5", "0.5273", "0.5246", "0.5"},
      {"0.5288", "0.4247", "0.4727", "0.5", "0.5", "0.4754"},
      {"0.5288", "0.4247", "0.4754", "0.5", "0.5", "0.4727"},
      {"0.5545", "0.4474", "0.5", "0.5246", "0.5273", "0.5"},
  };
  RationalMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = parse_rational(rows[i][j]);
  return m;
}

struct Options {
  std::string graph;
  int k = 1;
  std::string y0 = "-1";
  std::string y1 = "1";
  std::string b;
  std::string d;
  std::string x0;
  double dt = 0.0;
  double t_end = 100.0;
  double tol = 1e-9;
  std::size_t stride = 1;
  std::string format;
  int precision = 4;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultStrategyCap;
};

inline Json report_json(const OutcomeMatrix& m, const GameReport& r) {
  Json canonical = nullptr;
  if (auto p = r.canonical_pair()) canonical = Json::array({strategy_json(m.strategies[p->first]), strategy_json(m.strategies[p->second])});
  return Json{{"upper_value", to_fraction_string(r.upper)},
              {"lower_value", to_fraction_string(r.lower)},
              {"security_set", strategy_list_json(m.strategies, r.security_set)},
              {"nash_pairs", pair_list_json(m.strategies, r.nash_pairs)},
              {"nash_value", optional_fraction(r.nash_value)},
              {"canonical_pair", canonical}};
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (o.format == "json") {
    out << graph_json(g).dump() << '\n';
  } else if (o.format.empty()) {
    write_edge_list(out, g);
  } else {
    throw InputError("gen supports --format json (default: edge list)");
  }
  return kSuccess;
}

inline int cmd_outcome(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const OutcomeMatrix m = outcome_matrix(g, o.k, o.cap);
  if (o.format == "csv") {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << to_decimal(m.u(i, j), o.precision);
      out << '\n';
    }
    return kSuccess;
  }
  Json strategies = Json::array(), matrix = Json::array();
  for (const auto& s : m.strategies) strategies.push_back(strategy_json(s));
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_fraction_string(m.u(i, j)));
    matrix.push_back(row);
  }
  out << Json{{"n", g.order()}, {"k", o.k}, {"strategies", strategies}, {"matrix", matrix}}.dump() << '\n';
  return kSuccess;
}

inline int cmd_nash(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  require_connected(g);
  if (o.k == 1) {
    // A circulant graph is solved outright: U = (1/2) 11^T.
    const auto sc = shortcut_optimal(g);
    if (sc && sc->kind == Shortcut::Kind::AllPairs) {
      const auto strategies = enumerate_strategies(g.order(), 1, o.cap);
      std::vector<std::size_t> all;
      std::vector<StrategyPair> pairs;
      for (std::size_t i = 0; i < strategies.size(); ++i) all.push_back(i);
      for (auto i : all)
        for (auto j : all) pairs.emplace_back(i, j);
      const std::string half = to_fraction_string(Rational(1, 2));
      out << Json{{"upper_value", half},
                  {"lower_value", half},
                  {"security_set", strategy_list_json(strategies, all)},
                  {"nash_pairs", pair_list_json(strategies, pairs)},
                  {"nash_value", half},
                  {"canonical_pair", Json::array({strategy_json(strategies[0]), strategy_json(strategies[0])})},
                  {"shortcut_used", true},
                  {"shortcut", "all-pairs"}}
                 .dump()
          << '\n';
      return kSuccess;
    }
  }
  const OutcomeMatrix m = outcome_matrix(g, o.k, o.cap);
  Json report = report_json(m, nash_equilibria(m));
  report["shortcut_used"] = false;
  Json shortcut = nullptr;
  if (o.k == 1)
    if (auto sc = shortcut_optimal(g)) shortcut = "center:" + std::to_string(sc->center);
  report["shortcut"] = shortcut;
  out << report.dump() << '\n';
  return kSuccess;
}

inline int cmd_security(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const OutcomeMatrix m = outcome_matrix(g, o.k, o.cap);
  const GameReport r = game_values(m);
  out << Json{{"upper_value", to_fraction_string(r.upper)},
              {"lower_value", to_fraction_string(r.lower)},
              {"row_security", strategy_list_json(m.strategies, r.row_security)},
              {"column_security", strategy_list_json(m.strategies, r.column_security)},
              {"security_set", strategy_list_json(m.strategies, r.security_set)}}
             .dump()
      << '\n';
  return kSuccess;
}

inline int cmd_se_set(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  out << Json{{"se_set", se_set(g)}}.dump() << '\n';
  return kSuccess;
}

inline int cmd_tau(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  out << Json{{"n", g.order()}, {"edges", g.edges().size()}, {"spanning_trees", spanning_tree_count(g).str()}}.dump() << '\n';
  return kSuccess;
}

inline int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  const int n = g.order();
  if (o.b.empty() || o.d.empty()) throw InputError("simulate needs --b and --d follower lists");
  const auto to_l0 = parse_int_list(o.b, "follower"), to_l1 = parse_int_list(o.d, "follower");
  const LeaderLinks links = LeaderLinks::from_sets(n, to_l0, to_l1);
  const LeaderStates ys(parse_rational(o.y0), parse_rational(o.y1));
  std::vector<double> x0(static_cast<std::size_t>(n), 0.0);
  if (!o.x0.empty()) {
    const auto parts = split(o.x0, ',');
    if (parts.size() != x0.size()) throw InputError("--x0 must list one value per follower");
    for (std::size_t i = 0; i < parts.size(); ++i) x0[i] = to_double(parse_rational(parts[i]));
  }
  SimConfig cfg;
  cfg.dt = o.dt;
  cfg.t_end = o.t_end;
  cfg.convergence_tol = o.tol;
  cfg.record_stride = o.stride;
  const Trajectory traj = simulate(g, links, x0, ys, cfg);
  write_trajectory_csv(out, traj, ys);

  const auto exact = steady_state(g, links, ys);
  double residual = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) residual = std::max(residual, std::abs(traj.terminal()[i] - to_double(exact[i])));
  err << "terminal t=" << format_sig12(traj.times.back()) << " ("
      << (traj.converged() ? "converged" : "horizon") << ") state=";
  for (std::size_t i = 0; i < exact.size(); ++i) err << (i ? "," : "") << format_sig12(traj.terminal()[i]);
  err << " max|x-x_exact|=" << format_sig12(residual) << '\n';
  return kSuccess;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  Json checks = Json::array();
  if (!is_connected(g)) {
    checks.push_back(Json{{"name", "connected"}, {"pass", false}, {"detail", "graph not connected"}});
    out << Json{{"graph", graph_json(g)}, {"checks", checks}, {"all_pass", false}}.dump(2) << '\n';
    return kInvalidInput;
  }
  bool all = true;
  checks.push_back(Json{{"name", "connected"}, {"pass", true}});
  for (const auto& c : verify_graph(g, o.k, o.seed, o.cap)) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["detail"] = c.detail;
    checks.push_back(entry);
    all = all && c.pass;
  }
  out << Json{{"graph", graph_json(g)}, {"k", o.k}, {"seed", o.seed}, {"checks", checks}, {"all_pass", all}}.dump(2) << '\n';
  return all ? kSuccess : kInternalFailure;
}

inline int cmd_reconstruct_example2(const Options& o, std::ostream& out) {
  const RationalMatrix target = example2_target();
  const Rational tol(5, 100000);
  const auto matches = reconstruct_center_graphs(target, tol);
  Json list = Json::array();
  for (const auto& g : matches) {
    const OutcomeMatrix m = outcome_matrix(g, 1);
    const GameReport r = nash_equilibria(m);
    Json matrix = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_decimal(m.u(i, j), o.precision));
      matrix.push_back(row);
    }
    Json entry = graph_json(g);
    entry["matrix"] = matrix;
    entry["report"] = report_json(m, r);
    list.push_back(entry);
  }
  out << Json{{"candidates", 1 << 10}, {"tolerance", to_fraction_string(tol)}, {"matches", list}}.dump() << '\n';
  return kSuccess;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leader topology game: exact outcome matrices, equilibria and containment simulation"};
  app.require_subcommand(1, 1);
  Options o;

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "generator spec (path:n, cycle:n, star:n, complete:n, circulant:n:o1,o2) or edge-list file")->required(); };
  auto game_opts = [&](CLI::App* sub) {
    graph_opt(sub);
    sub->add_option("--k", o.k, "links per leader");
    sub->add_option("--cap", o.cap, "maximum number of strategies C(n,k)");
  };

  auto* gen = app.add_subcommand("gen", "emit a generated or loaded graph");
  graph_opt(gen);
  gen->add_option("--format", o.format, "json (default: edge list)");

  auto* outcome = app.add_subcommand("outcome", "exact outcome matrix");
  game_opts(outcome);
  outcome->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  outcome->add_option("--precision", o.precision, "decimal digits for csv");

  auto* nash = app.add_subcommand("nash", "values, security set and Nash equilibria");
  game_opts(nash);
  auto* security = app.add_subcommand("security", "game values and security strategies");
  game_opts(security);

  auto* se = app.add_subcommand("se-set", "single-link security set by the 1-norm criterion");
  graph_opt(se);
  auto* tau = app.add_subcommand("tau", "spanning tree count");
  graph_opt(tau);

  auto* sim = app.add_subcommand("simulate", "RK4 trajectory as CSV");
  graph_opt(sim);
  sim->add_option("--b", o.b, "followers linked to leader l0, comma separated")->required();
  sim->add_option("--d", o.d, "followers linked to leader l1, comma separated")->required();
  sim->add_option("--y0", o.y0, "state of leader l0");
  sim->add_option("--y1", o.y1, "state of leader l1");
  sim->add_option("--x0", o.x0, "initial follower states, comma separated (default zeros)");
  sim->add_option("--dt", o.dt, "step size (default min(0.01, stability bound))");
  sim->add_option("--t-end", o.t_end, "time horizon");
  sim->add_option("--tol", o.tol, "convergence tolerance");
  sim->add_option("--stride", o.stride, "record every n-th step");

  auto* verify = app.add_subcommand("verify", "run the invariant suite on a graph");
  game_opts(verify);
  verify->add_option("--seed", o.seed, "seed for random leader links");

  auto* example2 = app.add_subcommand("reconstruct-example2", "recover the center-node graph matching the published 6x6 matrix");
  example2->add_option("--precision", o.precision, "decimal digits in the reported matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*outcome) return cmd_outcome(o, out);
    if (*nash) return cmd_nash(o, out);
    if (*security) return cmd_security(o, out);
    if (*se) return cmd_se_set(o, out);
    if (*tau) return cmd_tau(o, out);
    if (*sim) return cmd_simulate(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*example2) return cmd_reconstruct_example2(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kInternalFailure;
}

}  // namespace topogame::cli
