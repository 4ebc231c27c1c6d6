#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwmaze/graph.hpp"
#include "qwmaze/ladder.hpp"
#include "qwmaze/spectral.hpp"
#include "qwmaze/walk.hpp"

using nlohmann::ordered_json;
using namespace qwmaze;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotConverged = 3;

struct Config {
  std::string input_file;
  std::string ladder_spec;
  std::string tree_spec;
  std::string method = "both";
  std::string sink = "start";
  std::string format = "json";
  double tol = 1e-10;
  int max_steps = 0;
  double threshold = 0.5;
  uint64_t seed = 0;
  bool inject_chebyshev_sign_error = false;
};

struct LoadedInput {
  SymmetricDigraph graph;
  int start = -1;
  int goal = -1;
  std::optional<GridMaze> maze;
};

std::vector<int> parse_int_list(const std::string& text, size_t expected, const char* what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected integers, got '" + token + "'");
    }
  }
  if (values.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " comma-separated integers");
  return values;
}

LoadedInput load_input(const Config& cfg) {
  int sources = (!cfg.input_file.empty()) + (!cfg.ladder_spec.empty()) + (!cfg.tree_spec.empty());
  if (sources != 1)
    throw std::invalid_argument("exactly one of --input, --ladder, --tree is required");

  LoadedInput input;
  if (!cfg.ladder_spec.empty()) {
    std::vector<int> mlk = parse_int_list(cfg.ladder_spec, 3, "--ladder");
    LadderGraph ladder = make_ladder(mlk[0], mlk[1], mlk[2]);
    input.graph = ladder.graph;
    input.start = ladder.start;
    input.goal = ladder.goal;
    return input;
  }
  if (!cfg.tree_spec.empty()) {
    std::vector<int> ns = parse_int_list(cfg.tree_spec, 2, "--tree");
    input.graph = make_random_tree(ns[0], static_cast<uint64_t>(ns[1]));
    input.start = 0;
    input.goal = ns[0] - 1;
    return input;
  }

  std::ifstream file(cfg.input_file);
  if (!file) throw std::invalid_argument("cannot open input file: " + cfg.input_file);
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::string text = buffer.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    GraphWithEndpoints parsed = parse_edge_list_json(text);
    input.graph = parsed.graph;
    input.start = parsed.start;
    input.goal = parsed.goal;
  } else {
    GridMaze maze = parse_grid_maze(text);
    input.graph = maze.graph;
    input.start = maze.start;
    input.goal = maze.goal;
    input.maze = std::move(maze);
  }
  return input;
}

ordered_json obstructions_json(const std::vector<Obstruction>& obstructions) {
  ordered_json list = ordered_json::array();
  for (const Obstruction& o : obstructions) {
    ordered_json entry;
    entry["eigenvalue"] = {o.eigenvalue.real(), o.eigenvalue.imag()};
    entry["overlap"] = o.overlap;
    list.push_back(entry);
  }
  return list;
}

std::string render_text_report(const ordered_json& report) {
  std::ostringstream out;
  out << "method: " << report["method"].get<std::string>() << "\n";
  out << "sink: " << report["diagnostics"]["sink"].get<std::string>() << "\n";
  out << "survival: " << report["survival"].dump() << "\n";
  out << "path:";
  for (const auto& v : report["path"]) out << " " << v.get<int>();
  out << "\n";
  if (!report["diagnostics"]["bipartite"].get<bool>())
    out << "warning: underlying graph is not bipartite\n";
  out << "vertex  limit_probability\n";
  const auto& mu = report["limit_probability"];
  for (size_t v = 0; v < mu.size(); ++v)
    out << v << "  " << mu[v].dump() << "\n";
  return out.str();
}

std::string render_pgm(const GridMaze& maze, const std::vector<double>& mu) {
  double max_value = 0.0;
  for (double value : mu) max_value = std::max(max_value, value);
  std::ostringstream out;
  out << "P2\n" << maze.width << " " << maze.height << "\n255\n";
  for (int r = 0; r < maze.height; ++r) {
    for (int c = 0; c < maze.width; ++c) {
      int cell = r * maze.width + c;
      int vertex = maze.cell_vertex[static_cast<size_t>(cell)];
      int shade = 0;
      if (vertex >= 0 && max_value > 0.0)
        shade = static_cast<int>(std::lround(255.0 * mu[static_cast<size_t>(vertex)] / max_value));
      out << shade << (c + 1 < maze.width ? " " : "");
    }
    out << "\n";
  }
  return out.str();
}

int run_solve(const Config& cfg) {
  LoadedInput input = load_input(cfg);
  SinkPlacement placement =
      cfg.sink == "goal" ? SinkPlacement::AtGoal : SinkPlacement::AtStart;
  DecoratedGraph g = decorate(input.graph, input.start, input.goal, placement);

  bool run_spectral = cfg.method != "power";
  bool run_power = cfg.method != "spectral";

  std::optional<NavigationVector> nav;
  std::vector<double> spectral_mu;
  if (run_spectral) {
    nav = navigation_vector(g);
    spectral_mu = limit_distribution(g);
  }

  std::optional<ConvergenceResult> power;
  std::vector<double> power_mu;
  if (run_power) {
    power = converge_power(g, cfg.tol, cfg.max_steps);
    power_mu = finding_distribution(g, power->limit);
  }

  const std::vector<double>& mu = run_spectral ? spectral_mu : power_mu;
  double survival = run_spectral ? nav->start_amplitude * nav->start_amplitude
                                 : power->limit.squaredNorm();

  PathExtraction extraction;
  bool have_path = false;
  try {
    extraction = extract_path(g, run_spectral ? nav->vector : power->limit, cfg.threshold);
    have_path = extraction.reached_goal;
  } catch (const std::invalid_argument&) {
    have_path = false;
  }

  std::optional<double> cross_dev;
  if (run_spectral && run_power) {
    double dev = 0.0;
    for (size_t v = 0; v < spectral_mu.size(); ++v)
      dev = std::max(dev, std::abs(spectral_mu[v] - power_mu[v]));
    cross_dev = dev;
  }

  bool failed_to_converge = run_power && !power->converged;

  // Obstruction diagnostics are what explain a stuck iteration; with the
  // sink at the start the eigenvalue classification rules them out, so skip the
  // eigendecomposition unless it can say something.
  std::optional<SpectralReport> spectrum;
  if (placement == SinkPlacement::AtGoal || failed_to_converge)
    spectrum = unimodular_obstruction(g);

  ordered_json report;
  report["method"] = cfg.method;
  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < input.graph.vertex_count(); ++v) vertices.push_back(v);
  report["vertices"] = vertices;
  ordered_json mu_json = ordered_json::array();
  for (int v = 0; v < input.graph.vertex_count(); ++v) mu_json.push_back(mu[static_cast<size_t>(v)]);
  report["limit_probability"] = mu_json;
  report["path"] = have_path ? ordered_json(extraction.vertices) : ordered_json::array();
  report["survival"] = survival;

  ordered_json diagnostics;
  diagnostics["sink"] = cfg.sink;
  diagnostics["start"] = input.start;
  diagnostics["goal"] = input.goal;
  bool bipartite = is_bipartite(input.graph);
  diagnostics["bipartite"] = bipartite;
  diagnostics["nonbipartite_warning"] = !bipartite;
  diagnostics["betti"] = betti_number(input.graph);
  if (spectrum)
    diagnostics["minus_one_dim"] = spectrum->minus_one_dim;
  else if (run_spectral)
    diagnostics["minus_one_dim"] = static_cast<int>(minus_one_eigenspace(g).size());
  else
    diagnostics["minus_one_dim"] = nullptr;
  diagnostics["converged"] = run_power ? ordered_json(power->converged) : ordered_json(nullptr);
  diagnostics["steps"] = run_power ? ordered_json(power->steps) : ordered_json(nullptr);
  diagnostics["cross_method_max_deviation"] =
      cross_dev ? ordered_json(*cross_dev) : ordered_json(nullptr);
  diagnostics["obstructions"] =
      spectrum ? obstructions_json(spectrum->obstructions) : ordered_json::array();
  report["diagnostics"] = diagnostics;

  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (cfg.format == "text") {
    std::cout << render_text_report(report);
  } else {
    if (!input.maze)
      throw std::invalid_argument("--format pgm requires a grid-maze input");
    std::vector<double> base_mu(mu.begin(), mu.begin() + input.graph.vertex_count());
    std::cout << render_pgm(*input.maze, base_mu);
  }
  return failed_to_converge ? kExitNotConverged : kExitOk;
}

int run_spectrum(const Config& cfg) {
  LoadedInput input = load_input(cfg);
  SinkPlacement placement =
      cfg.sink == "goal" ? SinkPlacement::AtGoal : SinkPlacement::AtStart;
  DecoratedGraph g = decorate(input.graph, input.start, input.goal, placement);
  SpectralReport spectrum = unimodular_obstruction(g);

  ordered_json report;
  report["minus_one_dim"] = spectrum.minus_one_dim;
  report["betti"] = betti_number(input.graph);
  report["bipartite"] = is_bipartite(input.graph);
  report["sink"] = cfg.sink;
  report["obstructions"] = obstructions_json(spectrum.obstructions);
  if (cfg.format == "text") {
    std::cout << "dim V(-1): " << spectrum.minus_one_dim << "\n"
              << "betti: " << report["betti"].get<int>() << "\n"
              << "obstructions: " << spectrum.obstructions.size() << "\n";
    for (const Obstruction& o : spectrum.obstructions)
      std::cout << "  eigenvalue " << o.eigenvalue.real() << (o.eigenvalue.imag() < 0 ? " - " : " + ")
                << std::abs(o.eigenvalue.imag()) << "i, overlap " << o.overlap << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: generated corpora + the invariant suite

struct VerifyRun {
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "[ ok ] " << name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
};

std::vector<double> reference_chebyshev(double x, int count, bool inject_sign_error) {
  // verify re-derives u_n on its own; the inject flag flips the recurrence
  // sign so the harness can prove it detects a broken Chebyshev path
  std::vector<double> u(static_cast<size_t>(count));
  u[0] = 1.0;
  if (count > 1) u[1] = 2.0 * x;
  for (int n = 2; n < count; ++n)
    u[static_cast<size_t>(n)] = 2.0 * x * u[static_cast<size_t>(n) - 1] +
                                (inject_sign_error ? 1.0 : -1.0) * u[static_cast<size_t>(n) - 2];
  return u;
}

int run_verify(const Config& cfg) {
  VerifyRun run;
  std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + 1);
  std::normal_distribution<double> normal(0.0, 1.0);

  struct Case {
    std::string name;
    SymmetricDigraph graph;
    int start;
    int goal;
  };
  std::vector<Case> corpus;
  for (int i = 0; i < 5; ++i) {
    int n = 5 + 6 * i;
    SymmetricDigraph tree = make_random_tree(n, cfg.seed * 101 + static_cast<uint64_t>(i));
    corpus.push_back({"tree_" + std::to_string(n), tree, 0, n - 1});
  }
  std::vector<LadderGraph> ladders;
  for (int m = 1; m <= 3; ++m)
    for (int l = 1; l <= 3; ++l)
      for (int k = 0; k <= 3; ++k) {
        LadderGraph ladder = make_ladder(m, l, k);
        corpus.push_back({"ladder_" + std::to_string(m) + "_" + std::to_string(l) + "_" +
                              std::to_string(k),
                          ladder.graph, ladder.start, ladder.goal});
        ladders.push_back(std::move(ladder));
      }
  GridMaze maze = parse_grid_maze("S..#.\n.#.#.\n.#...\n.##.#\n....G");
  corpus.push_back({"maze_5x5", maze.graph, maze.start, maze.goal});
  corpus.push_back({"p3", parse_grid_maze("S.G").graph, 0, 2});

  // 1. structural invariants
  bool structure_ok = true;
  for (const Case& c : corpus) {
    for (int a = 0; a < c.graph.arc_count(); ++a) {
      structure_ok &= c.graph.inverse(c.graph.inverse(a)) == a;
      structure_ok &= c.graph.origin(c.graph.inverse(a)) == c.graph.terminal(a);
      structure_ok &= c.graph.origin(a) != c.graph.terminal(a);
    }
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    for (int v = 0; v < c.graph.vertex_count(); ++v) {
      int expected = c.graph.degree(v) + (v == c.start ? 2 : 0) + (v == c.goal ? 1 : 0);
      structure_ok &= g.degree(v) == expected;
    }
    structure_ok &= g.degree(g.sink_vertex()) == 1;
  }
  run.check("graph structural invariants", structure_ok);

  // 2. unitarity + dense/sparse agreement
  double worst_unitarity = 0.0;
  double worst_dense = 0.0;
  for (const Case& c : corpus) {
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    Eigen::MatrixXcd u = dense_unitary(g).cast<std::complex<double>>();
    for (int trial = 0; trial < 10; ++trial) {
      ArcVector xi(g.arc_count());
      for (int a = 0; a < g.arc_count(); ++a) xi(a) = {normal(rng), normal(rng)};
      ArcVector stepped = grover_step(g, xi);
      worst_unitarity = std::max(worst_unitarity, std::abs(stepped.norm() / xi.norm() - 1.0));
      worst_dense = std::max(worst_dense, (stepped - u * xi).norm() / xi.norm());
    }
  }
  run.check("unitarity |U xi| = |xi|", worst_unitarity < 1e-12,
            "worst relative error " + std::to_string(worst_unitarity));
  run.check("sparse step equals dense matrix", worst_dense < 1e-13);

  // 3. eigenspace dimension law on bipartite corpora
  bool dimension_ok = true;
  for (const Case& c : corpus) {
    if (!is_bipartite(c.graph)) continue;
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    dimension_ok &=
        static_cast<int>(minus_one_eigenspace(g).size()) == betti_number(c.graph) + 1;
  }
  run.check("dim V(-1) = Betti + 1", dimension_ok);

  // 4a. the stride-2 detector itself, on graphs with a healthy spectral gap
  {
    bool detector_ok = true;
    std::vector<Case> fast = {{"p3", parse_grid_maze("S.G").graph, 0, 2}};
    std::vector<std::pair<int, int>> hex_edges;
    for (int i = 0; i < 6; ++i) hex_edges.emplace_back(i, (i + 1) % 6);
    fast.push_back({"hexagon", SymmetricDigraph::from_edges(6, hex_edges), 0, 3});
    for (const Case& c : fast) {
      DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
      ConvergenceResult dynamic = converge_power(g, 1e-10);
      detector_ok &= dynamic.converged;
      if (!dynamic.converged) continue;
      std::vector<double> spectral_mu = limit_distribution(g);
      std::vector<double> dynamic_mu = finding_distribution(g, dynamic.limit);
      for (size_t v = 0; v < spectral_mu.size(); ++v)
        detector_ok &= std::abs(spectral_mu[v] - dynamic_mu[v]) < 1e-8;
    }
    run.check("converge_power reaches the limit on fast graphs", detector_ok);
  }

  // 4b. limit formula against straight iteration. The slowest PU eigenvalue
  // can sit anywhere from 1e-2 to 1e-8 inside the unit circle depending on
  // the detour structure, so each graph gets a budget sized from its own
  // gap; graphs whose relaxation does not fit the budget are skipped and
  // counted.
  double worst_limit = 0.0;
  int limit_checked = 0;
  int limit_skipped = 0;
  for (const Case& c : corpus) {
    if (c.graph.arc_count() > 60) {
      ++limit_skipped;
      continue;
    }
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    Eigen::MatrixXd pu = dense_unitary(g);
    pu.row(g.sink_arc()).setZero();
    pu.row(g.sink_arc_reverse()).setZero();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(pu);
    double sub_radius = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
      double magnitude = std::abs(solver.eigenvalues()(i));
      if (magnitude < 1.0 - 1e-9) sub_radius = std::max(sub_radius, magnitude);
    }
    double relaxation = sub_radius <= 0.0 ? 0.0 : std::log(1e10) / -std::log(sub_radius);
    if (sub_radius >= 1.0 || relaxation > 1500000.0) {
      ++limit_skipped;
      continue;
    }
    int needed = static_cast<int>(relaxation) + 100;
    ArcVector state = iterate(g, initial_state(g), needed);
    std::vector<double> spectral_mu = limit_distribution(g);
    std::vector<double> dynamic_mu = finding_distribution(g, state);
    for (size_t v = 0; v < spectral_mu.size(); ++v)
      worst_limit = std::max(worst_limit, std::abs(spectral_mu[v] - dynamic_mu[v]));
    ++limit_checked;
  }
  run.check("limit distribution matches power iteration",
            limit_checked > 0 && worst_limit < 1e-8,
            std::to_string(limit_checked) + " graphs in budget, " +
                std::to_string(limit_skipped) + " beyond it");

  // 5. tree localization on the shortest route
  bool tree_ok = true;
  for (const Case& c : corpus) {
    if (betti_number(c.graph) != 0) continue;
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    std::vector<double> mu = limit_distribution(g);
    std::vector<char> on_route(static_cast<size_t>(c.graph.vertex_count()), 0);
    on_route[static_cast<size_t>(c.start)] = 1;
    for (int a : bfs_shortest_path(c.graph, c.start, c.goal))
      on_route[static_cast<size_t>(c.graph.terminal(a))] = 1;
    for (int v = 0; v < c.graph.vertex_count(); ++v) {
      if (on_route[static_cast<size_t>(v)])
        tree_ok &= mu[static_cast<size_t>(v)] > 0;
      else
        tree_ok &= std::abs(mu[static_cast<size_t>(v)]) < 1e-12;
    }
  }
  run.check("tree limit localizes on the shortest route", tree_ok);

  // 6. ladder closed form vs spectral + Chebyshev reference
  double worst_closed = 0.0;
  double worst_residual = 0.0;
  bool monotone_ok = true;
  bool inequality_ok = true;
  for (const LadderGraph& ladder : ladders) {
    LadderParams params{ladder.m, ladder.l, ladder.k};
    DecoratedGraph g = decorate(ladder.graph, ladder.start, ladder.goal, SinkPlacement::AtStart);
    Eigen::VectorXd closed = closed_form_navigation(ladder, g);
    NavigationVector nav = navigation_vector(g);
    for (int a = 0; a < g.arc_count(); ++a)
      worst_closed = std::max(worst_closed, std::abs(std::abs(closed(a)) - std::abs(nav.vector(a))));

    std::vector<double> u =
        reference_chebyshev(1.0 / (2.0 * kappa(ladder.m, ladder.l)), ladder.k + 2,
                            cfg.inject_chebyshev_sign_error);
    double sum = 0.0;
    for (int n = 0; n <= ladder.k; ++n)
      sum += 1.0 / (u[static_cast<size_t>(n)] * u[static_cast<size_t>(n) + 1]);
    double reference_residual = 1.0 - ladder.m / (ladder.m + 3.0) * sum;
    worst_residual =
        std::max(worst_residual, std::abs(reference_residual - residual_norm_sq(params)));

    auto [rungs, rails] = check_monotone(params);
    monotone_ok &= rungs && rails;
    inequality_ok &= chebyshev_gap_inequalities(params, params.k);
  }
  run.check("ladder closed form matches spectral", worst_closed < 1e-9);
  run.check("ladder residual matches Chebyshev reference", worst_residual < 1e-12,
            "worst deviation " + std::to_string(worst_residual));
  run.check("ladder amplitudes strictly decrease", monotone_ok);
  run.check("Chebyshev growth inequalities", inequality_ok);

  // 7. obstruction behavior
  std::vector<std::pair<int, int>> nine_edges = {{0, 1}};
  for (int i = 1; i < 9; ++i) nine_edges.emplace_back(i, i + 1);
  nine_edges.emplace_back(9, 1);
  nine_edges.emplace_back(1, 10);
  nine_edges.emplace_back(10, 11);
  SymmetricDigraph nine = SymmetricDigraph::from_edges(12, nine_edges);
  bool clean_ok = unimodular_obstruction(
                      decorate(nine, 0, 11, SinkPlacement::AtStart)).obstructions.empty();
  for (const Case& c : corpus) {
    if (c.graph.vertex_count() > 40) continue;
    DecoratedGraph g = decorate(c.graph, c.start, c.goal, SinkPlacement::AtStart);
    clean_ok &= unimodular_obstruction(g).obstructions.empty();
  }
  run.check("sink at start produces no obstructions", clean_ok);
  SpectralReport oscillating =
      unimodular_obstruction(decorate(nine, 0, 11, SinkPlacement::AtGoal));
  run.check("sink at goal with a 9-cycle is obstructed", !oscillating.obstructions.empty());
  run.check("obstructed iteration does not converge",
            !converge_power(decorate(nine, 0, 11, SinkPlacement::AtGoal), 1e-10).converged);

  std::cout << (run.failures == 0 ? "verify: all checks passed\n"
                                  : "verify: " + std::to_string(run.failures) + " check(s) failed\n");
  return run.failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maze solving with a sink-truncated Grover walk"};
  app.require_subcommand(1);
  Config cfg;

  auto add_input_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--input", cfg.input_file, "grid maze or JSON edge-list file");
    cmd->add_option("--ladder", cfg.ladder_spec, "ladder parameters m,l,k");
    cmd->add_option("--tree", cfg.tree_spec, "random tree parameters n,seed");
    cmd->add_option("--sink", cfg.sink, "sink placement")
        ->check(CLI::IsMember({"start", "goal"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "compute the limit distribution and route");
  add_input_options(solve);
  solve->add_option("--method", cfg.method, "power | spectral | both")
      ->check(CLI::IsMember({"power", "spectral", "both"}));
  solve->add_option("--tol", cfg.tol, "power iteration tolerance")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-steps", cfg.max_steps, "power iteration cap (0 = 50|A|)");
  solve->add_option("--threshold", cfg.threshold, "path extraction threshold in (0,1)")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  solve->add_option("--format", cfg.format, "json | text | pgm")
      ->check(CLI::IsMember({"json", "text", "pgm"}));

  CLI::App* spectrum = app.add_subcommand("spectrum", "report dim V(-1) and obstructions");
  add_input_options(spectrum);
  spectrum->add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite on generated corpora");
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_flag("--inject-chebyshev-sign-error", cfg.inject_chebyshev_sign_error,
                   "self-test fixture: corrupt the reference recurrence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve->parsed()) return run_solve(cfg);
    if (spectrum->parsed()) return run_spectrum(cfg);
    return run_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
