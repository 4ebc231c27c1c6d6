#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "qwmaze/graph.hpp"
#include "qwmaze/ladder.hpp"
#include "qwmaze/spectral.hpp"
#include "qwmaze/walk.hpp"
#include "test_graphs.hpp"

using namespace qwmaze;
using qwmaze::testing::decorated_p3;
using qwmaze::testing::literal_onb_last_vector;
using qwmaze::testing::route_with_nine_cycle;

TEST_CASE("minus_one_eigenspace: dimensions and quality") {
  DecoratedGraph p3 = decorated_p3();
  auto basis = minus_one_eigenspace(p3);
  CHECK(basis.size() == 1);

  SymmetricDigraph hexagon =
      SymmetricDigraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  DecoratedGraph dh = decorate(hexagon, 0, 3, SinkPlacement::AtStart);
  CHECK(minus_one_eigenspace(dh).size() == 2);  // Betti 1 + 1

  LadderGraph ladder = make_ladder(2, 1, 2);
  DecoratedGraph dl = decorate(ladder.graph, ladder.start, ladder.goal, SinkPlacement::AtStart);
  auto ladder_basis = minus_one_eigenspace(dl);
  CHECK(ladder_basis.size() == 4);  // k + 2

  Eigen::MatrixXd u_plus_i = dense_unitary(dl);
  u_plus_i.diagonal().array() += 1.0;
  for (size_t i = 0; i < ladder_basis.size(); ++i) {
    CHECK((u_plus_i * ladder_basis[i]).norm() < 1e-10);
    for (size_t j = 0; j < ladder_basis.size(); ++j) {
      double expected = i == j ? 1.0 : 0.0;
      CHECK(std::abs(ladder_basis[i].dot(ladder_basis[j]) - expected) < 1e-12);
    }
  }
}

TEST_CASE("bipartite dimension law: nullity(U+I) = Betti + 1") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    SymmetricDigraph tree = make_random_tree(6 + static_cast<int>(3 * seed), seed);
    DecoratedGraph g = decorate(tree, 0, tree.vertex_count() - 1, SinkPlacement::AtStart);
    CHECK(static_cast<int>(minus_one_eigenspace(g).size()) == betti_number(tree) + 1);
  }
  for (int n : {4, 6, 8}) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    SymmetricDigraph cycle = SymmetricDigraph::from_edges(n, edges);
    DecoratedGraph g = decorate(cycle, 0, n / 2, SinkPlacement::AtStart);
    CHECK(minus_one_eigenspace(g).size() == 2);
  }
}

TEST_CASE("navigation_vector on the 3-path") {
  DecoratedGraph g = decorated_p3();
  NavigationVector nav = navigation_vector(g);
  CHECK(nav.start_amplitude == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
  CHECK(nav.vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((grover_step(g, nav.vector) + nav.vector).norm() < 1e-10);
  CHECK(std::abs(nav.vector(g.sink_arc())) < 1e-12);
  CHECK(std::abs(nav.vector(g.sink_arc_reverse())) < 1e-12);
  CHECK(nav.vector(g.start_loop()).real() > 0);

  // proportional to the path eigenvector of the unique shortest route
  ArcVector path = path_eigenvector(g, bfs_shortest_path(parse_grid_maze("S.G").graph, 0, 2));
  path /= path.norm();
  CHECK((nav.vector - path).norm() < 1e-10);

  // projection identity: Pi_{V(-1)} zeta = phi(s) phi
  ArcVector zeta = initial_state(g);
  Eigen::MatrixXd basis = minus_one_basis(g);
  Eigen::VectorXd zeta_real = Eigen::VectorXd::Zero(g.arc_count());
  zeta_real(g.start_loop()) = 1.0;
  Eigen::VectorXd projection = basis * (basis.transpose() * zeta_real);
  for (int a = 0; a < g.arc_count(); ++a)
    CHECK(std::abs(projection(a) - nav.start_amplitude * nav.vector(a).real()) < 1e-10);
}

TEST_CASE("navigation_vector support on trees is the shortest route") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    SymmetricDigraph tree = make_random_tree(14, seed);
    int s = static_cast<int>(seed) % 5;
    int t = 13 - static_cast<int>(seed) % 3;
    DecoratedGraph g = decorate(tree, s, t, SinkPlacement::AtStart);
    NavigationVector nav = navigation_vector(g);

    std::vector<int> route = bfs_shortest_path(tree, s, t);
    std::set<int> support;
    for (int a : route) {
      support.insert(a);
      support.insert(tree.inverse(a));
    }
    support.insert(g.start_loop());
    support.insert(g.goal_loop());

    double r = std::abs(nav.vector(g.start_loop()));
    for (int a = 0; a < g.arc_count(); ++a) {
      if (support.count(a))
        CHECK(std::abs(std::abs(nav.vector(a)) - r) < 1e-10);
      else
        CHECK(std::abs(nav.vector(a)) < 1e-10);
    }
  }
}

TEST_CASE("literal ONB construction reproduces the navigation vector") {
  LadderGraph ladder = make_ladder(2, 1, 1);
  DecoratedGraph g = decorate(ladder.graph, ladder.start, ladder.goal, SinkPlacement::AtStart);
  Eigen::VectorXd last = literal_onb_last_vector(g);
  NavigationVector nav = navigation_vector(g);
  double sign = last(g.start_loop()) > 0 ? 1.0 : -1.0;
  for (int a = 0; a < g.arc_count(); ++a)
    CHECK(std::abs(sign * last(a) - nav.vector(a).real()) < 1e-9);
}

TEST_CASE("limit_distribution: 3-path closed numbers and conservation") {
  DecoratedGraph g = decorated_p3();
  std::vector<double> mu = limit_distribution(g);
  for (int v = 0; v < 3; ++v)
    CHECK(mu[static_cast<size_t>(v)] == doctest::Approx(1.0 / 18.0).epsilon(1e-10));

  NavigationVector nav = navigation_vector(g);
  double survival = nav.start_amplitude * nav.start_amplitude;
  CHECK(survival == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  double total = 0.0;
  for (double value : mu) total += value;
  CHECK(total == doctest::Approx(survival).epsilon(1e-12));
}

TEST_CASE("limit_distribution vanishes off the route on trees") {
  SymmetricDigraph tree = make_random_tree(20, 4);
  DecoratedGraph g = decorate(tree, 1, 17, SinkPlacement::AtStart);
  std::vector<double> mu = limit_distribution(g);
  std::set<int> on_route{1, 17};
  for (int a : bfs_shortest_path(tree, 1, 17)) on_route.insert(tree.terminal(a));
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (!on_route.count(v)) CHECK(std::abs(mu[static_cast<size_t>(v)]) < 1e-12);
  }
}

TEST_CASE("spectral limit equals the dynamical limit") {
  LadderGraph ladder = make_ladder(2, 1, 1);
  DecoratedGraph g = decorate(ladder.graph, ladder.start, ladder.goal, SinkPlacement::AtStart);
  ConvergenceResult dynamic = converge_power(g, 1e-10, 60000);
  REQUIRE(dynamic.converged);
  NavigationVector nav = navigation_vector(g);
  ArcVector expected = nav.start_amplitude * nav.vector;
  CHECK((dynamic.limit - expected).norm() < 1e-8);

  std::vector<double> spectral_mu = limit_distribution(g);
  std::vector<double> dynamic_mu = finding_distribution(g, dynamic.limit);
  for (size_t v = 0; v < spectral_mu.size(); ++v)
    CHECK(std::abs(spectral_mu[v] - dynamic_mu[v]) < 1e-8);
}

TEST_CASE("K-component decays monotonically") {
  SymmetricDigraph tree = make_random_tree(10, 9);
  DecoratedGraph g = decorate(tree, 0, 9, SinkPlacement::AtStart);
  NavigationVector nav = navigation_vector(g);
  ArcVector target = nav.start_amplitude * nav.vector;
  ArcVector state = initial_state(g);
  double sign = 1.0;
  double prev = (state - target).norm();
  double final_error = prev;
  for (int n = 1; n <= 200000; ++n) {
    state = project_sink(g, grover_step(g, state));
    sign = -sign;
    double err = (sign * state - target).norm();
    CHECK(err <= prev + 1e-14);
    prev = err;
    final_error = err;
    if (err < 1e-9) break;
  }
  CHECK(final_error < 1e-8);
}

TEST_CASE("extract_path") {
  SymmetricDigraph tree = make_random_tree(16, 2);
  DecoratedGraph g = decorate(tree, 3, 12, SinkPlacement::AtStart);
  NavigationVector nav = navigation_vector(g);
  PathExtraction extraction = extract_path(g, nav.vector, 0.5);
  REQUIRE(extraction.reached_goal);

  std::vector<int> expected_vertices{3};
  for (int a : bfs_shortest_path(tree, 3, 12)) expected_vertices.push_back(tree.terminal(a));
  CHECK(extraction.vertices == expected_vertices);

  // threshold 0 keeps every nonzero arc (exact-zero pattern vector):
  // route both ways plus both loops
  ArcVector exact = path_eigenvector(g, bfs_shortest_path(tree, 3, 12));
  PathExtraction all = extract_path(g, exact, 0.0);
  CHECK(all.arcs.size() == 2 * bfs_shortest_path(tree, 3, 12).size() + 2);

  ArcVector zero = ArcVector::Zero(g.arc_count());
  CHECK_THROWS_AS(extract_path(g, zero, 0.5), std::invalid_argument);
}

TEST_CASE("extract_path on ladders follows the route") {
  LadderGraph ladder = make_ladder(3, 1, 2);
  DecoratedGraph g = decorate(ladder.graph, ladder.start, ladder.goal, SinkPlacement::AtStart);
  NavigationVector nav = navigation_vector(g);

  // route arcs (rung 0 plus the two pendant arcs) dominate every detour arc
  double min_route = 1e9;
  for (int a : ladder.route_arcs) min_route = std::min(min_route, std::abs(nav.vector(a)));
  double max_detour = 0.0;
  for (size_t i = 1; i < ladder.rung_arcs.size(); ++i)
    for (int a : ladder.rung_arcs[i]) max_detour = std::max(max_detour, std::abs(nav.vector(a)));
  for (const auto& rail : ladder.top_rail_arcs)
    for (int a : rail) max_detour = std::max(max_detour, std::abs(nav.vector(a)));
  for (const auto& rail : ladder.bottom_rail_arcs)
    for (int a : rail) max_detour = std::max(max_detour, std::abs(nav.vector(a)));
  CHECK(min_route > max_detour);

  PathExtraction extraction = extract_path(g, nav.vector, 0.5);
  CHECK(extraction.reached_goal);
  std::vector<int> expected{ladder.start};
  for (int a : ladder.route_arcs) expected.push_back(ladder.graph.terminal(a));
  CHECK(extraction.vertices == expected);
}

TEST_CASE("unimodular_obstruction: sink at start is always clean") {
  DecoratedGraph p3 = decorated_p3();
  SpectralReport r1 = unimodular_obstruction(p3);
  CHECK(r1.minus_one_dim == 1);
  CHECK(r1.obstructions.empty());

  // even with an odd cycle present, the start-sink construction is immune
  GraphWithEndpoints nine = route_with_nine_cycle();
  DecoratedGraph at_start = decorate(nine.graph, nine.start, nine.goal, SinkPlacement::AtStart);
  CHECK(unimodular_obstruction(at_start).obstructions.empty());
}

TEST_CASE("unimodular_obstruction: sink at goal on a tree still converges") {
  SymmetricDigraph tree = make_random_tree(12, 6);
  DecoratedGraph g = decorate(tree, 0, 11, SinkPlacement::AtGoal);
  SpectralReport report = unimodular_obstruction(g);
  CHECK(report.obstructions.empty());
  CHECK(converge_power(g, 1e-10, 300000).converged);
}

TEST_CASE("unimodular_obstruction: sink at goal with a 9-cycle oscillates") {
  GraphWithEndpoints nine = route_with_nine_cycle();
  DecoratedGraph g = decorate(nine.graph, nine.start, nine.goal, SinkPlacement::AtGoal);
  SpectralReport report = unimodular_obstruction(g);
  REQUIRE(!report.obstructions.empty());

  // the exp(i pi/3) family is present
  bool found = false;
  std::complex<double> target = std::polar(1.0, M_PI / 3.0);
  for (const Obstruction& o : report.obstructions) {
    if (std::abs(o.eigenvalue - target) < 1e-6 || std::abs(o.eigenvalue - std::conj(target)) < 1e-6)
      found = true;
    CHECK(std::abs(std::abs(o.eigenvalue) - 1.0) < 1e-8);
    CHECK(std::abs(o.eigenvalue - std::complex<double>(-1.0, 0.0)) > 1e-6);
    CHECK(o.overlap > 1e-7);
  }
  CHECK(found);

  ConvergenceResult result = converge_power(g, 1e-10);
  CHECK(!result.converged);
  CHECK(result.steps == 50 * g.arc_count());
}

TEST_CASE("path_eigenvector: explicit entries on the 3-path") {
  DecoratedGraph g = decorated_p3();
  GridMaze maze = parse_grid_maze("S.G");
  std::vector<int> route = bfs_shortest_path(maze.graph, 0, 2);
  ArcVector xi = path_eigenvector(g, route);

  CHECK(xi(g.start_loop()) == std::complex<double>(1.0, 0.0));
  CHECK(xi(route[0]) == std::complex<double>(-1.0, 0.0));
  CHECK(xi(g.inverse(route[0])) == std::complex<double>(-1.0, 0.0));
  CHECK(xi(route[1]) == std::complex<double>(1.0, 0.0));
  CHECK(xi(g.inverse(route[1])) == std::complex<double>(1.0, 0.0));
  CHECK(xi(g.goal_loop()) == std::complex<double>(-1.0, 0.0));
  CHECK(xi.squaredNorm() == doctest::Approx(6.0));  // 2n + 2 nonzeros

  CHECK((grover_step(g, xi) + xi).norm() < 1e-12);
  CHECK_THROWS_AS(path_eigenvector(g, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(path_eigenvector(g, std::vector<int>{route[1]}), std::invalid_argument);
}

TEST_CASE("cycle_eigenvector: even cycles only") {
  SymmetricDigraph square = SymmetricDigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  DecoratedGraph g = decorate(square, 0, 2, SinkPlacement::AtStart);
  ArcVector xi = cycle_eigenvector(g, {0, 2, 4, 6});
  int nonzero = 0;
  for (int a = 0; a < g.arc_count(); ++a)
    if (std::abs(xi(a)) > 0) ++nonzero;
  CHECK(nonzero == 8);  // 4n slots for a cycle of length 2n
  CHECK((grover_step(g, xi) + xi).norm() < 1e-12);

  SymmetricDigraph triangle = SymmetricDigraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  DecoratedGraph dt = decorate(triangle, 0, 1, SinkPlacement::AtStart);
  CHECK_THROWS_AS(cycle_eigenvector(dt, std::vector<int>{0, 2, 4}), std::invalid_argument);
}

TEST_CASE("randomized eigenvector constructions") {
  // 25 random trees (path vectors) + 25 even cycles hung in context
  for (uint64_t seed = 0; seed < 25; ++seed) {
    int n = 5 + static_cast<int>(seed % 11);
    SymmetricDigraph tree = make_random_tree(n, seed * 13 + 1);
    int s = static_cast<int>(seed) % n;
    int t = (s + 1 + static_cast<int>(seed / 2)) % n;
    if (s == t) t = (t + 1) % n;
    DecoratedGraph g = decorate(tree, s, t, SinkPlacement::AtStart);
    ArcVector xi = path_eigenvector(g, bfs_shortest_path(tree, s, t));
    CHECK((grover_step(g, xi) + xi).norm() < 1e-12);
  }
  for (int half = 2; half < 27; ++half) {
    int n = 2 * half;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    SymmetricDigraph cycle = SymmetricDigraph::from_edges(n, edges);
    DecoratedGraph g = decorate(cycle, 0, half, SinkPlacement::AtStart);
    std::vector<int> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back(2 * i);
    ArcVector xi = cycle_eigenvector(g, arcs);
    CHECK((grover_step(g, xi) + xi).norm() < 1e-12);
  }
}
