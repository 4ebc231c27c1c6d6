#include "qwmaze/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qwmaze {

namespace {

void check_connected(int vertex_count, const std::vector<std::vector<int>>& adjacency,
                     const char* what) {
  if (vertex_count == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
  std::vector<char> seen(static_cast<size_t>(vertex_count), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adjacency[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count)
    throw std::invalid_argument(std::string(what) + ": graph is not connected");
}

}  // namespace

SymmetricDigraph SymmetricDigraph::from_edges(int vertex_count,
                                              const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 0) throw std::invalid_argument("graph: vertex_count must be positive");
  SymmetricDigraph g;
  g.vertex_count_ = vertex_count;
  g.out_.resize(static_cast<size_t>(vertex_count));
  std::set<std::pair<int, int>> seen;
  g.arcs_.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw std::invalid_argument("graph: duplicate edge");
    int a = static_cast<int>(g.arcs_.size());
    g.arcs_.push_back({u, v, a + 1});
    g.arcs_.push_back({v, u, a});
    g.out_[static_cast<size_t>(u)].push_back(a);
    g.out_[static_cast<size_t>(v)].push_back(a + 1);
  }
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(vertex_count));
  for (const Arc& a : g.arcs_) adjacency[static_cast<size_t>(a.origin)].push_back(a.terminal);
  check_connected(vertex_count, adjacency, "graph");
  return g;
}

int SymmetricDigraph::find_arc(int u, int v) const {
  for (int a : out_[static_cast<size_t>(u)])
    if (arcs_[static_cast<size_t>(a)].terminal == v) return a;
  return -1;
}

DecoratedGraph DecoratedGraph::decorate(const SymmetricDigraph& base, int start, int goal,
                                        SinkPlacement placement) {
  if (start < 0 || start >= base.vertex_count() || goal < 0 || goal >= base.vertex_count())
    throw std::invalid_argument("decorate: start/goal out of range");
  if (start == goal)
    throw std::invalid_argument("decorate: start and goal must be distinct");

  DecoratedGraph g;
  g.vertex_count_ = base.vertex_count() + 1;
  g.sink_vertex_ = base.vertex_count();
  g.start_ = start;
  g.goal_ = goal;
  g.placement_ = placement;

  g.arcs_.reserve(static_cast<size_t>(base.arc_count()) + 4);
  for (int a = 0; a < base.arc_count(); ++a) g.arcs_.push_back(base.arc(a));

  int n = base.arc_count();
  g.loop_s_ = n;
  g.loop_g_ = n + 1;
  g.sink_arc_ = n + 2;
  g.sink_arc_rev_ = n + 3;
  g.arcs_.push_back({start, start, g.loop_s_});  // self-loops are their own inverse
  g.arcs_.push_back({goal, goal, g.loop_g_});
  int anchor = placement == SinkPlacement::AtStart ? start : goal;
  g.arcs_.push_back({anchor, g.sink_vertex_, g.sink_arc_rev_});
  g.arcs_.push_back({g.sink_vertex_, anchor, g.sink_arc_});

  g.degree_.assign(static_cast<size_t>(g.vertex_count_), 0);
  for (const Arc& a : g.arcs_) ++g.degree_[static_cast<size_t>(a.terminal)];
  return g;
}

DecoratedGraph decorate(const SymmetricDigraph& base, int start, int goal,
                        SinkPlacement placement) {
  return DecoratedGraph::decorate(base, start, goal, placement);
}

GridMaze parse_grid_maze(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      rows.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    rows.push_back(current);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw std::invalid_argument("maze: empty input");

  GridMaze maze;
  maze.height = static_cast<int>(rows.size());
  maze.width = static_cast<int>(rows[0].size());
  if (maze.width == 0) throw std::invalid_argument("maze: empty row");
  for (const std::string& row : rows)
    if (static_cast<int>(row.size()) != maze.width)
      throw std::invalid_argument("maze: input is not rectangular");

  maze.open.assign(static_cast<size_t>(maze.width * maze.height), 0);
  maze.cell_vertex.assign(static_cast<size_t>(maze.width * maze.height), -1);
  int vertex = 0;
  for (int r = 0; r < maze.height; ++r) {
    for (int c = 0; c < maze.width; ++c) {
      char ch = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
      int cell = r * maze.width + c;
      switch (ch) {
        case '#':
          break;
        case 'S':
          if (maze.start_cell >= 0) throw std::invalid_argument("maze: duplicate start");
          maze.start_cell = cell;
          [[fallthrough]];
        case '.':
        case 'G':
          if (ch == 'G') {
            if (maze.goal_cell >= 0) throw std::invalid_argument("maze: duplicate goal");
            maze.goal_cell = cell;
          }
          maze.open[static_cast<size_t>(cell)] = 1;
          maze.cell_vertex[static_cast<size_t>(cell)] = vertex++;
          break;
        default:
          throw std::invalid_argument("maze: invalid character");
      }
    }
  }
  if (maze.start_cell < 0) throw std::invalid_argument("maze: missing start");
  if (maze.goal_cell < 0) throw std::invalid_argument("maze: missing goal");

  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < maze.height; ++r) {
    for (int c = 0; c < maze.width; ++c) {
      int cell = r * maze.width + c;
      if (!maze.open[static_cast<size_t>(cell)]) continue;
      if (c + 1 < maze.width && maze.open[static_cast<size_t>(cell + 1)])
        edges.emplace_back(maze.cell_vertex[static_cast<size_t>(cell)],
                           maze.cell_vertex[static_cast<size_t>(cell + 1)]);
      if (r + 1 < maze.height && maze.open[static_cast<size_t>(cell + maze.width)])
        edges.emplace_back(maze.cell_vertex[static_cast<size_t>(cell)],
                           maze.cell_vertex[static_cast<size_t>(cell + maze.width)]);
    }
  }
  try {
    maze.graph = SymmetricDigraph::from_edges(vertex, edges);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("maze: open region is disconnected");
  }
  maze.start = maze.cell_vertex[static_cast<size_t>(maze.start_cell)];
  maze.goal = maze.cell_vertex[static_cast<size_t>(maze.goal_cell)];
  return maze;
}

GraphWithEndpoints parse_edge_list_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("edge list: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc.contains("start") || !doc.contains("goal"))
    throw std::invalid_argument("edge list: expected {vertices, edges, start, goal}");
  int n = doc["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge list: each edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  GraphWithEndpoints result;
  result.graph = SymmetricDigraph::from_edges(n, edges);
  result.start = doc["start"].get<int>();
  result.goal = doc["goal"].get<int>();
  if (result.start < 0 || result.start >= n || result.goal < 0 || result.goal >= n)
    throw std::invalid_argument("edge list: start/goal out of range");
  return result;
}

namespace {

// Raw +-1 eigenvector patterns used by the ladder build-time checks.
// (The spectral module re-exposes these with full validation.)
std::vector<double> raw_cycle_vector(const DecoratedGraph& g, const std::vector<int>& cycle) {
  std::vector<double> xi(static_cast<size_t>(g.arc_count()), 0.0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    double value = (i + 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^i with i starting at 1
    xi[static_cast<size_t>(cycle[i])] = value;
    xi[static_cast<size_t>(g.inverse(cycle[i]))] = value;
  }
  return xi;
}

std::vector<double> raw_route_vector(const DecoratedGraph& g, const std::vector<int>& route) {
  std::vector<double> xi(static_cast<size_t>(g.arc_count()), 0.0);
  xi[static_cast<size_t>(g.start_loop())] = 1.0;  // a_0 = s
  for (size_t i = 0; i < route.size(); ++i) {
    double value = (i + 1) % 2 == 0 ? 1.0 : -1.0;
    xi[static_cast<size_t>(route[i])] = value;
    xi[static_cast<size_t>(g.inverse(route[i]))] = value;
  }
  double goal_value = route.size() % 2 == 0 ? -1.0 : 1.0;  // (-1)^(n+1)
  xi[static_cast<size_t>(g.goal_loop())] = goal_value;
  return xi;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize(std::vector<double>& v) {
  double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
}

}  // namespace

LadderGraph make_ladder(int m, int l, int k) {
  if (m < 1 || l < 1 || k < 0) throw std::invalid_argument("ladder: require m>=1, l>=1, k>=0");

  LadderGraph ladder;
  ladder.m = m;
  ladder.l = l;
  ladder.k = k;

  // Rung j (j = 0..k+1) is a path of m edges; consecutive rungs are joined
  // at both ends by rail segments of l edges. gamma_j is the rectangle
  // between rungs j and j+1. Start hangs off rung 0's low end, goal off its
  // high end, so the shortest route is rung 0 plus the two pendant arcs.
  int rungs = k + 2;
  auto rung_vertex = [m](int j, int y) { return j * (m + 1) + y; };
  int next_vertex = rungs * (m + 1);

  // rail interior vertices, bottom then top, segment-major
  std::vector<std::vector<int>> bottom_interior(static_cast<size_t>(k + 1));
  std::vector<std::vector<int>> top_interior(static_cast<size_t>(k + 1));
  for (int j = 0; j <= k; ++j)
    for (int t = 1; t < l; ++t) bottom_interior[static_cast<size_t>(j)].push_back(next_vertex++);
  for (int j = 0; j <= k; ++j)
    for (int t = 1; t < l; ++t) top_interior[static_cast<size_t>(j)].push_back(next_vertex++);
  int start = next_vertex++;
  int goal = next_vertex++;

  std::vector<std::pair<int, int>> edges;
  // rung edges first: arc ids 2*(j*m + y) for rung j, height y
  for (int j = 0; j < rungs; ++j)
    for (int y = 0; y < m; ++y) edges.emplace_back(rung_vertex(j, y), rung_vertex(j, y + 1));

  auto chain = [&edges](int from, const std::vector<int>& interior, int to) {
    int prev = from;
    for (int v : interior) {
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, to);
  };
  std::vector<size_t> bottom_first_edge(static_cast<size_t>(k + 1));
  std::vector<size_t> top_first_edge(static_cast<size_t>(k + 1));
  for (int j = 0; j <= k; ++j) {
    bottom_first_edge[static_cast<size_t>(j)] = edges.size();
    chain(rung_vertex(j, 0), bottom_interior[static_cast<size_t>(j)], rung_vertex(j + 1, 0));
  }
  for (int j = 0; j <= k; ++j) {
    top_first_edge[static_cast<size_t>(j)] = edges.size();
    chain(rung_vertex(j, m), top_interior[static_cast<size_t>(j)], rung_vertex(j + 1, m));
  }
  size_t start_edge = edges.size();
  edges.emplace_back(start, rung_vertex(0, 0));
  size_t goal_edge = edges.size();
  edges.emplace_back(rung_vertex(0, m), goal);

  ladder.graph = SymmetricDigraph::from_edges(next_vertex, edges);
  ladder.start = start;
  ladder.goal = goal;

  auto forward_arc = [](size_t edge_index) { return static_cast<int>(2 * edge_index); };
  auto rung_arc_up = [&](int j, int y) { return forward_arc(static_cast<size_t>(j * m + y)); };

  // route: s -> rung0 bottom, up rung 0, top -> g
  ladder.route_arcs.push_back(forward_arc(start_edge));
  for (int y = 0; y < m; ++y) ladder.route_arcs.push_back(rung_arc_up(0, y));
  ladder.route_arcs.push_back(forward_arc(goal_edge));

  // cycle gamma_j: up rung j, along top segment j, down rung j+1, back along
  // bottom segment j
  ladder.cycle_arcs.resize(static_cast<size_t>(k + 1));
  for (int j = 0; j <= k; ++j) {
    auto& cycle = ladder.cycle_arcs[static_cast<size_t>(j)];
    for (int y = 0; y < m; ++y) cycle.push_back(rung_arc_up(j, y));
    for (int t = 0; t < l; ++t) cycle.push_back(forward_arc(top_first_edge[static_cast<size_t>(j)] + static_cast<size_t>(t)));
    for (int y = m - 1; y >= 0; --y)
      cycle.push_back(ladder.graph.inverse(rung_arc_up(j + 1, y)));
    for (int t = l - 1; t >= 0; --t)
      cycle.push_back(ladder.graph.inverse(
          forward_arc(bottom_first_edge[static_cast<size_t>(j)] + static_cast<size_t>(t))));
  }

  ladder.rung_arcs.resize(static_cast<size_t>(rungs));
  for (int j = 0; j < rungs; ++j) {
    for (int y = 0; y < m; ++y) {
      int a = rung_arc_up(j, y);
      ladder.rung_arcs[static_cast<size_t>(j)].push_back(a);
      ladder.rung_arcs[static_cast<size_t>(j)].push_back(ladder.graph.inverse(a));
    }
  }
  ladder.top_rail_arcs.resize(static_cast<size_t>(k + 1));
  ladder.bottom_rail_arcs.resize(static_cast<size_t>(k + 1));
  for (int j = 0; j <= k; ++j) {
    for (int t = 0; t < l; ++t) {
      int a_top = forward_arc(top_first_edge[static_cast<size_t>(j)] + static_cast<size_t>(t));
      int a_bot = forward_arc(bottom_first_edge[static_cast<size_t>(j)] + static_cast<size_t>(t));
      ladder.top_rail_arcs[static_cast<size_t>(j)].push_back(a_top);
      ladder.top_rail_arcs[static_cast<size_t>(j)].push_back(ladder.graph.inverse(a_top));
      ladder.bottom_rail_arcs[static_cast<size_t>(j)].push_back(a_bot);
      ladder.bottom_rail_arcs[static_cast<size_t>(j)].push_back(ladder.graph.inverse(a_bot));
    }
  }

  // Build-time checks: the normalized route vector must carry 1/sqrt(2(m+3))
  // on the start loop and overlap gamma_0 by m/sqrt(2(l+m)(m+3)).
  DecoratedGraph probe = decorate(ladder.graph, start, goal, SinkPlacement::AtStart);
  std::vector<double> xi = raw_route_vector(probe, ladder.route_arcs);
  std::vector<double> gamma0 = raw_cycle_vector(probe, ladder.cycle_arcs[0]);
  normalize(xi);
  normalize(gamma0);
  double overlap = std::abs(dot(gamma0, xi));
  double expected_overlap = m / std::sqrt(2.0 * (l + m) * (m + 3));
  double expected_entry = 1.0 / std::sqrt(2.0 * (m + 3));
  if (std::abs(overlap - expected_overlap) > 1e-12 ||
      std::abs(std::abs(xi[static_cast<size_t>(probe.start_loop())]) - expected_entry) > 1e-12)
    throw std::logic_error("ladder: generated geometry violates the route/cycle invariants");

  return ladder;
}

SymmetricDigraph make_random_tree(int n, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree: need at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    // modulo keeps the draw identical across standard libraries
    int parent = static_cast<int>(rng() % static_cast<uint64_t>(i));
    edges.emplace_back(parent, i);
  }
  return SymmetricDigraph::from_edges(n, edges);
}

std::vector<int> bfs_shortest_path(const SymmetricDigraph& g, int s, int t) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw std::invalid_argument("bfs: vertex out of range");
  if (s == t) return {};
  std::vector<int> parent_arc(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::deque<int> queue{s};
  seen[static_cast<size_t>(s)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a : g.out_arcs(v)) {
      int w = g.terminal(a);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      parent_arc[static_cast<size_t>(w)] = a;
      if (w == t) {
        std::vector<int> path;
        for (int x = t; x != s; x = g.origin(parent_arc[static_cast<size_t>(x)]))
          path.push_back(parent_arc[static_cast<size_t>(x)]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw std::invalid_argument("bfs: no path (graph should be connected)");
}

bool is_bipartite(const SymmetricDigraph& g) {
  std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
  std::deque<int> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a : g.out_arcs(v)) {
      int w = g.terminal(a);
      if (color[static_cast<size_t>(w)] == -1) {
        color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
        queue.push_back(w);
      } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
        return false;
      }
    }
  }
  return true;
}

int betti_number(const SymmetricDigraph& g) {
  return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace qwmaze
