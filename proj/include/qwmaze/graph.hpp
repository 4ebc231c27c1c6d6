#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwmaze {

/// A directed arc of a symmetric digraph. Every arc knows its inverse;
/// for self-loops the inverse is the arc itself.
struct Arc {
  int origin = -1;
  int terminal = -1;
  int inverse = -1;
};

/// Finite connected symmetric digraph without multiple arcs or self-loops.
/// Arcs come in inverse pairs (2e, 2e+1) in edge insertion order, so ids are
/// deterministic for a fixed edge list.
class SymmetricDigraph {
public:
  SymmetricDigraph() = default;

  /// Builds from an undirected edge list. Throws std::invalid_argument on
  /// out-of-range endpoints, self-loops, duplicate edges, or a disconnected
  /// vertex set.
  static SymmetricDigraph from_edges(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int edge_count() const { return arc_count() / 2; }

  const Arc& arc(int a) const { return arcs_[static_cast<size_t>(a)]; }
  int origin(int a) const { return arc(a).origin; }
  int terminal(int a) const { return arc(a).terminal; }
  int inverse(int a) const { return arc(a).inverse; }

  /// Arc id for u->v, or -1 when absent.
  int find_arc(int u, int v) const;

  /// Outgoing arc ids of v in increasing id order.
  const std::vector<int>& out_arcs(int v) const { return out_[static_cast<size_t>(v)]; }

  /// deg(v) = number of incoming arcs = number of outgoing arcs.
  int degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }

private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

enum class SinkPlacement { AtStart, AtGoal };

/// The underlying graph with one self-loop each at start and goal, plus a
/// sink vertex connected to start (or goal) by the arc pair {d, d_bar}.
/// Base vertices and arcs keep their ids; the new ids come after them:
///   loop_s = |A_o|, loop_g = |A_o|+1, d = |A_o|+2, d_bar = |A_o|+3,
///   sink vertex = |V_o|.
class DecoratedGraph {
public:
  static DecoratedGraph decorate(const SymmetricDigraph& base, int start, int goal,
                                 SinkPlacement placement);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_[static_cast<size_t>(a)]; }
  int origin(int a) const { return arc(a).origin; }
  int terminal(int a) const { return arc(a).terminal; }
  int inverse(int a) const { return arc(a).inverse; }

  /// deg(v) = |{a : t(a) = v}|; self-loops count once.
  int degree(int v) const { return degree_[static_cast<size_t>(v)]; }

  int start() const { return start_; }
  int goal() const { return goal_; }
  int sink_vertex() const { return sink_vertex_; }
  int start_loop() const { return loop_s_; }
  int goal_loop() const { return loop_g_; }
  int sink_arc() const { return sink_arc_; }
  int sink_arc_reverse() const { return sink_arc_rev_; }
  SinkPlacement sink_placement() const { return placement_; }

  int base_vertex_count() const { return vertex_count_ - 1; }
  int base_arc_count() const { return arc_count() - 4; }

private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> degree_;
  int start_ = -1;
  int goal_ = -1;
  int sink_vertex_ = -1;
  int loop_s_ = -1;
  int loop_g_ = -1;
  int sink_arc_ = -1;
  int sink_arc_rev_ = -1;
  SinkPlacement placement_ = SinkPlacement::AtStart;
};

DecoratedGraph decorate(const SymmetricDigraph& base, int start, int goal,
                        SinkPlacement placement);

/// Rectangular grid maze. Open cells ('.', 'S', 'G') become vertices in
/// row-major order; 4-neighbor adjacencies become edges.
struct GridMaze {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> open;     // row-major open/wall flags
  int start_cell = -1;           // row-major cell index of 'S'
  int goal_cell = -1;
  std::vector<int> cell_vertex;  // row-major cell -> vertex id, -1 for walls
  SymmetricDigraph graph;
  int start = -1;                // vertex ids
  int goal = -1;
};

/// Parses the ASCII format. Characters: '#' wall, '.' open, 'S' start,
/// 'G' goal. Throws std::invalid_argument on non-rectangular input, bad
/// characters, missing/duplicate S or G, or a disconnected open region.
GridMaze parse_grid_maze(std::string_view text);

struct GraphWithEndpoints {
  SymmetricDigraph graph;
  int start = -1;
  int goal = -1;
};

/// JSON edge-list format:
///   {"vertices": N, "edges": [[u,v],...], "start": s, "goal": g}
GraphWithEndpoints parse_edge_list_json(std::string_view text);

/// Chain of k+1 rectangular cycles gamma_0..gamma_k, each of length m and
/// width l (circumference 2(m+l)), consecutive cycles sharing an m-edge
/// side ("rung"). The start hangs off one end of rung 0 and the goal off
/// the other, so the unique shortest route has m+2 arcs and overlaps only
/// gamma_0. Construction asserts the route/cycle inner products that pin
/// this geometry.
struct LadderGraph {
  int m = 0;
  int l = 0;
  int k = 0;
  SymmetricDigraph graph;
  int start = -1;
  int goal = -1;
  std::vector<int> route_arcs;                 // s -> ... -> g, in order
  std::vector<std::vector<int>> cycle_arcs;    // gamma_i traversal, 2(m+l) arcs each
  std::vector<std::vector<int>> rung_arcs;     // i = 0..k+1; both directions, 2m ids
  std::vector<std::vector<int>> top_rail_arcs; // i = 0..k; both directions, 2l ids
  std::vector<std::vector<int>> bottom_rail_arcs;
};

LadderGraph make_ladder(int m, int l, int k);

/// Uniform random attachment tree on n vertices; deterministic for a fixed
/// seed. Throws for n < 2.
SymmetricDigraph make_random_tree(int n, uint64_t seed);

/// Shortest path from s to t as an ordered arc list (empty when s == t).
/// Ties are broken by visiting out-arcs in increasing arc id order.
std::vector<int> bfs_shortest_path(const SymmetricDigraph& g, int s, int t);

bool is_bipartite(const SymmetricDigraph& g);

/// |E_o| - |V_o| + 1, the number of independent cycles.
int betti_number(const SymmetricDigraph& g);

}  // namespace qwmaze
