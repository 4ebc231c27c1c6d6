#pragma once

// Shared fixtures for the test binaries.

#include <Eigen/Dense>

#include "qwmaze/graph.hpp"
#include "qwmaze/spectral.hpp"

namespace qwmaze::testing {

inline DecoratedGraph decorated_p3(SinkPlacement placement = SinkPlacement::AtStart) {
  GridMaze maze = parse_grid_maze("S.G");
  return decorate(maze.graph, maze.start, maze.goal, placement);
}

// Route s - r - y - g with a 9-cycle through r. With the sink at the goal
// this carries a unimodular eigenvector (eigenvalue exp(i pi/3)) that is
// supported on the start loop and the cycle, so the truncated walk cannot
// converge.
inline GraphWithEndpoints route_with_nine_cycle() {
  std::vector<std::pair<int, int>> edges = {{0, 1}};
  for (int i = 1; i < 9; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(9, 1);
  edges.emplace_back(1, 10);
  edges.emplace_back(10, 11);
  GraphWithEndpoints result;
  result.graph = SymmetricDigraph::from_edges(12, edges);
  result.start = 0;
  result.goal = 11;
  return result;
}

// Literal ONB construction from the nullspace: pivot the basis vector with
// the largest start-loop entry to the back, cancel the start-loop entries of
// the rest, then Gram-Schmidt in order. The last vector is the navigation
// vector up to sign.
inline Eigen::VectorXd literal_onb_last_vector(const DecoratedGraph& g) {
  Eigen::MatrixXd basis = minus_one_basis(g);
  const int k = static_cast<int>(basis.cols());
  const int s = g.start_loop();
  int pivot = 0;
  for (int j = 1; j < k; ++j)
    if (std::abs(basis(s, j)) > std::abs(basis(s, pivot))) pivot = j;
  basis.col(pivot).swap(basis.col(k - 1));
  for (int j = 0; j + 1 < k; ++j)
    basis.col(j) -= basis(s, j) / basis(s, k - 1) * basis.col(k - 1);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < j; ++i) basis.col(j) -= basis.col(i).dot(basis.col(j)) * basis.col(i);
    basis.col(j).normalize();
  }
  return basis.col(k - 1);
}

}  // namespace qwmaze::testing
