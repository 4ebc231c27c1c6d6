#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "qwmaze/graph.hpp"
#include "qwmaze/walk.hpp"

namespace qwmaze {

/// The Grover walk as a dense real |A| x |A| matrix.
Eigen::MatrixXd dense_unitary(const DecoratedGraph& g);

/// Orthonormal basis of the eigenspace V(-1), computed as the nullspace of
/// U + I. Rank is decided by a singular-value threshold of 1e-9 relative to
/// the largest singular value.
std::vector<ArcVector> minus_one_eigenspace(const DecoratedGraph& g);

/// Real-matrix form of the V(-1) basis (one column per basis vector).
Eigen::MatrixXd minus_one_basis(const DecoratedGraph& g);

/// The unit vector in V(-1) with positive real amplitude on the start
/// self-loop; the orthogonal projection of the initial state onto V(-1)
/// equals start_amplitude * vector.
struct NavigationVector {
  ArcVector vector;
  double start_amplitude = 0.0;  // = phi(s) under the phase convention
};

/// Throws std::runtime_error when the initial state has no component in
/// V(-1) (reported, not silently normalized).
NavigationVector navigation_vector(const DecoratedGraph& g);

/// lim_n mu_n(v) = |phi(s)|^2 sum_{t(a)=v} |phi(a)|^2, per vertex
/// (sink entry 0).
std::vector<double> limit_distribution(const DecoratedGraph& g);

struct PathExtraction {
  std::vector<int> arcs;      // all arcs with |phi(a)| > threshold * max|phi|
  std::vector<int> vertices;  // greedy walk from start along the support
  bool reached_goal = false;
};

/// threshold = 0 keeps every nonzero arc. Throws on a zero vector.
PathExtraction extract_path(const DecoratedGraph& g, const ArcVector& phi, double threshold);

struct Obstruction {
  std::complex<double> eigenvalue;  // |lambda| = 1, lambda != -1
  double overlap;                   // norm of the initial-state component
};

struct SpectralReport {
  int minus_one_dim = 0;
  std::vector<Obstruction> obstructions;
};

/// Scans the unit-circle spectrum of U for eigenvectors that vanish on
/// {d, d_bar} but not on the start loop, with eigenvalue != -1. Such a
/// component survives the sink projection and makes the sign-corrected
/// iteration oscillate instead of converge.
SpectralReport unimodular_obstruction(const DecoratedGraph& g);

/// The alternating +-1 eigenvector carried by a start-to-goal path
/// (self-loops included); satisfies U xi = -xi.
ArcVector path_eigenvector(const DecoratedGraph& g, const std::vector<int>& path_arcs);

/// The alternating +-1 eigenvector carried by an even cycle; odd cycles are
/// rejected.
ArcVector cycle_eigenvector(const DecoratedGraph& g, const std::vector<int>& cycle_arcs);

}  // namespace qwmaze
