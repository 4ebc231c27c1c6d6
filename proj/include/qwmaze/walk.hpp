#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "qwmaze/graph.hpp"

namespace qwmaze {

/// State on the arc Hilbert space: one complex amplitude per arc id.
using ArcVector = Eigen::VectorXcd;

/// Unit amplitude on the start self-loop, zero elsewhere.
ArcVector initial_state(const DecoratedGraph& g);

/// One application of the Grover walk:
///   (U xi)(a) = -xi(a_bar) + (2 / deg(o(a))) * sum_{t(b)=o(a)} xi(b)
/// computed in O(|A|) via per-vertex incoming sums. Norm-preserving.
ArcVector grover_step(const DecoratedGraph& g, const ArcVector& xi);

/// Zeroes the amplitudes on the sink arc pair {d, d_bar}; identity elsewhere.
ArcVector project_sink(const DecoratedGraph& g, const ArcVector& xi);

/// n compositions of project_sink(grover_step(.)), i.e. (PU)^n xi.
ArcVector iterate(const DecoratedGraph& g, const ArcVector& xi, int n);

/// mu(v) = sum_{t(a)=v} |xi(a)|^2. Rejects the sink vertex.
double finding_probability(const DecoratedGraph& g, const ArcVector& xi, int v);

/// mu for every vertex; the sink entry is set to 0.
std::vector<double> finding_distribution(const DecoratedGraph& g, const ArcVector& xi);

struct ConvergenceResult {
  ArcVector limit;       // chi_n = (-1)^n (PU)^n zeta at the stopping step
  int steps = 0;
  bool converged = false;
};

/// Iterates chi_n = (-1)^n (PU)^n zeta until the stride-2 difference
/// ||chi_n - chi_{n-2}|| drops below tol. Non-convergence within max_steps
/// is reported, not thrown. max_steps <= 0 selects the default 50*|A|.
ConvergenceResult converge_power(const DecoratedGraph& g, double tol = 1e-10,
                                 int max_steps = 0);

}  // namespace qwmaze
