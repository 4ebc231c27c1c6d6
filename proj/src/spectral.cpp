#include "qwmaze/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qwmaze {

namespace {

constexpr double kRankThreshold = 1e-9;     // relative to the largest singular value
constexpr double kOverlapThreshold = 1e-7;  // nonzero-at-s decision for obstruction vectors

}  // namespace

Eigen::MatrixXd dense_unitary(const DecoratedGraph& g) {
  const int arcs = g.arc_count();
  std::vector<std::vector<int>> incoming(static_cast<size_t>(g.vertex_count()));
  for (int b = 0; b < arcs; ++b) incoming[static_cast<size_t>(g.terminal(b))].push_back(b);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(arcs, arcs);
  for (int a = 0; a < arcs; ++a) {
    int v = g.origin(a);
    double weight = 2.0 / g.degree(v);
    for (int b : incoming[static_cast<size_t>(v)]) u(a, b) += weight;
    u(a, g.inverse(a)) -= 1.0;
  }
  return u;
}

Eigen::MatrixXd minus_one_basis(const DecoratedGraph& g) {
  Eigen::MatrixXd shifted = dense_unitary(g);
  shifted.diagonal().array() += 1.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double cutoff = kRankThreshold * sigma(0);
  int nullity = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) < cutoff) ++nullity;
  return svd.matrixV().rightCols(nullity);
}

std::vector<ArcVector> minus_one_eigenspace(const DecoratedGraph& g) {
  Eigen::MatrixXd basis = minus_one_basis(g);
  std::vector<ArcVector> result;
  result.reserve(static_cast<size_t>(basis.cols()));
  for (int i = 0; i < basis.cols(); ++i) result.push_back(basis.col(i).cast<std::complex<double>>());
  return result;
}

NavigationVector navigation_vector(const DecoratedGraph& g) {
  Eigen::MatrixXd basis = minus_one_basis(g);
  // Projection of zeta (indicator of the start loop) onto V(-1). Every ONB
  // member other than the navigation vector vanishes at s, so this picks out
  // phi(s) * phi directly.
  Eigen::VectorXd coefficients = basis.row(g.start_loop()).transpose();
  Eigen::VectorXd projection = basis * coefficients;
  double norm = projection.norm();
  if (norm < 1e-9)
    throw std::runtime_error("navigation_vector: start self-loop is orthogonal to V(-1)");
  Eigen::VectorXd phi = projection / norm;
  if (phi(g.start_loop()) < 0) phi = -phi;  // phase convention phi(s) > 0
  NavigationVector result;
  result.vector = phi.cast<std::complex<double>>();
  result.start_amplitude = phi(g.start_loop());
  return result;
}

std::vector<double> limit_distribution(const DecoratedGraph& g) {
  NavigationVector nav = navigation_vector(g);
  double survival = nav.start_amplitude * nav.start_amplitude;
  std::vector<double> mu = finding_distribution(g, nav.vector);
  for (double& value : mu) value *= survival;
  return mu;
}

PathExtraction extract_path(const DecoratedGraph& g, const ArcVector& phi, double threshold) {
  if (phi.size() != g.arc_count())
    throw std::invalid_argument("extract_path: dimension mismatch");
  double max_amp = 0.0;
  for (int a = 0; a < g.arc_count(); ++a) max_amp = std::max(max_amp, std::abs(phi(a)));
  if (max_amp == 0.0) throw std::invalid_argument("extract_path: zero vector has no support");

  PathExtraction result;
  double cut = threshold * max_amp;
  std::vector<char> in_support(static_cast<size_t>(g.arc_count()), 0);
  for (int a = 0; a < g.arc_count(); ++a) {
    if (std::abs(phi(a)) > cut) {
      result.arcs.push_back(a);
      in_support[static_cast<size_t>(a)] = 1;
    }
  }

  // Greedy walk: from each vertex take the strongest unvisited support arc.
  std::set<int> visited{g.start()};
  result.vertices.push_back(g.start());
  int current = g.start();
  while (current != g.goal()) {
    int best = -1;
    double best_amp = -1.0;
    for (int a : result.arcs) {
      if (g.origin(a) != current) continue;
      int w = g.terminal(a);
      if (w == current || w == g.sink_vertex() || visited.count(w)) continue;
      double amp = std::abs(phi(a));
      if (amp > best_amp + 1e-15) {
        best = a;
        best_amp = amp;
      }
    }
    if (best < 0) break;
    current = g.terminal(best);
    visited.insert(current);
    result.vertices.push_back(current);
  }
  result.reached_goal = current == g.goal();
  return result;
}

namespace {

struct Cluster {
  std::complex<double> eigenvalue;
  std::vector<int> members;  // column indices into the eigenvector matrix
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& values, double tol) {
  std::vector<int> order(static_cast<size_t>(values.size()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });
  std::vector<Cluster> clusters;
  for (int idx : order) {
    if (!clusters.empty() && std::abs(values(idx) - clusters.back().eigenvalue) < tol) {
      clusters.back().members.push_back(idx);
    } else {
      clusters.push_back({values(idx), {idx}});
    }
  }
  for (Cluster& c : clusters) {
    std::complex<double> mean = 0.0;
    for (int idx : c.members) mean += values(idx);
    c.eigenvalue = mean / static_cast<double>(c.members.size());
  }
  return clusters;
}

// Orthonormal basis of the restriction of `space` (orthonormal columns) to
// vectors vanishing at the two given coordinates.
Eigen::MatrixXcd restrict_to_zero_rows(const Eigen::MatrixXcd& space, int row1, int row2) {
  Eigen::MatrixXcd constraints(2, space.cols());
  constraints.row(0) = space.row(row1);
  constraints.row(1) = space.row(row2);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(constraints, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double cutoff = kRankThreshold * std::max(sigma.size() > 0 ? sigma(0) : 0.0, 1.0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  int nullity = static_cast<int>(space.cols()) - rank;
  if (nullity <= 0) return Eigen::MatrixXcd(space.rows(), 0);
  return space * svd.matrixV().rightCols(nullity);
}

// Exact eigenspace of U for the given eigenvalue, via the nullspace of
// U - lambda I.
Eigen::MatrixXcd eigenspace_of(const Eigen::MatrixXd& u, std::complex<double> lambda) {
  Eigen::MatrixXcd shifted = u.cast<std::complex<double>>();
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double cutoff = kRankThreshold * sigma(0);
  int nullity = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) < cutoff) ++nullity;
  return svd.matrixV().rightCols(nullity);
}

}  // namespace

SpectralReport unimodular_obstruction(const DecoratedGraph& g) {
  SpectralReport report;
  report.minus_one_dim = static_cast<int>(minus_one_basis(g).cols());

  Eigen::MatrixXd u = dense_unitary(g);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(u);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("unimodular_obstruction: eigendecomposition failed");
  Eigen::VectorXcd values = solver.eigenvalues();
  Eigen::MatrixXcd vectors = solver.eigenvectors();

  const int s_loop = g.start_loop();
  const int d = g.sink_arc();
  const int d_bar = g.sink_arc_reverse();

  for (const Cluster& cluster : cluster_eigenvalues(values, 1e-7)) {
    if (std::abs(std::abs(cluster.eigenvalue) - 1.0) > 1e-8) continue;  // numerical shells only
    if (std::abs(cluster.eigenvalue - std::complex<double>(-1.0, 0.0)) < 1e-6) continue;

    Eigen::MatrixXcd span(u.rows(), cluster.members.size());
    for (size_t i = 0; i < cluster.members.size(); ++i)
      span.col(static_cast<Eigen::Index>(i)) = vectors.col(cluster.members[i]);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(span);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(span.rows(), span.cols());

    Eigen::MatrixXcd restricted = restrict_to_zero_rows(q, d, d_bar);
    if (restricted.cols() == 0) continue;
    if (restricted.row(s_loop).norm() <= kOverlapThreshold) continue;

    // Candidate found; redo the restriction on the exact eigenspace so the
    // reported eigenvalue and overlap do not inherit eigensolver noise.
    Eigen::MatrixXcd exact = eigenspace_of(u, cluster.eigenvalue);
    Eigen::MatrixXcd exact_restricted = restrict_to_zero_rows(exact, d, d_bar);
    if (exact_restricted.cols() == 0) continue;
    double overlap = exact_restricted.row(s_loop).norm();
    if (overlap <= kOverlapThreshold) continue;
    report.obstructions.push_back({cluster.eigenvalue, overlap});
  }
  return report;
}

ArcVector path_eigenvector(const DecoratedGraph& g, const std::vector<int>& path_arcs) {
  if (path_arcs.empty()) throw std::invalid_argument("path_eigenvector: empty path");
  if (g.origin(path_arcs.front()) != g.start() || g.terminal(path_arcs.back()) != g.goal())
    throw std::invalid_argument("path_eigenvector: path must run from start to goal");
  std::set<int> origins, terminals;
  for (size_t i = 0; i < path_arcs.size(); ++i) {
    int a = path_arcs[i];
    if (a < 0 || a >= g.base_arc_count())
      throw std::invalid_argument("path_eigenvector: arc out of range");
    if (i + 1 < path_arcs.size() && g.terminal(a) != g.origin(path_arcs[i + 1]))
      throw std::invalid_argument("path_eigenvector: arcs are not contiguous");
    if (!origins.insert(g.origin(a)).second || !terminals.insert(g.terminal(a)).second)
      throw std::invalid_argument("path_eigenvector: path revisits a vertex");
  }

  ArcVector xi = ArcVector::Zero(g.arc_count());
  xi(g.start_loop()) = 1.0;  // a_0 = s, value (-1)^0
  for (size_t i = 0; i < path_arcs.size(); ++i) {
    double value = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^(i+1)
    xi(path_arcs[i]) = value;
    xi(g.inverse(path_arcs[i])) = value;
  }
  xi(g.goal_loop()) = (path_arcs.size() % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
  return xi;
}

ArcVector cycle_eigenvector(const DecoratedGraph& g, const std::vector<int>& cycle_arcs) {
  if (cycle_arcs.size() < 3) throw std::invalid_argument("cycle_eigenvector: not a cycle");
  if (cycle_arcs.size() % 2 != 0)
    throw std::invalid_argument("cycle_eigenvector: odd cycles carry no -1 eigenvector");
  std::set<int> terminals;
  for (size_t i = 0; i < cycle_arcs.size(); ++i) {
    int a = cycle_arcs[i];
    if (a < 0 || a >= g.base_arc_count())
      throw std::invalid_argument("cycle_eigenvector: arc out of range");
    int next = cycle_arcs[(i + 1) % cycle_arcs.size()];
    if (g.terminal(a) != g.origin(next))
      throw std::invalid_argument("cycle_eigenvector: arcs do not close a cycle");
    if (!terminals.insert(g.terminal(a)).second)
      throw std::invalid_argument("cycle_eigenvector: cycle revisits a vertex");
  }
  ArcVector xi = ArcVector::Zero(g.arc_count());
  for (size_t i = 0; i < cycle_arcs.size(); ++i) {
    double value = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^(i+1)
    xi(cycle_arcs[i]) = value;
    xi(g.inverse(cycle_arcs[i])) = value;
  }
  return xi;
}

}  // namespace qwmaze
