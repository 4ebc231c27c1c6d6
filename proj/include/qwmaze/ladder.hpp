#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "qwmaze/graph.hpp"
#include "qwmaze/walk.hpp"

namespace qwmaze {

struct LadderParams {
  int m = 1;  // cycle length
  int l = 1;  // cycle width
  int k = 0;  // index of the last cycle; k+1 cycles total
};

/// kappa = m / (2(l+m)), the overlap of consecutive normalized cycle
/// eigenvectors. Always in (0, 1/2).
double kappa(int m, int l);

/// Values u_n = U_n(1/(2 kappa)) of the second-kind Chebyshev polynomials,
/// by the recurrence u_{n+1} = 2x u_n - u_{n-1} with u_{-1} = 0, u_0 = 1.
/// x = 1/(2 kappa) > 1 puts the recurrence in the regime where the growing
/// solution dominates, so forward iteration is stable. k is capped at 64;
/// u_n grows geometrically and larger ladders overflow double range.
class ChebyshevCache {
public:
  explicit ChebyshevCache(const LadderParams& params);

  /// u(n) for n in [-1, k+1].
  double u(int n) const;
  double x() const { return x_; }

private:
  double x_ = 0.0;
  std::vector<double> values_;  // values_[i] = u_{i-1}
};

double chebyshev_u(const LadderParams& params, int n);

/// Coefficients c_{n,s} (s = 0..n) of the Gram-Schmidt vector
///   psi_n = sum_s c_{n,s} gamma_s,  c_{n,s} = (-1)^(n-s) u_s / sqrt(kappa u_n u_{n+1}).
std::vector<double> psi_coefficients(const LadderParams& params, int n);

/// ||(I - Pi_k) xi||^2 = 1 - (m/(m+3)) sum_{n=0}^k 1/(u_n u_{n+1}),
/// the squared distance from the route eigenvector to the cycle span.
double residual_norm_sq(const LadderParams& params);

/// Navigation-vector magnitudes by arc family, already normalized by the
/// residual norm.
///   rung[i]  (i = 0..k+1): arcs on the shared side between gamma_{i-1} and
///            gamma_i (rung 0 carries the route).
///   rail[i]  (i = 0..k): arcs on the two l-sides of gamma_i.
///   route_end: the start/goal pendant arcs and the two self-loops.
struct ClosedFormAmplitudes {
  std::vector<double> rung;
  std::vector<double> rail;
  double route_end = 0.0;
  double residual_norm = 0.0;
};

ClosedFormAmplitudes navigation_closed_form(const LadderParams& params);

/// Strict decrease of the rung and rail amplitude families over i = 0..k-1.
std::pair<bool, bool> check_monotone(const LadderParams& params);

/// u_{i+1} > u_i + 1, convexity of the gaps, and the tail bound
/// sum_{n=i}^k 1/(u_n u_{n+1}) < 1/(u_i (u_{i+1} - u_i)), for i = 0..k.
bool chebyshev_gap_inequalities(const LadderParams& params, int k);

/// Normalized route eigenvector xi on a decorated ladder.
Eigen::VectorXd route_eigenvector(const LadderGraph& ladder, const DecoratedGraph& g);

/// Normalized cycle eigenvectors gamma_0..gamma_k with the sign conventions
/// <gamma_0, xi> >= 0 and <gamma_i, gamma_{i+1}> >= 0 enforced by flipping.
std::vector<Eigen::VectorXd> cycle_eigenvectors(const LadderGraph& ladder,
                                                const DecoratedGraph& g);

/// The navigation vector assembled from the closed form
///   phi = (xi - sqrt(2(l+m))/sqrt(m+3) sum_n (1/(u_n u_{n+1}))
///                 sum_{s<=n} (-1)^s u_s gamma_s) / ||(I-Pi_k) xi||.
Eigen::VectorXd closed_form_navigation(const LadderGraph& ladder, const DecoratedGraph& g);

}  // namespace qwmaze
