#include "qwmaze/ladder.hpp"

#include <cmath>
#include <stdexcept>

#include "qwmaze/spectral.hpp"

namespace qwmaze {

namespace {

constexpr int kMaxCycleIndex = 64;

void check_params(const LadderParams& p) {
  if (p.m < 1 || p.l < 1 || p.k < 0)
    throw std::invalid_argument("ladder params: require m>=1, l>=1, k>=0");
  if (p.k > kMaxCycleIndex)
    throw std::domain_error("ladder params: k > 64 overflows the Chebyshev recurrence");
}

}  // namespace

double kappa(int m, int l) {
  if (m < 1 || l < 1) throw std::invalid_argument("kappa: require m>=1, l>=1");
  return m / (2.0 * (l + m));
}

ChebyshevCache::ChebyshevCache(const LadderParams& params) {
  check_params(params);
  x_ = 1.0 / (2.0 * kappa(params.m, params.l));
  values_.resize(static_cast<size_t>(params.k) + 3);
  values_[0] = 0.0;  // u_{-1}
  values_[1] = 1.0;  // u_0
  for (size_t i = 2; i < values_.size(); ++i)
    values_[i] = 2.0 * x_ * values_[i - 1] - values_[i - 2];
}

double ChebyshevCache::u(int n) const {
  if (n < -1 || n + 1 >= static_cast<int>(values_.size()))
    throw std::out_of_range("ChebyshevCache: index outside cached range");
  return values_[static_cast<size_t>(n + 1)];
}

double chebyshev_u(const LadderParams& params, int n) {
  return ChebyshevCache(params).u(n);
}

std::vector<double> psi_coefficients(const LadderParams& params, int n) {
  check_params(params);
  if (n < 0 || n > params.k) throw std::invalid_argument("psi_coefficients: n outside 0..k");
  ChebyshevCache cheb(params);
  double scale = 1.0 / std::sqrt(kappa(params.m, params.l) * cheb.u(n) * cheb.u(n + 1));
  std::vector<double> c(static_cast<size_t>(n) + 1);
  for (int s = 0; s <= n; ++s)
    c[static_cast<size_t>(s)] = ((n - s) % 2 == 0 ? 1.0 : -1.0) * cheb.u(s) * scale;
  return c;
}

double residual_norm_sq(const LadderParams& params) {
  check_params(params);
  ChebyshevCache cheb(params);
  double sum = 0.0;
  for (int n = 0; n <= params.k; ++n) sum += 1.0 / (cheb.u(n) * cheb.u(n + 1));
  return 1.0 - params.m / (params.m + 3.0) * sum;
}

ClosedFormAmplitudes navigation_closed_form(const LadderParams& params) {
  check_params(params);
  ChebyshevCache cheb(params);
  const int k = params.k;

  // tail[i] = sum_{n=i}^k 1/(u_n u_{n+1}); tail[k+1] = 0
  std::vector<double> tail(static_cast<size_t>(k) + 2, 0.0);
  for (int i = k; i >= 0; --i)
    tail[static_cast<size_t>(i)] = tail[static_cast<size_t>(i) + 1] + 1.0 / (cheb.u(i) * cheb.u(i + 1));

  ClosedFormAmplitudes amp;
  amp.residual_norm = std::sqrt(residual_norm_sq(params));
  double base = 1.0 / std::sqrt(2.0 * (params.m + 3.0));

  // Rung i carries contributions from gamma_{i-1} and gamma_i; collapsing the
  // two tails gives 1/u_i + (u_{i-1} - u_i) * tail_i, which also covers the
  // boundary rungs via u_{-1} = 0 and tail_{k+1} = 0.
  amp.rung.resize(static_cast<size_t>(k) + 2);
  for (int i = 0; i <= k + 1; ++i)
    amp.rung[static_cast<size_t>(i)] =
        base * std::abs(1.0 / cheb.u(i) + (cheb.u(i - 1) - cheb.u(i)) * tail[static_cast<size_t>(i)]);

  amp.rail.resize(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i)
    amp.rail[static_cast<size_t>(i)] = base * cheb.u(i) * tail[static_cast<size_t>(i)];

  amp.route_end = base;

  for (double& v : amp.rung) v /= amp.residual_norm;
  for (double& v : amp.rail) v /= amp.residual_norm;
  amp.route_end /= amp.residual_norm;
  return amp;
}

std::pair<bool, bool> check_monotone(const LadderParams& params) {
  ClosedFormAmplitudes amp = navigation_closed_form(params);
  bool rung_ok = true;
  bool rail_ok = true;
  for (int i = 0; i < params.k; ++i) {
    if (!(amp.rung[static_cast<size_t>(i)] > amp.rung[static_cast<size_t>(i) + 1])) rung_ok = false;
    if (!(amp.rail[static_cast<size_t>(i)] > amp.rail[static_cast<size_t>(i) + 1])) rail_ok = false;
  }
  return {rung_ok, rail_ok};
}

bool chebyshev_gap_inequalities(const LadderParams& params, int k) {
  if (k < 0 || k > params.k) throw std::invalid_argument("chebyshev_gap_inequalities: k outside 0..params.k");
  // the gap-convexity inequality reads one entry past u_{k+1}
  ChebyshevCache cheb(LadderParams{params.m, params.l, params.k + 1});
  for (int i = 0; i <= k; ++i) {
    if (!(cheb.u(i + 1) > cheb.u(i) + 1.0)) return false;
    if (!(cheb.u(i + 2) - cheb.u(i + 1) > cheb.u(i + 1) - cheb.u(i))) return false;
    double tail = 0.0;
    for (int n = i; n <= k; ++n) tail += 1.0 / (cheb.u(n) * cheb.u(n + 1));
    if (!(tail < 1.0 / cheb.u(i) * 1.0 / (cheb.u(i + 1) - cheb.u(i)))) return false;
  }
  return true;
}

namespace {

Eigen::VectorXd to_real(const ArcVector& xi) {
  Eigen::VectorXd out(xi.size());
  for (Eigen::Index i = 0; i < xi.size(); ++i) out(i) = xi(i).real();
  return out;
}

}  // namespace

Eigen::VectorXd route_eigenvector(const LadderGraph& ladder, const DecoratedGraph& g) {
  Eigen::VectorXd xi = to_real(path_eigenvector(g, ladder.route_arcs));
  return xi / xi.norm();
}

std::vector<Eigen::VectorXd> cycle_eigenvectors(const LadderGraph& ladder,
                                                const DecoratedGraph& g) {
  Eigen::VectorXd xi = route_eigenvector(ladder, g);
  std::vector<Eigen::VectorXd> gammas;
  gammas.reserve(ladder.cycle_arcs.size());
  for (const auto& cycle : ladder.cycle_arcs) {
    Eigen::VectorXd gamma = to_real(cycle_eigenvector(g, cycle));
    gamma /= gamma.norm();
    double reference = gammas.empty() ? gamma.dot(xi) : gamma.dot(gammas.back());
    if (reference < 0) gamma = -gamma;
    gammas.push_back(std::move(gamma));
  }
  return gammas;
}

Eigen::VectorXd closed_form_navigation(const LadderGraph& ladder, const DecoratedGraph& g) {
  LadderParams params{ladder.m, ladder.l, ladder.k};
  ChebyshevCache cheb(params);
  Eigen::VectorXd xi = route_eigenvector(ladder, g);
  std::vector<Eigen::VectorXd> gammas = cycle_eigenvectors(ladder, g);

  Eigen::VectorXd correction = Eigen::VectorXd::Zero(xi.size());
  double factor = std::sqrt(2.0 * (params.l + params.m)) / std::sqrt(params.m + 3.0);
  for (int n = 0; n <= params.k; ++n) {
    double weight = factor / (cheb.u(n) * cheb.u(n + 1));
    for (int s = 0; s <= n; ++s)
      correction += weight * (s % 2 == 0 ? 1.0 : -1.0) * cheb.u(s) * gammas[static_cast<size_t>(s)];
  }
  Eigen::VectorXd phi = (xi - correction) / std::sqrt(residual_norm_sq(params));
  if (phi(g.start_loop()) < 0) phi = -phi;
  return phi;
}

}  // namespace qwmaze
