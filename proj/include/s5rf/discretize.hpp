#pragma once

#include <Eigen/Dense>
#include <limits>
#include <utility>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/hippo.hpp"

namespace s5rf {

// Discrete diagonal transition a_bar and input matrix b_bar for one step dt.
struct DiscreteSystem {
  Eigen::VectorXcd a_bar;  // length H
  Eigen::MatrixXcd b_bar;  // H x H_in
  double dt = 1.0;
};

namespace detail {

// b_bar row factor for zero-order hold: (exp(eta*dt*lambda) - 1) / lambda,
// with a series switch near eta*dt*lambda = 0 to dodge cancellation.
inline cplx zoh_input_factor(cplx lambda, double eta, double dt) {
  const cplx m = eta * dt * lambda;
  if (std::abs(m) < 1e-8) return eta * dt * (1.0 + 0.5 * m);
  return (std::exp(m) - 1.0) / lambda;
}

}  // namespace detail

inline DiscreteSystem discretize_zoh(const SsmLayerParams& params, double dt) {
  if (dt <= 0.0) throw ConfigError("discretize_zoh: dt must be positive");
  const Eigen::VectorXcd lambda = params.lambda();
  const Eigen::VectorXd eta = params.eta();
  const int h = params.state_size();
  DiscreteSystem d;
  d.dt = dt;
  d.a_bar.resize(h);
  d.b_bar.resize(h, params.input_size());
  for (int i = 0; i < h; ++i) {
    d.a_bar[i] = std::exp(eta[i] * dt * lambda[i]);
    d.b_bar.row(i) =
        detail::zoh_input_factor(lambda[i], eta[i], dt) * params.connection.row(i);
  }
  return d;
}

inline DiscreteSystem discretize_dirac(const SsmLayerParams& params, double dt) {
  if (dt <= 0.0) throw ConfigError("discretize_dirac: dt must be positive");
  const Eigen::VectorXcd lambda = params.lambda();
  const Eigen::VectorXd eta = params.eta();
  const int h = params.state_size();
  DiscreteSystem d;
  d.dt = dt;
  d.a_bar.resize(h);
  d.b_bar.resize(h, params.input_size());
  for (int i = 0; i < h; ++i) {
    d.a_bar[i] = std::exp(eta[i] * dt * lambda[i]);
    d.b_bar.row(i) = eta[i] * params.connection.row(i);
  }
  return d;
}

// Exact solution of dx/dt = lambda x + u(t) for a weighted Dirac comb with
// x(t0) = 0: the sum of exp(lambda (t - t_n)) u_n over events up to t. Events
// after t contribute nothing. Any input weighting (B, eta) is expected to be
// folded into the event weights.
inline cplx analytic_state(cplx lambda,
                           const std::vector<std::pair<double, cplx>>& events,
                           double t) {
  cplx x = 0.0;
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& [tn, un] : events) {
    if (tn < prev) throw ConfigError("analytic_state: events not sorted");
    prev = tn;
    if (tn > t) continue;
    x += std::exp(lambda * (t - tn)) * un;
  }
  return x;
}

}  // namespace s5rf
