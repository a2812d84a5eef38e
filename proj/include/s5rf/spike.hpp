#pragma once

#include <cmath>

namespace s5rf {

// Multi-Gaussian surrogate shape; stands in for the Heaviside derivative in
// the backward pass only.
struct SurrogateParams {
  double h = 0.15;
  double s = 6.0;
  double sigma = 0.5;
};

// How the spike nonlinearity is evaluated in the forward pass.
//   kHard:     binary Heaviside spikes (training and inference default)
//   kSmooth:   antiderivative of the surrogate, for finite-difference checks
//   kIdentity: linear diagnostic mode, spikes replaced by Re(x) - no threshold
enum class SpikeMode { kHard, kSmooth, kIdentity };

// g(v) = (1+h) G(v;0,sigma) - h G(v;sigma,s*sigma) - h G(v;-sigma,s*sigma)
// with unnormalized gaussians G; even in v by construction.
inline double surrogate_grad(double v, const SurrogateParams& p = {}) {
  auto g = [](double x, double mu, double c) {
    const double z = (x - mu) / c;
    return std::exp(-0.5 * z * z);
  };
  return (1.0 + p.h) * g(v, 0.0, p.sigma) - p.h * g(v, p.sigma, p.s * p.sigma) -
         p.h * g(v, -p.sigma, p.s * p.sigma);
}

// Antiderivative of surrogate_grad with S(-inf) = 0. Forward pass of the
// smooth diagnostic model; its exact derivative is surrogate_grad, which is
// what makes BPTT comparable against central finite differences.
inline double surrogate_primitive(double v, const SurrogateParams& p = {}) {
  constexpr double kSqrtHalfPi = 1.2533141373155002512078826424055;
  auto integral = [&](double x, double mu, double c) {
    return c * kSqrtHalfPi * (1.0 + std::erf((x - mu) / (c * 1.4142135623730951)));
  };
  return (1.0 + p.h) * integral(v, 0.0, p.sigma) -
         p.h * integral(v, p.sigma, p.s * p.sigma) -
         p.h * integral(v, -p.sigma, p.s * p.sigma);
}

// Heaviside with H(0) = 1: a membrane exactly at threshold fires.
inline double spike_hard(double v) { return v >= 0.0 ? 1.0 : 0.0; }

}  // namespace s5rf
