#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "s5rf/common.hpp"

namespace s5rf {

enum class DiscretizationMode { kZoh, kDirac };

// Real H x H matrix with A + A^T = -I; all eigenvalues sit on Re = -0.5.
struct HippoNormal {
  Eigen::MatrixXd entries;
  int size() const { return int(entries.rows()); }
};

struct EigenSystem {
  Eigen::VectorXcd lambdas;        // sorted by ascending imaginary part
  Eigen::MatrixXcd basis;          // unitary V
  Eigen::MatrixXcd basis_inverse;  // V^dagger
};

// Per-layer learnable state. Eigenvalues are stored as log(-Re) and Im so the
// real part stays negative under unconstrained updates; eta likewise in log.
struct SsmLayerParams {
  Eigen::VectorXd log_neg_real;  // length H
  Eigen::VectorXd freq;          // length H, radians per step
  Eigen::VectorXd log_eta;       // length H
  Eigen::MatrixXcd connection;   // H x H_in, merged V^-1 B C product
  double threshold = 1.0;
  DiscretizationMode mode = DiscretizationMode::kDirac;
  // Set only for a continuous-input first layer: spike on Re(fixed_basis * x).
  // Never updated during training. basis_block is its block-diagonal block
  // size (0 = dense), kept so products can run block-wise.
  std::optional<Eigen::MatrixXcd> fixed_basis;
  int basis_block = 0;

  int state_size() const { return int(log_neg_real.size()); }
  int input_size() const { return int(connection.cols()); }

  Eigen::VectorXcd lambda() const {
    Eigen::VectorXcd l(log_neg_real.size());
    for (Eigen::Index i = 0; i < l.size(); ++i)
      l[i] = cplx(-std::exp(log_neg_real[i]), freq[i]);
    return l;
  }
  Eigen::VectorXd eta() const { return log_eta.array().exp(); }
};

inline HippoNormal build_hippo_normal(int size) {
  if (size < 1) throw ConfigError("build_hippo_normal: size must be >= 1");
  Eigen::MatrixXd a(size, size);
  for (int n = 0; n < size; ++n) {
    for (int k = 0; k < size; ++k) {
      if (n == k) {
        a(n, k) = -0.5;
      } else {
        double m = std::sqrt((n + 0.5) * (k + 0.5));
        a(n, k) = n > k ? -m : m;
      }
    }
  }
  return {std::move(a)};
}

// Diagonalizes via the Hermitian matrix i*(A + I/2); the skew-symmetric shift
// makes the problem self-adjoint, so the returned basis is unitary up to
// round-off and no general nonsymmetric solver is needed.
inline EigenSystem eig_hippo_normal(const HippoNormal& m) {
  const int h = m.size();
  Eigen::MatrixXcd herm =
      cplx(0, 1) * (m.entries + 0.5 * Eigen::MatrixXd::Identity(h, h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success)
    throw NumericError("eig_hippo_normal: eigensolver did not converge");

  // herm v = mu v  =>  A v = (-0.5 - i mu) v
  Eigen::VectorXcd lambdas(h);
  for (int i = 0; i < h; ++i) lambdas[i] = cplx(-0.5, -solver.eigenvalues()[i]);
  Eigen::MatrixXcd basis = solver.eigenvectors();

  // Ascending imaginary part, negative-imag conjugate first on ties.
  std::vector<int> order(h);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lambdas[a].imag() != lambdas[b].imag())
      return lambdas[a].imag() < lambdas[b].imag();
    return lambdas[a].real() < lambdas[b].real();
  });
  EigenSystem out;
  out.lambdas.resize(h);
  out.basis.resize(h, h);
  for (int i = 0; i < h; ++i) {
    out.lambdas[i] = lambdas[order[i]];
    out.basis.col(i) = basis.col(order[i]);
  }
  out.basis_inverse = out.basis.adjoint();
  return out;
}

namespace detail {

// Complex matrix with independent zero-mean gaussian real/imag parts and
// per-element variance 1/fan_in.
inline Eigen::MatrixXcd random_connection(int rows, int cols, Rng& rng) {
  const double scale = std::sqrt(0.5 / double(cols));
  Eigen::MatrixXcd w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      w(i, j) = cplx(scale * rng.normal(), scale * rng.normal());
  return w;
}

inline void lambda_to_params(const Eigen::VectorXcd& lambda,
                             SsmLayerParams& p) {
  const int h = int(lambda.size());
  p.log_neg_real.resize(h);
  p.freq.resize(h);
  for (int i = 0; i < h; ++i) {
    if (lambda[i].real() >= 0.0)
      throw NumericError("lambda_to_params: nonnegative real part");
    p.log_neg_real[i] = std::log(-lambda[i].real());
    p.freq[i] = lambda[i].imag();
  }
}

}  // namespace detail

// Block-diagonal tiling of the eigenvector basis of A_N(block_size).
inline Eigen::MatrixXcd block_diag_basis(const EigenSystem& eig, int h) {
  const int b = int(eig.basis.rows());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(h, h);
  for (int off = 0; off < h; off += b)
    v.block(off, off, b, b) = eig.basis;
  return v;
}

inline SsmLayerParams init_layer(int h_in, int h, int block_size,
                                 std::uint64_t seed, DiscretizationMode mode) {
  if (block_size < 1 || h % block_size != 0)
    throw ConfigError("init_layer: block_size must divide H");
  EigenSystem eig = eig_hippo_normal(build_hippo_normal(block_size));

  SsmLayerParams p;
  p.mode = mode;
  Eigen::VectorXcd lambda(h);
  for (int off = 0; off < h; off += block_size)
    lambda.segment(off, block_size) = eig.lambdas;
  detail::lambda_to_params(lambda, p);
  p.log_eta = Eigen::VectorXd::Zero(h);

  Rng rng(seed);
  p.connection = detail::random_connection(h, h_in, rng);
  for (int off = 0; off < h; off += block_size)
    p.connection.middleRows(off, block_size) =
        (eig.basis_inverse * p.connection.middleRows(off, block_size)).eval();
  p.threshold = 1.0;
  return p;
}

// Ablation variant: decay b ~ U(2,3), frequency w ~ U(5,10), no basis
// transform on the connection matrix.
inline SsmLayerParams init_layer_random(int h_in, int h, std::uint64_t seed) {
  if (h < 1) throw ConfigError("init_layer_random: H must be >= 1");
  SsmLayerParams p;
  p.mode = DiscretizationMode::kDirac;
  Rng rng(seed);
  p.log_neg_real.resize(h);
  p.freq.resize(h);
  for (int i = 0; i < h; ++i) p.log_neg_real[i] = std::log(rng.uniform(2, 3));
  for (int i = 0; i < h; ++i) p.freq[i] = rng.uniform(5, 10);
  p.log_eta = Eigen::VectorXd::Zero(h);
  p.connection = detail::random_connection(h, h_in, rng);
  p.threshold = 1.0;
  return p;
}

}  // namespace s5rf
