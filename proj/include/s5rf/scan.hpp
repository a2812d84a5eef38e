#pragma once

#include <Eigen/Dense>
#include <thread>
#include <vector>

#include "s5rf/common.hpp"

namespace s5rf {

// One element of the associative recurrence x_k = a (.) x_{k-1} + b.
struct ScanElement {
  Eigen::VectorXcd a;
  Eigen::VectorXcd b;
};

// (a1,b1) o (a2,b2) = (a1 (.) a2, a2 (.) b1 + b2); left operand acts first.
inline ScanElement combine(const ScanElement& e1, const ScanElement& e2) {
  return {e1.a.cwiseProduct(e2.a), e2.a.cwiseProduct(e1.b) + e2.b};
}

struct StateSequence {
  Eigen::MatrixXcd states;  // H x L, one column per step
  int length() const { return int(states.cols()); }
};

namespace detail {

inline void check_scan_shapes(const Eigen::VectorXcd& a_bar,
                              const Eigen::MatrixXcd& inputs,
                              const Eigen::VectorXcd& x0) {
  if (inputs.rows() != a_bar.size() || x0.size() != a_bar.size())
    throw ConfigError("scan: shape mismatch between a_bar, inputs, x0");
  if (inputs.cols() < 1) throw ConfigError("scan: empty sequence");
}

// Fixed block length; the reduction tree must not depend on the worker
// count, otherwise results would vary run to run.
inline constexpr int kScanBlock = 256;

template <typename Fn>
void parallel_blocks(int num_blocks, int workers, Fn&& fn) {
  workers = std::min(std::max(workers, 1), num_blocks);
  if (workers == 1) {
    for (int j = 0; j < num_blocks; ++j) fn(j);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int j = w; j < num_blocks; j += workers) fn(j);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Reference left-fold of the recurrence.
inline StateSequence scan_sequential(
    const Eigen::VectorXcd& a_bar, const Eigen::MatrixXcd& inputs,
    const Eigen::VectorXcd& x0) {
  detail::check_scan_shapes(a_bar, inputs, x0);
  const int len = int(inputs.cols());
  StateSequence out;
  out.states.resize(inputs.rows(), len);
  Eigen::VectorXcd x = x0;
  for (int k = 0; k < len; ++k) {
    x = a_bar.cwiseProduct(x) + inputs.col(k);
    out.states.col(k) = x;
  }
  return out;
}

inline StateSequence scan_sequential(const Eigen::VectorXcd& a_bar,
                                     const Eigen::MatrixXcd& inputs) {
  return scan_sequential(a_bar, inputs,
                         Eigen::VectorXcd::Zero(a_bar.size()));
}

// Two-pass block scan: per-block inclusive scans, a sequential sweep over the
// block aggregates, then per-block application of the carried prefix. Blocks
// are distributed over `workers` threads; the arithmetic per element is the
// same for any worker count, so outputs are bit-identical across counts.
inline StateSequence scan_parallel(const Eigen::VectorXcd& a_bar,
                                   const Eigen::MatrixXcd& inputs,
                                   const Eigen::VectorXcd& x0,
                                   int workers = 1) {
  detail::check_scan_shapes(a_bar, inputs, x0);
  const int len = int(inputs.cols());
  const int h = int(inputs.rows());
  const int block = detail::kScanBlock;
  const int num_blocks = (len + block - 1) / block;

  StateSequence out;
  out.states.resize(h, len);           // local accumulated inputs, then states
  Eigen::MatrixXcd local_a(h, len);    // local accumulated transitions

  detail::parallel_blocks(num_blocks, workers, [&](int j) {
    const int lo = j * block;
    const int hi = std::min(lo + block, len);
    Eigen::VectorXcd acc_a = Eigen::VectorXcd::Ones(h);
    Eigen::VectorXcd acc_b = Eigen::VectorXcd::Zero(h);
    for (int k = lo; k < hi; ++k) {
      acc_a = acc_a.cwiseProduct(a_bar);
      acc_b = a_bar.cwiseProduct(acc_b) + inputs.col(k);
      local_a.col(k) = acc_a;
      out.states.col(k) = acc_b;
    }
  });

  // Exclusive prefixes of the block aggregates, seeded with x0.
  Eigen::MatrixXcd carry(h, num_blocks);
  Eigen::VectorXcd x = x0;
  for (int j = 0; j < num_blocks; ++j) {
    carry.col(j) = x;
    const int last = std::min((j + 1) * block, len) - 1;
    x = local_a.col(last).cwiseProduct(x) + out.states.col(last);
  }

  detail::parallel_blocks(num_blocks, workers, [&](int j) {
    const int lo = j * block;
    const int hi = std::min(lo + block, len);
    for (int k = lo; k < hi; ++k)
      out.states.col(k) += local_a.col(k).cwiseProduct(carry.col(j));
  });
  return out;
}

struct ScanGrads {
  Eigen::VectorXcd grad_a_bar;
  Eigen::MatrixXcd grad_inputs;
  Eigen::VectorXcd grad_x0;
};

// Reverse-mode pass of the recurrence. Gradients of a real loss with respect
// to complex values are stored as dL/dRe + i dL/dIm; the reversed recurrence
// is itself a scan with conj(a_bar).
inline ScanGrads scan_adjoint(const Eigen::VectorXcd& a_bar,
                              const Eigen::MatrixXcd& inputs,
                              const Eigen::MatrixXcd& upstream_grads,
                              const Eigen::VectorXcd& x0) {
  detail::check_scan_shapes(a_bar, inputs, x0);
  if (upstream_grads.rows() != inputs.rows() ||
      upstream_grads.cols() != inputs.cols())
    throw ConfigError("scan_adjoint: upstream gradient shape mismatch");
  const int len = int(inputs.cols());
  const int h = int(inputs.rows());
  const StateSequence fwd = scan_sequential(a_bar, inputs, x0);
  const Eigen::VectorXcd a_conj = a_bar.conjugate();

  ScanGrads g;
  g.grad_inputs.resize(h, len);
  g.grad_a_bar = Eigen::VectorXcd::Zero(h);
  Eigen::VectorXcd lam = Eigen::VectorXcd::Zero(h);
  for (int k = len - 1; k >= 0; --k) {
    lam = a_conj.cwiseProduct(lam) + upstream_grads.col(k);
    g.grad_inputs.col(k) = lam;
    const Eigen::VectorXcd prev = k > 0 ? fwd.states.col(k - 1).eval() : x0;
    g.grad_a_bar += lam.cwiseProduct(prev.conjugate());
  }
  g.grad_x0 = a_conj.cwiseProduct(lam);
  return g;
}

inline ScanGrads scan_adjoint(const Eigen::VectorXcd& a_bar,
                              const Eigen::MatrixXcd& inputs,
                              const Eigen::MatrixXcd& upstream_grads) {
  return scan_adjoint(a_bar, inputs, upstream_grads,
                      Eigen::VectorXcd::Zero(a_bar.size()));
}

}  // namespace s5rf
