#pragma once

#include <Eigen/Dense>
#include <optional>

#include "s5rf/common.hpp"
#include "s5rf/discretize.hpp"
#include "s5rf/hippo.hpp"
#include "s5rf/scan.hpp"
#include "s5rf/spike.hpp"

namespace s5rf {

// Binary spike raster from complex states: 1 iff Re(x) - xi >= 0. No reset,
// no refractory period; the decaying oscillation ends the burst on its own.
inline Eigen::MatrixXd spike_forward(const Eigen::MatrixXcd& x, double xi) {
  Eigen::MatrixXd s(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      s(i, j) = spike_hard(x(i, j).real() - xi);
  return s;
}

// Everything the backward pass needs from one layer forward evaluation.
// Sequences are H x L with one column per step.
struct LayerTrace {
  Eigen::MatrixXd input;     // H_in x L, as fed to the layer
  Eigen::MatrixXcd wu;       // connection * input
  Eigen::MatrixXcd states;   // scan output
  Eigen::MatrixXd membrane;  // Re(states) or Re(fixed_basis * states)
  Eigen::MatrixXd spikes;    // binary in hard mode, real otherwise
  Eigen::VectorXcd a_bar;
  Eigen::VectorXcd input_factor;  // per-row b_bar scale
};

struct LayerGrads {
  Eigen::VectorXd log_neg_real;
  Eigen::VectorXd freq;
  Eigen::VectorXd log_eta;
  Eigen::MatrixXcd connection;

  static LayerGrads zeros_like(const SsmLayerParams& p) {
    LayerGrads g;
    g.log_neg_real = Eigen::VectorXd::Zero(p.state_size());
    g.freq = Eigen::VectorXd::Zero(p.state_size());
    g.log_eta = Eigen::VectorXd::Zero(p.state_size());
    g.connection =
        Eigen::MatrixXcd::Zero(p.connection.rows(), p.connection.cols());
    return g;
  }
};

namespace detail {

// Per-row discretization factors; b_bar = diag(input_factor) * connection.
inline void diag_discretize(const SsmLayerParams& p, double dt,
                            Eigen::VectorXcd& a_bar,
                            Eigen::VectorXcd& input_factor) {
  if (dt <= 0.0) throw ConfigError("diag_discretize: dt must be positive");
  const Eigen::VectorXcd lambda = p.lambda();
  const Eigen::VectorXd eta = p.eta();
  const int h = p.state_size();
  a_bar.resize(h);
  input_factor.resize(h);
  for (int i = 0; i < h; ++i) {
    a_bar[i] = std::exp(eta[i] * dt * lambda[i]);
    input_factor[i] = p.mode == DiscretizationMode::kZoh
                          ? zoh_input_factor(lambda[i], eta[i], dt)
                          : cplx(eta[i], 0.0);
  }
}

// connection * input, with column accumulation when the input raster is
// sparse. Spikes are sparse by design, so this is the common case for all
// layers past the first.
inline Eigen::MatrixXcd connection_apply(const Eigen::MatrixXcd& w,
                                         const Eigen::MatrixXd& z) {
  const Eigen::Index nnz = (z.array() != 0.0).count();
  if (4 * nnz >= z.size()) {
    Eigen::MatrixXcd wu(w.rows(), z.cols());
    wu.real() = w.real() * z;
    wu.imag() = w.imag() * z;
    return wu;
  }
  Eigen::MatrixXcd wu = Eigen::MatrixXcd::Zero(w.rows(), z.cols());
  for (Eigen::Index k = 0; k < z.cols(); ++k)
    for (Eigen::Index c = 0; c < z.rows(); ++c)
      if (z(c, k) != 0.0) wu.col(k) += z(c, k) * w.col(c);
  return wu;
}

// y += m * x for a block-diagonal complex m given by its block size.
inline void block_diag_product(const Eigen::MatrixXcd& m, int block,
                               const Eigen::MatrixXcd& x,
                               Eigen::MatrixXcd& y, bool adjoint) {
  const int h = int(m.rows());
  if (block <= 0) block = h;
  y.resize(h, x.cols());
  for (int off = 0; off < h; off += block) {
    const auto blk = m.block(off, off, block, block);
    if (adjoint)
      y.middleRows(off, block) = blk.adjoint() * x.middleRows(off, block);
    else
      y.middleRows(off, block) = blk * x.middleRows(off, block);
  }
}

}  // namespace detail

// One S5-RF layer: discretize from the current parameters, drive the diagonal
// recurrence, threshold the real part (optionally after the fixed basis).
inline LayerTrace rf_layer_forward(const SsmLayerParams& p,
                                   const Eigen::MatrixXd& input,
                                   SpikeMode mode = SpikeMode::kHard,
                                   const SurrogateParams& sur = {},
                                   double dt = 1.0) {
  if (input.rows() != p.input_size())
    throw ConfigError("rf_layer_forward: input dimension mismatch");
  LayerTrace tr;
  tr.input = input;
  detail::diag_discretize(p, dt, tr.a_bar, tr.input_factor);
  tr.wu = detail::connection_apply(p.connection, input);
  Eigen::MatrixXcd drive = tr.input_factor.asDiagonal() * tr.wu;
  tr.states = scan_sequential(tr.a_bar, drive).states;

  if (p.fixed_basis) {
    Eigen::MatrixXcd proj;
    detail::block_diag_product(*p.fixed_basis, p.basis_block, tr.states, proj,
                               false);
    tr.membrane = proj.real();
  } else {
    tr.membrane = tr.states.real();
  }

  const int h = p.state_size();
  const int len = int(input.cols());
  tr.spikes.resize(h, len);
  switch (mode) {
    case SpikeMode::kHard:
      for (int k = 0; k < len; ++k)
        for (int i = 0; i < h; ++i)
          tr.spikes(i, k) = spike_hard(tr.membrane(i, k) - p.threshold);
      break;
    case SpikeMode::kSmooth:
      for (int k = 0; k < len; ++k)
        for (int i = 0; i < h; ++i)
          tr.spikes(i, k) =
              surrogate_primitive(tr.membrane(i, k) - p.threshold, sur);
      break;
    case SpikeMode::kIdentity:
      tr.spikes = tr.membrane;
      break;
  }
  return tr;
}

// Reverse pass. Accumulates parameter gradients into `grads` and returns
// dL/dinput. In hard and smooth mode the Heaviside derivative is replaced by
// the multi-Gaussian surrogate; identity mode backpropagates unchanged.
inline Eigen::MatrixXd rf_layer_backward(const SsmLayerParams& p,
                                         const LayerTrace& tr,
                                         const Eigen::MatrixXd& dspikes,
                                         LayerGrads& grads,
                                         SpikeMode mode = SpikeMode::kHard,
                                         const SurrogateParams& sur = {},
                                         double dt = 1.0) {
  const int h = p.state_size();
  const int len = int(tr.input.cols());

  Eigen::MatrixXd q(h, len);
  if (mode == SpikeMode::kIdentity) {
    q = dspikes;
  } else {
    for (int k = 0; k < len; ++k)
      for (int i = 0; i < h; ++i)
        q(i, k) = dspikes(i, k) *
                  surrogate_grad(tr.membrane(i, k) - p.threshold, sur);
  }

  Eigen::MatrixXcd gx;
  if (p.fixed_basis) {
    detail::block_diag_product(*p.fixed_basis, p.basis_block,
                               q.cast<cplx>(), gx, true);
  } else {
    gx = q.cast<cplx>();
  }

  // Adjoint of the scan over the cached states.
  const Eigen::VectorXcd a_conj = tr.a_bar.conjugate();
  Eigen::MatrixXcd gdrive(h, len);
  Eigen::VectorXcd ga = Eigen::VectorXcd::Zero(h);
  {
    Eigen::VectorXcd lam = Eigen::VectorXcd::Zero(h);
    for (int k = len - 1; k >= 0; --k) {
      lam = a_conj.cwiseProduct(lam) + gx.col(k);
      gdrive.col(k) = lam;
      if (k > 0) ga += lam.cwiseProduct(tr.states.col(k - 1).conjugate());
    }
  }

  // drive = input_factor (.) wu
  Eigen::VectorXcd gr(h);
  for (int i = 0; i < h; ++i)
    gr[i] = tr.wu.row(i).conjugate().cwiseProduct(gdrive.row(i)).sum();
  const Eigen::VectorXcd rconj = tr.input_factor.conjugate();
  Eigen::MatrixXcd gwu = rconj.asDiagonal() * gdrive;

  // Connection gradient; exploit raster sparsity like the forward pass.
  const Eigen::Index nnz = (tr.input.array() != 0.0).count();
  if (4 * nnz >= tr.input.size()) {
    grads.connection.real() += gwu.real() * tr.input.transpose();
    grads.connection.imag() += gwu.imag() * tr.input.transpose();
  } else {
    for (Eigen::Index k = 0; k < len; ++k)
      for (Eigen::Index c = 0; c < tr.input.rows(); ++c)
        if (tr.input(c, k) != 0.0)
          grads.connection.col(c) += tr.input(c, k) * gwu.col(k);
  }

  Eigen::MatrixXd dinput = p.connection.real().transpose() * gwu.real();
  dinput.noalias() += p.connection.imag().transpose() * gwu.imag();

  // Chain a_bar and input_factor into the stored parameters.
  const Eigen::VectorXd eta = p.eta();
  for (int i = 0; i < h; ++i) {
    const double b = std::exp(p.log_neg_real[i]);
    const cplx lambda(-b, p.freq[i]);
    const cplx m = eta[i] * dt * lambda;
    const cplx a = tr.a_bar[i];
    const cplx gm = std::conj(a) * ga[i];
    grads.log_neg_real[i] += -eta[i] * dt * b * gm.real();
    grads.freq[i] += eta[i] * dt * gm.imag();
    grads.log_eta[i] += (std::conj(m) * gm).real();

    const cplx gri = gr[i];
    if (p.mode == DiscretizationMode::kDirac) {
      grads.log_eta[i] += eta[i] * gri.real();
    } else {
      cplx dr_deta, dr_dlambda;
      if (std::abs(m) < 1e-8) {
        dr_deta = dt * (1.0 + m);
        dr_dlambda = 0.5 * eta[i] * eta[i] * dt * dt;
      } else {
        dr_deta = dt * a;
        dr_dlambda = (eta[i] * dt * a - tr.input_factor[i]) / lambda;
      }
      const cplx cg = std::conj(dr_dlambda) * gri;
      grads.log_neg_real[i] += -b * cg.real();
      grads.freq[i] += cg.imag();
      grads.log_eta[i] += (std::conj(dr_deta) * gri).real() * eta[i];
    }
  }
  return dinput;
}

}  // namespace s5rf
