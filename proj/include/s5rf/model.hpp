#pragma once

#include <Eigen/Dense>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/hippo.hpp"
#include "s5rf/layer.hpp"
#include "s5rf/spike.hpp"

namespace s5rf {

enum class FirstLayerMode { kDiracEvent, kZohContinuous };

struct ModelConfig {
  int input_dim = 0;
  std::vector<int> layer_sizes;
  int block_size = 32;
  int num_classes = 0;
  FirstLayerMode first_layer_mode = FirstLayerMode::kDiracEvent;
  bool skip_connections = true;
  std::uint64_t seed = 0;
  double threshold = 1.0;
  SurrogateParams surrogate{};
  bool random_init = false;  // b ~ U(2,3), w ~ U(5,10), no basis transform
  bool encoder_bias = false;
  bool readout_bias = false;
  double readout_tau_init = 10.0;
  // Initial memorization scale, sampled log-uniform per state. The default
  // collapses to eta = 1; long sequences want a slower range like [1e-3, 1e-1].
  double eta_min = 1.0;
  double eta_max = 1.0;

  void validate() const {
    if (input_dim < 1) throw ConfigError("config: input_dim must be >= 1");
    if (num_classes < 2) throw ConfigError("config: num_classes must be >= 2");
    if (layer_sizes.empty()) throw ConfigError("config: no layer sizes");
    for (int h : layer_sizes)
      if (h < 1 || h % block_size != 0)
        throw ConfigError("config: block_size must divide every layer size");
    if (!(eta_min > 0.0) || eta_max < eta_min)
      throw ConfigError("config: need 0 < eta_min <= eta_max");
  }
};

// Non-spiking leaky integrators, one per class, with learnable time constant.
struct ReadoutParams {
  Eigen::MatrixXd weights;  // num_classes x H
  Eigen::VectorXd log_tau;  // num_classes
  Eigen::VectorXd bias;     // num_classes, or empty
};

struct Model {
  ModelConfig config;
  Eigen::MatrixXd encoder_w;  // layer_sizes[0] x input_dim
  Eigen::VectorXd encoder_b;  // empty unless enabled
  std::vector<SsmLayerParams> layers;
  ReadoutParams readout;
};

inline Eigen::VectorXd readout_decay(const ReadoutParams& r) {
  // alpha = exp(-1/tau), tau = exp(log_tau)
  return (-(r.log_tau.array().exp().inverse())).exp().matrix();
}

inline Model init_model(const ModelConfig& cfg) {
  cfg.validate();
  Model m;
  m.config = cfg;
  Rng rng(cfg.seed ^ 0x5f5f5f5f5f5f5f5fULL);

  const int h0 = cfg.layer_sizes.front();
  m.encoder_w.resize(h0, cfg.input_dim);
  const double enc_scale = 1.0 / std::sqrt(double(cfg.input_dim));
  for (int i = 0; i < h0; ++i)
    for (int j = 0; j < cfg.input_dim; ++j)
      m.encoder_w(i, j) = enc_scale * rng.normal();
  if (cfg.encoder_bias) m.encoder_b = Eigen::VectorXd::Zero(h0);

  int h_in = h0;
  for (std::size_t l = 0; l < cfg.layer_sizes.size(); ++l) {
    const int h = cfg.layer_sizes[l];
    const std::uint64_t seed = cfg.seed * 1000003ULL + l;
    SsmLayerParams p =
        cfg.random_init
            ? init_layer_random(h_in, h, seed)
            : init_layer(h_in, h, cfg.block_size, seed,
                         DiscretizationMode::kDirac);
    p.threshold = cfg.threshold;
    if (l == 0 && cfg.first_layer_mode == FirstLayerMode::kZohContinuous) {
      p.mode = DiscretizationMode::kZoh;
      if (!cfg.random_init) {
        p.fixed_basis = block_diag_basis(
            eig_hippo_normal(build_hippo_normal(cfg.block_size)), h);
        p.basis_block = cfg.block_size;
      }
    }
    if (cfg.eta_min != 1.0 || cfg.eta_max != 1.0) {
      Rng eta_rng(seed ^ 0xe7a0e7a0e7a0e7a0ULL);
      const double lo = std::log(cfg.eta_min), hi = std::log(cfg.eta_max);
      for (int i = 0; i < h; ++i)
        p.log_eta[i] = lo + (hi - lo) * eta_rng.uniform();
    }
    m.layers.push_back(std::move(p));
    h_in = h;
  }

  const int k = cfg.num_classes;
  m.readout.weights.resize(k, h_in);
  const double ro_scale = 1.0 / std::sqrt(double(h_in));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < h_in; ++j)
      m.readout.weights(i, j) = ro_scale * rng.normal();
  m.readout.log_tau =
      Eigen::VectorXd::Constant(k, std::log(cfg.readout_tau_init));
  if (cfg.readout_bias) m.readout.bias = Eigen::VectorXd::Zero(k);
  return m;
}

// Per-step linear projection, no bias unless configured.
inline Eigen::MatrixXd encoder_forward(const Eigen::MatrixXd& w,
                                       const Eigen::MatrixXd& u) {
  if (w.cols() != u.rows())
    throw ConfigError("encoder_forward: shape mismatch");
  return w * u;
}

// y_k = exp(-1/tau) (.) y_{k-1} + W s_k, y_0 = 0.
inline Eigen::MatrixXd readout_forward(const ReadoutParams& r,
                                       const Eigen::MatrixXd& s) {
  if (r.weights.cols() != s.rows())
    throw ConfigError("readout_forward: shape mismatch");
  const Eigen::VectorXd alpha = readout_decay(r);
  Eigen::MatrixXd drive = r.weights * s;
  if (r.bias.size() > 0) drive.colwise() += r.bias;
  Eigen::MatrixXd y(drive.rows(), drive.cols());
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(drive.rows());
  for (Eigen::Index k = 0; k < drive.cols(); ++k) {
    acc = alpha.cwiseProduct(acc) + drive.col(k);
    y.col(k) = acc;
  }
  return y;
}

struct ForwardTrace {
  Eigen::MatrixXd encoded;                  // stack input after the encoder
  std::vector<Eigen::MatrixXd> stack_in;    // input to each layer (after skip)
  std::vector<LayerTrace> layers;
  Eigen::MatrixXd stack_out;                // what the readout consumes
  Eigen::MatrixXd readout_y;                // K x L integrator trace
  Eigen::VectorXd logits;
};

// encoder -> S5-RF stack with identity skips between equal-width layers ->
// leaky-integrate readout -> mean pooling over the sequence.
inline Eigen::VectorXd model_forward(const Model& m, const Eigen::MatrixXd& u,
                                     ForwardTrace& tr,
                                     SpikeMode mode = SpikeMode::kHard) {
  if (u.rows() != m.config.input_dim)
    throw ConfigError("model_forward: input dimension mismatch");
  tr.encoded = encoder_forward(m.encoder_w, u);
  if (m.encoder_b.size() > 0) tr.encoded.colwise() += m.encoder_b;

  tr.stack_in.clear();
  tr.layers.clear();
  Eigen::MatrixXd z = tr.encoded;
  for (const SsmLayerParams& p : m.layers) {
    tr.stack_in.push_back(z);
    tr.layers.push_back(
        rf_layer_forward(p, z, mode, m.config.surrogate));
    const Eigen::MatrixXd& s = tr.layers.back().spikes;
    if (m.config.skip_connections && s.rows() == z.rows())
      z = s + z;
    else
      z = s;
  }
  tr.stack_out = z;
  tr.readout_y = readout_forward(m.readout, tr.stack_out);
  tr.logits = tr.readout_y.rowwise().mean();
  return tr.logits;
}

inline Eigen::VectorXd model_forward(const Model& m, const Eigen::MatrixXd& u,
                                     SpikeMode mode = SpikeMode::kHard) {
  ForwardTrace tr;
  return model_forward(m, u, tr, mode);
}

struct ModelGrads {
  Eigen::MatrixXd encoder_w;
  Eigen::VectorXd encoder_b;
  std::vector<LayerGrads> layers;
  Eigen::MatrixXd readout_w;
  Eigen::VectorXd readout_log_tau;
  Eigen::VectorXd readout_bias;

  static ModelGrads zeros_like(const Model& m) {
    ModelGrads g;
    g.encoder_w = Eigen::MatrixXd::Zero(m.encoder_w.rows(), m.encoder_w.cols());
    g.encoder_b = Eigen::VectorXd::Zero(m.encoder_b.size());
    for (const auto& p : m.layers) g.layers.push_back(LayerGrads::zeros_like(p));
    g.readout_w = Eigen::MatrixXd::Zero(m.readout.weights.rows(),
                                        m.readout.weights.cols());
    g.readout_log_tau = Eigen::VectorXd::Zero(m.readout.log_tau.size());
    g.readout_bias = Eigen::VectorXd::Zero(m.readout.bias.size());
    return g;
  }

  void setZero() {
    encoder_w.setZero();
    encoder_b.setZero();
    for (auto& l : layers) {
      l.log_neg_real.setZero();
      l.freq.setZero();
      l.log_eta.setZero();
      l.connection.setZero();
    }
    readout_w.setZero();
    readout_log_tau.setZero();
    readout_bias.setZero();
  }
};

// Full BPTT given dL/dlogits; accumulates into `grads`.
inline void model_backward(const Model& m, const ForwardTrace& tr,
                           const Eigen::MatrixXd& u,
                           const Eigen::VectorXd& dlogits, ModelGrads& grads,
                           SpikeMode mode = SpikeMode::kHard) {
  const int len = int(tr.stack_out.cols());
  const Eigen::VectorXd alpha = readout_decay(m.readout);
  const Eigen::VectorXd tau = m.readout.log_tau.array().exp();

  // Mean pooling spreads dlogits evenly; then the reversed integrator.
  const Eigen::VectorXd per_step = dlogits / double(len);
  Eigen::MatrixXd ybar(dlogits.size(), len);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(dlogits.size());
  for (int k = len - 1; k >= 0; --k) {
    acc = alpha.cwiseProduct(acc) + per_step;
    ybar.col(k) = acc;
  }

  grads.readout_w.noalias() += ybar * tr.stack_out.transpose();
  if (grads.readout_bias.size() > 0) grads.readout_bias += ybar.rowwise().sum();
  Eigen::VectorXd galpha = Eigen::VectorXd::Zero(dlogits.size());
  for (int k = 1; k < len; ++k)
    galpha += ybar.col(k).cwiseProduct(tr.readout_y.col(k - 1));
  // d alpha / d log_tau = alpha / tau
  grads.readout_log_tau += galpha.cwiseProduct(alpha).cwiseQuotient(tau);

  Eigen::MatrixXd dz = m.readout.weights.transpose() * ybar;

  for (int l = int(m.layers.size()) - 1; l >= 0; --l) {
    const bool skip = m.config.skip_connections &&
                      tr.layers[l].spikes.rows() == tr.stack_in[l].rows();
    Eigen::MatrixXd dinput =
        rf_layer_backward(m.layers[l], tr.layers[l], dz, grads.layers[l], mode,
                          m.config.surrogate);
    if (skip) dinput += dz;
    dz = std::move(dinput);
  }

  grads.encoder_w.noalias() += dz * u.transpose();
  if (grads.encoder_b.size() > 0) grads.encoder_b += dz.rowwise().sum();
}

}  // namespace s5rf
