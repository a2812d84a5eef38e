#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/data.hpp"
#include "s5rf/model.hpp"

namespace s5rf {

struct TrainConfig {
  double lr_connections = 1e-3;
  double lr_neuron = 1e-4;
  double weight_decay = 1e-4;  // connections/encoder/readout only
  int epochs = 20;
  int batch_size = 32;
  double min_lr = 1e-6;  // cosine annealing floor (for the connections group)
  std::uint64_t seed = 0;
  bool fix_eta = false;
  bool enforce_positive_decay = false;
  bool grad_clip = false;  // safety rail, off by default
  double grad_clip_norm = 10.0;
  bool augment_channel_shift = false;
  int channel_shift_max = 2;
  double channel_shift_prob = 0.2;
  bool augment_cutmix = false;

  void validate() const {
    if (!(lr_neuron > 0) || lr_connections < lr_neuron)
      throw ConfigError("train: need lr_connections >= lr_neuron > 0");
    if (epochs < 1 || batch_size < 1)
      throw ConfigError("train: epochs and batch_size must be positive");
  }
};

// Mean over the batch of -sum labels * log softmax(logits). Labels may be
// one-hot or soft; each row must sum to 1.
inline double cross_entropy_loss(const Eigen::MatrixXd& logits,
                                 const Eigen::MatrixXd& labels) {
  if (logits.rows() != labels.rows() || logits.cols() != labels.cols())
    throw ConfigError("cross_entropy_loss: shape mismatch");
  double loss = 0.0;
  for (Eigen::Index b = 0; b < logits.rows(); ++b) {
    if (std::abs(labels.row(b).sum() - 1.0) > 1e-6)
      throw ConfigError("cross_entropy_loss: label row does not sum to 1");
    const double mx = logits.row(b).maxCoeff();
    const double lse =
        mx + std::log((logits.row(b).array() - mx).exp().sum());
    loss -= (labels.row(b).array() * (logits.row(b).array() - lse)).sum();
  }
  return loss / double(logits.rows());
}

// dL/dlogits for a single sample: softmax(logits) - label.
inline Eigen::VectorXd cross_entropy_grad(const Eigen::VectorXd& logits,
                                          const Eigen::VectorXd& label) {
  const double mx = logits.maxCoeff();
  Eigen::VectorXd p = (logits.array() - mx).exp();
  p /= p.sum();
  return p - label;
}

inline double cosine_lr(int step, int total, double lr_max, double lr_min) {
  if (total <= 0) return lr_max;
  const double t = double(std::clamp(step, 0, total)) / double(total);
  return lr_min + 0.5 * (lr_max - lr_min) * (1.0 + std::cos(3.14159265358979323846 * t));
}

// ---------------------------------------------------------------------------
// Parameter groups. Complex arrays are exposed as interleaved doubles so the
// optimizer only ever sees real values.

struct ParamView {
  double* param;
  double* grad;
  Eigen::Index size;
};

struct ParamGroup {
  std::string name;  // connections | neuron | encoder | readout
  std::vector<ParamView> members;
  double lr = 0.0;
  double weight_decay = 0.0;

  Eigen::Index total() const {
    Eigen::Index n = 0;
    for (const auto& v : members) n += v.size;
    return n;
  }
};

inline std::vector<ParamGroup> build_param_groups(Model& m, ModelGrads& g,
                                                  const TrainConfig& cfg) {
  auto real_view = [](Eigen::MatrixXd& p, Eigen::MatrixXd& gr) {
    return ParamView{p.data(), gr.data(), p.size()};
  };
  auto vec_view = [](Eigen::VectorXd& p, Eigen::VectorXd& gr) {
    return ParamView{p.data(), gr.data(), p.size()};
  };
  auto cplx_view = [](Eigen::MatrixXcd& p, Eigen::MatrixXcd& gr) {
    return ParamView{reinterpret_cast<double*>(p.data()),
                     reinterpret_cast<double*>(gr.data()), 2 * p.size()};
  };

  ParamGroup connections{"connections", {}, cfg.lr_connections,
                         cfg.weight_decay};
  ParamGroup neuron{"neuron", {}, cfg.lr_neuron, 0.0};
  ParamGroup encoder{"encoder", {}, cfg.lr_connections, cfg.weight_decay};
  ParamGroup readout{"readout", {}, cfg.lr_connections, cfg.weight_decay};

  encoder.members.push_back(real_view(m.encoder_w, g.encoder_w));
  if (m.encoder_b.size() > 0)
    encoder.members.push_back(vec_view(m.encoder_b, g.encoder_b));
  for (std::size_t l = 0; l < m.layers.size(); ++l) {
    connections.members.push_back(
        cplx_view(m.layers[l].connection, g.layers[l].connection));
    neuron.members.push_back(
        vec_view(m.layers[l].log_neg_real, g.layers[l].log_neg_real));
    neuron.members.push_back(vec_view(m.layers[l].freq, g.layers[l].freq));
    if (!cfg.fix_eta)
      neuron.members.push_back(
          vec_view(m.layers[l].log_eta, g.layers[l].log_eta));
  }
  neuron.members.push_back(vec_view(m.readout.log_tau, g.readout_log_tau));
  readout.members.push_back(real_view(m.readout.weights, g.readout_w));
  if (m.readout.bias.size() > 0)
    readout.members.push_back(vec_view(m.readout.bias, g.readout_bias));
  return {connections, neuron, encoder, readout};
}

// Adam with bias correction and decoupled weight decay.
class AdamOptimizer {
 public:
  AdamOptimizer(std::vector<ParamGroup> groups, double beta1 = 0.9,
                double beta2 = 0.999, double eps = 1e-8)
      : groups_(std::move(groups)), beta1_(beta1), beta2_(beta2), eps_(eps) {
    for (const auto& g : groups_) {
      m_.emplace_back(Eigen::VectorXd::Zero(g.total()));
      v_.emplace_back(Eigen::VectorXd::Zero(g.total()));
    }
  }

  // lr_scale multiplies every group's base rate (cosine schedule).
  void step(double lr_scale = 1.0) {
    ++t_;
    const double bc1 = 1.0 - std::pow(beta1_, t_);
    const double bc2 = 1.0 - std::pow(beta2_, t_);
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      const ParamGroup& g = groups_[gi];
      const double lr = g.lr * lr_scale;
      Eigen::Index off = 0;
      for (const ParamView& view : g.members) {
        for (Eigen::Index i = 0; i < view.size; ++i, ++off) {
          const double grad = view.grad[i];
          double& m = m_[gi][off];
          double& v = v_[gi][off];
          m = beta1_ * m + (1.0 - beta1_) * grad;
          v = beta2_ * v + (1.0 - beta2_) * grad * grad;
          const double update = (m / bc1) / (std::sqrt(v / bc2) + eps_);
          view.param[i] -= lr * (update + g.weight_decay * view.param[i]);
        }
      }
    }
  }

  const std::vector<ParamGroup>& groups() const { return groups_; }
  int steps_taken() const { return t_; }

 private:
  std::vector<ParamGroup> groups_;
  std::vector<Eigen::VectorXd> m_, v_;
  double beta1_, beta2_, eps_;
  int t_ = 0;
};

struct EpochMetrics {
  double loss = 0.0;
  double accuracy = 0.0;
  double sops = 0.0;  // mean emitted spikes per sample, all layers
  double lr_scale = 1.0;
};

inline Eigen::VectorXd label_vector(const Sample& s, int num_classes) {
  if (s.soft_label.size() > 0) return s.soft_label;
  if (s.label < 0 || s.label >= num_classes)
    throw ConfigError("sample label out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(num_classes);
  v[s.label] = 1.0;
  return v;
}

// Owns the optimizer state across epochs; the model is borrowed.
class Trainer {
 public:
  // Optional per-sample augmentation hook, called as (sample, epoch, index).
  using AugmentFn = std::function<Sample(const Sample&, int, int)>;

  Trainer(Model& model, const TrainConfig& cfg, int steps_per_epoch)
      : model_(model),
        cfg_(cfg),
        grads_(ModelGrads::zeros_like(model)),
        total_steps_(steps_per_epoch * cfg.epochs),
        opt_(build_param_groups(model, grads_, cfg)) {
    cfg_.validate();
  }

  void set_augment(AugmentFn fn) { augment_ = std::move(fn); }

  EpochMetrics train_epoch(const std::vector<Sample>& data, int epoch) {
    const int n = int(data.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Rng shuffle_rng(cfg_.seed * 7919ULL + std::uint64_t(epoch));
    for (int i = n - 1; i > 0; --i)
      std::swap(order[i], order[int(shuffle_rng.uniform_int(std::uint64_t(i + 1)))]);

    EpochMetrics metrics;
    long correct = 0;
    long total_spikes = 0;
    const int k = model_.config.num_classes;

    for (int start = 0; start < n; start += cfg_.batch_size) {
      const int bsz = std::min(cfg_.batch_size, n - start);
      grads_.setZero();
      double batch_loss = 0.0;
      for (int b = 0; b < bsz; ++b) {
        const int idx = order[start + b];
        Sample aug = augment_ ? augment_(data[idx], epoch, idx) : data[idx];
        ForwardTrace tr;
        const Eigen::VectorXd logits = model_forward(model_, aug.input, tr);
        for (const auto& lt : tr.layers)
          total_spikes += long(lt.spikes.sum());
        const Eigen::VectorXd label = label_vector(aug, k);
        const double mx = logits.maxCoeff();
        const double lse = mx + std::log((logits.array() - mx).exp().sum());
        batch_loss -= (label.array() * (logits.array() - lse)).sum();
        Eigen::Index pred;
        logits.maxCoeff(&pred);
        Eigen::Index want;
        label.maxCoeff(&want);
        if (pred == want) ++correct;
        const Eigen::VectorXd dlogits =
            cross_entropy_grad(logits, label) / double(bsz);
        model_backward(model_, tr, aug.input, dlogits, grads_);
      }
      batch_loss /= double(bsz);
      if (!std::isfinite(batch_loss))
        throw NumericError("train_epoch: non-finite loss at step " +
                           std::to_string(opt_.steps_taken()) +
                           grad_norm_report());
      metrics.loss += batch_loss * bsz;

      if (cfg_.grad_clip) clip_gradients();
      const double scale = cosine_lr(opt_.steps_taken(), total_steps_, 1.0,
                                     cfg_.min_lr / cfg_.lr_connections);
      metrics.lr_scale = scale;
      opt_.step(scale);
      post_step_projection();
    }
    metrics.loss /= double(n);
    metrics.accuracy = double(correct) / double(n);
    metrics.sops = double(total_spikes) / double(n);
    return metrics;
  }

  const AdamOptimizer& optimizer() const { return opt_; }

 private:
  void clip_gradients() {
    double sq = 0.0;
    for (const auto& g : opt_.groups())
      for (const auto& v : g.members)
        for (Eigen::Index i = 0; i < v.size; ++i) sq += v.grad[i] * v.grad[i];
    const double norm = std::sqrt(sq);
    if (norm <= cfg_.grad_clip_norm) return;
    const double f = cfg_.grad_clip_norm / norm;
    for (const auto& g : opt_.groups())
      for (const auto& v : g.members)
        for (Eigen::Index i = 0; i < v.size; ++i) v.grad[i] *= f;
  }

  void post_step_projection() {
    for (auto& layer : model_.layers) {
      for (Eigen::Index i = 0; i < layer.log_neg_real.size(); ++i) {
        if (!std::isfinite(layer.log_neg_real[i]))
          throw NumericError("train: non-finite decay parameter");
        // The log storage keeps exp(log_neg_real) > 0 already; the ablation
        // switch additionally floors the decay away from zero.
        if (cfg_.enforce_positive_decay)
          layer.log_neg_real[i] =
              std::max(layer.log_neg_real[i], std::log(1e-6));
      }
    }
  }

  std::string grad_norm_report() const {
    std::string out;
    for (const auto& g : opt_.groups()) {
      double sq = 0.0;
      for (const auto& v : g.members)
        for (Eigen::Index i = 0; i < v.size; ++i) sq += v.grad[i] * v.grad[i];
      out += " |" + g.name + "|=" + std::to_string(std::sqrt(sq));
    }
    return out;
  }

  Model& model_;
  TrainConfig cfg_;
  ModelGrads grads_;
  int total_steps_;
  AdamOptimizer opt_;
  AugmentFn augment_;
};

// Central finite differences of the cross-entropy loss over a random subset
// of parameters against the BPTT gradient. Runs the smooth or identity
// forward so the loss is differentiable.
inline double grad_check(Model& model, const Sample& sample,
                         double epsilon = 1e-6,
                         SpikeMode mode = SpikeMode::kSmooth,
                         int subset = 128, std::uint64_t seed = 0) {
  const int k = model.config.num_classes;
  const Eigen::VectorXd label = label_vector(sample, k);

  auto loss_at = [&]() {
    const Eigen::VectorXd logits = model_forward(model, sample.input, mode);
    const double mx = logits.maxCoeff();
    const double lse = mx + std::log((logits.array() - mx).exp().sum());
    return -(label.array() * (logits.array() - lse)).sum();
  };

  ModelGrads grads = ModelGrads::zeros_like(model);
  {
    ForwardTrace tr;
    const Eigen::VectorXd logits = model_forward(model, sample.input, tr, mode);
    model_backward(model, tr, sample.input,
                   cross_entropy_grad(logits, label), grads, mode);
  }

  TrainConfig dummy;  // groups only carry views here
  std::vector<ParamGroup> groups = build_param_groups(model, grads, dummy);
  std::vector<std::pair<double*, double>> entries;  // param ptr, analytic grad
  for (const auto& g : groups)
    for (const auto& v : g.members)
      for (Eigen::Index i = 0; i < v.size; ++i)
        entries.emplace_back(v.param + i, v.grad[i]);

  Rng rng(seed ^ 0x517cc1b727220a95ULL);
  std::vector<std::size_t> picks;
  if (int(entries.size()) <= subset) {
    for (std::size_t i = 0; i < entries.size(); ++i) picks.push_back(i);
  } else {
    for (int i = 0; i < subset; ++i)
      picks.push_back(std::size_t(rng.uniform_int(entries.size())));
  }

  // Entries with near-zero gradient are dominated by finite-difference
  // round-off; the error floor is tied to the overall gradient scale so they
  // do not register as spurious relative blow-ups.
  double gmax = 0.0;
  for (const auto& [p, an] : entries) gmax = std::max(gmax, std::abs(an));
  const double floor = std::max(1e-8, 1e-2 * gmax);

  double worst = 0.0;
  for (std::size_t idx : picks) {
    double* p = entries[idx].first;
    const double analytic = entries[idx].second;
    const double saved = *p;
    const double eps = epsilon * std::max(1.0, std::abs(saved));
    *p = saved + eps;
    const double up = loss_at();
    *p = saved - eps;
    const double down = loss_at();
    *p = saved;
    const double fd = (up - down) / (2.0 * eps);
    const double rel =
        std::abs(fd - analytic) / std::max({floor, std::abs(fd), std::abs(analytic)});
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace s5rf
