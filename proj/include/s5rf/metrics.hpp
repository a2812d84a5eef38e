#pragma once

#include <Eigen/Dense>
#include <fstream>
#include <string>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/data.hpp"
#include "s5rf/model.hpp"
#include "s5rf/train.hpp"

namespace s5rf {

// The literature is inconsistent about what counts as one spiking operation;
// reports always carry the convention they were computed under.
enum class SopConvention { kSpikeCount, kFanout };

struct SopReport {
  std::vector<double> per_layer_spikes;  // mean spikes per sample per layer
  double total_sops = 0.0;               // mean over the evaluation set
  SopConvention convention = SopConvention::kSpikeCount;
};

// Per-layer spike tallies, exact integer counts averaged at the end. Under
// the fanout convention each spike is charged for the synapses it drives.
inline SopReport count_sops(const Model& model,
                            const std::vector<Sample>& dataset,
                            SopConvention convention = SopConvention::kSpikeCount) {
  SopReport report;
  report.convention = convention;
  const int num_layers = int(model.config.layer_sizes.size());
  std::vector<long> spikes(num_layers, 0);
  for (const Sample& s : dataset) {
    ForwardTrace tr;
    model_forward(model, s.input, tr);
    for (int l = 0; l < num_layers; ++l)
      spikes[l] += long(tr.layers[l].spikes.sum());
  }
  const double n = double(std::max<std::size_t>(dataset.size(), 1));
  for (int l = 0; l < num_layers; ++l) {
    double contribution = double(spikes[l]) / n;
    if (convention == SopConvention::kFanout) {
      const int fanout = l + 1 < num_layers ? model.config.layer_sizes[l + 1]
                                            : model.config.num_classes;
      contribution *= fanout;
    }
    report.per_layer_spikes.push_back(contribution);
    report.total_sops += contribution;
  }
  return report;
}

struct ParamCount {
  long encoder = 0;
  long connections = 0;
  long neuron = 0;
  long readout = 0;
  long total() const { return encoder + connections + neuron + readout; }
};

// Learnable real scalars; complex entries count twice, the fixed basis not at
// all.
inline ParamCount count_params(const Model& m) {
  ParamCount c;
  c.encoder = m.encoder_w.size() + m.encoder_b.size();
  for (const auto& layer : m.layers) {
    c.connections += 2 * layer.connection.size();
    c.neuron += layer.log_neg_real.size() + layer.freq.size() +
                layer.log_eta.size();
  }
  c.readout = m.readout.weights.size() + m.readout.log_tau.size() +
              m.readout.bias.size();
  return c;
}

// Spike coordinates as CSV rows "step,neuron" plus a PGM rendering.
inline void export_raster(const Eigen::MatrixXd& spikes,
                          const std::string& csv_path,
                          const std::string& image_path = "") {
  std::ofstream csv(csv_path);
  if (!csv) throw IoError("cannot open for writing: " + csv_path);
  csv << "step,neuron\n";
  for (Eigen::Index k = 0; k < spikes.cols(); ++k)
    for (Eigen::Index i = 0; i < spikes.rows(); ++i)
      if (spikes(i, k) != 0.0) csv << k << ',' << i << '\n';
  if (image_path.empty()) return;
  std::ofstream img(image_path, std::ios::binary);
  if (!img) throw IoError("cannot open for writing: " + image_path);
  img << "P5\n" << spikes.cols() << ' ' << spikes.rows() << "\n255\n";
  for (Eigen::Index i = 0; i < spikes.rows(); ++i)
    for (Eigen::Index k = 0; k < spikes.cols(); ++k)
      img.put(spikes(i, k) != 0.0 ? char(255) : char(0));
}

struct EvalResult {
  double accuracy = 0.0;
  double loss = 0.0;
  SopReport sops;
};

// Argmax of the mean-pooled logits against the (argmax of a soft) label.
inline EvalResult evaluate(const Model& model,
                           const std::vector<Sample>& dataset) {
  EvalResult res;
  const int num_layers = int(model.config.layer_sizes.size());
  std::vector<long> spikes(num_layers, 0);
  long correct = 0;
  for (const Sample& s : dataset) {
    ForwardTrace tr;
    const Eigen::VectorXd logits = model_forward(model, s.input, tr);
    for (int l = 0; l < num_layers; ++l)
      spikes[l] += long(tr.layers[l].spikes.sum());
    const Eigen::VectorXd label = label_vector(s, model.config.num_classes);
    const double mx = logits.maxCoeff();
    const double lse = mx + std::log((logits.array() - mx).exp().sum());
    res.loss -= (label.array() * (logits.array() - lse)).sum();
    Eigen::Index pred, want;
    logits.maxCoeff(&pred);
    label.maxCoeff(&want);
    if (pred == want) ++correct;
  }
  const double n = double(std::max<std::size_t>(dataset.size(), 1));
  res.loss /= n;
  res.accuracy = double(correct) / n;
  for (int l = 0; l < num_layers; ++l) {
    res.sops.per_layer_spikes.push_back(double(spikes[l]) / n);
    res.sops.total_sops += double(spikes[l]) / n;
  }
  return res;
}

}  // namespace s5rf
