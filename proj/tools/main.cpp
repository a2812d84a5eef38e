#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "s5rf/checkpoint.hpp"
#include "s5rf/config.hpp"
#include "s5rf/digits.hpp"
#include "s5rf/metrics.hpp"
#include "s5rf/s5rf.hpp"

namespace fs = std::filesystem;
using namespace s5rf;

namespace {

struct LoadedData {
  std::vector<Sample> train;
  std::vector<Sample> test;
  int input_dim = 0;
  int num_classes = 0;
};

LoadedData load_data(const DataConfig& d, const std::string& scratch_dir) {
  LoadedData out;
  if (d.task == "freq") {
    auto train_seqs = gen_synthetic_freq_samples(d.classes, d.steps, d.channels,
                                                 d.train_samples, d.seed);
    auto test_seqs = gen_synthetic_freq_samples(d.classes, d.steps, d.channels,
                                                d.test_samples, d.seed + 1);
    for (const auto& s : train_seqs) out.train.push_back(to_sample(s));
    for (const auto& s : test_seqs) out.test.push_back(to_sample(s));
    out.input_dim = d.channels;
    out.num_classes = d.classes;
  } else if (d.task == "digits") {
    DigitStreamDataset ds = gen_digit_stream_task(d.train_samples,
                                                  d.test_samples, d.seed,
                                                  d.permuted);
    out.train = std::move(ds.train);
    out.test = std::move(ds.test);
    out.input_dim = 1;
    out.num_classes = 10;
  } else if (d.task == "idx") {
    out.train = load_idx_stream(d.idx_train_images, d.idx_train_labels,
                                d.train_samples);
    out.test = load_idx_stream(d.idx_test_images, d.idx_test_labels,
                               d.test_samples);
    out.input_dim = 1;
    out.num_classes = 10;
  } else if (d.task == "manifest") {
    const DatasetManifest train_m = read_manifest(d.train_manifest);
    out.train = load_samples(train_m);
    out.num_classes = train_m.num_classes;
    if (!d.test_manifest.empty()) {
      const DatasetManifest test_m = read_manifest(d.test_manifest);
      out.test = load_samples(test_m);
      out.num_classes = std::max(out.num_classes, test_m.num_classes);
    }
    if (out.train.empty()) throw ConfigError("manifest: no training samples");
    out.input_dim = int(out.train.front().input.rows());
  } else {
    throw ConfigError("unknown data.task: " + d.task);
  }
  (void)scratch_dir;
  return out;
}

int cmd_train(const std::string& config_path, const std::string& out_dir) {
  ConfigFile cfg = ConfigFile::parse_file(config_path);
  DataConfig data_cfg = data_config_from(cfg);
  ModelConfig model_cfg = model_config_from(cfg);
  TrainConfig train_cfg = train_config_from(cfg);
  cfg.reject_unused();

  fs::create_directories(out_dir);
  LoadedData data = load_data(data_cfg, out_dir);
  if (model_cfg.input_dim == 0) model_cfg.input_dim = data.input_dim;
  if (model_cfg.num_classes == 0) model_cfg.num_classes = data.num_classes;
  model_cfg.validate();
  train_cfg.validate();

  Model model = init_model(model_cfg);
  const ParamCount pc = count_params(model);
  std::cout << "params: total=" << pc.total() << " encoder=" << pc.encoder
            << " connections=" << pc.connections << " neuron=" << pc.neuron
            << " readout=" << pc.readout << "\n";

  const int steps_per_epoch =
      (int(data.train.size()) + train_cfg.batch_size - 1) / train_cfg.batch_size;
  Trainer trainer(model, train_cfg, steps_per_epoch);
  if (train_cfg.augment_channel_shift || train_cfg.augment_cutmix) {
    // Augmentations operate on rasters; the training inputs here are already
    // real matrices, so shift acts on rows directly.
    const int max_shift = train_cfg.channel_shift_max;
    const double prob = train_cfg.channel_shift_prob;
    const std::uint64_t seed = train_cfg.seed;
    trainer.set_augment([max_shift, prob, seed](const Sample& s, int epoch,
                                                int index) {
      Rng rng = Rng::for_sample(seed, std::uint64_t(index),
                                std::uint64_t(epoch));
      if (rng.uniform() >= prob) return s;
      const int shift =
          int(rng.uniform_int(std::uint64_t(2 * max_shift + 1))) - max_shift;
      if (shift == 0) return s;
      Sample out = s;
      out.input.setZero();
      for (int c = 0; c < s.input.rows(); ++c) {
        const int dst = c + shift;
        if (dst >= 0 && dst < s.input.rows())
          out.input.row(dst) = s.input.row(c);
      }
      return out;
    });
  }

  const auto t0 = std::chrono::steady_clock::now();
  for (int epoch = 0; epoch < train_cfg.epochs; ++epoch) {
    const EpochMetrics m = trainer.train_epoch(data.train, epoch);
    const EvalResult ev = evaluate(model, data.test);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    std::cout << "epoch " << epoch << ": loss=" << m.loss
              << " train_acc=" << m.accuracy << " test_acc=" << ev.accuracy
              << " sops=" << ev.sops.total_sops << " t=" << secs << "s\n";
  }

  const std::string ckpt = (fs::path(out_dir) / "model.s5ck").string();
  save_checkpoint(model, ckpt);
  std::cout << "saved " << ckpt << "\n";
  return 0;
}

int cmd_eval(const std::string& ckpt_path, const std::string& manifest_path) {
  const Model model = load_checkpoint(ckpt_path);
  const std::vector<Sample> data = load_samples(read_manifest(manifest_path));
  const EvalResult res = evaluate(model, data);
  std::cout << "samples=" << data.size() << " accuracy=" << res.accuracy
            << " loss=" << res.loss
            << " sops=" << res.sops.total_sops << " (spike-count)\n";
  return 0;
}

int cmd_inspect(const std::string& ckpt_path) {
  const Model model = load_checkpoint(ckpt_path);
  const ParamCount pc = count_params(model);
  std::cout << "layers=" << model.layers.size()
            << " input_dim=" << model.config.input_dim
            << " classes=" << model.config.num_classes << "\n";
  std::cout << "params: total=" << pc.total() << " encoder=" << pc.encoder
            << " connections=" << pc.connections << " neuron=" << pc.neuron
            << " readout=" << pc.readout << "\n";
  for (std::size_t l = 0; l < model.layers.size(); ++l) {
    const SsmLayerParams& p = model.layers[l];
    const Eigen::VectorXcd lambda = p.lambda();
    const Eigen::VectorXd eta = p.eta();
    std::cout << "layer " << l << ": H=" << p.state_size()
              << " mode=" << (p.mode == DiscretizationMode::kZoh ? "zoh"
                                                                 : "dirac")
              << " re[" << lambda.real().minCoeff() << ","
              << lambda.real().maxCoeff() << "]"
              << " im[" << lambda.imag().minCoeff() << ","
              << lambda.imag().maxCoeff() << "]"
              << " eta[" << eta.minCoeff() << "," << eta.maxCoeff() << "]\n";
  }
  return 0;
}

int cmd_convert(const std::string& in_path, const std::string& out_path,
                double duration_us, int steps, int channels, int label) {
  std::ifstream f(in_path);
  if (!f) throw IoError("cannot open: " + in_path);
  std::vector<std::pair<double, int>> events;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw IoError("convert: expected 'time_us,channel': " + line);
    events.emplace_back(std::stod(line.substr(0, comma)),
                        std::stoi(line.substr(comma + 1)));
  }
  EventSequence seq = bin_events(events, steps, duration_us, channels);
  seq.label = label;
  write_evsq(seq, out_path);
  std::cout << "wrote " << out_path << " (" << seq.event_count()
            << " events after binning)\n";
  return 0;
}

int cmd_gradcheck(const std::string& config_path) {
  ConfigFile cfg = ConfigFile::parse_file(config_path);
  ModelConfig model_cfg = model_config_from(cfg);
  const int steps = int(cfg.get_int("gradcheck.steps", 16));
  const double eps = cfg.get_double("gradcheck.epsilon", 1e-5);
  const int subset = int(cfg.get_int("gradcheck.subset", 128));
  model_cfg.validate();

  Model model = init_model(model_cfg);
  Rng rng(model_cfg.seed ^ 0x6a09e667f3bcc908ULL);
  Sample sample;
  sample.input.resize(model_cfg.input_dim, steps);
  for (Eigen::Index i = 0; i < sample.input.size(); ++i)
    sample.input.data()[i] = rng.uniform() < 0.3 ? 1.0 : 0.0;
  sample.label = 0;

  const double smooth =
      grad_check(model, sample, eps, SpikeMode::kSmooth, subset, 1);
  const double identity =
      grad_check(model, sample, eps, SpikeMode::kIdentity, subset, 2);
  std::cout << "gradcheck smooth=" << smooth << " identity=" << identity
            << "\n";
  if (!(smooth < 1e-4) || !(identity < 1e-7))
    throw NumericError("gradcheck tolerance exceeded");
  return 0;
}

int cmd_synth(const std::string& task, int classes, int steps, int channels,
              int train_samples, int test_samples, std::uint64_t seed,
              const std::string& out_dir) {
  if (task != "freq") throw ConfigError("unknown synth task: " + task);
  gen_synthetic_freq_task(classes, steps, channels, train_samples, seed,
                          out_dir, "train");
  gen_synthetic_freq_task(classes, steps, channels, test_samples, seed + 1,
                          out_dir, "test");
  std::cout << "wrote " << train_samples << "+" << test_samples
            << " sequences under " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spiking state-space sequence model: training and tools"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "run";
  auto* train = app.add_subcommand("train", "Train a model from a config file");
  train->add_option("--config", config_path, "Config file (key = value)")
      ->required();
  train->add_option("--out", out_dir, "Output directory (default: run)");

  std::string ckpt_path, data_path;
  auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint on a manifest");
  eval->add_option("--checkpoint", ckpt_path, "Checkpoint file")->required();
  eval->add_option("--data", data_path, "Dataset manifest")->required();

  std::string inspect_path;
  auto* inspect =
      app.add_subcommand("inspect", "Print parameter and eigenvalue summaries");
  inspect->add_option("--checkpoint", inspect_path, "Checkpoint file")
      ->required();

  std::string conv_in, conv_out;
  double conv_duration = 0.0;
  int conv_steps = 250, conv_channels = 140, conv_label = 0;
  auto* convert =
      app.add_subcommand("convert", "CSV (time_us,channel) to EVSQ");
  convert->add_option("--in", conv_in, "Input CSV")->required();
  convert->add_option("--out", conv_out, "Output EVSQ file")->required();
  convert->add_option("--duration", conv_duration, "Recording length, us")
      ->required();
  convert->add_option("--steps", conv_steps, "Time bins (default: 250)");
  convert->add_option("--channels", conv_channels,
                      "Channel count (default: 140)");
  convert->add_option("--label", conv_label, "Class label (default: 0)");

  std::string gc_config;
  auto* gradcheck = app.add_subcommand(
      "gradcheck", "Finite-difference check of the analytic gradients");
  gradcheck->add_option("--config", gc_config, "Config file")->required();

  std::string synth_task = "freq", synth_out = "data";
  int synth_classes = 4, synth_steps = 128, synth_channels = 8;
  int synth_train = 2000, synth_test = 400;
  std::uint64_t synth_seed = 0;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
  synth->add_option("--task", synth_task, "Task name (freq)");
  synth->add_option("--classes", synth_classes, "Class count (default: 4)");
  synth->add_option("--steps", synth_steps, "Sequence length (default: 128)");
  synth->add_option("--channels", synth_channels, "Channels (default: 8)");
  synth->add_option("--train-samples", synth_train,
                    "Training samples (default: 2000)");
  synth->add_option("--test-samples", synth_test,
                    "Test samples (default: 400)");
  synth->add_option("--seed", synth_seed, "RNG seed (default: 0)");
  synth->add_option("--out", synth_out, "Output directory (default: data)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) return cmd_train(config_path, out_dir);
    if (*eval) return cmd_eval(ckpt_path, data_path);
    if (*inspect) return cmd_inspect(inspect_path);
    if (*convert)
      return cmd_convert(conv_in, conv_out, conv_duration, conv_steps,
                         conv_channels, conv_label);
    if (*gradcheck) return cmd_gradcheck(gc_config);
    if (*synth)
      return cmd_synth(synth_task, synth_classes, synth_steps, synth_channels,
                       synth_train, synth_test, synth_seed, synth_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
