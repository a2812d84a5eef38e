#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/model.hpp"
#include "s5rf/train.hpp"

namespace s5rf {

// Plain-text configuration: "[section]" headers and "key = value" lines,
// '#' starts a comment. Keys are reported flattened as "section.key".

class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
  }

  static ConfigFile parse(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ConfigError("config line " + std::to_string(lineno) +
                            ": unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": expected key = value");
      const std::string key =
          (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
      cfg.values_[key] = trim(line.substr(eq + 1));
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& dflt) {
    used_.insert(key);
    auto it = values_.find(key);
    return it == values_.end() ? dflt : it->second;
  }

  double get_double(const std::string& key, double dflt) {
    const std::string s = get_string(key, "");
    if (s.empty()) return dflt;
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config: bad number for " + key + ": " + s);
    }
  }

  long get_int(const std::string& key, long dflt) {
    const std::string s = get_string(key, "");
    if (s.empty()) return dflt;
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config: bad integer for " + key + ": " + s);
    }
  }

  bool get_bool(const std::string& key, bool dflt) {
    const std::string s = get_string(key, "");
    if (s.empty()) return dflt;
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("config: bad boolean for " + key + ": " + s);
  }

  std::vector<int> get_int_list(const std::string& key,
                                const std::vector<int>& dflt) {
    const std::string s = get_string(key, "");
    if (s.empty()) return dflt;
    std::vector<int> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ConfigError("config: bad list entry for " + key + ": " + item);
      }
    }
    return out;
  }

  // Any key never read by a builder is a typo worth failing on.
  void reject_unused() const {
    for (const auto& [key, value] : values_)
      if (!used_.count(key))
        throw ConfigError("config: unknown key " + key);
  }

 private:
  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  }

  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

inline ModelConfig model_config_from(ConfigFile& cfg) {
  ModelConfig m;
  m.input_dim = int(cfg.get_int("model.input_dim", 0));
  m.layer_sizes = cfg.get_int_list("model.layer_sizes", {});
  m.block_size = int(cfg.get_int("model.block_size", 32));
  m.num_classes = int(cfg.get_int("model.num_classes", 0));
  const std::string mode =
      cfg.get_string("model.first_layer_mode", "dirac-event");
  if (mode == "dirac-event")
    m.first_layer_mode = FirstLayerMode::kDiracEvent;
  else if (mode == "zoh-continuous")
    m.first_layer_mode = FirstLayerMode::kZohContinuous;
  else
    throw ConfigError("config: bad model.first_layer_mode: " + mode);
  m.skip_connections = cfg.get_bool("model.skip_connections", true);
  m.seed = std::uint64_t(cfg.get_int("model.seed", 0));
  m.threshold = cfg.get_double("model.threshold", 1.0);
  m.surrogate.h = cfg.get_double("model.surrogate_h", 0.15);
  m.surrogate.s = cfg.get_double("model.surrogate_s", 6.0);
  m.surrogate.sigma = cfg.get_double("model.surrogate_sigma", 0.5);
  m.random_init = cfg.get_bool("model.random_init", false);
  m.encoder_bias = cfg.get_bool("model.encoder_bias", false);
  m.readout_bias = cfg.get_bool("model.readout_bias", false);
  m.readout_tau_init = cfg.get_double("model.readout_tau_init", 10.0);
  m.eta_min = cfg.get_double("model.eta_min", 1.0);
  m.eta_max = cfg.get_double("model.eta_max", 1.0);
  return m;
}

inline TrainConfig train_config_from(ConfigFile& cfg) {
  TrainConfig t;
  t.lr_connections = cfg.get_double("train.lr_connections", 1e-3);
  t.lr_neuron = cfg.get_double("train.lr_neuron", 1e-4);
  t.weight_decay = cfg.get_double("train.weight_decay", 1e-4);
  t.epochs = int(cfg.get_int("train.epochs", 20));
  t.batch_size = int(cfg.get_int("train.batch_size", 32));
  t.min_lr = cfg.get_double("train.min_lr", 1e-6);
  t.seed = std::uint64_t(cfg.get_int("train.seed", 0));
  t.fix_eta = cfg.get_bool("train.fix_eta", false);
  t.enforce_positive_decay =
      cfg.get_bool("train.enforce_positive_decay", false);
  t.grad_clip = cfg.get_bool("train.grad_clip", false);
  t.grad_clip_norm = cfg.get_double("train.grad_clip_norm", 10.0);
  t.augment_channel_shift =
      cfg.get_bool("train.augment_channel_shift", false);
  t.channel_shift_max = int(cfg.get_int("train.channel_shift_max", 2));
  t.channel_shift_prob = cfg.get_double("train.channel_shift_prob", 0.2);
  t.augment_cutmix = cfg.get_bool("train.augment_cutmix", false);
  return t;
}

struct DataConfig {
  std::string task;  // freq | digits | manifest | idx
  std::string train_manifest, test_manifest;
  std::string idx_train_images, idx_train_labels;
  std::string idx_test_images, idx_test_labels;
  int classes = 4, steps = 128, channels = 8;
  int train_samples = 2000, test_samples = 400;
  std::uint64_t seed = 0;
  bool permuted = false;
};

inline DataConfig data_config_from(ConfigFile& cfg) {
  DataConfig d;
  d.task = cfg.get_string("data.task", "freq");
  d.train_manifest = cfg.get_string("data.train_manifest", "");
  d.test_manifest = cfg.get_string("data.test_manifest", "");
  d.idx_train_images = cfg.get_string("data.idx_train_images", "");
  d.idx_train_labels = cfg.get_string("data.idx_train_labels", "");
  d.idx_test_images = cfg.get_string("data.idx_test_images", "");
  d.idx_test_labels = cfg.get_string("data.idx_test_labels", "");
  d.classes = int(cfg.get_int("data.classes", 4));
  d.steps = int(cfg.get_int("data.steps", 128));
  d.channels = int(cfg.get_int("data.channels", 8));
  d.train_samples = int(cfg.get_int("data.train_samples", 2000));
  d.test_samples = int(cfg.get_int("data.test_samples", 400));
  d.seed = std::uint64_t(cfg.get_int("data.seed", 0));
  d.permuted = cfg.get_bool("data.permuted", false);
  return d;
}

}  // namespace s5rf
