#pragma once

#include <Eigen/Dense>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "s5rf/common.hpp"
#include "s5rf/data.hpp"
#include "s5rf/model.hpp"

namespace s5rf {

// Checkpoint container: magic "S5CK", version u16, u32-length JSON config,
// then named arrays (name, dtype, rows, cols, raw little-endian payload).
// Raw doubles round-trip bit-exactly.

inline void to_json(nlohmann::json& j, const ModelConfig& c) {
  j = nlohmann::json{
      {"input_dim", c.input_dim},
      {"layer_sizes", c.layer_sizes},
      {"block_size", c.block_size},
      {"num_classes", c.num_classes},
      {"first_layer_mode",
       c.first_layer_mode == FirstLayerMode::kZohContinuous ? "zoh-continuous"
                                                            : "dirac-event"},
      {"skip_connections", c.skip_connections},
      {"seed", c.seed},
      {"threshold", c.threshold},
      {"surrogate", {{"h", c.surrogate.h}, {"s", c.surrogate.s}, {"sigma", c.surrogate.sigma}}},
      {"random_init", c.random_init},
      {"encoder_bias", c.encoder_bias},
      {"readout_bias", c.readout_bias},
      {"readout_tau_init", c.readout_tau_init},
      {"eta_min", c.eta_min},
      {"eta_max", c.eta_max}};
}

inline void from_json(const nlohmann::json& j, ModelConfig& c) {
  j.at("input_dim").get_to(c.input_dim);
  j.at("layer_sizes").get_to(c.layer_sizes);
  j.at("block_size").get_to(c.block_size);
  j.at("num_classes").get_to(c.num_classes);
  c.first_layer_mode = j.at("first_layer_mode") == "zoh-continuous"
                           ? FirstLayerMode::kZohContinuous
                           : FirstLayerMode::kDiracEvent;
  j.at("skip_connections").get_to(c.skip_connections);
  j.at("seed").get_to(c.seed);
  j.at("threshold").get_to(c.threshold);
  c.surrogate.h = j.at("surrogate").at("h");
  c.surrogate.s = j.at("surrogate").at("s");
  c.surrogate.sigma = j.at("surrogate").at("sigma");
  j.at("random_init").get_to(c.random_init);
  j.at("encoder_bias").get_to(c.encoder_bias);
  j.at("readout_bias").get_to(c.readout_bias);
  j.at("readout_tau_init").get_to(c.readout_tau_init);
  c.eta_min = j.value("eta_min", 1.0);
  c.eta_max = j.value("eta_max", 1.0);
}

namespace detail {

enum class ArrayType : std::uint8_t { kReal = 0, kComplex = 1 };

struct NamedArray {
  std::string name;
  ArrayType type;
  Eigen::MatrixXd real;
  Eigen::MatrixXcd complex;
};

inline void append_array(std::string& buf, const std::string& name,
                         const double* data, std::uint32_t rows,
                         std::uint32_t cols, ArrayType type) {
  put<std::uint16_t>(buf, std::uint16_t(name.size()));
  buf += name;
  put<std::uint8_t>(buf, std::uint8_t(type));
  put<std::uint32_t>(buf, rows);
  put<std::uint32_t>(buf, cols);
  const std::size_t doubles =
      std::size_t(rows) * cols * (type == ArrayType::kComplex ? 2 : 1);
  buf.append(reinterpret_cast<const char*>(data), doubles * sizeof(double));
}

}  // namespace detail

inline std::string encode_checkpoint(const Model& m) {
  std::string buf;
  buf.append("S5CK");
  detail::put<std::uint16_t>(buf, 1);
  const std::string config = nlohmann::json(m.config).dump();
  detail::put<std::uint32_t>(buf, std::uint32_t(config.size()));
  buf += config;

  std::vector<std::pair<std::string, const Eigen::MatrixXd*>> reals;
  std::string body;
  std::uint32_t count = 0;
  auto real_arr = [&](const std::string& name, const Eigen::MatrixXd& a) {
    detail::append_array(body, name, a.data(), std::uint32_t(a.rows()),
                         std::uint32_t(a.cols()), detail::ArrayType::kReal);
    ++count;
  };
  auto cplx_arr = [&](const std::string& name, const Eigen::MatrixXcd& a) {
    detail::append_array(body, name, reinterpret_cast<const double*>(a.data()),
                         std::uint32_t(a.rows()), std::uint32_t(a.cols()),
                         detail::ArrayType::kComplex);
    ++count;
  };

  real_arr("encoder.w", m.encoder_w);
  if (m.encoder_b.size() > 0) real_arr("encoder.b", m.encoder_b);
  for (std::size_t l = 0; l < m.layers.size(); ++l) {
    const std::string p = "layer" + std::to_string(l) + ".";
    real_arr(p + "log_neg_real", m.layers[l].log_neg_real);
    real_arr(p + "freq", m.layers[l].freq);
    real_arr(p + "log_eta", m.layers[l].log_eta);
    cplx_arr(p + "connection", m.layers[l].connection);
    if (m.layers[l].fixed_basis) cplx_arr(p + "fixed_basis", *m.layers[l].fixed_basis);
  }
  real_arr("readout.w", m.readout.weights);
  real_arr("readout.log_tau", m.readout.log_tau);
  if (m.readout.bias.size() > 0) real_arr("readout.b", m.readout.bias);

  detail::put<std::uint32_t>(buf, count);
  buf += body;
  return buf;
}

inline Model decode_checkpoint(const std::string& buf) {
  if (buf.size() < 6 || buf.compare(0, 4, "S5CK") != 0)
    throw IoError("checkpoint: bad magic");
  std::size_t off = 4;
  if (detail::take<std::uint16_t>(buf, off) != 1)
    throw IoError("checkpoint: unsupported version");
  const auto config_len = detail::take<std::uint32_t>(buf, off);
  if (off + config_len > buf.size()) throw IoError("checkpoint: truncated");
  Model m;
  m.config = nlohmann::json::parse(buf.substr(off, config_len));
  off += config_len;

  std::map<std::string, detail::NamedArray> arrays;
  const auto count = detail::take<std::uint32_t>(buf, off);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto name_len = detail::take<std::uint16_t>(buf, off);
    if (off + name_len > buf.size()) throw IoError("checkpoint: truncated");
    detail::NamedArray arr;
    arr.name = buf.substr(off, name_len);
    off += name_len;
    arr.type = detail::ArrayType(detail::take<std::uint8_t>(buf, off));
    const auto rows = detail::take<std::uint32_t>(buf, off);
    const auto cols = detail::take<std::uint32_t>(buf, off);
    const std::size_t doubles =
        std::size_t(rows) * cols *
        (arr.type == detail::ArrayType::kComplex ? 2 : 1);
    if (off + doubles * sizeof(double) > buf.size())
      throw IoError("checkpoint: truncated array " + arr.name);
    if (arr.type == detail::ArrayType::kComplex) {
      arr.complex.resize(rows, cols);
      std::memcpy(arr.complex.data(), buf.data() + off,
                  doubles * sizeof(double));
    } else {
      arr.real.resize(rows, cols);
      std::memcpy(arr.real.data(), buf.data() + off, doubles * sizeof(double));
    }
    off += doubles * sizeof(double);
    arrays.emplace(arr.name, std::move(arr));
  }

  auto real_of = [&](const std::string& name) -> const Eigen::MatrixXd& {
    auto it = arrays.find(name);
    if (it == arrays.end()) throw IoError("checkpoint: missing array " + name);
    return it->second.real;
  };
  auto cplx_of = [&](const std::string& name) -> const Eigen::MatrixXcd& {
    auto it = arrays.find(name);
    if (it == arrays.end()) throw IoError("checkpoint: missing array " + name);
    return it->second.complex;
  };

  m.encoder_w = real_of("encoder.w");
  if (arrays.count("encoder.b")) m.encoder_b = real_of("encoder.b");
  for (std::size_t l = 0; l < m.config.layer_sizes.size(); ++l) {
    const std::string p = "layer" + std::to_string(l) + ".";
    SsmLayerParams layer;
    layer.log_neg_real = real_of(p + "log_neg_real");
    layer.freq = real_of(p + "freq");
    layer.log_eta = real_of(p + "log_eta");
    layer.connection = cplx_of(p + "connection");
    layer.threshold = m.config.threshold;
    layer.mode = (l == 0 && m.config.first_layer_mode ==
                                FirstLayerMode::kZohContinuous)
                     ? DiscretizationMode::kZoh
                     : DiscretizationMode::kDirac;
    if (arrays.count(p + "fixed_basis")) {
      layer.fixed_basis = cplx_of(p + "fixed_basis");
      layer.basis_block = m.config.block_size;
    }
    m.layers.push_back(std::move(layer));
  }
  m.readout.weights = real_of("readout.w");
  m.readout.log_tau = real_of("readout.log_tau");
  if (arrays.count("readout.b")) m.readout.bias = real_of("readout.b");
  return m;
}

inline void save_checkpoint(const Model& m, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  const std::string buf = encode_checkpoint(m);
  f.write(buf.data(), std::streamsize(buf.size()));
  if (!f) throw IoError("write failed: " + path);
}

inline Model load_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  return decode_checkpoint(buf);
}

}  // namespace s5rf
