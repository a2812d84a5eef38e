#pragma once

#include <Eigen/Dense>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "s5rf/common.hpp"

namespace s5rf {

// Binary spike raster. Stored channels x steps (column per step); the file
// format below is step-major, which is the same memory order.
struct EventSequence {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> raster;  // C x L
  int label = -1;
  Eigen::VectorXd soft_label;  // empty unless the label is soft
  std::string source_id;
  int original_length = 0;

  int steps() const { return int(raster.cols()); }
  int channels() const { return int(raster.rows()); }
  long event_count() const {
    long n = 0;
    for (Eigen::Index i = 0; i < raster.size(); ++i) n += raster.data()[i];
    return n;
  }
};

struct DatasetManifest {
  std::vector<std::pair<std::string, int>> items;  // path, label
  int num_channels = 0;
  int num_classes = 0;
  std::string split;
};

// A model-ready sequence: real-valued input matrix plus (possibly soft) label.
struct Sample {
  Eigen::MatrixXd input;  // C x L
  int label = -1;
  Eigen::VectorXd soft_label;
};

inline Sample to_sample(const EventSequence& seq) {
  Sample s;
  s.input = seq.raster.cast<double>();
  s.label = seq.label;
  s.soft_label = seq.soft_label;
  return s;
}

// ---------------------------------------------------------------------------
// Preprocessing

// Left-closed bins: an event at time d*k/T lands in bin k. A bin saturates at
// one event per channel.
inline EventSequence bin_events(
    const std::vector<std::pair<double, int>>& raw, int num_steps,
    double duration, int num_channels) {
  if (num_steps < 1 || num_channels < 1 || duration <= 0)
    throw ConfigError("bin_events: invalid steps/channels/duration");
  EventSequence seq;
  seq.raster.setZero(num_channels, num_steps);
  seq.original_length = num_steps;
  for (const auto& [t, c] : raw) {
    if (t < 0 || t >= duration)
      throw ConfigError("bin_events: event time out of range");
    if (c < 0 || c >= num_channels)
      throw ConfigError("bin_events: channel out of range");
    const int k = std::min(int(t / duration * num_steps), num_steps - 1);
    seq.raster(c, k) = 1;
  }
  return seq;
}

// OR-pooling over consecutive channel groups (700 -> 140 uses factor 5).
inline EventSequence pool_channels(const EventSequence& seq, int factor) {
  if (factor < 1 || seq.channels() % factor != 0)
    throw ConfigError("pool_channels: factor must divide channel count");
  EventSequence out = seq;
  out.raster.setZero(seq.channels() / factor, seq.steps());
  for (int c = 0; c < seq.channels(); ++c)
    for (int k = 0; k < seq.steps(); ++k)
      if (seq.raster(c, k)) out.raster(c / factor, k) = 1;
  return out;
}

// With probability prob, shift every channel by the same uniform offset in
// [-max_shift, max_shift]; rows shifted past the edge are dropped.
inline EventSequence channel_shift(const EventSequence& seq, int max_shift,
                                   double prob, Rng& rng) {
  if (prob < 0 || prob > 1) throw ConfigError("channel_shift: bad probability");
  if (prob == 0.0 || rng.uniform() >= prob) return seq;
  const int shift =
      int(rng.uniform_int(std::uint64_t(2 * max_shift + 1))) - max_shift;
  if (shift == 0) return seq;
  EventSequence out = seq;
  out.raster.setZero();
  for (int c = 0; c < seq.channels(); ++c) {
    const int dst = c + shift;
    if (dst >= 0 && dst < seq.channels())
      out.raster.row(dst) = seq.raster.row(c);
  }
  return out;
}

// Replace a random time interval of `a` with the same interval of `b` and fuse
// the labels by the spike ratio of surviving vs inserted events.
inline EventSequence cutmix_events(const EventSequence& a,
                                   const EventSequence& b, int num_classes,
                                   Rng& rng) {
  if (a.channels() != b.channels() || a.steps() != b.steps())
    throw ConfigError("cutmix_events: shape mismatch");
  int k1 = int(rng.uniform_int(std::uint64_t(a.steps() + 1)));
  int k2 = int(rng.uniform_int(std::uint64_t(a.steps() + 1)));
  if (k1 > k2) std::swap(k1, k2);

  EventSequence out = a;
  if (k2 > k1) out.raster.middleCols(k1, k2 - k1) = b.raster.middleCols(k1, k2 - k1);

  long from_a = 0, from_b = 0;
  for (int k = 0; k < a.steps(); ++k) {
    const bool inserted = k >= k1 && k < k2;
    for (int c = 0; c < a.channels(); ++c)
      if (out.raster(c, k)) (inserted ? from_b : from_a) += 1;
  }
  out.soft_label = Eigen::VectorXd::Zero(num_classes);
  const long total = from_a + from_b;
  if (total == 0) {
    out.soft_label[a.label] = 1.0;
  } else {
    out.soft_label[a.label] += double(from_a) / double(total);
    out.soft_label[b.label] += double(from_b) / double(total);
  }
  out.label = a.label;
  return out;
}

// Row-major pixel-by-pixel stream: 28x28 image -> 1 x 784 real sequence.
inline Eigen::MatrixXd rasterize_pixel_stream(const Eigen::MatrixXd& image) {
  Eigen::MatrixXd seq(1, image.size());
  Eigen::Index n = 0;
  for (Eigen::Index r = 0; r < image.rows(); ++r)
    for (Eigen::Index c = 0; c < image.cols(); ++c) seq(0, n++) = image(r, c);
  return seq;
}

// One fixed permutation applied to every sample of the permuted-pixel task.
inline Eigen::MatrixXd permute_pixels(const Eigen::MatrixXd& seq,
                                      const std::vector<int>& permutation) {
  if (int(permutation.size()) != seq.cols())
    throw ConfigError("permute_pixels: permutation length mismatch");
  std::vector<char> seen(permutation.size(), 0);
  for (int p : permutation) {
    if (p < 0 || p >= int(permutation.size()) || seen[p])
      throw ConfigError("permute_pixels: not a bijection");
    seen[p] = 1;
  }
  Eigen::MatrixXd out(seq.rows(), seq.cols());
  for (Eigen::Index k = 0; k < seq.cols(); ++k)
    out.col(k) = seq.col(permutation[k]);
  return out;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[int(rng.uniform_int(std::uint64_t(i + 1)))]);
  return p;
}

// ---------------------------------------------------------------------------
// Synthetic frequency-discrimination task

// Class k fires with per-step Bernoulli probability
//   p(t) = base_rate * (1 + sin(w_k t)) / 2
// where the w_k are spread over [2 pi 0.05, 2 pi 0.45] per step. Classes are
// only separable through the modulation frequency, which is what resonant
// dynamics should pick up.
inline std::vector<double> synthetic_freqs(int num_classes) {
  if (num_classes < 2) throw ConfigError("synthetic task: need >= 2 classes");
  std::vector<double> w(num_classes);
  constexpr double kTau = 6.283185307179586;
  for (int k = 0; k < num_classes; ++k)
    w[k] = kTau * (0.05 + 0.40 * double(k) / double(num_classes - 1));
  return w;
}

inline std::vector<EventSequence> gen_synthetic_freq_samples(
    int num_classes, int steps, int channels, int samples, std::uint64_t seed,
    double base_rate = 0.5) {
  const std::vector<double> freqs = synthetic_freqs(num_classes);
  std::vector<EventSequence> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const int cls = i % num_classes;  // round-robin keeps classes balanced
    Rng rng = Rng::for_sample(seed, std::uint64_t(i), 0);
    const double phase = rng.uniform(0.0, 6.283185307179586);
    EventSequence seq;
    seq.raster.setZero(channels, steps);
    seq.label = cls;
    seq.original_length = steps;
    for (int k = 0; k < steps; ++k) {
      const double p =
          base_rate * 0.5 * (1.0 + std::sin(freqs[cls] * k + phase));
      for (int c = 0; c < channels; ++c)
        if (rng.uniform() < p) seq.raster(c, k) = 1;
    }
    out.push_back(std::move(seq));
  }
  return out;
}

// ---------------------------------------------------------------------------
// EVSQ file format: little-endian, magic "EVSQ", version u16, L u32, C u32,
// label u16 (0xFFFF = soft label: u16 class count then f32 weights), then
// ceil(L*C/8) bytes of step-major bitpacked raster, LSB first.

namespace detail {

template <typename T>
void put(std::string& buf, T v) {
  char raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  buf.append(raw, sizeof(T));
}

template <typename T>
T take(const std::string& buf, std::size_t& off) {
  if (off + sizeof(T) > buf.size()) throw IoError("EVSQ: truncated file");
  T v;
  std::memcpy(&v, buf.data() + off, sizeof(T));
  off += sizeof(T);
  return v;
}

}  // namespace detail

inline std::string encode_evsq(const EventSequence& seq) {
  std::string buf;
  buf.append("EVSQ");
  detail::put<std::uint16_t>(buf, 1);
  detail::put<std::uint32_t>(buf, std::uint32_t(seq.steps()));
  detail::put<std::uint32_t>(buf, std::uint32_t(seq.channels()));
  if (seq.soft_label.size() > 0) {
    detail::put<std::uint16_t>(buf, 0xFFFF);
    detail::put<std::uint16_t>(buf, std::uint16_t(seq.soft_label.size()));
    for (Eigen::Index i = 0; i < seq.soft_label.size(); ++i)
      detail::put<float>(buf, float(seq.soft_label[i]));
  } else {
    detail::put<std::uint16_t>(buf, std::uint16_t(seq.label));
  }
  const long bits = long(seq.steps()) * seq.channels();
  std::string packed((bits + 7) / 8, '\0');
  long n = 0;
  for (int k = 0; k < seq.steps(); ++k)
    for (int c = 0; c < seq.channels(); ++c, ++n)
      if (seq.raster(c, k)) packed[n / 8] |= char(1u << (n % 8));
  buf += packed;
  return buf;
}

inline EventSequence decode_evsq(const std::string& buf) {
  if (buf.size() < 4 || buf.compare(0, 4, "EVSQ") != 0)
    throw IoError("EVSQ: bad magic");
  std::size_t off = 4;
  const auto version = detail::take<std::uint16_t>(buf, off);
  if (version != 1) throw IoError("EVSQ: unsupported version");
  const auto steps = detail::take<std::uint32_t>(buf, off);
  const auto channels = detail::take<std::uint32_t>(buf, off);
  EventSequence seq;
  const auto label = detail::take<std::uint16_t>(buf, off);
  if (label == 0xFFFF) {
    const auto k = detail::take<std::uint16_t>(buf, off);
    seq.soft_label.resize(k);
    for (int i = 0; i < k; ++i)
      seq.soft_label[i] = double(detail::take<float>(buf, off));
    Eigen::Index argmax = 0;
    seq.soft_label.maxCoeff(&argmax);
    seq.label = int(argmax);
  } else {
    seq.label = label;
  }
  seq.raster.setZero(channels, steps);
  seq.original_length = int(steps);
  const long bits = long(steps) * channels;
  if (off + std::size_t((bits + 7) / 8) > buf.size())
    throw IoError("EVSQ: truncated raster");
  long n = 0;
  for (std::uint32_t k = 0; k < steps; ++k)
    for (std::uint32_t c = 0; c < channels; ++c, ++n)
      seq.raster(c, k) =
          (buf[off + n / 8] >> (n % 8)) & 1 ? 1 : 0;
  return seq;
}

inline void write_evsq(const EventSequence& seq, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  const std::string buf = encode_evsq(seq);
  f.write(buf.data(), std::streamsize(buf.size()));
  if (!f) throw IoError("write failed: " + path);
}

inline EventSequence read_evsq(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  EventSequence seq = decode_evsq(buf);
  seq.source_id = path;
  return seq;
}

// Manifest: UTF-8 lines "path<TAB>label".
inline void write_manifest(const DatasetManifest& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  for (const auto& [p, label] : m.items) f << p << '\t' << label << '\n';
}

inline DatasetManifest read_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  DatasetManifest m;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw IoError("manifest: missing tab: " + line);
    const int label = std::stoi(line.substr(tab + 1));
    m.items.emplace_back(line.substr(0, tab), label);
    m.num_classes = std::max(m.num_classes, label + 1);
  }
  return m;
}

// Writes one EVSQ file per sample plus a manifest; returns the manifest.
inline DatasetManifest write_dataset(const std::vector<EventSequence>& seqs,
                                     const std::string& dir,
                                     const std::string& split,
                                     int num_classes) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  DatasetManifest m;
  m.split = split;
  m.num_classes = num_classes;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%06zu.evsq", split.c_str(), i);
    const std::string path = (fs::path(dir) / name).string();
    write_evsq(seqs[i], path);
    m.items.emplace_back(path, seqs[i].label);
    m.num_channels = seqs[i].channels();
  }
  write_manifest(m, (fs::path(dir) / (split + ".manifest")).string());
  return m;
}

inline DatasetManifest gen_synthetic_freq_task(int num_classes, int steps,
                                               int channels, int samples,
                                               std::uint64_t seed,
                                               const std::string& dir,
                                               const std::string& split) {
  return write_dataset(gen_synthetic_freq_samples(num_classes, steps, channels,
                                                  samples, seed),
                       dir, split, num_classes);
}

inline std::vector<Sample> load_samples(const DatasetManifest& m) {
  std::vector<Sample> out;
  out.reserve(m.items.size());
  for (const auto& [path, label] : m.items) out.push_back(to_sample(read_evsq(path)));
  return out;
}

}  // namespace s5rf
