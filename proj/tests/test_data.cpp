#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "s5rf/data.hpp"
#include "s5rf/digits.hpp"

using namespace s5rf;
using Catch::Approx;

namespace {

EventSequence random_sequence(int channels, int steps, double rate, Rng& rng,
                              int label) {
  EventSequence seq;
  seq.raster.setZero(channels, steps);
  seq.label = label;
  seq.original_length = steps;
  for (int c = 0; c < channels; ++c)
    for (int k = 0; k < steps; ++k)
      if (rng.uniform() < rate) seq.raster(c, k) = 1;
  return seq;
}

// Plain DFT power of the per-step event count; the independent oracle for the
// synthetic task's dominant modulation frequency.
double dominant_frequency(const std::vector<EventSequence>& seqs) {
  const int len = seqs.front().steps();
  Eigen::VectorXd rate = Eigen::VectorXd::Zero(len);
  for (const auto& s : seqs)
    for (int k = 0; k < len; ++k)
      for (int c = 0; c < s.channels(); ++c) rate[k] += s.raster(c, k);
  rate.array() -= rate.mean();
  double best_power = -1.0;
  int best_bin = 0;
  for (int bin = 1; bin <= len / 2; ++bin) {
    cplx acc = 0.0;
    for (int k = 0; k < len; ++k)
      acc += rate[k] * std::exp(cplx(0, -6.283185307179586 * bin * k / len));
    const double power = std::norm(acc);
    if (power > best_power) {
      best_power = power;
      best_bin = bin;
    }
  }
  return 6.283185307179586 * best_bin / len;
}

}  // namespace

TEST_CASE("event binning") {
  SECTION("left-closed bins") {
    // duration 10, 5 bins: t in [0,2) -> bin 0, t=2 -> bin 1
    const EventSequence seq =
        bin_events({{0.0, 0}, {1.999, 0}, {2.0, 0}, {9.999, 1}}, 5, 10.0, 2);
    REQUIRE(seq.raster(0, 0) == 1);
    REQUIRE(seq.raster(0, 1) == 1);
    REQUIRE(seq.raster(1, 4) == 1);
    REQUIRE(seq.event_count() == 3);  // two events saturate bin 0
  }

  SECTION("out-of-range inputs rejected") {
    REQUIRE_THROWS_AS(bin_events({{10.0, 0}}, 5, 10.0, 2), ConfigError);
    REQUIRE_THROWS_AS(bin_events({{1.0, 2}}, 5, 10.0, 2), ConfigError);
    REQUIRE_THROWS_AS(bin_events({}, 0, 10.0, 2), ConfigError);
  }
}

TEST_CASE("channel pooling") {
  Rng rng(1);
  const EventSequence seq = random_sequence(20, 30, 0.2, rng, 0);

  SECTION("OR semantics") {
    const EventSequence pooled = pool_channels(seq, 5);
    REQUIRE(pooled.channels() == 4);
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 30; ++k) {
        int any = 0;
        for (int j = 0; j < 5; ++j) any |= seq.raster(5 * c + j, k);
        REQUIRE(int(pooled.raster(c, k)) == any);
      }
  }

  SECTION("factor must divide") {
    REQUIRE_THROWS_AS(pool_channels(seq, 3), ConfigError);
  }

  SECTION("pooling commutes with binning for OR semantics") {
    // Bin a raw event list then pool, versus pool channel indices then bin.
    std::vector<std::pair<double, int>> raw;
    Rng r2(2);
    for (int i = 0; i < 200; ++i)
      raw.emplace_back(r2.uniform(0.0, 100.0), int(r2.uniform_int(20)));
    const EventSequence a = pool_channels(bin_events(raw, 25, 100.0, 20), 5);
    std::vector<std::pair<double, int>> folded;
    for (const auto& [t, c] : raw) folded.emplace_back(t, c / 5);
    const EventSequence b = bin_events(folded, 25, 100.0, 4);
    REQUIRE(a.raster == b.raster);
  }
}

TEST_CASE("channel shift") {
  Rng rng(7);
  const EventSequence seq = random_sequence(10, 12, 0.3, rng, 1);

  SECTION("probability zero is the identity") {
    Rng r(1);
    const EventSequence out = channel_shift(seq, 2, 0.0, r);
    REQUIRE(out.raster == seq.raster);
  }

  SECTION("event count never grows") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng r(s);
      const EventSequence out = channel_shift(seq, 3, 1.0, r);
      REQUIRE(out.event_count() <= seq.event_count());
    }
  }

  SECTION("same stream gives the same shift") {
    Rng r1(9), r2(9);
    const EventSequence a = channel_shift(seq, 2, 1.0, r1);
    const EventSequence b = channel_shift(seq, 2, 1.0, r2);
    REQUIRE(a.raster == b.raster);
  }
}

TEST_CASE("cutmix") {
  Rng rng(3);
  const EventSequence a = random_sequence(6, 40, 0.3, rng, 0);
  const EventSequence b = random_sequence(6, 40, 0.3, rng, 2);

  SECTION("soft labels stay on the simplex") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      Rng r(s);
      const EventSequence mixed = cutmix_events(a, b, 4, r);
      REQUIRE(mixed.soft_label.size() == 4);
      REQUIRE(mixed.soft_label.sum() == Approx(1.0).margin(1e-12));
      REQUIRE(mixed.soft_label.minCoeff() >= 0.0);
    }
  }

  SECTION("zero-event mix keeps the first label") {
    EventSequence ea = a, eb = b;
    ea.raster.setZero();
    eb.raster.setZero();
    Rng r(5);
    const EventSequence mixed = cutmix_events(ea, eb, 4, r);
    REQUIRE(mixed.soft_label[0] == 1.0);
  }

  SECTION("shape mismatch rejected") {
    Rng r(1);
    const EventSequence small = random_sequence(6, 10, 0.3, r, 1);
    REQUIRE_THROWS_AS(cutmix_events(a, small, 4, r), ConfigError);
  }
}

TEST_CASE("pixel streams") {
  SECTION("row-major rasterization") {
    Eigen::MatrixXd img(2, 3);
    img << 1, 2, 3, 4, 5, 6;
    const Eigen::MatrixXd seq = rasterize_pixel_stream(img);
    REQUIRE(seq.rows() == 1);
    REQUIRE(seq.cols() == 6);
    for (int i = 0; i < 6; ++i) REQUIRE(seq(0, i) == double(i + 1));
  }

  SECTION("permutation round trip") {
    Eigen::MatrixXd seq(1, 8);
    for (int i = 0; i < 8; ++i) seq(0, i) = i;
    const std::vector<int> perm = random_permutation(8, 4);
    const Eigen::MatrixXd shuffled = permute_pixels(seq, perm);
    std::vector<int> inverse(8);
    for (int i = 0; i < 8; ++i) inverse[perm[i]] = i;
    REQUIRE(permute_pixels(shuffled, inverse) == seq);
  }

  SECTION("non-bijective permutation rejected") {
    Eigen::MatrixXd seq = Eigen::MatrixXd::Zero(1, 3);
    REQUIRE_THROWS_AS(permute_pixels(seq, {0, 0, 2}), ConfigError);
    REQUIRE_THROWS_AS(permute_pixels(seq, {0, 1}), ConfigError);
  }
}

TEST_CASE("synthetic frequency task") {
  SECTION("balanced classes and determinism") {
    const auto a = gen_synthetic_freq_samples(4, 64, 4, 102, 9);
    const auto b = gen_synthetic_freq_samples(4, 64, 4, 102, 9);
    std::vector<int> counts(4, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].raster == b[i].raster);
      counts[a[i].label] += 1;
    }
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    REQUIRE(*hi - *lo <= 1);
  }

  SECTION("periodogram peaks at the class frequency") {
    const std::vector<double> freqs = synthetic_freqs(4);
    for (int cls = 0; cls < 4; ++cls) {
      auto all = gen_synthetic_freq_samples(4, 256, 8, 400, 33);
      std::vector<EventSequence> mine;
      for (auto& s : all)
        if (s.label == cls) mine.push_back(std::move(s));
      const double peak = dominant_frequency(mine);
      // DFT bins quantize to 2 pi / 256
      REQUIRE(std::abs(peak - freqs[cls]) < 6.283185307179586 / 256 + 1e-9);
    }
  }

  SECTION("needs at least two classes") {
    REQUIRE_THROWS_AS(synthetic_freqs(1), ConfigError);
  }
}

TEST_CASE("evsq round trip") {
  Rng rng(77);

  SECTION("100 random sequences, bit exact") {
    for (int trial = 0; trial < 100; ++trial) {
      const int c = 1 + int(rng.uniform_int(32));
      const int len = 1 + int(rng.uniform_int(300));
      const EventSequence seq =
          random_sequence(c, len, rng.uniform(), rng, int(rng.uniform_int(10)));
      const EventSequence back = decode_evsq(encode_evsq(seq));
      REQUIRE(back.raster == seq.raster);
      REQUIRE(back.label == seq.label);
    }
  }

  SECTION("soft labels survive") {
    EventSequence seq = random_sequence(4, 16, 0.3, rng, 1);
    seq.soft_label.resize(3);
    seq.soft_label << 0.25, 0.5, 0.25;
    const EventSequence back = decode_evsq(encode_evsq(seq));
    REQUIRE(back.soft_label.size() == 3);
    for (int i = 0; i < 3; ++i)
      REQUIRE(back.soft_label[i] == Approx(seq.soft_label[i]).margin(1e-7));
    REQUIRE(back.label == 1);  // argmax of the soft label
  }

  SECTION("corrupt input rejected") {
    REQUIRE_THROWS_AS(decode_evsq("EVXX"), IoError);
    const std::string buf = encode_evsq(random_sequence(4, 16, 0.3, rng, 0));
    REQUIRE_THROWS_AS(decode_evsq(buf.substr(0, 10)), IoError);
    REQUIRE_THROWS_AS(decode_evsq(buf.substr(0, buf.size() - 1)), IoError);
  }
}

TEST_CASE("dataset files") {
  namespace fs = std::filesystem;
  const std::string dir = "test_dataset_tmp";

  SECTION("write_dataset and load_samples round trip") {
    Rng rng(5);
    std::vector<EventSequence> seqs;
    for (int i = 0; i < 6; ++i)
      seqs.push_back(random_sequence(4, 20, 0.3, rng, i % 3));
    const DatasetManifest m = write_dataset(seqs, dir, "train", 3);
    REQUIRE(m.items.size() == 6);
    const DatasetManifest back =
        read_manifest((fs::path(dir) / "train.manifest").string());
    REQUIRE(back.items.size() == 6);
    REQUIRE(back.num_classes == 3);
    const std::vector<Sample> samples = load_samples(back);
    for (int i = 0; i < 6; ++i) {
      REQUIRE(samples[i].label == seqs[i].label);
      REQUIRE(samples[i].input == seqs[i].raster.cast<double>());
    }
    fs::remove_all(dir);
  }

  SECTION("missing file reported") {
    REQUIRE_THROWS_AS(read_evsq("no_such_file.evsq"), IoError);
    REQUIRE_THROWS_AS(read_manifest("no_such.manifest"), IoError);
  }
}

TEST_CASE("digit stream task") {
  SECTION("glyph corpus is intact") {
    const auto& glyphs = digit_glyphs();
    REQUIRE(glyphs.size() == 1797);
    std::vector<int> counts(10, 0);
    for (const auto& g : glyphs) {
      REQUIRE(g.label >= 0);
      REQUIRE(g.label <= 9);
      counts[g.label] += 1;
      for (auto p : g.pixels) REQUIRE(p <= 15);
    }
    for (int c = 0; c < 10; ++c) REQUIRE(counts[c] >= 170);
  }

  SECTION("rendered streams are 784 long, valued in [0,1]") {
    const DigitStreamDataset d = gen_digit_stream_task(8, 4, 3);
    REQUIRE(d.train.size() == 8);
    REQUIRE(d.test.size() == 4);
    for (const auto& s : d.train) {
      REQUIRE(s.input.rows() == 1);
      REQUIRE(s.input.cols() == 784);
      REQUIRE(s.input.minCoeff() >= 0.0);
      REQUIRE(s.input.maxCoeff() <= 1.0);
      REQUIRE(s.input.maxCoeff() > 0.1);  // not blank
    }
  }

  SECTION("deterministic per seed, distinct across seeds") {
    const DigitStreamDataset a = gen_digit_stream_task(4, 2, 5);
    const DigitStreamDataset b = gen_digit_stream_task(4, 2, 5);
    const DigitStreamDataset c = gen_digit_stream_task(4, 2, 6);
    REQUIRE(a.train[0].input == b.train[0].input);
    REQUIRE(a.train[0].input != c.train[0].input);
  }

  SECTION("permuted variant applies one fixed permutation") {
    const DigitStreamDataset plain = gen_digit_stream_task(2, 1, 7, false);
    const DigitStreamDataset perm = gen_digit_stream_task(2, 1, 7, true);
    REQUIRE(plain.train[0].input != perm.train[0].input);
    REQUIRE(plain.train[0].input.sum() ==
            Approx(perm.train[0].input.sum()).margin(1e-9));
  }
}
