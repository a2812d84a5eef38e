#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "s5rf/common.hpp"
#include "s5rf/data.hpp"
#include "s5rf/digits_data.hpp"

namespace s5rf {

// Desk-scale stand-in for the sequential-image benchmark: real handwritten
// digit glyphs (see digits_data.hpp), upscaled to 28x28 with a random affine
// warp and streamed pixel by pixel. Train and test draw from disjoint glyph
// pools so augmentation cannot leak test identities.

struct DigitGlyph {
  std::array<std::uint8_t, 64> pixels;  // 8x8, 0..15
  int label;
};

inline const std::vector<DigitGlyph>& digit_glyphs() {
  static const std::vector<DigitGlyph> glyphs = [] {
    auto decode = [](char c) -> int {
      if (c >= 'A' && c <= 'Z') return c - 'A';
      if (c >= 'a' && c <= 'z') return c - 'a' + 26;
      if (c >= '0' && c <= '9') return c - '0' + 52;
      if (c == '+') return 62;
      if (c == '/') return 63;
      return -1;  // '='
    };
    std::vector<std::uint8_t> bytes;
    int acc = 0, bits = 0;
    for (const char* p = detail::kDigitGlyphsB64; *p; ++p) {
      const int v = decode(*p);
      if (v < 0) continue;
      acc = (acc << 6) | v;
      bits += 6;
      if (bits >= 8) {
        bits -= 8;
        bytes.push_back(std::uint8_t((acc >> bits) & 0xFF));
      }
    }
    const int n = detail::kDigitGlyphCount;
    std::vector<DigitGlyph> out(n);
    for (int g = 0; g < n; ++g) {
      for (int i = 0; i < 32; ++i) {
        const std::uint8_t b = bytes[std::size_t(g) * 32 + i];
        out[g].pixels[2 * i] = b & 0x0F;
        out[g].pixels[2 * i + 1] = b >> 4;
      }
      out[g].label = bytes[std::size_t(n) * 32 + g];
    }
    return out;
  }();
  return glyphs;
}

// 28x28 grayscale in [0,1] from an 8x8 glyph: inverse-mapped affine
// (rotation, scale, shift) with bilinear sampling plus mild pixel noise.
inline Eigen::MatrixXd render_digit(const DigitGlyph& glyph, Rng& rng) {
  const double angle = rng.uniform(-0.20, 0.20);  // radians
  const double scale = rng.uniform(0.85, 1.15);
  const double dx = rng.uniform(-1.5, 1.5);
  const double dy = rng.uniform(-1.5, 1.5);
  const double noise = 0.02;

  const double ca = std::cos(angle), sa = std::sin(angle);
  const double zoom = 28.0 / 8.0 * scale;
  Eigen::MatrixXd img(28, 28);
  for (int r = 0; r < 28; ++r) {
    for (int c = 0; c < 28; ++c) {
      // target pixel centre -> source coordinates
      const double tx = c - 13.5 - dx;
      const double ty = r - 13.5 - dy;
      const double sx = (ca * tx + sa * ty) / zoom + 3.5;
      const double sy = (-sa * tx + ca * ty) / zoom + 3.5;
      double v = 0.0;
      const int x0 = int(std::floor(sx)), y0 = int(std::floor(sy));
      const double fx = sx - x0, fy = sy - y0;
      for (int oy = 0; oy < 2; ++oy) {
        for (int ox = 0; ox < 2; ++ox) {
          const int x = x0 + ox, y = y0 + oy;
          if (x < 0 || x > 7 || y < 0 || y > 7) continue;
          const double w = (ox ? fx : 1 - fx) * (oy ? fy : 1 - fy);
          v += w * glyph.pixels[std::size_t(y) * 8 + x] / 15.0;
        }
      }
      v += noise * rng.normal();
      img(r, c) = std::min(1.0, std::max(0.0, v));
    }
  }
  return img;
}

struct DigitStreamDataset {
  std::vector<Sample> train;
  std::vector<Sample> test;
};

inline DigitStreamDataset gen_digit_stream_task(int train_samples,
                                                int test_samples,
                                                std::uint64_t seed,
                                                bool permuted = false) {
  const auto& glyphs = digit_glyphs();
  // Disjoint pools: every 5th glyph of each class goes to the test pool.
  std::vector<int> train_pool, test_pool;
  std::array<int, 10> per_class{};
  for (int g = 0; g < int(glyphs.size()); ++g) {
    const int idx = per_class[glyphs[g].label]++;
    (idx % 5 == 4 ? test_pool : train_pool).push_back(g);
  }

  std::vector<int> perm;
  if (permuted)
    perm = random_permutation(784, seed ^ 0xabcdef1234567890ULL);

  auto make = [&](const std::vector<int>& pool, int count,
                  std::uint64_t stream) {
    std::vector<Sample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
      Rng rng = Rng::for_sample(seed, std::uint64_t(i), stream);
      const int g = pool[rng.uniform_int(pool.size())];
      Sample s;
      s.input = rasterize_pixel_stream(render_digit(glyphs[g], rng));
      if (permuted) s.input = permute_pixels(s.input, perm);
      s.label = glyphs[g].label;
      out.push_back(std::move(s));
    }
    return out;
  };
  DigitStreamDataset d;
  d.train = make(train_pool, train_samples, 1);
  d.test = make(test_pool, test_samples, 2);
  return d;
}

// MNIST-style IDX image/label pair, for running the real dataset when the
// files are available locally.
inline std::vector<Sample> load_idx_stream(const std::string& images_path,
                                           const std::string& labels_path,
                                           int limit = -1) {
  auto read_all = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw IoError("cannot open: " + p);
    return std::string((std::istreambuf_iterator<char>(f)),
                       std::istreambuf_iterator<char>());
  };
  auto be32 = [](const std::string& b, std::size_t off) {
    return (std::uint32_t(std::uint8_t(b[off])) << 24) |
           (std::uint32_t(std::uint8_t(b[off + 1])) << 16) |
           (std::uint32_t(std::uint8_t(b[off + 2])) << 8) |
           std::uint32_t(std::uint8_t(b[off + 3]));
  };
  const std::string imgs = read_all(images_path);
  const std::string labs = read_all(labels_path);
  if (imgs.size() < 16 || be32(imgs, 0) != 0x803)
    throw IoError("IDX: bad image file header");
  if (labs.size() < 8 || be32(labs, 0) != 0x801)
    throw IoError("IDX: bad label file header");
  const int n = int(be32(imgs, 4));
  const int rows = int(be32(imgs, 8));
  const int cols = int(be32(imgs, 12));
  const int count = limit > 0 ? std::min(limit, n) : n;
  std::vector<Sample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXd img(rows, cols);
    const std::size_t base = 16 + std::size_t(i) * rows * cols;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        img(r, c) = std::uint8_t(imgs[base + std::size_t(r) * cols + c]) / 255.0;
    Sample s;
    s.input = rasterize_pixel_stream(img);
    s.label = std::uint8_t(labs[8 + std::size_t(i)]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace s5rf
