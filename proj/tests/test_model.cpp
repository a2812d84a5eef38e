#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "s5rf/checkpoint.hpp"
#include "s5rf/model.hpp"

using namespace s5rf;
using Catch::Approx;

namespace {

ModelConfig small_config() {
  ModelConfig cfg;
  cfg.input_dim = 3;
  cfg.layer_sizes = {8, 8};
  cfg.block_size = 4;
  cfg.num_classes = 4;
  cfg.seed = 17;
  return cfg;
}

Eigen::MatrixXd random_raster(int rows, int cols, double rate, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform() < rate ? 1.0 : 0.0;
  return m;
}

}  // namespace

TEST_CASE("model construction") {
  SECTION("shapes and modes") {
    ModelConfig cfg = small_config();
    cfg.first_layer_mode = FirstLayerMode::kZohContinuous;
    const Model m = init_model(cfg);
    REQUIRE(m.encoder_w.rows() == 8);
    REQUIRE(m.encoder_w.cols() == 3);
    REQUIRE(m.layers.size() == 2);
    REQUIRE(m.layers[0].mode == DiscretizationMode::kZoh);
    REQUIRE(m.layers[0].fixed_basis.has_value());
    REQUIRE(m.layers[1].mode == DiscretizationMode::kDirac);
    REQUIRE(!m.layers[1].fixed_basis.has_value());
    REQUIRE(m.readout.weights.rows() == 4);
    REQUIRE(m.readout.weights.cols() == 8);
  }

  SECTION("dirac-event first layer has no basis") {
    const Model m = init_model(small_config());
    REQUIRE(!m.layers[0].fixed_basis.has_value());
    REQUIRE(m.layers[0].mode == DiscretizationMode::kDirac);
  }

  SECTION("validation") {
    ModelConfig cfg = small_config();
    cfg.layer_sizes = {6};  // not a multiple of block_size 4
    REQUIRE_THROWS_AS(init_model(cfg), ConfigError);
    cfg = small_config();
    cfg.num_classes = 1;
    REQUIRE_THROWS_AS(init_model(cfg), ConfigError);
  }

  SECTION("eta init range") {
    ModelConfig cfg = small_config();
    REQUIRE(init_model(cfg).layers[0].log_eta.isZero());
    cfg.eta_min = 1e-3;
    cfg.eta_max = 1e-1;
    const Model m = init_model(cfg);
    for (const auto& layer : m.layers) {
      REQUIRE(layer.log_eta.minCoeff() >= std::log(1e-3));
      REQUIRE(layer.log_eta.maxCoeff() <= std::log(1e-1));
    }
    // a spread, not a constant
    REQUIRE(m.layers[0].log_eta.maxCoeff() - m.layers[0].log_eta.minCoeff() >
            0.1);
    cfg.eta_min = -1.0;
    REQUIRE_THROWS_AS(init_model(cfg), ConfigError);
  }

  SECTION("seeded determinism") {
    const Model a = init_model(small_config());
    const Model b = init_model(small_config());
    REQUIRE(a.encoder_w == b.encoder_w);
    REQUIRE(a.layers[0].connection == b.layers[0].connection);
    REQUIRE(a.readout.weights == b.readout.weights);
  }
}

TEST_CASE("readout integrator") {
  SECTION("tiny tau reduces to a per-step projection") {
    ReadoutParams r;
    r.weights.resize(2, 3);
    r.weights << 1, 0, -1, 0.5, 2, 0;
    r.log_tau = Eigen::VectorXd::Constant(2, std::log(1e-3));
    Eigen::MatrixXd s(3, 4);
    Rng rng(3);
    for (Eigen::Index i = 0; i < s.size(); ++i) s.data()[i] = rng.normal();
    const Eigen::MatrixXd y = readout_forward(r, s);
    REQUIRE((y - r.weights * s).cwiseAbs().maxCoeff() < 1e-9);
  }

  SECTION("recurrence unrolls correctly") {
    ReadoutParams r;
    r.weights = Eigen::MatrixXd::Identity(1, 1);
    r.log_tau = Eigen::VectorXd::Constant(1, std::log(2.0));
    Eigen::MatrixXd s(1, 3);
    s << 1, 0, 1;
    const double alpha = std::exp(-0.5);
    const Eigen::MatrixXd y = readout_forward(r, s);
    REQUIRE(y(0, 0) == Approx(1.0));
    REQUIRE(y(0, 1) == Approx(alpha));
    REQUIRE(y(0, 2) == Approx(alpha * alpha + 1.0));
  }
}

TEST_CASE("model forward") {
  Rng rng(23);
  const ModelConfig cfg = small_config();
  const Model m = init_model(cfg);
  const Eigen::MatrixXd u = random_raster(3, 20, 0.3, rng);

  SECTION("deterministic, correct logit count") {
    const Eigen::VectorXd a = model_forward(m, u);
    const Eigen::VectorXd b = model_forward(m, u);
    REQUIRE(a.size() == 4);
    REQUIRE(a == b);
  }

  SECTION("mean pooling matches the integrator trace") {
    ForwardTrace tr;
    const Eigen::VectorXd logits = model_forward(m, u, tr);
    REQUIRE((logits - tr.readout_y.rowwise().mean()).cwiseAbs().maxCoeff() <
            1e-14);
  }

  SECTION("skip connections add the layer input") {
    ModelConfig no_skip = cfg;
    no_skip.skip_connections = false;
    const Model m2 = init_model(no_skip);
    ForwardTrace tr_skip, tr_plain;
    model_forward(m, u, tr_skip);
    model_forward(m2, u, tr_plain);
    // identical first-layer traces, then the stack input diverges
    REQUIRE(tr_skip.layers[0].spikes == tr_plain.layers[0].spikes);
    REQUIRE((tr_skip.stack_in[1] -
             (tr_skip.layers[0].spikes + tr_skip.stack_in[0]))
                .cwiseAbs()
                .maxCoeff() == 0.0);
    REQUIRE(tr_plain.stack_in[1] == tr_plain.layers[0].spikes);
  }

  SECTION("input dimension checked") {
    REQUIRE_THROWS_AS(model_forward(m, Eigen::MatrixXd::Zero(5, 4)),
                      ConfigError);
  }
}

TEST_CASE("checkpoint round trip") {
  ModelConfig cfg = small_config();
  cfg.first_layer_mode = FirstLayerMode::kZohContinuous;
  cfg.encoder_bias = true;
  const Model m = init_model(cfg);

  SECTION("in-memory encode/decode is bit exact") {
    const Model n = decode_checkpoint(encode_checkpoint(m));
    REQUIRE(n.encoder_w == m.encoder_w);
    REQUIRE(n.encoder_b == m.encoder_b);
    REQUIRE(n.layers.size() == m.layers.size());
    for (std::size_t l = 0; l < m.layers.size(); ++l) {
      REQUIRE(n.layers[l].log_neg_real == m.layers[l].log_neg_real);
      REQUIRE(n.layers[l].freq == m.layers[l].freq);
      REQUIRE(n.layers[l].log_eta == m.layers[l].log_eta);
      REQUIRE(n.layers[l].connection == m.layers[l].connection);
      REQUIRE(n.layers[l].mode == m.layers[l].mode);
      REQUIRE(n.layers[l].fixed_basis.has_value() ==
              m.layers[l].fixed_basis.has_value());
      if (m.layers[l].fixed_basis)
        REQUIRE(*n.layers[l].fixed_basis == *m.layers[l].fixed_basis);
    }
    REQUIRE(n.readout.weights == m.readout.weights);
    REQUIRE(n.readout.log_tau == m.readout.log_tau);
  }

  SECTION("file round trip preserves the forward pass") {
    const std::string path = "ckpt_roundtrip.s5ck";
    save_checkpoint(m, path);
    const Model n = load_checkpoint(path);
    std::remove(path.c_str());
    Rng rng(5);
    Eigen::MatrixXd u = random_raster(3, 16, 0.4, rng);
    REQUIRE(model_forward(m, u) == model_forward(n, u));
  }

  SECTION("bad magic rejected") {
    REQUIRE_THROWS_AS(decode_checkpoint("NOPE"), IoError);
  }

  SECTION("truncated payload rejected") {
    const std::string buf = encode_checkpoint(m);
    REQUIRE_THROWS_AS(decode_checkpoint(buf.substr(0, buf.size() / 2)),
                      IoError);
  }
}

TEST_CASE("model backward sanity") {
  // Full FD coverage lives in grad_check; here only structural checks.
  Rng rng(31);
  const Model m = init_model(small_config());
  const Eigen::MatrixXd u = random_raster(3, 12, 0.4, rng);
  ForwardTrace tr;
  const Eigen::VectorXd logits = model_forward(m, u, tr, SpikeMode::kSmooth);
  ModelGrads grads = ModelGrads::zeros_like(m);
  Eigen::VectorXd dlogits(4);
  dlogits << 1, -1, 0.5, -0.5;
  model_backward(m, tr, u, dlogits, grads, SpikeMode::kSmooth);

  SECTION("gradients are finite and not all zero") {
    REQUIRE(grads.encoder_w.allFinite());
    REQUIRE(grads.readout_w.allFinite());
    REQUIRE(grads.readout_w.cwiseAbs().maxCoeff() > 0.0);
    REQUIRE(grads.layers[0].connection.allFinite());
  }

  SECTION("accumulation doubles on a second call") {
    ModelGrads twice = ModelGrads::zeros_like(m);
    model_backward(m, tr, u, dlogits, twice, SpikeMode::kSmooth);
    model_backward(m, tr, u, dlogits, twice, SpikeMode::kSmooth);
    REQUIRE((twice.readout_w - 2.0 * grads.readout_w).cwiseAbs().maxCoeff() <
            1e-12);
    REQUIRE((twice.encoder_w - 2.0 * grads.encoder_w).cwiseAbs().maxCoeff() <
            1e-12);
  }
}
