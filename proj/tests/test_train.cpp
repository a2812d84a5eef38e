#include <catch2/catch_amalgamated.hpp>

#include "s5rf/config.hpp"
#include "s5rf/train.hpp"

using namespace s5rf;
using Catch::Approx;

namespace {

ModelConfig tiny_config() {
  ModelConfig cfg;
  cfg.input_dim = 2;
  cfg.layer_sizes = {8};
  cfg.block_size = 4;
  cfg.num_classes = 2;
  cfg.seed = 3;
  return cfg;
}

// Two classes separated by which input channel carries the events.
std::vector<Sample> separable_dataset(int n, int steps, std::uint64_t seed) {
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::for_sample(seed, std::uint64_t(i), 0);
    Sample s;
    s.label = i % 2;
    s.input = Eigen::MatrixXd::Zero(2, steps);
    for (int k = 0; k < steps; ++k)
      if (rng.uniform() < 0.4) s.input(s.label, k) = 1.0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("cross entropy") {
  SECTION("uniform logits give log K") {
    Eigen::MatrixXd logits = Eigen::MatrixXd::Zero(3, 4);
    Eigen::MatrixXd labels = Eigen::MatrixXd::Zero(3, 4);
    labels.col(1).setOnes();
    REQUIRE(cross_entropy_loss(logits, labels) == Approx(std::log(4.0)));
  }

  SECTION("confident correct prediction approaches zero loss") {
    Eigen::MatrixXd logits(1, 3);
    logits << 30, 0, 0;
    Eigen::MatrixXd labels(1, 3);
    labels << 1, 0, 0;
    REQUIRE(cross_entropy_loss(logits, labels) < 1e-10);
  }

  SECTION("gradient rows sum to zero") {
    Eigen::VectorXd logits(4);
    logits << 0.3, -1.2, 2.0, 0.1;
    Eigen::VectorXd label = Eigen::VectorXd::Zero(4);
    label[2] = 1.0;
    const Eigen::VectorXd g = cross_entropy_grad(logits, label);
    REQUIRE(g.sum() == Approx(0.0).margin(1e-12));
    REQUIRE(g[2] < 0.0);
  }

  SECTION("gradient matches finite differences") {
    Eigen::VectorXd logits(3);
    logits << 0.5, -0.2, 1.1;
    Eigen::VectorXd label(3);
    label << 0.2, 0.5, 0.3;  // soft labels allowed
    const Eigen::VectorXd g = cross_entropy_grad(logits, label);
    const double eps = 1e-6;
    for (int i = 0; i < 3; ++i) {
      Eigen::MatrixXd up = logits.transpose(), down = logits.transpose();
      up(0, i) += eps;
      down(0, i) -= eps;
      const double fd = (cross_entropy_loss(up, label.transpose()) -
                         cross_entropy_loss(down, label.transpose())) /
                        (2 * eps);
      REQUIRE(g[i] == Approx(fd).margin(1e-8));
    }
  }

  SECTION("labels must sum to one") {
    Eigen::MatrixXd logits = Eigen::MatrixXd::Zero(1, 2);
    Eigen::MatrixXd labels = Eigen::MatrixXd::Zero(1, 2);
    REQUIRE_THROWS_AS(cross_entropy_loss(logits, labels), ConfigError);
  }
}

TEST_CASE("cosine schedule") {
  REQUIRE(cosine_lr(0, 100, 1.0, 0.1) == Approx(1.0));
  REQUIRE(cosine_lr(100, 100, 1.0, 0.1) == Approx(0.1));
  REQUIRE(cosine_lr(50, 100, 1.0, 0.1) == Approx(0.55));
  REQUIRE(cosine_lr(200, 100, 1.0, 0.1) == Approx(0.1));  // clamped
}

TEST_CASE("adam optimizer") {
  SECTION("minimizes a quadratic") {
    double x = 5.0, gx = 0.0;
    ParamGroup g{"connections", {ParamView{&x, &gx, 1}}, 0.1, 0.0};
    AdamOptimizer opt({g});
    for (int i = 0; i < 500; ++i) {
      gx = 2.0 * (x - 1.5);
      opt.step();
    }
    REQUIRE(x == Approx(1.5).margin(1e-3));
  }

  SECTION("decoupled weight decay shrinks parameters with zero gradient") {
    double x = 2.0, gx = 0.0;
    ParamGroup g{"connections", {ParamView{&x, &gx, 1}}, 0.1, 0.5};
    AdamOptimizer opt({g});
    opt.step();
    REQUIRE(x == Approx(2.0 - 0.1 * 0.5 * 2.0));
  }

  SECTION("lr_scale scales the whole update") {
    double x = 1.0, gx = 1.0;
    double y = 1.0, gy = 1.0;
    AdamOptimizer a({ParamGroup{"n", {ParamView{&x, &gx, 1}}, 0.1, 0.0}});
    AdamOptimizer b({ParamGroup{"n", {ParamView{&y, &gy, 1}}, 0.1, 0.0}});
    a.step(1.0);
    b.step(0.5);
    REQUIRE((1.0 - y) == Approx(0.5 * (1.0 - x)));
  }
}

TEST_CASE("parameter groups") {
  Model m = init_model(tiny_config());
  ModelGrads g = ModelGrads::zeros_like(m);
  TrainConfig cfg;

  SECTION("group names, rates and decay placement") {
    const auto groups = build_param_groups(m, g, cfg);
    REQUIRE(groups.size() == 4);
    REQUIRE(groups[0].name == "connections");
    REQUIRE(groups[0].lr == cfg.lr_connections);
    REQUIRE(groups[0].weight_decay == cfg.weight_decay);
    REQUIRE(groups[1].name == "neuron");
    REQUIRE(groups[1].lr == cfg.lr_neuron);
    REQUIRE(groups[1].weight_decay == 0.0);
  }

  SECTION("every learnable scalar appears exactly once") {
    const auto groups = build_param_groups(m, g, cfg);
    Eigen::Index total = 0;
    for (const auto& grp : groups) total += grp.total();
    // encoder 8*2, connection 2*8*8, neuron 3*8 + readout tau 2,
    // readout weights 2*8
    REQUIRE(total == 16 + 128 + 24 + 2 + 16);
  }

  SECTION("fix_eta removes the eta views") {
    TrainConfig fixed = cfg;
    fixed.fix_eta = true;
    const auto base = build_param_groups(m, g, cfg);
    const auto ablated = build_param_groups(m, g, fixed);
    REQUIRE(base[1].total() - ablated[1].total() == 8);
  }

  SECTION("invalid rate ordering rejected") {
    TrainConfig bad;
    bad.lr_connections = 1e-5;
    bad.lr_neuron = 1e-3;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);
  }
}

TEST_CASE("full-model gradient check") {
  // 2 layers, H=8, L=16: the configuration the gradient criterion names.
  ModelConfig cfg;
  cfg.input_dim = 2;
  cfg.layer_sizes = {8, 8};
  cfg.block_size = 4;
  cfg.num_classes = 3;
  cfg.seed = 11;
  Model model = init_model(cfg);

  Rng rng(41);
  Sample sample;
  sample.input = Eigen::MatrixXd::Zero(2, 16);
  for (Eigen::Index i = 0; i < sample.input.size(); ++i)
    sample.input.data()[i] = rng.uniform() < 0.3 ? 1.0 : 0.0;
  sample.label = 1;

  SECTION("surrogate-smoothed model") {
    REQUIRE(grad_check(model, sample, 1e-5, SpikeMode::kSmooth, 64, 1) < 1e-4);
  }

  SECTION("linear diagnostic mode") {
    REQUIRE(grad_check(model, sample, 1e-5, SpikeMode::kIdentity, 64, 2) <
            1e-7);
  }

  SECTION("zoh first layer with fixed basis") {
    ModelConfig zcfg = cfg;
    zcfg.first_layer_mode = FirstLayerMode::kZohContinuous;
    Model zmodel = init_model(zcfg);
    REQUIRE(grad_check(zmodel, sample, 1e-5, SpikeMode::kSmooth, 64, 3) <
            1e-4);
  }
}

TEST_CASE("trainer") {
  Model model = init_model(tiny_config());
  TrainConfig cfg;
  cfg.epochs = 10;
  cfg.batch_size = 8;
  cfg.lr_connections = 5e-3;
  cfg.lr_neuron = 5e-4;
  const std::vector<Sample> data = separable_dataset(64, 32, 5);
  const int steps = (64 + cfg.batch_size - 1) / cfg.batch_size;

  SECTION("loss decreases on a separable task") {
    Trainer trainer(model, cfg, steps);
    std::vector<double> losses;
    for (int e = 0; e < cfg.epochs; ++e)
      losses.push_back(trainer.train_epoch(data, e).loss);
    REQUIRE(losses.back() < losses.front());
    // smoothed monotonicity: first-half mean above second-half mean
    double first = 0, second = 0;
    for (int e = 0; e < 5; ++e) first += losses[e];
    for (int e = 5; e < 10; ++e) second += losses[e];
    REQUIRE(second < first);
  }

  SECTION("training is deterministic given the seed") {
    Model a = init_model(tiny_config());
    Model b = init_model(tiny_config());
    Trainer ta(a, cfg, steps), tb(b, cfg, steps);
    for (int e = 0; e < 3; ++e) {
      const EpochMetrics ma = ta.train_epoch(data, e);
      const EpochMetrics mb = tb.train_epoch(data, e);
      REQUIRE(ma.loss == mb.loss);
    }
    REQUIRE(a.layers[0].connection == b.layers[0].connection);
  }

  SECTION("fix_eta leaves log_eta untouched") {
    TrainConfig fixed = cfg;
    fixed.fix_eta = true;
    Model m2 = init_model(tiny_config());
    const Eigen::VectorXd before = m2.layers[0].log_eta;
    Trainer trainer(m2, fixed, steps);
    trainer.train_epoch(data, 0);
    REQUIRE(m2.layers[0].log_eta == before);
    REQUIRE(m2.layers[0].freq != model.layers[0].freq);  // others still move
  }

  SECTION("enforce_positive_decay floors the decay") {
    TrainConfig clamped = cfg;
    clamped.enforce_positive_decay = true;
    Model m2 = init_model(tiny_config());
    m2.layers[0].log_neg_real.setConstant(-50.0);
    Trainer trainer(m2, clamped, steps);
    trainer.train_epoch(data, 0);
    REQUIRE(m2.layers[0].log_neg_real.minCoeff() >=
            std::log(1e-6) - 1e-12);
  }
}

TEST_CASE("config parsing") {
  const std::string text =
      "# comment\n"
      "[model]\n"
      "input_dim = 2\n"
      "layer_sizes = 8, 8\n"
      "block_size = 4\n"
      "num_classes = 3\n"
      "[train]\n"
      "epochs = 7\n"
      "lr_connections = 0.01\n";

  SECTION("values and defaults") {
    ConfigFile cfg = ConfigFile::parse(text);
    const ModelConfig m = model_config_from(cfg);
    const TrainConfig t = train_config_from(cfg);
    REQUIRE(m.input_dim == 2);
    REQUIRE(m.layer_sizes == std::vector<int>{8, 8});
    REQUIRE(t.epochs == 7);
    REQUIRE(t.lr_connections == 0.01);
    REQUIRE(t.lr_neuron == 1e-4);  // default
  }

  SECTION("unknown keys rejected after building") {
    ConfigFile cfg = ConfigFile::parse(text + "[train]\nbogus = 1\n");
    model_config_from(cfg);
    train_config_from(cfg);
    data_config_from(cfg);
    REQUIRE_THROWS_AS(cfg.reject_unused(), ConfigError);
  }

  SECTION("malformed lines") {
    REQUIRE_THROWS_AS(ConfigFile::parse("[model\n"), ConfigError);
    REQUIRE_THROWS_AS(ConfigFile::parse("novalue\n"), ConfigError);
    ConfigFile cfg = ConfigFile::parse("[model]\ninput_dim = abc\n");
    REQUIRE_THROWS_AS(model_config_from(cfg), ConfigError);
  }
}
