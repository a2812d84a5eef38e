#include <catch2/catch_amalgamated.hpp>

#include "s5rf/layer.hpp"

using namespace s5rf;
using Catch::Approx;

namespace {

Eigen::MatrixXd random_raster(int rows, int cols, double rate, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform() < rate ? 1.0 : 0.0;
  return m;
}

SsmLayerParams small_layer(int h_in, int h, std::uint64_t seed,
                           DiscretizationMode mode) {
  SsmLayerParams p = init_layer(h_in, h, h, seed, mode);
  // nudge eta off 1 so its gradient path is exercised
  Rng rng(seed + 100);
  for (int i = 0; i < h; ++i) p.log_eta[i] = 0.1 * rng.normal();
  return p;
}

// Scalar loss with fixed random weights; differentiable in every spike entry.
struct WeightedLoss {
  Eigen::MatrixXd w;
  explicit WeightedLoss(int h, int len, std::uint64_t seed) {
    Rng rng(seed);
    w.resize(h, len);
    for (int i = 0; i < h; ++i)
      for (int k = 0; k < len; ++k) w(i, k) = rng.normal();
  }
  double operator()(const Eigen::MatrixXd& spikes) const {
    return (w.array() * spikes.array()).sum();
  }
};

double layer_loss(const SsmLayerParams& p, const Eigen::MatrixXd& input,
                  SpikeMode mode, const WeightedLoss& loss) {
  return loss(rf_layer_forward(p, input, mode).spikes);
}

// Max relative error between the analytic layer gradient and central finite
// differences over every parameter entry.
double layer_grad_check(SsmLayerParams& p, const Eigen::MatrixXd& input,
                        SpikeMode mode, double eps = 1e-6) {
  const WeightedLoss loss(p.state_size(), int(input.cols()), 7);
  LayerGrads grads = LayerGrads::zeros_like(p);
  const LayerTrace tr = rf_layer_forward(p, input, mode);
  Eigen::MatrixXd dspikes = loss.w;
  rf_layer_backward(p, tr, dspikes, grads, mode);

  double worst = 0.0;
  auto fd_entry = [&](double* ptr, double analytic) {
    const double saved = *ptr;
    *ptr = saved + eps;
    const double up = layer_loss(p, input, mode, loss);
    *ptr = saved - eps;
    const double down = layer_loss(p, input, mode, loss);
    *ptr = saved;
    const double fd = (up - down) / (2 * eps);
    worst = std::max(worst, std::abs(fd - analytic) /
                                std::max({1e-8, std::abs(fd), std::abs(analytic)}));
  };
  for (int i = 0; i < p.state_size(); ++i) {
    fd_entry(&p.log_neg_real[i], grads.log_neg_real[i]);
    fd_entry(&p.freq[i], grads.freq[i]);
    fd_entry(&p.log_eta[i], grads.log_eta[i]);
  }
  for (Eigen::Index i = 0; i < p.connection.size(); ++i) {
    fd_entry(reinterpret_cast<double*>(p.connection.data() + i),
             grads.connection(i).real());
    fd_entry(reinterpret_cast<double*>(p.connection.data() + i) + 1,
             grads.connection(i).imag());
  }
  return worst;
}

}  // namespace

TEST_CASE("surrogate shape") {
  const SurrogateParams sur;
  SECTION("even in v, peaked at zero") {
    for (double v : {0.1, 0.5, 1.0, 2.5})
      REQUIRE(surrogate_grad(v, sur) == Approx(surrogate_grad(-v, sur)));
    REQUIRE(surrogate_grad(0.0, sur) > surrogate_grad(0.3, sur));
    REQUIRE(surrogate_grad(0.0, sur) == Approx(1.0 + sur.h - 2 * sur.h *
                                               std::exp(-0.5 / (sur.s * sur.s))));
  }

  SECTION("primitive differentiates back to the surrogate") {
    for (double v = -3.0; v <= 3.0; v += 0.37) {
      const double eps = 1e-6;
      const double fd = (surrogate_primitive(v + eps, sur) -
                         surrogate_primitive(v - eps, sur)) /
                        (2 * eps);
      REQUIRE(fd == Approx(surrogate_grad(v, sur)).margin(1e-8));
    }
  }

  SECTION("primitive vanishes far below threshold") {
    REQUIRE(surrogate_primitive(-40.0, sur) == Approx(0.0).margin(1e-12));
  }

  SECTION("threshold membrane fires") {
    REQUIRE(spike_hard(0.0) == 1.0);
    REQUIRE(spike_hard(-1e-15) == 0.0);
  }
}

TEST_CASE("spike forward") {
  Eigen::MatrixXcd x(2, 2);
  x << cplx(1.5, -4.0), cplx(0.99, 0), cplx(1.0, 9.9), cplx(-2, 0);
  const Eigen::MatrixXd s = spike_forward(x, 1.0);
  REQUIRE(s(0, 0) == 1.0);
  REQUIRE(s(0, 1) == 0.0);
  REQUIRE(s(1, 0) == 1.0);  // imaginary part is ignored
  REQUIRE(s(1, 1) == 0.0);
}

TEST_CASE("connection apply") {
  Rng rng(5);
  Eigen::MatrixXcd w(6, 4);
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w(i) = cplx(rng.normal(), rng.normal());

  SECTION("sparse and dense paths agree") {
    const Eigen::MatrixXd sparse = random_raster(4, 40, 0.05, rng);
    const Eigen::MatrixXd dense = random_raster(4, 40, 0.9, rng);
    for (const auto& z : {sparse, dense}) {
      Eigen::MatrixXcd want(6, 40);
      want.real() = w.real() * z;
      want.imag() = w.imag() * z;
      const Eigen::MatrixXcd got = detail::connection_apply(w, z);
      REQUIRE((got - want).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SECTION("all-zero input gives zero") {
    const Eigen::MatrixXcd got =
        detail::connection_apply(w, Eigen::MatrixXd::Zero(4, 10));
    REQUIRE(got.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("layer forward") {
  SECTION("zero input produces no spikes") {
    const SsmLayerParams p = small_layer(4, 8, 1, DiscretizationMode::kDirac);
    const LayerTrace tr = rf_layer_forward(p, Eigen::MatrixXd::Zero(4, 20));
    REQUIRE(tr.states.cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(tr.spikes.sum() == 0.0);
  }

  SECTION("matches discretize plus scan composed by hand") {
    Rng rng(9);
    const SsmLayerParams p = small_layer(3, 8, 2, DiscretizationMode::kDirac);
    const Eigen::MatrixXd input = random_raster(3, 25, 0.3, rng);
    const LayerTrace tr = rf_layer_forward(p, input);

    const DiscreteSystem d = discretize_dirac(p, 1.0);
    Eigen::MatrixXcd drive(8, 25);
    drive.real() = d.b_bar.real() * input;
    drive.imag() = d.b_bar.imag() * input;
    const StateSequence seq = scan_sequential(d.a_bar, drive);
    REQUIRE((tr.states - seq.states).cwiseAbs().maxCoeff() < 1e-12);
    for (int k = 0; k < 25; ++k)
      for (int i = 0; i < 8; ++i)
        REQUIRE(tr.spikes(i, k) ==
                spike_hard(seq.states(i, k).real() - p.threshold));
  }

  SECTION("zoh mode uses the held-input factor") {
    Rng rng(11);
    const SsmLayerParams p = [&] {
      SsmLayerParams q = small_layer(2, 4, 3, DiscretizationMode::kZoh);
      q.mode = DiscretizationMode::kZoh;
      return q;
    }();
    const Eigen::MatrixXd input = random_raster(2, 10, 0.5, rng);
    const LayerTrace tr = rf_layer_forward(p, input);
    const DiscreteSystem d = discretize_zoh(p, 1.0);
    Eigen::MatrixXcd drive(4, 10);
    drive.real() = d.b_bar.real() * input;
    drive.imag() = d.b_bar.imag() * input;
    const StateSequence seq = scan_sequential(d.a_bar, drive);
    REQUIRE((tr.states - seq.states).cwiseAbs().maxCoeff() < 1e-12);
  }

  SECTION("fixed basis projects before thresholding") {
    const int h = 4;
    SsmLayerParams p = small_layer(2, h, 4, DiscretizationMode::kZoh);
    p.mode = DiscretizationMode::kZoh;
    const EigenSystem eig = eig_hippo_normal(build_hippo_normal(h));
    p.fixed_basis = block_diag_basis(eig, h);
    p.basis_block = h;
    Rng rng(13);
    const Eigen::MatrixXd input = random_raster(2, 12, 0.5, rng);
    const LayerTrace tr = rf_layer_forward(p, input);
    const Eigen::MatrixXd want = (eig.basis * tr.states).real();
    REQUIRE((tr.membrane - want).cwiseAbs().maxCoeff() < 1e-12);
  }

  SECTION("input dimension mismatch") {
    const SsmLayerParams p = small_layer(4, 8, 1, DiscretizationMode::kDirac);
    REQUIRE_THROWS_AS(rf_layer_forward(p, Eigen::MatrixXd::Zero(5, 4)),
                      ConfigError);
  }
}

TEST_CASE("layer backward against finite differences") {
  Rng rng(21);
  const Eigen::MatrixXd input = random_raster(3, 16, 0.4, rng);

  SECTION("identity mode, dirac") {
    SsmLayerParams p = small_layer(3, 8, 31, DiscretizationMode::kDirac);
    REQUIRE(layer_grad_check(p, input, SpikeMode::kIdentity) < 1e-7);
  }

  SECTION("identity mode, zoh") {
    SsmLayerParams p = small_layer(3, 8, 32, DiscretizationMode::kZoh);
    p.mode = DiscretizationMode::kZoh;
    REQUIRE(layer_grad_check(p, input, SpikeMode::kIdentity) < 1e-7);
  }

  SECTION("smooth mode, dirac") {
    SsmLayerParams p = small_layer(3, 8, 33, DiscretizationMode::kDirac);
    REQUIRE(layer_grad_check(p, input, SpikeMode::kSmooth) < 1e-5);
  }

  SECTION("smooth mode, zoh with fixed basis") {
    SsmLayerParams p = small_layer(3, 8, 34, DiscretizationMode::kZoh);
    p.mode = DiscretizationMode::kZoh;
    p.fixed_basis = block_diag_basis(eig_hippo_normal(build_hippo_normal(4)), 8);
    p.basis_block = 4;
    REQUIRE(layer_grad_check(p, input, SpikeMode::kSmooth) < 1e-5);
  }

  SECTION("continuous-valued input, zoh") {
    Eigen::MatrixXd cont(3, 16);
    for (Eigen::Index i = 0; i < cont.size(); ++i)
      cont.data()[i] = rng.uniform();
    SsmLayerParams p = small_layer(3, 8, 35, DiscretizationMode::kZoh);
    p.mode = DiscretizationMode::kZoh;
    REQUIRE(layer_grad_check(p, cont, SpikeMode::kSmooth) < 1e-5);
  }
}
