#include <catch2/catch_amalgamated.hpp>

#include "s5rf/discretize.hpp"
#include "s5rf/scan.hpp"

using namespace s5rf;
using Catch::Approx;

namespace {

SsmLayerParams scalar_params(cplx lambda, double eta, cplx b,
                             DiscretizationMode mode) {
  SsmLayerParams p;
  p.log_neg_real = Eigen::VectorXd::Constant(1, std::log(-lambda.real()));
  p.freq = Eigen::VectorXd::Constant(1, lambda.imag());
  p.log_eta = Eigen::VectorXd::Constant(1, std::log(eta));
  p.connection = Eigen::MatrixXcd::Constant(1, 1, b);
  p.mode = mode;
  return p;
}

// Classical RK4 on dx/dt = eta*lambda*x + eta*b*u(t) with u piecewise
// constant; the independent oracle for the ZOH recurrence.
cplx rk4_piecewise(cplx lambda, double eta, cplx b,
                   const std::vector<cplx>& held, double dt, int substeps) {
  cplx x = 0.0;
  const double h = dt / substeps;
  for (const cplx& u : held) {
    auto f = [&](cplx xv) { return eta * lambda * xv + eta * b * u; };
    for (int s = 0; s < substeps; ++s) {
      const cplx k1 = f(x);
      const cplx k2 = f(x + 0.5 * h * k1);
      const cplx k3 = f(x + 0.5 * h * k2);
      const cplx k4 = f(x + h * k3);
      x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return x;
}

}  // namespace

TEST_CASE("zoh discretization") {
  SECTION("scalar closed form") {
    const auto d = discretize_zoh(
        scalar_params(cplx(-1, 0), 1.0, cplx(2, 0), DiscretizationMode::kZoh),
        1.0);
    REQUIRE(d.a_bar[0].real() == Approx(std::exp(-1.0)).epsilon(1e-12));
    REQUIRE(d.b_bar(0, 0).real() ==
            Approx((1.0 - std::exp(-1.0)) * 2.0).epsilon(1e-12));
  }

  SECTION("eta=1 reduces to the unscaled form") {
    const cplx lambda(-0.3, 1.7);
    const cplx b(0.5, -0.25);
    const double dt = 0.7;
    const auto d = discretize_zoh(
        scalar_params(lambda, 1.0, b, DiscretizationMode::kZoh), dt);
    REQUIRE(std::abs(d.a_bar[0] - std::exp(dt * lambda)) < 1e-12);
    REQUIRE(std::abs(d.b_bar(0, 0) -
                     (std::exp(dt * lambda) - 1.0) / lambda * b) < 1e-12);
  }

  SECTION("near-zero lambda limit") {
    const cplx b(1.0, 0.0);
    const auto d = discretize_zoh(
        scalar_params(cplx(-1e-12, 0), 2.0, b, DiscretizationMode::kZoh), 1.0);
    REQUIRE(d.b_bar(0, 0).real() == Approx(2.0).epsilon(1e-8));
  }

  SECTION("invalid dt") {
    REQUIRE_THROWS_AS(
        discretize_zoh(
            scalar_params(cplx(-1, 0), 1, cplx(1, 0), DiscretizationMode::kZoh),
            0.0),
        ConfigError);
  }
}

TEST_CASE("dirac discretization") {
  SECTION("scalar exponential") {
    constexpr double kPi = 3.14159265358979323846;
    const auto d = discretize_dirac(
        scalar_params(cplx(-0.5, kPi), 1.0, cplx(1, 0),
                      DiscretizationMode::kDirac),
        1.0);
    REQUIRE(d.a_bar[0].real() == Approx(-std::exp(-0.5)).epsilon(1e-12));
    REQUIRE(d.a_bar[0].imag() == Approx(0.0).margin(1e-12));
  }

  SECTION("b_bar scales linearly in eta") {
    const cplx b(0.3, -0.8);
    const auto d = discretize_dirac(
        scalar_params(cplx(-1, 2), 2.0, b, DiscretizationMode::kDirac), 1.0);
    REQUIRE(std::abs(d.b_bar(0, 0) - 2.0 * b) < 1e-15);
  }

  SECTION("scaling law: (eta, dt) equals (1, eta*dt) on a_bar") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const cplx lambda(-rng.uniform(0.1, 2.0), rng.uniform(-5, 5));
      const double eta = rng.uniform(0.1, 3.0);
      const double dt = rng.uniform(0.1, 2.0);
      const auto a = discretize_dirac(
          scalar_params(lambda, eta, cplx(1, 0), DiscretizationMode::kDirac),
          dt);
      const auto b = discretize_dirac(
          scalar_params(lambda, 1.0, cplx(1, 0), DiscretizationMode::kDirac),
          eta * dt);
      REQUIRE(std::abs(a.a_bar[0] - b.a_bar[0]) < 1e-12);
    }
  }

  SECTION("discrete stability |a_bar| < 1") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const cplx lambda(-rng.uniform(1e-3, 4.0), rng.uniform(-20, 20));
      const double eta = rng.uniform(1e-3, 5.0);
      const auto d = discretize_dirac(
          scalar_params(lambda, eta, cplx(1, 0), DiscretizationMode::kDirac),
          1.0);
      REQUIRE(std::abs(d.a_bar[0]) < 1.0);
    }
  }

  SECTION("pure integrator at lambda=0") {
    SsmLayerParams p;
    p.log_neg_real = Eigen::VectorXd::Constant(1, -745.0);  // exp() underflows
    p.freq = Eigen::VectorXd::Zero(1);
    p.log_eta = Eigen::VectorXd::Zero(1);
    p.connection = Eigen::MatrixXcd::Constant(1, 1, cplx(1, 0));
    p.mode = DiscretizationMode::kDirac;
    const auto d = discretize_dirac(p, 1.0);
    REQUIRE(d.a_bar[0].real() == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("analytic state") {
  SECTION("no events is zero") {
    REQUIRE(analytic_state(cplx(-1, 1), {}, 5.0) == cplx(0, 0));
  }

  SECTION("event at the query time") {
    const cplx bu(0.7, -0.2);
    REQUIRE(std::abs(analytic_state(cplx(-1, 3), {{1.0, bu}}, 1.0) - bu) <
            1e-15);
  }

  SECTION("unsorted events rejected") {
    REQUIRE_THROWS_AS(
        analytic_state(cplx(-1, 0), {{2.0, cplx(1, 0)}, {1.0, cplx(1, 0)}},
                       3.0),
        ConfigError);
  }

  SECTION("matches the recurrence on a unit grid") {
    const cplx lambda(-0.5, 2.0);
    const std::vector<cplx> weights = {cplx(1, 0), cplx(0, -1), cplx(0.5, 0.5)};
    Eigen::MatrixXcd inputs(1, 3);
    std::vector<std::pair<double, cplx>> events;
    for (int k = 0; k < 3; ++k) {
      inputs(0, k) = weights[k];
      events.emplace_back(double(k), weights[k]);
    }
    const Eigen::VectorXcd a = Eigen::VectorXcd::Constant(1, std::exp(lambda));
    const StateSequence seq = scan_sequential(a, inputs);
    for (int k = 0; k < 3; ++k) {
      const cplx want = analytic_state(lambda, events, double(k));
      REQUIRE(std::abs(seq.states(0, k) - want) /
                  std::max(1.0, std::abs(want)) <
              1e-12);
    }
  }
}

TEST_CASE("discretization exactness") {
  SECTION("dirac recurrence reproduces the analytic solution") {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
      const cplx lambda(-rng.uniform(0.05, 2.0), rng.uniform(-8, 8));
      const double eta = rng.uniform(0.2, 2.0);
      const cplx b(rng.normal(), rng.normal());
      const int len = 1 + int(rng.uniform_int(200));
      const auto d = discretize_dirac(
          scalar_params(lambda, eta, b, DiscretizationMode::kDirac), 1.0);
      Eigen::MatrixXcd inputs(1, len);
      std::vector<std::pair<double, cplx>> events;
      for (int k = 0; k < len; ++k) {
        const cplx u = rng.uniform() < 0.4 ? cplx(rng.normal(), 0) : cplx(0, 0);
        inputs(0, k) = d.b_bar(0, 0) * u;
        if (u != cplx(0, 0)) events.emplace_back(double(k), eta * b * u);
      }
      const StateSequence seq = scan_sequential(d.a_bar, inputs);
      for (int k = len - 1; k >= 0; k -= std::max(1, len / 7)) {
        const cplx want = analytic_state(eta * lambda, events, double(k));
        const double scale = std::max(1e-12, std::abs(want));
        REQUIRE(std::abs(seq.states(0, k) - want) / scale < 1e-10);
      }
    }
  }

  SECTION("zoh recurrence matches a fine RK4 solve at grid points") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      const cplx lambda(-rng.uniform(0.1, 1.5), rng.uniform(-4, 4));
      const double eta = rng.uniform(0.3, 1.5);
      const cplx b(rng.normal(), rng.normal());
      const double dt = rng.uniform(0.2, 1.0);
      const int len = 16;
      const auto d = discretize_zoh(
          scalar_params(lambda, eta, b, DiscretizationMode::kZoh), dt);
      std::vector<cplx> held;
      Eigen::MatrixXcd inputs(1, len);
      for (int k = 0; k < len; ++k) {
        const cplx u(rng.normal(), 0);
        held.push_back(u);
        inputs(0, k) = d.b_bar(0, 0) * u;
      }
      const StateSequence seq = scan_sequential(d.a_bar, inputs);
      const cplx oracle = rk4_piecewise(lambda, eta, b, held, dt, 1000);
      const double scale = std::max(1e-9, std::abs(oracle));
      REQUIRE(std::abs(seq.states(0, len - 1) - oracle) / scale < 1e-8);
    }
  }
}
