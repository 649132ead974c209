#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "swalg/quadrature.hpp"

using namespace swalg;

namespace {
double sum(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}
}  // namespace

TEST_CASE("rules integrate the constant function to the domain measure") {
  CHECK(std::abs(sum(make_rule("angle-lambda", 8).weights) - 2 * std::numbers::pi) < 1e-12);
  CHECK(std::abs(sum(make_rule("radial-z", 16).weights) - 1.0) < 1e-14);
  CHECK(std::abs(sum(make_rule("angle-theta", 24).weights) - std::numbers::pi / 2) < 1e-12);
  CHECK(std::abs(sum(make_rule("angle-phi", 7).weights) - std::numbers::pi / 2) < 1e-12);
  CHECK(make_rule("angle-phi", 7).domain == Domain::angle_phi);
}

TEST_CASE("unknown tags and orders are rejected") {
  CHECK_THROWS_AS(make_rule("angle-psi", 4), UsageError);
  CHECK_THROWS_AS(make_rule(Domain::radial_z, 0), UsageError);
}

TEST_CASE("angle rule integrates sin^3 cos on a quarter period") {
  auto r = make_rule("angle-theta", 24);
  double s = 0;
  for (int i = 0; i < r.order(); ++i) s += r.weights[i] * std::pow(std::sin(r.nodes[i]), 3) * std::cos(r.nodes[i]);
  CHECK(std::abs(s - 0.25) < 1e-12);
}

TEST_CASE("radial rule reproduces gamma moments") {
  for (int order : {16, 48, 96}) {
    auto r = make_rule(Domain::radial_z, order);
    for (int k = 0; k <= 20; ++k) {
      double s = 0;
      for (int i = 0; i < r.order(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      CHECK(std::abs(s / std::tgamma(k + 1.0) - 1.0) < 1e-12);
    }
    // plain weights integrate e^{-z} times a polynomial against dz
    double s = 0;
    for (int i = 0; i < r.order(); ++i) s += r.plain_weights[i] * std::exp(-r.nodes[i]) * r.nodes[i] * r.nodes[i];
    CHECK(std::abs(s - 2.0) < 1e-12);
  }
  auto g = make_rule(Domain::radial_z, 20, 1.5);
  double s = 0;
  for (int i = 0; i < g.order(); ++i) s += g.weights[i] * g.nodes[i];
  CHECK(std::abs(s - std::tgamma(3.5)) < 1e-12);
}

TEST_CASE("periodic rule annihilates nonzero frequencies") {
  int M = 16;
  auto r = make_rule(Domain::angle_lambda, M);
  for (int k = 1; k < M; ++k) {
    std::complex<double> s = detail::phase_integral(r, k);
    CHECK(std::abs(s) < 1e-14);
  }
  CHECK(std::abs(detail::phase_integral(r, 0) - 2 * std::numbers::pi) < 1e-13);
}

TEST_CASE("factorized and brute-force grid inner products agree") {
  auto radial = [](double R) { return Jet{R * std::exp(-R * R / 2), 0, 0}; };
  auto ang = [](double t) { return Jet{std::cos(t) * std::sin(t), 0, 0}; };
  WaveEval a(CoordSystem::osc, 2, {0.3, 0.1}, radial, {ang}, {1, 0});
  WaveEval b(CoordSystem::osc, 2, 1.0, radial, {ang}, {1, 0});
  RuleSet rules(QuadOrders{12, 12, 6});
  auto f = inner_product(a, b, Measure::dV, rules);
  auto g = inner_product_grid(a, b, Measure::dV, rules);
  CHECK(std::abs(f.value - g) < 1e-13);
  CHECK(f.est_error >= 0.0);
  // analytic: int R^5 e^{-R^2} dR = 1, int sin^3 cos^3 = 1/12, (2 pi)^2
  std::complex<double> expect = std::conj(std::complex<double>(0.3, 0.1)) * (1.0 / 12.0) * 4.0 * std::numbers::pi * std::numbers::pi;
  CHECK(std::abs(f.value - expect) < 1e-12);
}

TEST_CASE("inner products reject mismatched systems") {
  auto one = [](double) { return Jet{1, 0, 0}; };
  WaveEval a(CoordSystem::osc, 2, 1.0, one, {one}, {0, 0});
  WaveEval b(CoordSystem::sw, 2, 1.0, one, {one}, {0, 0});
  RuleSet rules(QuadOrders{8, 8, 4});
  CHECK_THROWS_AS(inner_product(a, b, Measure::dV, rules), UsageError);
  CHECK_THROWS_AS(inner_product(a, a, Measure::dv, rules), UsageError);
}
