#include <catch_amalgamated.hpp>

#include <random>

#include "swalg/oscillator.hpp"
#include "swalg/quadrature.hpp"

using namespace swalg;
using Catch::Matchers::WithinAbs;

TEST_CASE("derived labels") {
  auto d = derived_labels({2, 0, {1}, {1, 2}});
  CHECK(d.j == HalfInt::from_twice(5));
  CHECK(d.N == 5);
  CHECK(d.a[0] == HalfInt::from_twice(3));
  CHECK(d.b[0] == HalfInt::from_twice(5));

  auto g = derived_labels({2, 0, {0}, {0, 0}});
  CHECK(g.j == HalfInt(0));
  CHECK(g.separation.C[0] == 0);

  auto t = derived_labels({3, 0, {1, 0}, {1, 1, 2}});
  CHECK(t.j == HalfInt(3));
  CHECK(t.separation.C[0] == 60);
  CHECK(t.separation.C[2] == 4);
}

TEST_CASE("separation constants agree over random labels") {
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    int D = std::uniform_int_distribution<int>(2, 6)(rng);
    OscLabel l{D, std::uniform_int_distribution<int>(0, 3)(rng), std::vector<int>(D - 1), std::vector<int>(D)};
    for (auto& v : l.n) v = std::uniform_int_distribution<int>(0, 4)(rng);
    for (auto& v : l.p) v = std::uniform_int_distribution<int>(-4, 4)(rng);
    CHECK(separation_closed_form(l) == separation_by_recursion(l));
    CHECK_NOTHROW(derived_labels(l));
  }
}

TEST_CASE("energies") {
  CHECK(osc_energy({2, 0, {0}, {0, 0}}) == 4.0);
  CHECK(osc_energy({2, 1, {0}, {1, 0}}) == 10.0);
  CHECK(osc_energy({3, 0, {0, 0}, {0, 0, 0}}) == 6.0);
  for (int N = 0; N <= 4; ++N)
    for (const auto& l : enumerate_level(N, 2)) CHECK(osc_energy(l) == 2.0 * (N + 2));
}

TEST_CASE("level enumeration matches the degeneracy") {
  CHECK(enumerate_level(0, 2).size() == 1);
  CHECK(enumerate_level(2, 2).size() == 10);
  CHECK(enumerate_level(1, 3).size() == 6);
  for (int D : {2, 3})
    for (int N = 0; N <= 6; ++N) {
      auto ls = enumerate_level(N, D);
      CHECK(static_cast<long long>(ls.size()) == osc_degeneracy(N, D));
      for (const auto& l : ls) CHECK(label_N(l) == N);
    }
  auto ls = enumerate_level(3, 2);
  for (std::size_t i = 1; i < ls.size(); ++i)
    CHECK(std::tie(ls[i - 1].n_r, ls[i - 1].n, ls[i - 1].p) < std::tie(ls[i].n_r, ls[i].n, ls[i].p));
}

TEST_CASE("cartesian map") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  for (int t = 0; t < 20; ++t) {
    double R = 0.3 + u(rng);
    auto X = cartesian_from_hyper(R, {u(rng), u(rng)}, {4 * u(rng), 4 * u(rng), 4 * u(rng)}, 3);
    double s = 0;
    for (double x : X) s += x * x;
    CHECK_THAT(s, WithinAbs(R * R, 1e-12));
  }
  auto X = cartesian_from_hyper(2.0, {0.0}, {0.4, 0.9}, 2);
  CHECK_THAT(X[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(X[1], WithinAbs(0.0, 1e-15));
  CHECK_THAT(X[2], WithinAbs(2.0 * std::sin(0.9), 1e-15));
  CHECK_THAT(X[3], WithinAbs(2.0 * std::cos(0.9), 1e-15));
  auto Y = cartesian_from_hyper(2.0, {std::numbers::pi / 2}, {0.0, 0.7}, 2);
  CHECK_THAT(Y[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(Y[1], WithinAbs(2.0, 1e-15));
  CHECK_THAT(Y[2], WithinAbs(0.0, 1e-15));
  CHECK_THAT(Y[3], WithinAbs(0.0, 1e-15));
}

TEST_CASE("oscillator states are orthonormal for N <= 4") {
  RuleSet rules;
  std::vector<OscLabel> all;
  for (int N = 0; N <= 4; ++N)
    for (const auto& l : enumerate_level(N, 2)) all.push_back(l);
  std::vector<WaveEval> psi;
  for (const auto& l : all) psi.push_back(osc_wavefunction(l));
  double worst = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t k = i; k < all.size(); ++k) {
      auto v = inner_product(psi[i], psi[k], Measure::dV, rules).value;
      worst = std::max(worst, std::abs(v - (i == k ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("analytic derivatives match finite differences") {
  std::vector<OscLabel> labels{{2, 1, {1}, {1, -2}}, {2, 0, {2}, {0, 1}}, {3, 1, {1, 0}, {1, 0, -1}}};
  std::vector<double> pt3{0.9, 0.7, 0.5, 0.3, 1.1, 2.0};
  for (const auto& l : labels) {
    WaveEval psi = osc_wavefunction(l);
    std::vector<double> pt(pt3.begin(), pt3.begin() + 2 * l.D);
    for (int c = 0; c < l.D; ++c) {
      double h = 1e-3;
      auto at = [&](double dx) {
        auto q = pt;
        q[c] += dx;
        return psi(q);
      };
      auto d2 = (-at(2 * h) + 16.0 * at(h) - 30.0 * at(0) + 16.0 * at(-h) - at(-2 * h)) / (12 * h * h);
      auto d1 = (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12 * h);
      auto t = psi.derivatives(pt);
      double s = std::max(1e-3, std::abs(t.partial(MultiIndex::d(c, c))));
      CHECK(std::abs(t.partial(MultiIndex::d(c, c)) - d2) / s < 1e-5);
      CHECK(std::abs(t.partial(MultiIndex::d(c)) - d1) / std::max(1e-3, std::abs(d1)) < 1e-5);
    }
  }
}

TEST_CASE("states vanish at the origin when j > 0") {
  WaveEval psi = osc_wavefunction({2, 0, {0}, {1, 0}});
  auto t = psi.derivatives({0.0, 0.5, 0.0, 0.0});
  CHECK(t.value() == std::complex<double>(0.0));
  CHECK(std::isfinite(std::abs(t.partial(MultiIndex::d(0, 0)))));
  CHECK_THROWS_AS(osc_wavefunction({2, -1, {0}, {0, 0}}), LabelError);
}
