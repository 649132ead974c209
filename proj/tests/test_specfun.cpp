#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "swalg/quadrature.hpp"
#include "swalg/specfun.hpp"

using namespace swalg;
using Catch::Approx;

namespace {

double gen_binom(double top, double k) { return std::exp(std::lgamma(top + 1) - std::lgamma(k + 1) - std::lgamma(top - k + 1)); }

// Explicit finite-sum forms in extended precision, used as oracles.
double jacobi_explicit(int n, double a, double b, double x) {
  long double s = 0, xl = x;
  for (int k = 0; k <= n; ++k)
    s += std::exp(std::lgamma((long double)n + a + 1) - std::lgamma((long double)n - k + 1) - std::lgamma((long double)a + k + 1)) *
         std::exp(std::lgamma((long double)n + b + 1) - std::lgamma((long double)k + 1) - std::lgamma((long double)n + b - k + 1)) *
         std::pow(0.5L * (xl - 1), k) * std::pow(0.5L * (xl + 1), n - k);
  return static_cast<double>(s);
}

double laguerre_explicit(int n, double a, double z) {
  long double s = 0, zl = z;
  for (int k = 0; k <= n; ++k)
    s += ((k % 2) ? -1.0L : 1.0L) *
         std::exp(std::lgamma((long double)n + a + 1) - std::lgamma((long double)n - k + 1) - std::lgamma((long double)a + k + 1)) *
         std::pow(zl, k) / std::tgamma(k + 1.0L);
  return static_cast<double>(s);
}

// Five-point central differences.
template <class F>
std::pair<double, double> fd(F f, double x, double h) {
  double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  return {(fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h), (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)};
}

double fact(int n) { return std::tgamma(n + 1.0); }

// Wigner's explicit sum for d^j_{m m'}(beta).
double wigner_sum(HalfInt j, HalfInt m, HalfInt mp, double beta) {
  int jpm = (j + m).as_int(), jmm = (j - m).as_int(), jpp = (j + mp).as_int(), jmp = (j - mp).as_int();
  double pref = std::sqrt(fact(jpm) * fact(jmm) * fact(jpp) * fact(jmp));
  double total = 0;
  for (int s = 0; s <= 2 * (j.twice()); ++s) {
    int d1 = jpp - s, d2 = (m - mp).as_int() + s, d3 = jmm - s;
    if (d1 < 0 || d2 < 0 || d3 < 0) continue;
    double sign = ((m - mp).as_int() + s) % 2 ? -1.0 : 1.0;
    double c = std::pow(std::cos(beta / 2), jpp + jmm - 2 * s);
    double sn = std::pow(std::sin(beta / 2), (m - mp).as_int() + 2 * s);
    total += sign * c * sn / (fact(d1) * fact(s) * fact(d2) * fact(d3));
  }
  return pref * total;
}

}  // namespace

TEST_CASE("jacobi_eval matches the small closed cases") {
  auto p = jacobi_eval(0, 0.5, 1.5, 0.3);
  CHECK(p.value == 1.0);
  CHECK(p.d1 == 0.0);
  CHECK(p.d2 == 0.0);
  // P_n(1) = C(n+alpha, n)
  CHECK(jacobi_eval(1, 0, 0, 1).value == Approx(1.0).epsilon(1e-15));
  CHECK(jacobi_eval(4, 1.5, 0.2, 1).value == Approx(gen_binom(5.5, 4)).epsilon(1e-13));
  // degree-2 expansion at x = 0 with alpha = beta = 1/2
  double explicit2 = jacobi_explicit(2, 0.5, 0.5, 0.0);
  CHECK(std::abs(jacobi_eval(2, 0.5, 0.5, 0).value - explicit2) < 1e-14);
  CHECK(explicit2 == Approx(-0.625).epsilon(1e-14));
}

TEST_CASE("jacobi recurrence agrees with the explicit sum and symmetry") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> par(-0.5, 5.0), xs(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    double a = par(rng), b = par(rng);
    for (int n = 0; n <= 10; ++n)
      for (int t = 0; t < 100; ++t) {
        double x = xs(rng);
        double r = jacobi_eval(n, a, b, x).value, e = jacobi_explicit(n, a, b, x);
        REQUIRE(std::abs(r - e) <= 1e-12 * std::max(1.0, std::abs(e)));
        double s = jacobi_eval(n, b, a, -x).value * ((n % 2) ? -1.0 : 1.0);
        REQUIRE(std::abs(r - s) <= 1e-12 * std::max(1.0, std::abs(r)));
      }
  }
}

TEST_CASE("polynomial derivatives match central differences") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> par(-0.5, 4.0), xs(-0.9, 0.9), zs(0.1, 8.0);
  for (int t = 0; t < 200; ++t) {
    int n = t % 9;
    double a = par(rng), b = par(rng), x = xs(rng), z = zs(rng);
    double h = 1e-3;
    auto p = jacobi_eval(n, a, b, x);
    auto [fd1, fd2] = fd([&](double t) { return jacobi_eval(n, a, b, t).value; }, x, h);
    double scale = std::max({1.0, std::abs(p.value), std::abs(p.d1), std::abs(p.d2)});
    CHECK(std::abs(p.d1 - fd1) <= 1e-6 * scale);
    CHECK(std::abs(p.d2 - fd2) <= 1e-6 * scale);
    auto l = laguerre_eval(n, a, z);
    auto [gd1, gd2] = fd([&](double t) { return laguerre_eval(n, a, t).value; }, z, h);
    double lscale = std::max({1.0, std::abs(l.value), std::abs(l.d1), std::abs(l.d2)});
    CHECK(std::abs(l.d1 - gd1) <= 1e-6 * lscale);
    CHECK(std::abs(l.d2 - gd2) <= 1e-6 * lscale);
  }
}

TEST_CASE("laguerre_eval matches closed cases and the explicit sum") {
  auto l0 = laguerre_eval(0, 3, 2.5);
  CHECK(l0.value == 1.0);
  CHECK(l0.d1 == 0.0);
  CHECK(laguerre_eval(1, 2, 1).value == Approx(2.0).epsilon(1e-15));
  CHECK(laguerre_eval(3, 1, 0).value == Approx(4.0).epsilon(1e-14));
  for (int n = 0; n <= 12; ++n)
    for (double z : {0.0, 0.3, 1.7, 5.2, 11.0})
      for (double a : {-0.5, 0.0, 1.5, 4.0}) {
        double e = laguerre_explicit(n, a, z);
        CHECK(std::abs(laguerre_eval(n, a, z).value - e) <= 1e-11 * std::max(1.0, std::abs(e)));
      }
}

TEST_CASE("parameter domain is enforced") {
  CHECK_THROWS_AS(jacobi_eval(2, -1.0, 0.0, 0.1), ParameterDomainError);
  CHECK_THROWS_AS(jacobi_eval(2, 0.0, -1.5, 0.1), ParameterDomainError);
  CHECK_THROWS_AS(laguerre_eval(2, -1.0, 0.1), ParameterDomainError);
}

TEST_CASE("rotation_d reproduces Wigner's explicit sum") {
  CHECK(rotation_d(kHalf, kHalf, kHalf, 0.0) == Approx(1.0));
  CHECK(rotation_d(kHalf, kHalf, kHalf, std::numbers::pi / 2) == Approx(std::cos(std::numbers::pi / 4)).epsilon(1e-14));
  CHECK(rotation_d(1, 0, 0, 0.7) == Approx(std::cos(0.7)).epsilon(1e-14));
  for (int tj = 0; tj <= 8; ++tj) {
    HalfInt j = HalfInt::from_twice(tj);
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tmp = -tj; tmp <= tj; tmp += 2)
        for (double beta : {0.0, 0.31, 1.2, 2.0, 2.9}) {
          HalfInt m = HalfInt::from_twice(tm), mp = HalfInt::from_twice(tmp);
          double e = wigner_sum(j, m, mp, beta);
          INFO("j=" << j.str() << " m=" << m.str() << " mp=" << mp.str() << " beta=" << beta);
          REQUIRE(std::abs(rotation_d(j, m, mp, beta) - e) < 1e-12);
        }
  }
}

TEST_CASE("rotation_d derivatives match central differences") {
  for (int tj = 1; tj <= 6; ++tj) {
    HalfInt j = HalfInt::from_twice(tj);
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tmp = -tj; tmp <= tj; tmp += 2) {
        HalfInt m = HalfInt::from_twice(tm), mp = HalfInt::from_twice(tmp);
        double b = 1.13;
        Jet d = rotation_d_jet(j, m, mp, b);
        auto [f1, f2] = fd([&](double t) { return rotation_d(j, m, mp, t); }, b, 1e-3);
        CHECK(std::abs(d.d1 - f1) < 1e-8);
        CHECK(std::abs(d.d2 - f2) < 1e-7);
      }
  }
}

TEST_CASE("rotation_d rejects invalid labels") {
  CHECK_THROWS_AS(rotation_d(kHalf, HalfInt(1), kHalf, 0.2), LabelError);
  CHECK_THROWS_AS(rotation_d(1, kHalf, 0, 0.2), LabelError);
}

TEST_CASE("rotation functions are orthogonal over [0, pi]") {
  auto rule = detail::gauss_legendre(48, 0.0, std::numbers::pi, Domain::angle_theta);
  for (int tj = 0; tj <= 4; ++tj)
    for (int tjp = tj % 2; tjp <= 4; tjp += 2)
      for (int tm = -std::min(tj, tjp); tm <= std::min(tj, tjp); tm += 2)
        for (int tmp = -std::min(tj, tjp); tmp <= std::min(tj, tjp); tmp += 2) {
          HalfInt j = HalfInt::from_twice(tj), jp = HalfInt::from_twice(tjp);
          HalfInt m = HalfInt::from_twice(tm), mp = HalfInt::from_twice(tmp);
          double s = 0;
          for (int i = 0; i < rule.order(); ++i) {
            double b = rule.nodes[i];
            s += rule.weights[i] * rotation_d(j, m, mp, b) * rotation_d(jp, m, mp, b) * std::sin(b);
          }
          double expect = (tj == tjp) ? 2.0 / (tj + 1.0) : 0.0;
          CHECK(std::abs(s - expect) < 1e-10);
        }
}

TEST_CASE("power_jet has finite limits at the origin") {
  auto j = power_jet(0.0, 1.0);
  CHECK(j.value == 0.0);
  CHECK(j.d1 == 1.0);
  CHECK(j.d2 == 0.0);
  auto k = power_jet(0.0, 2.0);
  CHECK(k.d2 == 2.0);
}
