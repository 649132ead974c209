#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "swalg/half_int.hpp"
#include "swalg/specfun.hpp"
#include "swalg/wave.hpp"

namespace swalg {

// Oscillator quantum numbers: n has D-1 entries, p has D.
struct OscLabel {
  int D = 2;
  int n_r = 0;
  std::vector<int> n;
  std::vector<int> p;

  void validate() const {
    if (D < 2 || D > kMaxD) throw LabelError("OscLabel: D out of range");
    if (n_r < 0) throw LabelError("OscLabel: negative n_r");
    if (static_cast<int>(n.size()) != D - 1 || static_cast<int>(p.size()) != D)
      throw LabelError("OscLabel: n needs D-1 entries and p needs D");
    for (int v : n)
      if (v < 0) throw LabelError("OscLabel: negative n entry");
  }

  std::string str() const {
    std::string s = "(" + std::to_string(n_r) + ";";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    s += ";";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  }

  friend bool operator==(const OscLabel&, const OscLabel&) = default;
};

struct SeparationData {
  std::vector<long long> Delta;  // Delta_1 .. Delta_D
  std::vector<long long> C;      // C_1 .. C_D
  friend bool operator==(const SeparationData&, const SeparationData&) = default;
};

struct DerivedLabels {
  HalfInt j;
  int N = 0;
  std::vector<HalfInt> a;  // a_1 .. a_{D-1}
  std::vector<HalfInt> b;  // b_1 .. b_{D-1}
  SeparationData separation;
};

inline HalfInt label_j(const OscLabel& l) {
  long long twice = 0;
  for (int v : l.n) twice += 2LL * v;
  for (int v : l.p) twice += std::abs(v);
  return HalfInt::from_twice(twice);
}

inline int label_N(const OscLabel& l) { return static_cast<int>(2 * l.n_r + label_j(l).twice()); }

// a_nu = |p_nu| + 1/2; b_nu = 2 n_{nu+1} + ... + 2 n_{D-1} + |p_{nu+1}| + ... + |p_D| + 1/2.
inline std::pair<std::vector<HalfInt>, std::vector<HalfInt>> label_ab(const OscLabel& l) {
  std::vector<HalfInt> a(l.D - 1), b(l.D - 1);
  for (int nu = 1; nu <= l.D - 1; ++nu) {
    a[nu - 1] = HalfInt::from_twice(2LL * std::abs(l.p[nu - 1]) + 1);
    long long twice = 1;
    for (int mu = nu + 1; mu <= l.D - 1; ++mu) twice += 4LL * l.n[mu - 1];
    for (int mu = nu + 1; mu <= l.D; ++mu) twice += 2LL * std::abs(l.p[mu - 1]);
    b[nu - 1] = HalfInt::from_twice(twice);
  }
  return {a, b};
}

// Delta_nu = 2 sum_{mu>=nu} n_mu + sum_{mu>=nu} |p_mu| + D - nu,
// C_nu = S_nu (S_nu + 2D - 2nu) with S_nu = 2 sum n + sum |p| from nu on.
inline SeparationData separation_closed_form(const OscLabel& l) {
  SeparationData s;
  for (int nu = 1; nu <= l.D; ++nu) {
    long long S = 0;
    for (int mu = nu; mu <= l.D - 1; ++mu) S += 2LL * l.n[mu - 1];
    for (int mu = nu; mu <= l.D; ++mu) S += std::abs(l.p[mu - 1]);
    s.Delta.push_back(S + l.D - nu);
    s.C.push_back(S * (S + 2LL * l.D - 2LL * nu));
  }
  return s;
}

// Delta_D = |p_D|, Delta_nu = 2 n_nu + |p_nu| + Delta_{nu+1} + 1, C_nu = Delta_nu^2 - (D-nu)^2.
inline SeparationData separation_by_recursion(const OscLabel& l) {
  SeparationData s;
  s.Delta.assign(l.D, 0);
  s.C.assign(l.D, 0);
  s.Delta[l.D - 1] = std::abs(l.p[l.D - 1]);
  for (int nu = l.D - 1; nu >= 1; --nu)
    s.Delta[nu - 1] = 2LL * l.n[nu - 1] + std::abs(l.p[nu - 1]) + s.Delta[nu] + 1;
  for (int nu = 1; nu <= l.D; ++nu) {
    long long d = l.D - nu;
    s.C[nu - 1] = s.Delta[nu - 1] * s.Delta[nu - 1] - d * d;
  }
  return s;
}

inline DerivedLabels derived_labels(const OscLabel& l) {
  l.validate();
  DerivedLabels d;
  d.j = label_j(l);
  d.N = label_N(l);
  std::tie(d.a, d.b) = label_ab(l);
  d.separation = separation_closed_form(l);
  SeparationData rec = separation_by_recursion(l);
  if (!(rec == d.separation)) throw std::logic_error("separation constants: closed form and recursion disagree");
  long long twoj = d.j.twice();
  if (rec.C[0] != twoj * (twoj + 2LL * l.D - 2)) throw std::logic_error("separation constants: C_1 != 4j(j+D-1)");
  if (rec.C[l.D - 1] != 1LL * l.p[l.D - 1] * l.p[l.D - 1]) throw std::logic_error("separation constants: C_D != p_D^2");
  return d;
}

inline double osc_energy(const OscLabel& l) { return 2.0 * (2.0 * l.n_r + label_j(l).twice() + l.D); }

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long osc_degeneracy(int N, int D) { return binomial(N + 2LL * D - 1, 2LL * D - 1); }

namespace detail {

inline void enumerate_rec(int budget, int D, std::vector<int>& n, std::vector<int>& p, int idx, int n_r,
                          std::vector<OscLabel>& out) {
  // idx walks n_1..n_{D-1} then p_1..p_D; budget is what is left of 2j.
  if (idx < D - 1) {
    for (int v = 0; 2 * v <= budget; ++v) {
      n[idx] = v;
      enumerate_rec(budget - 2 * v, D, n, p, idx + 1, n_r, out);
    }
    return;
  }
  int k = idx - (D - 1);
  if (k == D - 1) {
    if (budget == 0) {
      p[k] = 0;
      out.push_back({D, n_r, n, p});
    } else {
      p[k] = -budget;
      out.push_back({D, n_r, n, p});
      p[k] = budget;
      out.push_back({D, n_r, n, p});
    }
    return;
  }
  for (int v = -budget; v <= budget; ++v) {
    p[k] = v;
    enumerate_rec(budget - std::abs(v), D, n, p, idx + 1, n_r, out);
  }
}

}  // namespace detail

// Every label with 2 n_r + 2j = N, lexicographic in (n_r, n, p).
inline std::vector<OscLabel> enumerate_level(int N, int D) {
  if (N < 0) throw LabelError("enumerate_level: negative N");
  std::vector<OscLabel> out;
  std::vector<int> n(D - 1), p(D);
  for (int n_r = 0; 2 * n_r <= N; ++n_r) detail::enumerate_rec(N - 2 * n_r, D, n, p, 0, n_r, out);
  return out;
}

// X_mu of the hyperspherical parametrization, mu = 1..2D stored at index mu-1.
inline std::vector<double> cartesian_from_hyper(double R, const std::vector<double>& theta,
                                                const std::vector<double>& lambda, int D) {
  if (static_cast<int>(theta.size()) != D - 1 || static_cast<int>(lambda.size()) != D)
    throw UsageError("cartesian_from_hyper: expected D-1 angles and D phases");
  std::vector<double> X(2 * D);
  for (int nu = 1; nu <= D; ++nu) {
    // rho_nu = R sin th_1 ... sin th_{D-nu} cos th_{D-nu+1}, with no cosine for nu = 1
    double rho = R;
    for (int k = 1; k <= D - nu; ++k) rho *= std::sin(theta[k - 1]);
    if (nu > 1) rho *= std::cos(theta[D - nu]);
    X[2 * nu - 2] = rho * std::sin(lambda[nu - 1]);
    X[2 * nu - 1] = rho * std::cos(lambda[nu - 1]);
  }
  return X;
}

inline double log_osc_normalization(const OscLabel& l) {
  auto [a, b] = label_ab(l);
  double j = label_j(l).to_double();
  int D = l.D;
  double s = 0.5 * (log_factorial(l.n_r) - D * std::log(std::numbers::pi) - log_factorial(l.n_r + 2 * j + D - 1));
  for (int nu = 1; nu <= D - 1; ++nu) {
    double n = l.n[nu - 1], av = a[nu - 1].to_double(), bv = b[nu - 1].to_double();
    s += 0.5 * (log_factorial(n) + std::log(2 * n + av + bv + D - nu - 1) + log_factorial(n + av + bv + D - nu - 2) -
                log_factorial(n + av - 0.5) - log_factorial(n + bv + D - nu - 1.5));
  }
  return s;
}

// Jet in R of R^{2j} L_{n_r}^{(2j+D-1)}(R^2) e^{-R^2/2}.
inline Jet osc_radial_jet(int n_r, HalfInt j, int D, double R) {
  double tj = j.to_double() * 2.0;
  Jet rpow = power_jet(R, tj);
  Jet lag = chain(laguerre_eval(n_r, tj + D - 1.0, R * R), {R * R, 2.0 * R, 2.0});
  double e = std::exp(-0.5 * R * R);
  Jet gauss{e, -R * e, (R * R - 1.0) * e};
  return rpow * lag * gauss;
}

// Jet in theta of cos^{a-1/2} sin^{b-1/2} P_n^{(a-1/2, b+D-nu-3/2)}(-cos 2 theta).
inline Jet osc_angular_jet(int n, double a, double b, int D, int nu, double theta) {
  Jet c = chain(power_jet(std::cos(theta), a - 0.5), cos_jet(theta));
  Jet s = chain(power_jet(std::sin(theta), b - 0.5), sin_jet(theta));
  double x = -std::cos(2 * theta);
  Jet p = chain(jacobi_eval(n, a - 0.5, b + D - nu - 1.5, x), {x, 2 * std::sin(2 * theta), 4 * std::cos(2 * theta)});
  return c * s * p;
}

inline WaveEval osc_wavefunction(const OscLabel& l) {
  l.validate();
  auto [a, b] = label_ab(l);
  HalfInt j = label_j(l);
  int D = l.D, n_r = l.n_r;
  std::vector<WaveEval::Factor> ang;
  for (int nu = 1; nu <= D - 1; ++nu) {
    int n = l.n[nu - 1];
    double av = a[nu - 1].to_double(), bv = b[nu - 1].to_double();
    ang.push_back([=](double t) { return osc_angular_jet(n, av, bv, D, nu, t); });
  }
  std::vector<double> freqs(D);
  for (int nu = 1; nu <= D; ++nu) freqs[nu - 1] = l.p[D - nu];
  return WaveEval(CoordSystem::osc, D, std::exp(log_osc_normalization(l)),
                  [=](double R) { return osc_radial_jet(n_r, j, D, R); }, std::move(ang), std::move(freqs));
}

}  // namespace swalg
