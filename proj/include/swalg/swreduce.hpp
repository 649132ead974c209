#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalg/oscillator.hpp"

namespace swalg {

class UnphysicalParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SWParams {
  double omega = 1.0;
  int D = 2;
  std::vector<double> k;

  void validate() const {
    if (!(omega > 0)) throw std::invalid_argument("SWParams: omega must be positive");
    if (D < 2 || D > kMaxD) throw std::invalid_argument("SWParams: D out of range");
    for (double v : k)
      if (!(v > 0)) throw std::invalid_argument("SWParams: k entries must be positive");
  }
};

// k_nu = sqrt(p^2 - 1/4).
inline double k_from_p(int p) {
  if (p == 0) throw UnphysicalParameterError("k_from_p: p = 0 gives an imaginary k");
  return std::sqrt(static_cast<double>(p) * p - 0.25);
}

// k vector of the reduced Hamiltonian for an oscillator label: k_nu from p_{D-nu+1}.
inline SWParams params_for(const OscLabel& l, double omega) {
  SWParams s{omega, l.D, {}};
  for (int nu = 1; nu <= l.D; ++nu) s.k.push_back(k_from_p(l.p[l.D - nu]));
  return s;
}

inline double reduction_factor(double r, const std::vector<double>& phi, const SWParams& params) {
  int D = params.D;
  if (static_cast<int>(phi.size()) != D - 1) throw UsageError("reduction_factor: expected D-1 angles");
  double o = std::pow(params.omega * r, D);
  for (int nu = 1; nu <= D - 1; ++nu) o *= std::pow(std::sin(phi[nu - 1]), D - nu) * std::cos(phi[nu - 1]);
  return o;
}

inline double sw_energy(int n_r, HalfInt j, const SWParams& params) {
  return 2.0 * params.omega * (2.0 * n_r + j.twice() + params.D);
}

// D = 2 oscillator labels in the su(2) + su(2) basis.
struct OscBarLabel {
  int n_r = 0;
  HalfInt j, m, mp;

  void validate() const {
    if (n_r < 0) throw LabelError("OscBarLabel: negative n_r");
    if (j.twice() < 0 || abs(m) > j || abs(mp) > j || !(j - m).is_integer() || !(j - mp).is_integer())
      throw LabelError("OscBarLabel: inconsistent j, m, m'");
  }
  std::string str() const { return "(" + std::to_string(n_r) + ";" + j.str() + "," + m.str() + "," + mp.str() + ")"; }
  friend bool operator==(const OscBarLabel&, const OscBarLabel&) = default;
  friend auto operator<=>(const OscBarLabel&, const OscBarLabel&) = default;
};

// D = 2 SW labels; a and b are half-integers for every state reached from the oscillator.
struct SWLabel {
  int n_r = 0;
  int n = 0;
  HalfInt a, b;

  std::string str() const {
    return "(" + std::to_string(n_r) + ";" + std::to_string(n) + ";" + a.str() + "," + b.str() + ")";
  }
  friend bool operator==(const SWLabel&, const SWLabel&) = default;
  friend auto operator<=>(const SWLabel&, const SWLabel&) = default;
};

// j = n + (a+b-1)/2, m = (a-b)/2, m' = -(a+b-1)/2.
inline OscBarLabel to_osc_bar(const SWLabel& s) {
  HalfInt apb = s.a + s.b - 1;
  if (!apb.is_integer() || !(s.a - s.b).is_integer()) throw LabelError("SWLabel: a + b must be an integer");
  OscBarLabel o{s.n_r, HalfInt(s.n) + HalfInt::from_twice(apb.as_int()), HalfInt::from_twice((s.a - s.b).as_int()),
                -HalfInt::from_twice(apb.as_int())};
  return o;
}

// a = m - m' + 1/2, b = -m - m' + 1/2, n = j + m'.
inline SWLabel to_sw_label(const OscBarLabel& o) {
  return {o.n_r, static_cast<int>((o.j + o.mp).as_int()), o.m - o.mp + kHalf, -o.m - o.mp + kHalf};
}

// p1 = m - m', p2 = -m - m', n = j - (|p1| + |p2|)/2.
inline OscLabel to_osc_label(const OscBarLabel& o) {
  o.validate();
  int p1 = static_cast<int>((o.m - o.mp).as_int()), p2 = static_cast<int>((-o.m - o.mp).as_int());
  int n = static_cast<int>((o.j - HalfInt::from_twice(std::abs(p1) + std::abs(p2))).as_int());
  return {2, o.n_r, {n}, {p1, p2}};
}

inline OscBarLabel to_osc_bar(const OscLabel& l) {
  if (l.D != 2) throw UsageError("to_osc_bar: only D = 2");
  l.validate();
  return {l.n_r, label_j(l), HalfInt::from_twice(l.p[0] - l.p[1]), HalfInt::from_twice(-l.p[0] - l.p[1])};
}

// Psi^osc = phase * Psi-bar^osc with phase (-1)^{(|p1|+p1)/2 + |p2|}.
inline int phase_p_to_bar(const OscLabel& l) {
  return sign_power(static_cast<long long>((std::abs(l.p[0]) + l.p[0]) / 2 + std::abs(l.p[1])));
}

inline std::vector<OscBarLabel> enumerate_bar_level(int N) {
  std::vector<OscBarLabel> out;
  for (int n_r = 0; 2 * n_r <= N; ++n_r) {
    HalfInt j = HalfInt::from_twice(N - 2 * n_r);
    for (long long tm = -j.twice(); tm <= j.twice(); tm += 2)
      for (long long tmp = -j.twice(); tmp <= j.twice(); tmp += 2)
        out.push_back({n_r, j, HalfInt::from_twice(tm), HalfInt::from_twice(tmp)});
  }
  return out;
}

inline double log_osc_bar_normalization(const OscBarLabel& o) {
  double tj = static_cast<double>(o.j.twice());
  return 0.5 * (std::log(tj + 1.0) + log_factorial(o.n_r) - 2.0 * std::log(std::numbers::pi) -
                log_factorial(o.n_r + tj + 1.0));
}

// Psi-bar^osc(R, theta, lambda_1, lambda_2) with d^j_{m,-m'}(2 theta).
inline WaveEval osc_bar_wavefunction(const OscBarLabel& o) {
  o.validate();
  HalfInt j = o.j, m = o.m, mp = o.mp;
  int n_r = o.n_r;
  double scale = sign_power(j - mp) * std::exp(log_osc_bar_normalization(o));
  auto ang = [=](double t) {
    Jet d = rotation_d_jet(j, m, -mp, 2.0 * t);
    return Jet{d.value, 2.0 * d.d1, 4.0 * d.d2};
  };
  std::vector<double> freqs{-(m + mp).to_double(), (m - mp).to_double()};
  return WaveEval(CoordSystem::osc, 2, scale, [=](double R) { return osc_radial_jet(n_r, j, 2, R); }, {ang},
                  std::move(freqs));
}

// O^{1/2} psi after R = sqrt(omega) r, theta = phi.
inline WaveEval transform_to_sw(const WaveEval& psi, double omega) {
  if (psi.system() != CoordSystem::osc) throw UsageError("transform_to_sw: expects an oscillator-picture state");
  int D = psi.dim();
  double sw = std::sqrt(omega);
  auto radial = psi.radial();
  WaveEval::Factor rad = [=](double r) {
    Jet f = radial(sw * r);
    Jet fr{f.value, sw * f.d1, omega * f.d2};
    return std::pow(omega, 0.5 * D) * power_jet(r, 0.5 * D) * fr;
  };
  std::vector<WaveEval::Factor> ang;
  for (int nu = 1; nu <= D - 1; ++nu) {
    auto g = psi.angular(nu - 1);
    ang.push_back([=](double t) {
      Jet s = chain(power_jet(std::sin(t), 0.5 * (D - nu)), sin_jet(t));
      Jet c = chain(power_jet(std::cos(t), 0.5), cos_jet(t));
      return s * c * g(t);
    });
  }
  std::vector<double> freqs;
  for (int k = 0; k < D; ++k) freqs.push_back(psi.frequency(k));
  return WaveEval(CoordSystem::sw, D, psi.scale(), std::move(rad), std::move(ang), std::move(freqs));
}

namespace detail {

inline void require_physical(const OscLabel& l) {
  for (int v : l.p)
    if (v == 0) throw UnphysicalParameterError("sw state with p = 0 has imaginary k");
}

// r^{2j+D/2} L^{(2j+D-1)}_{n_r}(omega r^2) e^{-omega r^2/2}.
inline Jet sw_radial_jet(int n_r, double twoj, int D, double omega, double r) {
  Jet rp = power_jet(r, twoj + 0.5 * D);
  double z = omega * r * r;
  Jet lag = chain(laguerre_eval(n_r, twoj + D - 1.0, z), {z, 2.0 * omega * r, 2.0 * omega});
  double e = std::exp(-0.5 * z);
  Jet g{e, -omega * r * e, (omega * omega * r * r - omega) * e};
  return rp * lag * g;
}

// cos^a sin^{b + (D-nu-1)/2} P_n^{(a-1/2, b+D-nu-3/2)}(-cos 2 phi).
inline Jet sw_angular_jet(int n, double a, double b, int D, int nu, double t) {
  Jet c = chain(power_jet(std::cos(t), a), cos_jet(t));
  Jet s = chain(power_jet(std::sin(t), b + 0.5 * (D - nu - 1)), sin_jet(t));
  double x = -std::cos(2 * t);
  Jet p = chain(jacobi_eval(n, a - 0.5, b + D - nu - 1.5, x), {x, 2 * std::sin(2 * t), 4 * std::cos(2 * t)});
  return c * s * p;
}

}  // namespace detail

// Psi_{n_r n p}(r, phi, lambda) in the closed form of the reduced system.
inline WaveEval sw_wavefunction(const OscLabel& l, double omega) {
  l.validate();
  detail::require_physical(l);
  auto [a, b] = label_ab(l);
  HalfInt j = label_j(l);
  int D = l.D, n_r = l.n_r;
  double twoj = static_cast<double>(j.twice());
  std::vector<WaveEval::Factor> ang;
  for (int nu = 1; nu <= D - 1; ++nu) {
    int n = l.n[nu - 1];
    double av = a[nu - 1].to_double(), bv = b[nu - 1].to_double();
    ang.push_back([=](double t) { return detail::sw_angular_jet(n, av, bv, D, nu, t); });
  }
  std::vector<double> freqs(D);
  for (int nu = 1; nu <= D; ++nu) freqs[nu - 1] = l.p[D - nu];
  double scale = std::exp((0.5 * twoj + 0.5 * D) * std::log(omega) + log_osc_normalization(l));
  return WaveEval(CoordSystem::sw, D, scale, [=](double r) { return detail::sw_radial_jet(n_r, twoj, D, omega, r); },
                  std::move(ang), std::move(freqs));
}

// Psi-bar_{n_r,n,a,b} of the D = 2 system. Real a, b >= 1/2 are accepted with
// gamma-function normalization; the sign (-1)^{a+b-1} is applied only when a + b
// is an integer.
inline WaveEval sw_bar_wavefunction(int n_r, int n, double a, double b, double omega) {
  if (n_r < 0 || n < 0) throw LabelError("sw_bar_wavefunction: negative label");
  if (a < 0.5 || b < 0.5) throw LabelError("sw_bar_wavefunction: a and b must be at least 1/2");
  double s = a + b;
  double logn = std::log(2.0) +
                0.5 * ((2 * n + s + 1) * std::log(omega) + log_factorial(n_r) + log_factorial(n) + std::log(2 * n + s) +
                       log_factorial(n + s - 1) - log_factorial(n_r + 2 * n + s) - log_factorial(n + a - 0.5) -
                       log_factorial(n + b - 0.5)) -
                std::log(2 * std::numbers::pi);
  double sgn = 1.0;
  if (std::abs(s - std::round(s)) < 1e-12) sgn = sign_power(static_cast<long long>(std::llround(s - 1)));
  auto rad = [=](double r) { return detail::sw_radial_jet(n_r, 2 * n + s - 1.0, 2, omega, r); };
  auto ang = [=](double t) { return detail::sw_angular_jet(n, a, b, 2, 1, t); };
  return WaveEval(CoordSystem::sw, 2, sgn * std::exp(logn), rad, {ang}, {b - 0.5, a - 0.5});
}

inline WaveEval sw_bar_wavefunction(const SWLabel& s, double omega) {
  return sw_bar_wavefunction(s.n_r, s.n, s.a.to_double(), s.b.to_double(), omega);
}

// O^{1/2} Psi-bar^osc for any oscillator label, replicas with p < 0 included.
inline WaveEval sw_bar_from_osc(const OscBarLabel& o, double omega) { return transform_to_sw(osc_bar_wavefunction(o), omega); }

inline WaveEval sw_wavefunction(const OscLabel& l, const SWParams& params) {
  params.validate();
  if (params.D != l.D) throw UsageError("sw_wavefunction: label and parameter dimensions differ");
  return sw_wavefunction(l, params.omega);
}

// Reduced state (2 pi)^{D/2} Psi at lambda = 0, as a function of (r, phi).
inline std::function<double(double, const std::vector<double>&)> sw_reduced_wavefunction(const OscLabel& l,
                                                                                          double omega) {
  WaveEval psi = sw_wavefunction(l, omega);
  double c = std::pow(2 * std::numbers::pi, 0.5 * l.D);
  return [psi, c](double r, const std::vector<double>& phi) {
    std::vector<double> pt{r};
    pt.insert(pt.end(), phi.begin(), phi.end());
    pt.resize(psi.coord_count(), 0.0);
    return c * psi(pt).real();
  };
}

// H^(k) psi at pt, psi separable in the sw picture; lambda derivatives are not used.
inline std::complex<double> apply_hk(const WaveEval& psi, const SWParams& params, const std::vector<double>& pt) {
  int D = params.D;
  if (psi.dim() != D || static_cast<int>(params.k.size()) != D) throw UsageError("apply_hk: dimension mismatch");
  DerivTable t = psi.derivatives(pt);
  double r = pt[0];
  auto phi = [&](int nu) { return pt[nu]; };
  std::complex<double> ang = t.partial(MultiIndex::d(1, 1)) + (D - 2) / std::tan(phi(1)) * t.partial(MultiIndex::d(1));
  double pref = 1.0;
  for (int nu = 2; nu <= D - 1; ++nu) {
    pref /= std::pow(std::sin(phi(nu - 1)), 2);
    ang += pref * (t.partial(MultiIndex::d(nu, nu)) + (D - nu - 1) / std::tan(phi(nu)) * t.partial(MultiIndex::d(nu)));
  }
  std::complex<double> v = -t.partial(MultiIndex::d(0, 0)) - (D - 1) / r * t.partial(MultiIndex::d(0)) - ang / (r * r);
  for (int nu = 1; nu <= D; ++nu) {
    double den = r * r;
    for (int k = 1; k <= D - nu; ++k) den *= std::pow(std::sin(phi(k)), 2);
    if (nu > 1) den *= std::pow(std::cos(phi(D - nu + 1)), 2);
    v += params.k[nu - 1] * params.k[nu - 1] / den * t.value();
  }
  return v + params.omega * params.omega * r * r * t.value();
}

struct ProjectedCheck {
  OscLabel label;
  double energy = 0.0;
  double residual = 0.0;  // max |(H^(k) - E) psi| / max |psi| over the sample
  bool pass = false;
};

struct ProjectedReport {
  std::vector<ProjectedCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

inline ProjectedReport projected_hamiltonian_check(const std::vector<OscLabel>& labels, double omega, int points = 50,
                                                   unsigned seed = 1, double tol = 1e-8) {
  ProjectedReport rep;
  if (labels.empty()) return rep;
  for (const auto& l : labels)
    if (l.p != labels.front().p) throw UsageError("projected_hamiltonian_check: labels must share p");
  SWParams params = params_for(labels.front(), omega);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ur(0.2, 2.5 / std::sqrt(omega)), ua(0.15, std::numbers::pi / 2 - 0.15);
  for (const auto& l : labels) {
    WaveEval psi = sw_wavefunction(l, params);
    double E = sw_energy(l.n_r, label_j(l), params), worst = 0.0, peak = 0.0;
    for (int s = 0; s < points; ++s) {
      std::vector<double> pt(psi.coord_count(), 0.0);
      pt[0] = ur(rng);
      for (int nu = 1; nu < l.D; ++nu) pt[nu] = ua(rng);
      peak = std::max(peak, std::abs(psi(pt)));
      worst = std::max(worst, std::abs(apply_hk(psi, params, pt) - E * psi(pt)));
    }
    double res = peak > 0 ? worst / peak : worst;
    rep.checks.push_back({l, E, res, res <= tol});
  }
  return rep;
}

}  // namespace swalg
