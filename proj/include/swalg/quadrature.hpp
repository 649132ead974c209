#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Eigenvalues>

#include "swalg/specfun.hpp"
#include "swalg/wave.hpp"

namespace swalg {

enum class Domain { radial_z, angle_theta, angle_lambda, angle_phi };

inline Domain parse_domain(std::string_view tag) {
  if (tag == "radial-z") return Domain::radial_z;
  if (tag == "angle-theta") return Domain::angle_theta;
  if (tag == "angle-lambda") return Domain::angle_lambda;
  if (tag == "angle-phi") return Domain::angle_phi;
  throw UsageError("unknown quadrature domain tag: " + std::string(tag));
}

inline std::string to_string(Domain d) {
  switch (d) {
    case Domain::radial_z: return "radial-z";
    case Domain::angle_theta: return "angle-theta";
    case Domain::angle_lambda: return "angle-lambda";
    case Domain::angle_phi: return "angle-phi";
  }
  return "?";
}

// weights integrate against the domain's weight function (e^{-z} for radial-z,
// 1 otherwise); plain_weights integrate against 1, i.e. w_i e^{z_i} on radial-z.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> plain_weights;
  Domain domain = Domain::angle_theta;
  int order() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

// Generalized Gauss-Laguerre: Golub-Welsch eigenvalues polished by Newton steps.
inline QuadRule gauss_laguerre(int n, double alpha) {
  Eigen::VectorXd diag(n), off(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  QuadRule rule;
  rule.domain = Domain::radial_z;
  double lognorm = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      PolyEval p = laguerre_eval(n, alpha, x);
      double dx = p.value / p.d1;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::abs(x)) break;
    }
    double dl = laguerre_eval(n, alpha, x).d1;
    double logw = lognorm - std::log(x) - 2.0 * std::log(std::abs(dl));
    rule.nodes.push_back(x);
    rule.weights.push_back(std::exp(logw));
    rule.plain_weights.push_back(std::exp(logw + x));
  }
  return rule;
}

// Gauss-Legendre on [-1,1] mapped affinely onto [lo, hi].
inline QuadRule gauss_legendre(int n, double lo, double hi, Domain tag) {
  QuadRule rule;
  rule.domain = tag;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - t * t) * dp * dp);
    rule.nodes[i] = mid - half * t;
    rule.nodes[n - 1 - i] = mid + half * t;
    rule.weights[i] = rule.weights[n - 1 - i] = half * w;
  }
  rule.plain_weights = rule.weights;
  return rule;
}

}  // namespace detail

inline QuadRule make_rule(Domain kind, int order, double alpha = 0.0) {
  if (order < 1) throw UsageError("make_rule: order must be positive");
  switch (kind) {
    case Domain::radial_z:
      return detail::gauss_laguerre(order, alpha);
    case Domain::angle_theta:
    case Domain::angle_phi:
      return detail::gauss_legendre(order, 0.0, 0.5 * std::numbers::pi, kind);
    case Domain::angle_lambda: {
      QuadRule rule;
      rule.domain = kind;
      double h = 2.0 * std::numbers::pi / order;
      for (int k = 0; k < order; ++k) {
        rule.nodes.push_back(k * h);
        rule.weights.push_back(h);
      }
      rule.plain_weights = rule.weights;
      return rule;
    }
  }
  throw UsageError("make_rule: unknown domain");
}

inline QuadRule make_rule(std::string_view tag, int order) { return make_rule(parse_domain(tag), order); }

struct QuadOrders {
  int radial = 48;
  int angular = 48;
  int lambda = 16;
};

// One rule per coordinate family: the same angular rule serves every theta
// (or phi) and the same periodic rule every lambda.
struct RuleSet {
  QuadOrders orders;
  QuadRule radial;
  QuadRule angle;
  QuadRule lambda;

  explicit RuleSet(QuadOrders o = {})
      : orders(o), radial(make_rule(Domain::radial_z, o.radial)), angle(make_rule(Domain::angle_theta, o.angular)),
        lambda(make_rule(Domain::angle_lambda, o.lambda)) {}

  RuleSet refined(int extra = 8) const {
    return RuleSet(QuadOrders{orders.radial + extra, orders.angular + extra, orders.lambda + extra});
  }
};

enum class Measure { dV, dv };

inline Measure natural_measure(CoordSystem s) { return s == CoordSystem::osc ? Measure::dV : Measure::dv; }

struct InnerProductResult {
  std::complex<double> value;
  double est_error = 0.0;
};

namespace detail {

// Integral over the radius, the radius being sqrt(z) (osc) or sqrt(z/omega) (sw);
// g is the integrand in the radius variable. omega = 1 for the osc picture.
template <class G>
std::complex<double> radial_integral(const QuadRule& rule, double omega, G&& g) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    double x = std::sqrt(rule.nodes[i] / omega);
    s += rule.plain_weights[i] * g(x) / (2.0 * omega * x);
  }
  return s;
}

template <class G>
std::complex<double> angle_integral(const QuadRule& rule, G&& g) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < rule.order(); ++i) s += rule.plain_weights[i] * g(rule.nodes[i]);
  return s;
}

// Integral over [0, 2pi) of exp(i q lambda).
inline std::complex<double> phase_integral(const QuadRule& rule, double q) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < rule.order(); ++i) s += rule.plain_weights[i] * std::polar(1.0, q * rule.nodes[i]);
  return s;
}

inline double radial_measure_power(Measure m, int D) { return m == Measure::dV ? 2.0 * D - 1.0 : D - 1.0; }

// Powers of sin and cos of angle nu (1-based) in the volume element.
inline std::pair<double, double> angle_measure_powers(Measure m, int D, int nu) {
  if (m == Measure::dV) return {2.0 * D - 2.0 * nu - 1.0, 1.0};
  return {static_cast<double>(D - nu - 1), 0.0};
}

inline std::complex<double> factorized_inner_product(const WaveEval& bra, const WaveEval& ket, Measure m,
                                                     const RuleSet& rules, double omega) {
  int D = ket.dim();
  std::complex<double> v = std::conj(bra.scale()) * ket.scale();
  double rp = radial_measure_power(m, D);
  v *= radial_integral(rules.radial, omega, [&](double x) {
    return std::pow(x, rp) * bra.radial()(x).value * ket.radial()(x).value;
  });
  for (int k = 0; k < D - 1; ++k) {
    auto [sp, cp] = angle_measure_powers(m, D, k + 1);
    v *= angle_integral(rules.angle, [&](double t) {
      return std::pow(std::sin(t), sp) * std::pow(std::cos(t), cp) * bra.angular(k)(t).value * ket.angular(k)(t).value;
    });
  }
  for (int k = 0; k < D; ++k) v *= phase_integral(rules.lambda, ket.frequency(k) - bra.frequency(k));
  return v;
}

}  // namespace detail

// omega sets the radial substitution z = omega r^2 used by the sw picture; it
// only affects node placement, not the value of a converged integral.
inline InnerProductResult inner_product(const WaveEval& bra, const WaveEval& ket, Measure measure, const RuleSet& rules,
                                        double omega = 1.0) {
  if (bra.system() != ket.system() || bra.dim() != ket.dim())
    throw UsageError("inner_product: bra and ket live on different coordinate systems");
  if (natural_measure(ket.system()) != measure)
    throw UsageError("inner_product: measure does not belong to the coordinate system");
  double om = ket.system() == CoordSystem::sw ? omega : 1.0;
  auto v = detail::factorized_inner_product(bra, ket, measure, rules, om);
  auto w = detail::factorized_inner_product(bra, ket, measure, rules.refined(), om);
  return {v, std::abs(v - w)};
}

// Brute-force tensor-grid version of inner_product, evaluating the full
// integrand at every grid point. Cost grows as order^(2D); for cross-checks.
inline std::complex<double> inner_product_grid(const WaveEval& bra, const WaveEval& ket, Measure measure,
                                               const RuleSet& rules, double omega = 1.0) {
  if (bra.system() != ket.system() || bra.dim() != ket.dim())
    throw UsageError("inner_product_grid: bra and ket live on different coordinate systems");
  int D = ket.dim();
  double om = ket.system() == CoordSystem::sw ? omega : 1.0;
  std::vector<const QuadRule*> rule(2 * D);
  rule[0] = &rules.radial;
  for (int k = 1; k < D; ++k) rule[k] = &rules.angle;
  for (int k = D; k < 2 * D; ++k) rule[k] = &rules.lambda;
  std::vector<int> idx(2 * D, 0);
  std::vector<double> pt(2 * D);
  std::complex<double> total = 0.0;
  while (true) {
    double w = 1.0;
    double z = rule[0]->nodes[idx[0]];
    pt[0] = std::sqrt(z / om);
    w *= rule[0]->plain_weights[idx[0]] / (2.0 * om * pt[0]) * std::pow(pt[0], detail::radial_measure_power(measure, D));
    for (int k = 1; k < 2 * D; ++k) {
      pt[k] = rule[k]->nodes[idx[k]];
      w *= rule[k]->plain_weights[idx[k]];
      if (k < D) {
        auto [sp, cp] = detail::angle_measure_powers(measure, D, k);
        w *= std::pow(std::sin(pt[k]), sp) * std::pow(std::cos(pt[k]), cp);
      }
    }
    total += w * std::conj(bra(pt)) * ket(pt);
    int c = 0;
    while (c < 2 * D && ++idx[c] == rule[c]->order()) idx[c++] = 0;
    if (c == 2 * D) break;
  }
  return total;
}

}  // namespace swalg
