#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "swalg/half_int.hpp"

namespace swalg {

class ParameterDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Value with first and second derivative in one variable.
struct PolyEval {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

using Jet = PolyEval;

inline Jet operator*(const Jet& f, const Jet& g) {
  return {f.value * g.value, f.d1 * g.value + f.value * g.d1,
          f.d2 * g.value + 2.0 * f.d1 * g.d1 + f.value * g.d2};
}

inline Jet operator*(double c, const Jet& f) { return {c * f.value, c * f.d1, c * f.d2}; }

inline Jet operator+(const Jet& f, const Jet& g) {
  return {f.value + g.value, f.d1 + g.d1, f.d2 + g.d2};
}

// Jet of F(g(x)) from the jet of F at g(x) and the jet of g.
inline Jet chain(const Jet& outer, const Jet& inner) {
  return {outer.value, outer.d1 * inner.d1, outer.d2 * inner.d1 * inner.d1 + outer.d1 * inner.d2};
}

// Jet of x^p. Terms whose coefficient vanishes are dropped so x = 0 stays finite
// whenever the closed form has a finite limit.
inline Jet power_jet(double x, double p) {
  if (p == 0.0) return {1.0, 0.0, 0.0};
  auto term = [x](double coef, double e) {
    if (coef == 0.0) return 0.0;
    if (x == 0.0 && e == 0.0) return coef;
    return coef * std::pow(x, e);
  };
  return {term(1.0, p), term(p, p - 1.0), term(p * (p - 1.0), p - 2.0)};
}

inline Jet sin_jet(double x) { return {std::sin(x), std::cos(x), -std::sin(x)}; }
inline Jet cos_jet(double x) { return {std::cos(x), -std::sin(x), -std::cos(x)}; }

inline double log_factorial(double x) { return std::lgamma(x + 1.0); }

namespace detail {

inline double jacobi_value(int n, double a, double b, double x) {
  if (n < 0) return 0.0;
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    double s = 2.0 * k + a + b;
    double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double laguerre_value(int n, double a, double z) {
  if (n < 0) return 0.0;
  double l0 = 1.0;
  if (n == 0) return l0;
  double l1 = 1.0 + a - z;
  for (int k = 2; k <= n; ++k) {
    double l2 = ((2.0 * k - 1.0 + a - z) * l1 - (k - 1.0 + a) * l0) / k;
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

}  // namespace detail

inline PolyEval jacobi_eval(int n, double alpha, double beta, double x) {
  if (n < 0) throw ParameterDomainError("jacobi_eval: negative degree");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ParameterDomainError("jacobi_eval: alpha and beta must exceed -1");
  double s = n + alpha + beta;
  return {detail::jacobi_value(n, alpha, beta, x),
          0.5 * (s + 1.0) * detail::jacobi_value(n - 1, alpha + 1.0, beta + 1.0, x),
          0.25 * (s + 1.0) * (s + 2.0) * detail::jacobi_value(n - 2, alpha + 2.0, beta + 2.0, x)};
}

inline PolyEval laguerre_eval(int n, double alpha, double z) {
  if (n < 0) throw ParameterDomainError("laguerre_eval: negative degree");
  if (!(alpha > -1.0)) throw ParameterDomainError("laguerre_eval: alpha must exceed -1");
  return {detail::laguerre_value(n, alpha, z), -detail::laguerre_value(n - 1, alpha + 1.0, z),
          detail::laguerre_value(n - 2, alpha + 2.0, z)};
}

namespace detail {

inline void check_rotation_labels(HalfInt j, HalfInt m, HalfInt mp) {
  if (j.twice() < 0 || abs(m) > j || abs(mp) > j || !(j - m).is_integer() || !(j - mp).is_integer())
    throw LabelError("rotation_d: invalid labels j=" + j.str() + " m=" + m.str() + " m'=" + mp.str());
}

}  // namespace detail

// Jet in beta of d^j_{m,mp}(beta) = <j m| exp(-i beta J_y) |j mp>, through the
// Jacobi-polynomial form with k = min(j+m, j-m, j+mp, j-mp).
inline Jet rotation_d_jet(HalfInt j, HalfInt m, HalfInt mp, double beta) {
  detail::check_rotation_labels(j, m, mp);
  long long jpm = (j + m).as_int(), jmm = (j - m).as_int();
  long long jpp = (j + mp).as_int(), jmp = (j - mp).as_int();
  long long k = std::min({jpm, jmm, jpp, jmp});
  long long a, lam;
  if (k == jpp) { a = (m - mp).as_int(); lam = a; }
  else if (k == jmp) { a = (mp - m).as_int(); lam = 0; }
  else if (k == jpm) { a = (mp - m).as_int(); lam = 0; }
  else { a = (m - mp).as_int(); lam = a; }
  long long twoj = (2 * j).as_int();
  long long b = twoj - 2 * k - a;
  // sqrt(C(2j-k, k+a) / C(k+b, b))
  double logc = 0.5 * (log_factorial(twoj - k) - log_factorial(k + a) - log_factorial(twoj - 2 * k - a)) -
                0.5 * (log_factorial(k + b) - log_factorial(b) - log_factorial(k));
  double pref = sign_power(lam) * std::exp(logc);

  Jet s = chain(power_jet(std::sin(0.5 * beta), static_cast<double>(a)),
                {std::sin(0.5 * beta), 0.5 * std::cos(0.5 * beta), -0.25 * std::sin(0.5 * beta)});
  Jet c = chain(power_jet(std::cos(0.5 * beta), static_cast<double>(b)),
                {std::cos(0.5 * beta), -0.5 * std::sin(0.5 * beta), -0.25 * std::cos(0.5 * beta)});
  Jet p = chain(jacobi_eval(static_cast<int>(k), static_cast<double>(a), static_cast<double>(b), std::cos(beta)),
                cos_jet(beta));
  return pref * (s * c * p);
}

inline double rotation_d(HalfInt j, HalfInt m, HalfInt mp, double beta) {
  return rotation_d_jet(j, m, mp, beta).value;
}

}  // namespace swalg
