#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "swalg/exact.hpp"
#include "swalg/half_int.hpp"

namespace swalg {

struct CGArg {
  HalfInt j1, m1, j2, m2, J, M;
};

// coeff * sqrt(radicand), radicand squarefree.
struct SqrtRational {
  Rational coeff{0};
  std::int64_t radicand = 1;

  bool is_zero() const { return coeff == 0; }
  double to_double() const { return swalg::to_double(coeff) * std::sqrt(static_cast<double>(radicand)); }
  Surd to_surd() const { return Surd::radical(GaussRational(coeff), radicand); }
  // Square of the value, an exact rational.
  Rational squared() const { return coeff * coeff * radicand; }
};

namespace detail {

inline bool cg_selection_ok(const CGArg& a) {
  auto member = [](HalfInt j, HalfInt m) { return j.twice() >= 0 && abs(m) <= j && (j - m).is_integer(); };
  if (!member(a.j1, a.m1) || !member(a.j2, a.m2) || !member(a.J, a.M)) return false;
  if (a.m1 + a.m2 != a.M) return false;
  if (!(a.j1 + a.j2 - a.J).is_integer()) return false;
  return abs(a.j1 - a.j2) <= a.J && a.J <= a.j1 + a.j2;
}

inline const std::vector<int>& small_primes() {
  static const std::vector<int> primes = [] {
    std::vector<int> ps;
    for (int n = 2; n < 400; ++n) {
      bool prime = true;
      for (int p : ps) {
        if (p * p > n) break;
        if (n % p == 0) { prime = false; break; }
      }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

// Prime exponents of n! added with multiplicity sgn.
inline void add_factorial(std::map<int, long long>& exps, long long n, int sgn) {
  for (int p : small_primes()) {
    if (p > n) break;
    long long e = 0;
    for (long long q = p; q <= n; q *= p) e += n / q;
    exps[p] += sgn * e;
  }
  if (n >= 400) throw std::overflow_error("clebsch_gordan: labels too large");
}

inline void add_integer(std::map<int, long long>& exps, long long n) {
  for (int p : small_primes()) {
    while (n % p == 0) { exps[p] += 1; n /= p; }
  }
  if (n != 1) throw std::overflow_error("clebsch_gordan: labels too large");
}

inline Integer factorial(long long n) {
  Integer f = 1;
  for (long long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace detail

// <j1 m1, j2 m2 | J M> with Condon-Shortley phase via Racah's single sum:
// sqrt(prefactor) * sum, the prefactor factored over primes so its square root
// is split exactly into an integer part and a squarefree radicand.
inline SqrtRational clebsch_gordan_exact(const CGArg& a) {
  if (!detail::cg_selection_ok(a)) return {};
  long long j1 = a.j1.twice(), m1 = a.m1.twice(), j2 = a.j2.twice(), m2 = a.m2.twice();
  long long J = a.J.twice(), M = a.M.twice();
  auto h = [](long long twice) { return twice / 2; };  // exact on even arguments

  std::map<int, long long> exps;
  detail::add_integer(exps, J + 1);
  detail::add_factorial(exps, h(J + j1 - j2), 1);
  detail::add_factorial(exps, h(J - j1 + j2), 1);
  detail::add_factorial(exps, h(j1 + j2 - J), 1);
  detail::add_factorial(exps, h(j1 + j2 + J) + 1, -1);
  detail::add_factorial(exps, h(J + M), 1);
  detail::add_factorial(exps, h(J - M), 1);
  detail::add_factorial(exps, h(j1 - m1), 1);
  detail::add_factorial(exps, h(j1 + m1), 1);
  detail::add_factorial(exps, h(j2 - m2), 1);
  detail::add_factorial(exps, h(j2 + m2), 1);

  Rational outside(1);
  std::int64_t radicand = 1;
  for (const auto& [p, e] : exps) {
    long long half = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    if (e - 2 * half == 1) radicand *= p;
    Integer pp = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(half >= 0 ? half : -half));
    outside *= (half >= 0) ? Rational(pp) : Rational(Integer(1), pp);
  }

  long long k1 = h(j1 + j2 - J), k2 = h(j1 - m1), k3 = h(j2 + m2);
  long long k4 = h(J - j2 + m1), k5 = h(J - j1 - m2);
  long long kmin = std::max({0LL, -k4, -k5});
  long long kmax = std::min({k1, k2, k3});
  Rational sum(0);
  for (long long k = kmin; k <= kmax; ++k) {
    Integer den = detail::factorial(k) * detail::factorial(k1 - k) * detail::factorial(k2 - k) *
                  detail::factorial(k3 - k) * detail::factorial(k4 + k) * detail::factorial(k5 + k);
    Rational term(Integer(1), den);
    sum += (k % 2 == 0) ? term : Rational(-term);
  }
  if (sum == 0) return {};
  return {sum * outside, radicand};
}

inline double clebsch_gordan(const CGArg& a) { return clebsch_gordan_exact(a).to_double(); }

inline std::complex<double> wigner_eckart(std::complex<double> reduced, double cg_m, double cg_mp) {
  return reduced * cg_m * cg_mp;
}

}  // namespace swalg
