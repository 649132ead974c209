#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace swalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exact complex rational re + i*im.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(int r) : re(r) {}

  static GaussRational i() { return GaussRational(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }

  std::string str() const {
    if (im == 0) return to_string(re);
    std::string ims = (im == 1) ? "i" : (im == -1) ? "-i" : to_string(im) + "i";
    if (re == 0) return ims;
    if (ims.front() == '-') return "(" + to_string(re) + ims + ")";
    return "(" + to_string(re) + "+" + ims + ")";
  }
};

namespace detail {

// n = s^2 * k with k squarefree; trial division, meant for small radicands.
inline std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  if (n == 0) return {0, 1};
  std::uint64_t s = 1, k = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (int t = 0; t < e / 2; ++t) s *= p;
    if (e % 2) k *= p;
  }
  k *= n;
  return {s, k};
}

}  // namespace detail

// Exact element sum_k c_k sqrt(k) of Q(i)(sqrt 2, sqrt 3, ...), k squarefree.
// Closed under +, -, *, conjugation, so coupling coefficients like 1/sqrt(2)
// and products of them stay exact.
class Surd {
 public:
  using Term = std::pair<std::int64_t, GaussRational>;

  Surd() = default;
  Surd(int v) : Surd(GaussRational(v)) {}
  Surd(const Rational& q) : Surd(GaussRational(q)) {}
  Surd(const GaussRational& g) {
    if (!g.is_zero()) terms_.emplace_back(1, g);
  }

  static Surd i() { return Surd(GaussRational::i()); }

  // c * sqrt(k) for a squarefree k >= 1.
  static Surd radical(const GaussRational& c, std::int64_t k) {
    Surd s;
    if (!c.is_zero()) s.terms_.emplace_back(k, c);
    return s;
  }

  // sqrt(q) for a nonnegative rational with machine-sized numerator and denominator.
  static Surd sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("Surd::sqrt of negative rational");
    if (q == 0) return Surd();
    Integer num = numerator(q), den = denominator(q);
    Integer prod = num * den;
    if (prod > Integer(std::numeric_limits<std::uint64_t>::max() / 4))
      throw std::overflow_error("Surd::sqrt radicand too large");
    auto [s, k] = detail::squarefree_split(prod.convert_to<std::uint64_t>());
    return radical(GaussRational(Rational(Integer(s), den)), static_cast<std::int64_t>(k));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second.im == 0);
  }

  Surd conj() const {
    Surd r = *this;
    for (auto& t : r.terms_) t.second = t.second.conj();
    return r;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    for (const auto& [k, c] : terms_) z += c.to_complex() * std::sqrt(static_cast<double>(k));
    return z;
  }

  Surd operator-() const {
    Surd r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Surd& operator+=(const Surd& o) {
    for (const auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }

  friend Surd operator*(const Surd& a, const Surd& b) {
    Surd r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        std::int64_t g = std::gcd(ka, kb);
        r.add_term((ka / g) * (kb / g), ca * cb * GaussRational(Rational(g)));
      }
    return r;
  }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).terms_.empty(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      const auto& [k, c] = terms_[t];
      if (t) out += " + ";
      out += c.str();
      if (k != 1) out += "*sqrt(" + std::to_string(k) + ")";
    }
    return out;
  }

 private:
  void add_term(std::int64_t k, const GaussRational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::int64_t key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
      terms_.insert(it, {k, c});
    }
  }

  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

}  // namespace swalg
