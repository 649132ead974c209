#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "swalg/wave.hpp"

namespace swalg {

// r^{e/2} prod sin^{s_nu/2}(angle_nu) cos^{c_nu/2}(angle_nu) exp(i k_nu lambda_nu).
// Exponents are doubled so conjugation by square roots of the reduction factor
// stays inside the representation.
struct CoefMonomial {
  std::int16_t radial2 = 0;
  std::array<std::int16_t, kMaxD> sin2{};
  std::array<std::int16_t, kMaxD> cos2{};
  std::array<std::int16_t, kMaxD> phase{};

  static CoefMonomial one() { return {}; }
  static CoefMonomial radius(int power) {
    CoefMonomial m;
    m.radial2 = static_cast<std::int16_t>(2 * power);
    return m;
  }
  // sin^s cos^c of angle nu (1-based).
  static CoefMonomial trig(int nu, int s, int c) {
    CoefMonomial m;
    m.sin2[nu - 1] = static_cast<std::int16_t>(2 * s);
    m.cos2[nu - 1] = static_cast<std::int16_t>(2 * c);
    return m;
  }
  // exp(i k lambda_nu), nu 1-based.
  static CoefMonomial expi(int nu, int k) {
    CoefMonomial m;
    m.phase[nu - 1] = static_cast<std::int16_t>(k);
    return m;
  }

  friend CoefMonomial operator*(CoefMonomial a, const CoefMonomial& b) {
    a.radial2 += b.radial2;
    for (int k = 0; k < kMaxD; ++k) {
      a.sin2[k] += b.sin2[k];
      a.cos2[k] += b.cos2[k];
      a.phase[k] += b.phase[k];
    }
    return a;
  }
  CoefMonomial inverse() const {
    CoefMonomial m;
    m.radial2 = -radial2;
    for (int k = 0; k < kMaxD; ++k) {
      m.sin2[k] = -sin2[k];
      m.cos2[k] = -cos2[k];
      m.phase[k] = -phase[k];
    }
    return m;
  }
  CoefMonomial conj() const {
    CoefMonomial m = *this;
    for (auto& k : m.phase) k = -k;
    return m;
  }

  std::complex<double> eval(const std::vector<double>& pt, int D) const {
    double v = radial2 ? std::pow(pt[0], 0.5 * radial2) : 1.0;
    double ph = 0.0;
    for (int k = 0; k < D - 1; ++k) {
      if (sin2[k]) v *= std::pow(std::sin(pt[1 + k]), 0.5 * sin2[k]);
      if (cos2[k]) v *= std::pow(std::cos(pt[1 + k]), 0.5 * cos2[k]);
    }
    for (int k = 0; k < D; ++k) ph += phase[k] * pt[D + k];
    return ph == 0.0 ? std::complex<double>(v) : std::polar(v, ph);
  }

  friend auto operator<=>(const CoefMonomial&, const CoefMonomial&) = default;
  friend bool operator==(const CoefMonomial&, const CoefMonomial&) = default;
};

// Finite sum of coefficient monomials.
using CoefExpr = std::map<CoefMonomial, std::complex<double>>;

inline void accumulate(CoefExpr& e, const CoefMonomial& m, std::complex<double> c) {
  if (c == 0.0) return;
  auto [it, fresh] = e.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0.0) e.erase(it);
  }
}

inline CoefExpr operator*(const CoefExpr& a, const CoefExpr& b) {
  CoefExpr r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accumulate(r, ma * mb, ca * cb);
  return r;
}

inline CoefExpr operator+(CoefExpr a, const CoefExpr& b) {
  for (const auto& [m, c] : b) accumulate(a, m, c);
  return a;
}

inline CoefExpr scaled(CoefExpr a, std::complex<double> s) {
  CoefExpr r;
  for (const auto& [m, c] : a) accumulate(r, m, c * s);
  return r;
}

inline CoefExpr monomial_expr(const CoefMonomial& m, std::complex<double> c = 1.0) {
  CoefExpr e;
  accumulate(e, m, c);
  return e;
}

inline std::complex<double> eval(const CoefExpr& e, const std::vector<double>& pt, int D) {
  std::complex<double> v = 0.0;
  for (const auto& [m, c] : e) v += c * m.eval(pt, D);
  return v;
}

// Derivative of a monomial along coordinate `coord` of a D-dimensional tuple.
inline CoefExpr differentiate(const CoefMonomial& m, int coord, int D) {
  CoefExpr out;
  if (coord == 0) {
    if (m.radial2) {
      CoefMonomial d = m;
      d.radial2 -= 2;
      accumulate(out, d, 0.5 * m.radial2);
    }
  } else if (coord < D) {
    int k = coord - 1;
    if (m.sin2[k]) {
      CoefMonomial d = m;
      d.sin2[k] -= 2;
      d.cos2[k] += 2;
      accumulate(out, d, 0.5 * m.sin2[k]);
    }
    if (m.cos2[k]) {
      CoefMonomial d = m;
      d.sin2[k] += 2;
      d.cos2[k] -= 2;
      accumulate(out, d, -0.5 * m.cos2[k]);
    }
  } else {
    int k = coord - D;
    if (m.phase[k]) accumulate(out, m, std::complex<double>(0.0, m.phase[k]));
  }
  return out;
}

inline CoefExpr differentiate(const CoefExpr& e, int coord, int D) {
  CoefExpr out;
  for (const auto& [m, c] : e)
    for (const auto& [dm, dc] : differentiate(m, coord, D)) accumulate(out, dm, c * dc);
  return out;
}

inline CoefExpr differentiate(const CoefExpr& e, const MultiIndex& a, int D) {
  CoefExpr out = e;
  for (int c = 0; c < 2 * D; ++c)
    for (int t = 0; t < a.n[c]; ++t) out = differentiate(out, c, D);
  return out;
}

namespace detail {

// All gamma <= alpha with the product of binomials C(alpha_c, gamma_c).
inline std::vector<std::pair<MultiIndex, int>> sub_indices(const MultiIndex& a) {
  std::vector<std::pair<MultiIndex, int>> out{{MultiIndex{}, 1}};
  for (int c = 0; c < kMaxCoords; ++c) {
    if (!a.n[c]) continue;
    std::vector<std::pair<MultiIndex, int>> next;
    for (const auto& [g, w] : out)
      for (int t = 0; t <= a.n[c]; ++t) {
        MultiIndex h = g;
        h.n[c] = static_cast<std::uint8_t>(t);
        int binom = (a.n[c] == 2 && t == 1) ? 2 : 1;
        next.push_back({h, w * binom});
      }
    out = std::move(next);
  }
  return out;
}

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r;
  for (int c = 0; c < kMaxCoords; ++c) r.n[c] = static_cast<std::uint8_t>(a.n[c] + b.n[c]);
  return r;
}

inline MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r;
  for (int c = 0; c < kMaxCoords; ++c) r.n[c] = static_cast<std::uint8_t>(a.n[c] - b.n[c]);
  return r;
}

}  // namespace detail

// Sum of c * monomial * d^alpha with total derivative order at most 2.
class DiffOperator {
 public:
  using Key = std::pair<CoefMonomial, MultiIndex>;

  DiffOperator(CoordSystem sys, int D) : sys_(sys), D_(D) {
    if (D < 1 || D > kMaxD) throw UsageError("DiffOperator: unsupported dimension");
  }

  static DiffOperator identity(CoordSystem sys, int D) { return multiplication(sys, D, monomial_expr({})); }

  static DiffOperator multiplication(CoordSystem sys, int D, const CoefExpr& f) {
    DiffOperator op(sys, D);
    for (const auto& [m, c] : f) op.add_term(c, m, {});
    return op;
  }

  static DiffOperator derivative(CoordSystem sys, int D, const MultiIndex& a, const CoefExpr& coef = monomial_expr({})) {
    DiffOperator op(sys, D);
    for (const auto& [m, c] : coef) op.add_term(c, m, a);
    return op;
  }

  CoordSystem system() const { return sys_; }
  int dim() const { return D_; }
  const std::map<Key, std::complex<double>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int order() const {
    int o = 0;
    for (const auto& [k, c] : terms_) o = std::max(o, k.second.total());
    return o;
  }

  void add_term(std::complex<double> c, const CoefMonomial& m, const MultiIndex& a) {
    if (a.total() > 2) throw ContractViolation("DiffOperator: derivative order above 2");
    for (int i = 2 * D_; i < kMaxCoords; ++i)
      if (a.n[i]) throw ContractViolation("DiffOperator: derivative along a missing coordinate");
    if (c == 0.0) return;
    auto [it, fresh] = terms_.emplace(Key{m, a}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  DiffOperator& operator+=(const DiffOperator& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& o) { return *this += o * std::complex<double>(-1.0); }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }

  friend DiffOperator operator*(const DiffOperator& a, std::complex<double> s) {
    DiffOperator r(a.sys_, a.D_);
    for (const auto& [k, c] : a.terms_) r.add_term(c * s, k.first, k.second);
    return r;
  }
  friend DiffOperator operator*(std::complex<double> s, const DiffOperator& a) { return a * s; }

  // Composition a o b.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    a.check_compatible(b);
    DiffOperator r(a.sys_, a.D_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        for (const auto& [g, w] : detail::sub_indices(ka.second)) {
          CoefExpr dm = differentiate(monomial_expr(kb.first), g, a.D_);
          MultiIndex rest = detail::add(detail::sub(ka.second, g), kb.second);
          for (const auto& [m, c] : dm) r.add_term(ca * cb * c * static_cast<double>(w), ka.first * m, rest);
        }
    return r;
  }

  // Formal adjoint with respect to the density rho (a positive monomial):
  // L^+ f = sum (-1)^{|alpha|} rho^{-1} d^alpha( conj(c m) rho f ).
  DiffOperator adjoint(const CoefMonomial& rho) const {
    DiffOperator r(sys_, D_);
    CoefMonomial inv = rho.inverse();
    for (const auto& [k, c] : terms_) {
      const auto& [m, a] = k;
      double sign = (a.total() % 2) ? -1.0 : 1.0;
      CoefExpr M = monomial_expr(m.conj() * rho);
      for (const auto& [g, w] : detail::sub_indices(a)) {
        CoefExpr dM = differentiate(M, g, D_);
        for (const auto& [mm, cc] : dM)
          r.add_term(sign * std::conj(c) * cc * static_cast<double>(w), inv * mm, detail::sub(a, g));
      }
    }
    return r;
  }

  std::complex<double> apply(const DerivTable& t, const std::vector<double>& pt) const {
    std::complex<double> v = 0.0;
    for (const auto& [k, c] : terms_) v += c * k.first.eval(pt, D_) * t.partial(k.second);
    return v;
  }

  std::string str() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_) {
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i) r^" << k.first.radial2 / 2.0;
      for (int i = 0; i < D_ - 1; ++i) os << " s" << i + 1 << "^" << k.first.sin2[i] / 2.0 << " c" << i + 1 << "^" << k.first.cos2[i] / 2.0;
      for (int i = 0; i < D_; ++i) os << " e" << i + 1 << "^" << k.first.phase[i];
      os << " d[";
      for (int i = 0; i < 2 * D_; ++i) os << int(k.second.n[i]);
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check_compatible(const DiffOperator& o) const {
    if (o.sys_ != sys_ || o.D_ != D_) throw UsageError("DiffOperator: mixing coordinate systems");
  }

  CoordSystem sys_;
  int D_;
  std::map<Key, std::complex<double>> terms_;
};

inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

inline std::complex<double> apply(const DiffOperator& op, const WaveEval& psi, const std::vector<double>& pt) {
  if (op.system() != psi.system() || op.dim() != psi.dim())
    throw UsageError("apply: operator and wavefunction use different coordinate systems");
  return op.apply(psi.derivatives(pt), pt);
}

// Volume-element density as a monomial.
inline CoefMonomial measure_density(CoordSystem sys, int D) {
  CoefMonomial m;
  if (sys == CoordSystem::osc) {
    m.radial2 = static_cast<std::int16_t>(2 * (2 * D - 1));
    for (int nu = 1; nu <= D - 1; ++nu) {
      m.sin2[nu - 1] = static_cast<std::int16_t>(2 * (2 * D - 2 * nu - 1));
      m.cos2[nu - 1] = 2;
    }
  } else {
    m.radial2 = static_cast<std::int16_t>(2 * (D - 1));
    for (int nu = 1; nu <= D - 1; ++nu) m.sin2[nu - 1] = static_cast<std::int16_t>(2 * (D - nu - 1));
  }
  return m;
}

inline DiffOperator adjoint(const DiffOperator& op) { return op.adjoint(measure_density(op.system(), op.dim())); }

// Square root of the reduction factor without its constant omega^{D/2}:
// r^{D/2} prod sin^{(D-nu)/2} phi_nu cos^{1/2} phi_nu.
inline CoefMonomial half_reduction_monomial(int D) {
  CoefMonomial m;
  m.radial2 = static_cast<std::int16_t>(D);
  for (int nu = 1; nu <= D - 1; ++nu) {
    m.sin2[nu - 1] = static_cast<std::int16_t>(D - nu);
    m.cos2[nu - 1] = 1;
  }
  return m;
}

// O^{1/2} op O^{-1/2} after the substitution R = sqrt(omega) r, theta = phi.
inline DiffOperator to_sw_picture(const DiffOperator& op, double omega) {
  if (op.system() != CoordSystem::osc) throw UsageError("to_sw_picture: expects an oscillator-picture operator");
  int D = op.dim();
  CoefMonomial Q = half_reduction_monomial(D);
  CoefExpr Qinv = monomial_expr(Q.inverse());
  DiffOperator r(CoordSystem::sw, D);
  for (const auto& [k, c] : op.terms()) {
    const auto& [m, a] = k;
    double scale = std::pow(omega, 0.25 * m.radial2 - 0.5 * a.n[0]);
    for (const auto& [g, w] : detail::sub_indices(a)) {
      CoefExpr dq = differentiate(Qinv, g, D);
      for (const auto& [mm, cc] : dq) r.add_term(c * scale * cc * static_cast<double>(w), Q * m * mm, detail::sub(a, g));
    }
  }
  return r;
}

}  // namespace swalg
