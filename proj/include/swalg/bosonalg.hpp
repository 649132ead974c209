#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swalg/exact.hpp"
#include "swalg/half_int.hpp"
#include "swalg/wigner.hpp"

namespace swalg {

class UnsupportedDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// alpha-dag^c alpha^a over 2D modes, normal ordered by construction.
// The all-zero monomial is the identity I.
struct BosonMonomial {
  std::vector<int> cre;
  std::vector<int> ann;

  BosonMonomial() = default;
  explicit BosonMonomial(int modes) : cre(modes, 0), ann(modes, 0) {}

  int modes() const { return static_cast<int>(cre.size()); }
  int degree() const {
    int d = 0;
    for (int v : cre) d += v;
    for (int v : ann) d += v;
    return d;
  }
  bool is_identity() const { return degree() == 0; }

  // graded lexicographic
  friend std::strong_ordering operator<=>(const BosonMonomial& x, const BosonMonomial& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    if (auto c = x.cre <=> y.cre; c != 0) return c;
    return x.ann <=> y.ann;
  }
  friend bool operator==(const BosonMonomial&, const BosonMonomial&) = default;

  std::string str() const {
    if (is_identity()) return "I";
    std::string s;
    auto put = [&](const std::string& name, int mode, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += name + std::to_string(mode + 1);
      if (e > 1) s += "^" + std::to_string(e);
    };
    for (int m = 0; m < modes(); ++m) put("a+", m, cre[m]);
    for (int m = 0; m < modes(); ++m) put("a", m, ann[m]);
    return s;
  }
};

// Normal-ordered polynomial with coefficients in Q(i)(sqrt 2, sqrt 3, ...).
class BosonPoly {
 public:
  BosonPoly() = default;
  explicit BosonPoly(int modes) : modes_(modes) {}

  static BosonPoly identity(int modes, const Surd& c = Surd(1)) {
    BosonPoly p(modes);
    p.add(BosonMonomial(modes), c);
    return p;
  }
  static BosonPoly creation(int modes, int mu) {
    BosonMonomial m(modes);
    m.cre.at(mu - 1) = 1;
    BosonPoly p(modes);
    p.add(m, Surd(1));
    return p;
  }
  static BosonPoly annihilation(int modes, int mu) {
    BosonMonomial m(modes);
    m.ann.at(mu - 1) = 1;
    BosonPoly p(modes);
    p.add(m, Surd(1));
    return p;
  }

  int modes() const { return modes_; }
  const std::map<BosonMonomial, Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BosonMonomial& m, const Surd& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Surd coefficient(const BosonMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Surd() : it->second;
  }

  BosonPoly& operator+=(const BosonPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  BosonPoly& operator-=(const BosonPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend BosonPoly operator+(BosonPoly a, const BosonPoly& b) { return a += b; }
  friend BosonPoly operator-(BosonPoly a, const BosonPoly& b) { return a -= b; }
  BosonPoly operator-() const { return Surd(-1) * *this; }

  friend BosonPoly operator*(const Surd& s, const BosonPoly& p) {
    BosonPoly r(p.modes_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.add(m, s * c);
    return r;
  }

  // Per mode, a^q a+^r = sum_k C(q,k) C(r,k) k! a+^{r-k} a^{q-k}.
  friend BosonPoly operator*(const BosonPoly& x, const BosonPoly& y) {
    int modes = std::max(x.modes_, y.modes_);
    BosonPoly r(modes);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        Surd c = cx * cy;
        BosonMonomial base(modes);
        expand(mx, my, 0, base, Integer(1), c, r);
      }
    return r;
  }

  // (a+^c a^a)^dagger = a+^a a^c, coefficients conjugated.
  BosonPoly adjoint() const {
    BosonPoly r(modes_);
    for (const auto& [m, c] : terms_) {
      BosonMonomial t = m;
      std::swap(t.cre, t.ann);
      r.add(t, c.conj());
    }
    return r;
  }

  friend bool operator==(const BosonPoly& a, const BosonPoly& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.str() + ")*" + m.str();
    }
    return s;
  }

 private:
  void adopt(const BosonPoly& o) {
    if (modes_ == 0) modes_ = o.modes_;
    if (o.modes_ != 0 && o.modes_ != modes_) throw std::invalid_argument("BosonPoly: mode count mismatch");
  }

  static Integer choose(int n, int k) {
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  static void expand(const BosonMonomial& x, const BosonMonomial& y, int mode, BosonMonomial& cur,
                     const Integer& weight, const Surd& c, BosonPoly& out) {
    int modes = cur.modes();
    if (mode == modes) {
      out.add(cur, c * Surd(Rational(weight)));
      return;
    }
    auto at = [](const std::vector<int>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : 0; };
    int q = at(x.ann, mode), r = at(y.cre, mode);
    Integer kfact = 1;
    for (int k = 0; k <= std::min(q, r); ++k) {
      if (k > 0) kfact *= k;
      cur.cre[mode] = at(x.cre, mode) + r - k;
      cur.ann[mode] = q - k + at(y.ann, mode);
      expand(x, y, mode + 1, cur, weight * choose(q, k) * choose(r, k) * kfact, c, out);
    }
  }

  int modes_ = 0;
  std::map<BosonMonomial, Surd> terms_;
};

inline BosonPoly commutator(const BosonPoly& a, const BosonPoly& b) { return a * b - b * a; }

// Arbitrary-order products of single letters, before ordering.
struct BosonLetter {
  int mode;  // 1-based
  bool dagger;
  friend auto operator<=>(const BosonLetter&, const BosonLetter&) = default;
};

using BosonWord = std::vector<BosonLetter>;

struct WordPoly {
  int modes = 0;
  std::vector<std::pair<BosonWord, Surd>> terms;

  WordPoly& add(BosonWord w, Surd c) {
    terms.emplace_back(std::move(w), std::move(c));
    return *this;
  }
};

// Rewrites each word with [a_mu, a+_nu] = delta I until every creation letter
// stands left of every annihilation letter.
inline BosonPoly normal_order(const WordPoly& wp) {
  BosonPoly out(wp.modes);
  std::vector<std::pair<BosonWord, Surd>> stack(wp.terms.begin(), wp.terms.end());
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && !(!w[i].dagger && w[i + 1].dagger)) ++i;
    if (i + 1 >= w.size()) {
      BosonMonomial m(wp.modes);
      for (const auto& l : w) (l.dagger ? m.cre : m.ann).at(l.mode - 1) += 1;
      out.add(m, c);
      continue;
    }
    BosonWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (w[i].mode == w[i + 1].mode) {
      BosonWord contracted;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (k != i && k != i + 1) contracted.push_back(w[k]);
      stack.emplace_back(std::move(contracted), c);
    }
    stack.emplace_back(std::move(swapped), c);
  }
  return out;
}

// A normal-ordered polynomial read back as words and reordered; the identity map.
inline BosonPoly normal_order(const BosonPoly& p) {
  WordPoly wp{p.modes(), {}};
  for (const auto& [m, c] : p.terms()) {
    BosonWord w;
    for (int k = 0; k < m.modes(); ++k)
      for (int e = 0; e < m.cre[k]; ++e) w.push_back({k + 1, true});
    for (int k = 0; k < m.modes(); ++k)
      for (int e = 0; e < m.ann[k]; ++e) w.push_back({k + 1, false});
    wp.add(std::move(w), c);
  }
  return normal_order(wp);
}

enum class GenKind {
  identity,
  alpha_dag,
  alpha,
  E,
  Ebar,
  L,
  T,
  Ddag,
  Dlow,
  Casimir1,
  J,   // index 1, 2, 3 (Cartesian) or 0 for J_3
  K,
  Jp,
  Jm,
  Kp,
  Km,
  Adag_tensor,
  A_tensor,
  T_tensor,
  Ddag_tensor,
  Dlow_tensor,
  Ddag_scalar,
  Dlow_scalar,
};

namespace detail {

inline Surd sqrt_half() { return Surd::sqrt(Rational(1, 2)); }

inline void need_index(const std::vector<HalfInt>& idx, std::size_t count, const char* what) {
  if (idx.size() != count) throw std::invalid_argument(std::string("build_generator: wrong index count for ") + what);
}

inline int mode_index(HalfInt h, int D) {
  long long v = h.as_int();
  if (v < 1 || v > 2 * D) throw std::invalid_argument("build_generator: mode index out of range");
  return static_cast<int>(v);
}

}  // namespace detail

class BosonAlgebra {
 public:
  explicit BosonAlgebra(int D) : D_(D), M_(2 * D) {
    if (D < 1) throw std::invalid_argument("BosonAlgebra: D must be positive");
  }

  int D() const { return D_; }
  int modes() const { return M_; }

  BosonPoly I() const { return BosonPoly::identity(M_); }
  BosonPoly ad(int mu) const { return BosonPoly::creation(M_, mu); }
  BosonPoly a(int mu) const { return BosonPoly::annihilation(M_, mu); }

  BosonPoly E(int mu, int nu) const {
    BosonPoly r = ad(mu) * a(nu);
    if (mu == nu) r += BosonPoly::identity(M_, Surd(Rational(1, 2)));
    return r;
  }
  BosonPoly casimir1() const {
    BosonPoly r(M_);
    for (int mu = 1; mu <= M_; ++mu) r += E(mu, mu);
    return r;
  }
  BosonPoly Ebar(int mu, int nu) const {
    BosonPoly r = E(mu, nu);
    if (mu == nu) r -= Surd(Rational(1, M_)) * casimir1();
    return r;
  }
  BosonPoly L(int mu, int nu) const { return Surd(GaussRational(0, -1)) * (E(mu, nu) - E(nu, mu)); }
  BosonPoly T(int mu, int nu) const { return Ebar(mu, nu) + Ebar(nu, mu); }
  BosonPoly Ddag(int mu, int nu) const { return ad(mu) * ad(nu); }
  BosonPoly Dlow(int mu, int nu) const { return a(mu) * a(nu); }

  // H^osc = sum_mu (X_mu^2 - d_mu^2), X = (a + a+)/sqrt 2, d = (a - a+)/sqrt 2.
  BosonPoly hamiltonian_osc() const {
    BosonPoly r(M_);
    Surd s = detail::sqrt_half();
    for (int mu = 1; mu <= M_; ++mu) {
      BosonPoly X = s * (a(mu) + ad(mu));
      BosonPoly d = s * (a(mu) - ad(mu));
      r += X * X - d * d;
    }
    return r;
  }

  // su(2) + su(2) of D = 2. Cartesian i in 1..3.
  BosonPoly J(int i) const { return jk(i, -1); }
  BosonPoly K(int i) const { return jk(i, +1); }
  BosonPoly J0() const { return J(3); }
  BosonPoly Jp() const { return J(1) + Surd::i() * J(2); }
  BosonPoly Jm() const { return J(1) - Surd::i() * J(2); }
  BosonPoly K0() const { return K(3); }
  BosonPoly Kp() const { return K(1) + Surd::i() * K(2); }
  BosonPoly Km() const { return K(1) - Surd::i() * K(2); }

  BosonPoly Adag(HalfInt s, HalfInt t) const {
    require_d2("Adag tensor");
    Surd r = detail::sqrt_half();
    if (abs(s) != kHalf || abs(t) != kHalf) throw std::invalid_argument("Adag tensor: components are +-1/2");
    if (s == t) {
      // -+ (a+_1 +- i a+_2)/sqrt 2
      Surd sg = s.twice() > 0 ? Surd(1) : Surd(-1);
      return -sg * r * (ad(1) + sg * Surd::i() * ad(2));
    }
    Surd sg = s.twice() > 0 ? Surd(1) : Surd(-1);
    return r * (ad(3) - sg * Surd::i() * ad(4));
  }
  BosonPoly A(HalfInt s, HalfInt t) const {
    int ph = sign_power(HalfInt(1) - s - t);
    return Surd(ph) * Adag(-s, -t).adjoint();
  }

  // [X x Y]^{s,t}_{sigma,tau} over the two rank-(1/2,1/2) tensors.
  BosonPoly couple(const std::function<BosonPoly(HalfInt, HalfInt)>& X,
                   const std::function<BosonPoly(HalfInt, HalfInt)>& Y, HalfInt s, HalfInt t, HalfInt sigma,
                   HalfInt tau) const {
    BosonPoly r(M_);
    for (int ts1 : {-1, 1})
      for (int tt1 : {-1, 1}) {
        HalfInt s1 = HalfInt::from_twice(ts1), t1 = HalfInt::from_twice(tt1);
        HalfInt s2 = sigma - s1, t2 = tau - t1;
        if (abs(s2) != kHalf || abs(t2) != kHalf) continue;
        Surd c = clebsch_gordan_exact({kHalf, s1, kHalf, s2, s, sigma}).to_surd() *
                 clebsch_gordan_exact({kHalf, t1, kHalf, t2, t, tau}).to_surd();
        if (c.is_zero()) continue;
        r += c * (X(s1, t1) * Y(s2, t2));
      }
    return r;
  }

  BosonPoly Ttensor(HalfInt s, HalfInt t) const {
    require_d2("T tensor");
    return couple([this](HalfInt x, HalfInt y) { return Adag(x, y); }, [this](HalfInt x, HalfInt y) { return A(x, y); },
                  1, 1, s, t);
  }
  BosonPoly Ddag_tensor(HalfInt s, HalfInt t) const {
    require_d2("Ddag tensor");
    auto ad2 = [this](HalfInt x, HalfInt y) { return Adag(x, y); };
    return couple(ad2, ad2, 1, 1, s, t);
  }
  BosonPoly Dlow_tensor(HalfInt s, HalfInt t) const {
    return Surd(sign_power(s + t)) * Ddag_tensor(-s, -t).adjoint();
  }
  BosonPoly Ddag_scalar() const {
    BosonPoly r(M_);
    for (int mu = 1; mu <= M_; ++mu) r += Ddag(mu, mu);
    return r;
  }
  BosonPoly Dlow_scalar() const { return Ddag_scalar().adjoint(); }

  void require_d2(const char* what) const {
    if (D_ != 2) throw UnsupportedDimensionError(std::string(what) + " exists only for D = 2");
  }

 private:
  // J_i = (eps_ijk L_jk / 2 - L_i4) / 2, K_i with + L_i4.
  BosonPoly jk(int i, int sign) const {
    require_d2("J/K generators");
    if (i == 0) i = 3;
    if (i < 1 || i > 3) throw std::invalid_argument("J/K index must be 1, 2 or 3");
    int j = i % 3 + 1, k = j % 3 + 1;
    BosonPoly r = L(j, k) + Surd(sign) * L(i, 4);
    return Surd(Rational(1, 2)) * r;
  }

  int D_, M_;
};

inline BosonPoly build_generator(GenKind kind, const std::vector<HalfInt>& idx, int D) {
  BosonAlgebra alg(D);
  auto mode = [&](std::size_t k) { return detail::mode_index(idx[k], D); };
  switch (kind) {
    case GenKind::identity: return alg.I();
    case GenKind::alpha_dag: detail::need_index(idx, 1, "alpha_dag"); return alg.ad(mode(0));
    case GenKind::alpha: detail::need_index(idx, 1, "alpha"); return alg.a(mode(0));
    case GenKind::E: detail::need_index(idx, 2, "E"); return alg.E(mode(0), mode(1));
    case GenKind::Ebar: detail::need_index(idx, 2, "Ebar"); return alg.Ebar(mode(0), mode(1));
    case GenKind::L: detail::need_index(idx, 2, "L"); return alg.L(mode(0), mode(1));
    case GenKind::T: detail::need_index(idx, 2, "T"); return alg.T(mode(0), mode(1));
    case GenKind::Ddag: detail::need_index(idx, 2, "Ddag"); return alg.Ddag(mode(0), mode(1));
    case GenKind::Dlow: detail::need_index(idx, 2, "Dlow"); return alg.Dlow(mode(0), mode(1));
    case GenKind::Casimir1: return alg.casimir1();
    case GenKind::J: detail::need_index(idx, 1, "J"); return alg.J(static_cast<int>(idx[0].as_int()));
    case GenKind::K: detail::need_index(idx, 1, "K"); return alg.K(static_cast<int>(idx[0].as_int()));
    case GenKind::Jp: return alg.Jp();
    case GenKind::Jm: return alg.Jm();
    case GenKind::Kp: return alg.Kp();
    case GenKind::Km: return alg.Km();
    case GenKind::Adag_tensor: detail::need_index(idx, 2, "Adag tensor"); return alg.Adag(idx[0], idx[1]);
    case GenKind::A_tensor: detail::need_index(idx, 2, "A tensor"); return alg.A(idx[0], idx[1]);
    case GenKind::T_tensor: detail::need_index(idx, 2, "T tensor"); return alg.Ttensor(idx[0], idx[1]);
    case GenKind::Ddag_tensor: detail::need_index(idx, 2, "Ddag tensor"); return alg.Ddag_tensor(idx[0], idx[1]);
    case GenKind::Dlow_tensor: detail::need_index(idx, 2, "Dlow tensor"); return alg.Dlow_tensor(idx[0], idx[1]);
    case GenKind::Ddag_scalar: alg.require_d2("Ddag scalar"); return alg.Ddag_scalar();
    case GenKind::Dlow_scalar: alg.require_d2("Dlow scalar"); return alg.Dlow_scalar();
  }
  throw std::invalid_argument("build_generator: unknown kind");
}

}  // namespace swalg
