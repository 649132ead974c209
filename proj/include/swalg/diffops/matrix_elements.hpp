#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swalg/diffops/catalogue.hpp"
#include "swalg/quadrature.hpp"
#include "swalg/wigner.hpp"

namespace swalg {

// ---------------------------------------------------------------------------
// Numeric matrix elements

// Jets of a state at every quadrature node, one table per coordinate family.
struct NodeTable {
  std::vector<Jet> radial;
  std::vector<std::vector<Jet>> angular;
};

class MatrixElementEngine {
 public:
  MatrixElementEngine(CoordSystem sys, int D, const RuleSet& rules, double omega = 1.0)
      : sys_(sys), D_(D), rules_(rules), omega_(sys == CoordSystem::sw ? omega : 1.0) {
    Measure m = natural_measure(sys);
    double rp = detail::radial_measure_power(m, D);
    for (int i = 0; i < rules_.radial.order(); ++i) {
      double r = std::sqrt(rules_.radial.nodes[i] / omega_);
      r_.push_back(r);
      rw_.push_back(rules_.radial.plain_weights[i] / (2.0 * omega_ * r) * std::pow(r, rp));
    }
    for (int nu = 1; nu <= D - 1; ++nu) {
      auto [sp, cp] = detail::angle_measure_powers(m, D, nu);
      std::vector<double> w;
      for (int i = 0; i < rules_.angle.order(); ++i) {
        double t = rules_.angle.nodes[i];
        w.push_back(rules_.angle.plain_weights[i] * std::pow(std::sin(t), sp) * std::pow(std::cos(t), cp));
      }
      aw_.push_back(std::move(w));
    }
    for (double t : rules_.angle.nodes) {
      sin_.push_back(std::sin(t));
      cos_.push_back(std::cos(t));
    }
  }

  CoordSystem system() const { return sys_; }
  const RuleSet& rules() const { return rules_; }

  NodeTable table(const WaveEval& psi) const {
    check(psi);
    NodeTable t;
    for (double r : r_) t.radial.push_back(psi.radial()(r));
    for (int k = 0; k < D_ - 1; ++k) {
      std::vector<Jet> col;
      for (double a : rules_.angle.nodes) col.push_back(psi.angular(k)(a));
      t.angular.push_back(std::move(col));
    }
    return t;
  }

  // <bra| op |ket> under dV or dv. Terms whose lambda integral vanishes are skipped.
  std::complex<double> element(const WaveEval& bra, const NodeTable& tb, const DiffOperator& op, const WaveEval& ket,
                               const NodeTable& tk) const {
    check(bra);
    check(ket);
    if (op.system() != sys_ || op.dim() != D_) throw UsageError("matrix element: operator picture mismatch");
    std::complex<double> total = 0.0;
    for (const auto& [key, c] : op.terms()) {
      const auto& [m, a] = key;
      std::complex<double> v = c * std::conj(bra.scale()) * ket.scale();
      bool skip = false;
      for (int nu = 0; nu < D_ && !skip; ++nu) {
        double q = ket.frequency(nu);
        double f = m.phase[nu] + q - bra.frequency(nu);
        std::complex<double> lam = detail::phase_integral(rules_.lambda, f);
        if (std::abs(lam) < kLambdaSkip) skip = true;
        v *= lam * ipow(q, a.n[D_ + nu]);
      }
      if (skip) continue;
      v *= radial(tb.radial, 0, tk.radial, a.n[0], m.radial2, 0);
      for (int k = 0; k < D_ - 1; ++k) v *= angle(tb.angular[k], 0, 0, tk.angular[k], a.n[1 + k], m, k);
      total += v;
    }
    return total;
  }

  // || op ket ||^2 from the double sum over operator terms.
  double norm_sq(const DiffOperator& op, const WaveEval& ket, const NodeTable& tk) const {
    std::complex<double> total = 0.0;
    const auto& terms = op.terms();
    for (const auto& [k1, c1] : terms)
      for (const auto& [k2, c2] : terms) {
        const auto& [m1, a1] = k1;
        const auto& [m2, a2] = k2;
        std::complex<double> v = std::conj(c1) * c2 * std::norm(ket.scale());
        bool skip = false;
        for (int nu = 0; nu < D_ && !skip; ++nu) {
          double q = ket.frequency(nu);
          std::complex<double> lam = detail::phase_integral(rules_.lambda, m2.phase[nu] - m1.phase[nu]);
          if (std::abs(lam) < kLambdaSkip) skip = true;
          v *= lam * std::conj(ipow(q, a1.n[D_ + nu])) * ipow(q, a2.n[D_ + nu]);
        }
        if (skip) continue;
        v *= radial(tk.radial, a1.n[0], tk.radial, a2.n[0], m1.radial2 + m2.radial2, 0);
        CoefMonomial both = m1 * m2;
        for (int k = 0; k < D_ - 1; ++k)
          v *= angle(tk.angular[k], a1.n[1 + k], 0, tk.angular[k], a2.n[1 + k], both, k);
        total += v;
      }
    return total.real();
  }

  std::complex<double> inner(const WaveEval& bra, const NodeTable& tb, const WaveEval& ket, const NodeTable& tk) const {
    return element(bra, tb, DiffOperator::identity(sys_, D_), ket, tk);
  }

  static constexpr double kLambdaSkip = 1e-12;

 private:
  static double pick(const Jet& j, int order) { return order == 0 ? j.value : order == 1 ? j.d1 : j.d2; }
  static std::complex<double> ipow(double q, int k) {
    std::complex<double> v = 1.0;
    for (int i = 0; i < k; ++i) v *= std::complex<double>(0.0, q);
    return v;
  }

  double radial(const std::vector<Jet>& b, int ob, const std::vector<Jet>& k, int ok, int radial2, int) const {
    double s = 0.0, e = 0.5 * radial2;
    for (std::size_t i = 0; i < r_.size(); ++i)
      s += rw_[i] * (e == 0 ? 1.0 : std::pow(r_[i], e)) * pick(b[i], ob) * pick(k[i], ok);
    return s;
  }

  double angle(const std::vector<Jet>& b, int ob, int, const std::vector<Jet>& k, int ok, const CoefMonomial& m,
               int idx) const {
    double s = 0.0, es = 0.5 * m.sin2[idx], ec = 0.5 * m.cos2[idx];
    for (std::size_t i = 0; i < sin_.size(); ++i) {
      double w = aw_[idx][i];
      if (es != 0) w *= std::pow(sin_[i], es);
      if (ec != 0) w *= std::pow(cos_[i], ec);
      s += w * pick(b[i], ob) * pick(k[i], ok);
    }
    return s;
  }

  void check(const WaveEval& psi) const {
    if (psi.system() != sys_ || psi.dim() != D_) throw UsageError("matrix element: state picture mismatch");
  }

  CoordSystem sys_;
  int D_;
  RuleSet rules_;
  double omega_;
  std::vector<double> r_, rw_, sin_, cos_;
  std::vector<std::vector<double>> aw_;
};

// One-shot version with the default rules.
inline std::complex<double> matrix_element_numeric(const WaveEval& bra, const DiffOperator& op, const WaveEval& ket,
                                                   double omega = 1.0, const RuleSet& rules = RuleSet()) {
  MatrixElementEngine eng(ket.system(), ket.dim(), rules, omega);
  return eng.element(bra, eng.table(bra), op, ket, eng.table(ket));
}

// ---------------------------------------------------------------------------
// Closed-form predictions

enum class RmeKind { Adag, A, T, Ddag, Dlow };

inline std::string to_string(RmeKind k) {
  switch (k) {
    case RmeKind::Adag: return "Adag";
    case RmeKind::A: return "A";
    case RmeKind::T: return "T";
    case RmeKind::Ddag: return "Ddag";
    case RmeKind::Dlow: return "Dlow";
  }
  return "?";
}

inline HalfInt rme_rank(RmeKind k) { return (k == RmeKind::Adag || k == RmeKind::A) ? kHalf : HalfInt(1); }

// Reduced matrix element <n_r', j + dj || X || n_r, j>; absent branches carry present = false.
struct ReducedElement {
  bool present = false;
  int n_r = 0;
  HalfInt j;
  std::complex<double> value;
};

namespace detail {

inline ReducedElement absent() { return {}; }

inline ReducedElement rme_raising(RmeKind kind, int n_r, HalfInt j, HalfInt dj) {
  double J = j.to_double(), nr = n_r;
  const std::complex<double> I(0.0, 1.0);
  ReducedElement e;
  e.present = true;
  e.j = j + dj;
  if (kind == RmeKind::Adag) {
    if (dj == kHalf) {
      e.n_r = n_r;
      e.value = I * std::sqrt((2 * J + 1) * (nr + 2 * J + 2) / (2 * J + 2));
    } else {
      if (j.twice() == 0) return absent();
      e.n_r = n_r + 1;
      e.value = -I * std::sqrt((2 * J + 1) * (nr + 1) / (2 * J));
    }
  } else if (kind == RmeKind::T) {
    if (dj == HalfInt(1)) {
      if (n_r == 0) return absent();
      e.n_r = n_r - 1;
      e.value = -std::sqrt((2 * J + 1) * nr * (nr + 2 * J + 2) / (2 * J + 3));
    } else if (dj == HalfInt(0)) {
      e.n_r = n_r;
      e.value = nr + J + 1;
    } else {
      if (j.twice() < 2) return absent();
      e.n_r = n_r + 1;
      e.value = -std::sqrt((2 * J + 1) * (nr + 1) * (nr + 2 * J + 1) / (2 * J - 1));
    }
  } else {
    if (dj == HalfInt(1)) {
      e.n_r = n_r;
      e.value = -std::sqrt((2 * J + 1) * (nr + 2 * J + 2) * (nr + 2 * J + 3) / (2 * J + 3));
    } else if (dj == HalfInt(0)) {
      e.n_r = n_r + 1;
      e.value = std::sqrt((nr + 1) * (nr + 2 * J + 2));
    } else {
      if (j.twice() < 2) return absent();
      e.n_r = n_r + 2;
      e.value = -std::sqrt((2 * J + 1) * (nr + 1) * (nr + 2) / (2 * J - 1));
    }
  }
  return e;
}

// n_r shift of the raising branch with j' = j + dj.
inline int raising_nr_shift(RmeKind kind, HalfInt dj) {
  if (kind == RmeKind::Adag) return dj == kHalf ? 0 : 1;
  if (kind == RmeKind::T) return dj == HalfInt(1) ? -1 : dj == HalfInt(0) ? 0 : 1;
  return dj == HalfInt(1) ? 0 : dj == HalfInt(0) ? 1 : 2;
}

}  // namespace detail

// branch is j' - j: +-1/2 for Adag/A, -1, 0, +1 for T/Ddag/Dlow.
inline ReducedElement reduced_matrix_element(RmeKind kind, int n_r, HalfInt j, HalfInt branch) {
  if (n_r < 0 || j.twice() < 0) throw LabelError("reduced_matrix_element: invalid label");
  HalfInt s = rme_rank(kind);
  if (abs(branch) > s || !(s - branch).is_integer()) throw LabelError("reduced_matrix_element: invalid branch");
  HalfInt jp = j + branch;
  if (jp.twice() < 0) return detail::absent();
  if (kind == RmeKind::Adag || kind == RmeKind::T || kind == RmeKind::Ddag) {
    RmeKind k = kind;
    return detail::rme_raising(k, n_r, j, branch);
  }
  // <n_r', j'||X||n_r, j> = (2j+1)/(2j'+1) <n_r, j||X^dagger||n_r', j'>^*
  RmeKind up = kind == RmeKind::A ? RmeKind::Adag : RmeKind::Ddag;
  int nrp = n_r - detail::raising_nr_shift(up, -branch);
  if (nrp < 0) return detail::absent();
  ReducedElement back = detail::rme_raising(up, nrp, jp, -branch);
  if (!back.present) return detail::absent();
  ReducedElement e;
  e.present = true;
  e.n_r = nrp;
  e.j = jp;
  e.value = (j.to_double() * 2 + 1) / (jp.to_double() * 2 + 1) * std::conj(back.value);
  return e;
}

enum class GenComp { J0, Jp, Jm, K0, Kp, Km, Adag, A, T, Ddag, Dlow, Ddag_scalar, Dlow_scalar };

struct Component {
  GenComp kind;
  HalfInt sigma = 0, tau = 0;

  std::string str() const {
    static const char* names[] = {"J0", "Jp", "Jm", "K0", "Kp", "Km", "Adag", "A", "T", "Ddag", "Dlow", "Ddag-scalar", "Dlow-scalar"};
    std::string s = names[static_cast<int>(kind)];
    if (is_tensor()) s += "(" + sigma.str() + "," + tau.str() + ")";
    return s;
  }
  bool is_tensor() const { return kind == GenComp::Adag || kind == GenComp::A || kind == GenComp::T || kind == GenComp::Ddag || kind == GenComp::Dlow; }
  // Change of N = 2 n_r + 2 j.
  int level_shift() const {
    switch (kind) {
      case GenComp::Adag: return 1;
      case GenComp::A: return -1;
      case GenComp::Ddag:
      case GenComp::Ddag_scalar: return 2;
      case GenComp::Dlow:
      case GenComp::Dlow_scalar: return -2;
      default: return 0;
    }
  }
  // su(4) members versus the w(4) + sp(8,R) ladder operators.
  bool is_dynamical() const { return level_shift() != 0; }
};

inline std::vector<Component> all_components() {
  std::vector<Component> out{{GenComp::J0}, {GenComp::Jp}, {GenComp::Jm}, {GenComp::K0}, {GenComp::Kp}, {GenComp::Km}};
  for (GenComp k : {GenComp::Adag, GenComp::A})
    for (int s : {1, -1})
      for (int t : {1, -1}) out.push_back({k, HalfInt::from_twice(s), HalfInt::from_twice(t)});
  for (GenComp k : {GenComp::T, GenComp::Ddag, GenComp::Dlow})
    for (int s : {1, 0, -1})
      for (int t : {1, 0, -1}) out.push_back({k, s, t});
  out.push_back({GenComp::Ddag_scalar});
  out.push_back({GenComp::Dlow_scalar});
  return out;
}

template <class Label>
struct Prediction {
  Label target;
  std::complex<double> coefficient;
};

using OscPrediction = Prediction<OscBarLabel>;
using SWPrediction = Prediction<SWLabel>;

namespace detail {

inline double cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J) {
  return clebsch_gordan({j1, m1, j2, m2, J, m1 + m2});
}

inline RmeKind rme_kind(GenComp g) {
  switch (g) {
    case GenComp::Adag: return RmeKind::Adag;
    case GenComp::A: return RmeKind::A;
    case GenComp::T: return RmeKind::T;
    case GenComp::Ddag: return RmeKind::Ddag;
    default: return RmeKind::Dlow;
  }
}

template <class L>
void push(std::vector<Prediction<L>>& out, const L& target, std::complex<double> c) {
  if (c != 0.0) out.push_back({target, c});
}

}  // namespace detail

// Action of a component on Psi-bar^osc_{n_r j m m'}: su(2) ladders, Wigner-Eckart
// with the reduced elements above, and the two scalar ladders.
inline std::vector<OscPrediction> predict_osc(const Component& c, const OscBarLabel& ket) {
  ket.validate();
  std::vector<OscPrediction> out;
  double j = ket.j.to_double(), m = ket.m.to_double(), mp = ket.mp.to_double(), nr = ket.n_r;
  auto shifted = [&](int dnr, HalfInt dj, HalfInt dm, HalfInt dmp) {
    return OscBarLabel{ket.n_r + dnr, ket.j + dj, ket.m + dm, ket.mp + dmp};
  };
  switch (c.kind) {
    case GenComp::J0: detail::push(out, ket, {m, 0.0}); break;
    case GenComp::K0: detail::push(out, ket, {mp, 0.0}); break;
    case GenComp::Jp:
      if (ket.m < ket.j) detail::push(out, shifted(0, 0, 1, 0), std::sqrt((j - m) * (j + m + 1)));
      break;
    case GenComp::Jm:
      if (-ket.j < ket.m) detail::push(out, shifted(0, 0, -1, 0), std::sqrt((j + m) * (j - m + 1)));
      break;
    case GenComp::Kp:
      if (ket.mp < ket.j) detail::push(out, shifted(0, 0, 0, 1), std::sqrt((j - mp) * (j + mp + 1)));
      break;
    case GenComp::Km:
      if (-ket.j < ket.mp) detail::push(out, shifted(0, 0, 0, -1), std::sqrt((j + mp) * (j - mp + 1)));
      break;
    case GenComp::Ddag_scalar:
      detail::push(out, shifted(1, 0, 0, 0), -2.0 * std::sqrt((nr + 1) * (nr + 2 * j + 2)));
      break;
    case GenComp::Dlow_scalar:
      if (ket.n_r > 0) detail::push(out, shifted(-1, 0, 0, 0), -2.0 * std::sqrt(nr * (nr + 2 * j + 1)));
      break;
    default: {
      RmeKind k = detail::rme_kind(c.kind);
      HalfInt s = rme_rank(k);
      for (HalfInt dj = -s; dj <= s; dj += 1) {
        ReducedElement e = reduced_matrix_element(k, ket.n_r, ket.j, dj);
        if (!e.present) continue;
        OscBarLabel t{e.n_r, e.j, ket.m + c.sigma, ket.mp + c.tau};
        if (abs(t.m) > t.j || abs(t.mp) > t.j) continue;
        double g = detail::cg(ket.j, ket.m, s, c.sigma, e.j) * detail::cg(ket.j, ket.mp, s, c.tau, e.j);
        detail::push(out, t, wigner_eckart(e.value, g, 1.0));
      }
    }
  }
  return out;
}

namespace detail {

// Coefficient tables t, a, d of the (a, b)-labelled action; nprime = n + tau + shift.
inline std::optional<double> sw_table(GenComp kind, HalfInt shift, int n_r, double s2) {
  // s2 = 2n + a + b
  double nr = n_r;
  if (kind == GenComp::T) {
    if (shift == HalfInt(1)) return -std::sqrt(s2 * nr * (nr + s2 + 1) / (s2 + 2));
    if (shift == HalfInt(0)) return std::nullopt;  // handled by the caller, it is not a square root
    if (s2 - 2 <= 0) return std::nullopt;
    return -std::sqrt(s2 * (nr + 1) * (nr + s2) / (s2 - 2));
  }
  if (shift == HalfInt(1)) return -std::sqrt(s2 * (nr + s2 + 1) * (nr + s2 + 2) / (s2 + 2));
  if (shift == HalfInt(0)) return std::sqrt((nr + 1) * (nr + s2 + 1));
  if (s2 - 2 <= 0) return std::nullopt;
  return -std::sqrt(s2 * (nr + 1) * (nr + 2) / (s2 - 2));
}

}  // namespace detail

// Action on Psi-bar_{n_r n a b} as listed for the reduced system. A, D and the
// lowering scalar have no list of their own and go through the oscillator labels.
inline std::vector<SWPrediction> predict_sw(const Component& c, const SWLabel& ket) {
  if (!(ket.a + ket.b).is_integer() || ket.n < 0 || ket.n_r < 0)
    throw LabelError("predict_sw: needs n, n_r >= 0 and half-integer a, b");
  std::vector<SWPrediction> out;
  double a = ket.a.to_double(), b = ket.b.to_double(), n = ket.n, nr = ket.n_r;
  auto lab = [&](int dnr, int dn, HalfInt da, HalfInt db) { return SWLabel{ket.n_r + dnr, ket.n + dn, ket.a + da, ket.b + db}; };
  HalfInt apb1 = ket.a + ket.b - 1;
  HalfInt J = HalfInt(ket.n) + HalfInt::from_twice(apb1.as_int());
  HalfInt M = HalfInt::from_twice((ket.a - ket.b).as_int()), Mp = -HalfInt::from_twice(apb1.as_int());
  double s2 = 2 * n + a + b;
  switch (c.kind) {
    case GenComp::J0: detail::push(out, ket, {0.5 * (a - b), 0.0}); break;
    case GenComp::K0: detail::push(out, ket, {-0.5 * (a + b - 1), 0.0}); break;
    case GenComp::Jp: detail::push(out, lab(0, 0, 1, -1), std::sqrt(std::max(0.0, (n + a + 0.5) * (n + b - 0.5)))); break;
    case GenComp::Jm: detail::push(out, lab(0, 0, -1, 1), std::sqrt(std::max(0.0, (n + a - 0.5) * (n + b + 0.5)))); break;
    case GenComp::Kp: detail::push(out, lab(0, 1, -1, -1), std::sqrt(std::max(0.0, (n + 1) * (n + a + b - 1)))); break;
    case GenComp::Km:
      if (ket.n > 0) detail::push(out, lab(0, -1, 1, 1), std::sqrt(n * (n + a + b)));
      break;
    case GenComp::Ddag_scalar: detail::push(out, lab(1, 0, 0, 0), -2.0 * std::sqrt((nr + 1) * (nr + s2 + 1))); break;
    case GenComp::T:
    case GenComp::Ddag:
    case GenComp::Adag: {
      HalfInt rank = c.kind == GenComp::Adag ? kHalf : HalfInt(1);
      HalfInt extra = c.kind == GenComp::Adag ? kHalf : c.kind == GenComp::Ddag ? HalfInt(1) : HalfInt(0);
      for (HalfInt shift = -rank; shift <= rank; shift += 1) {
        HalfInt np = HalfInt(ket.n) + c.tau + shift;  // n'
        HalfInt jp = np - c.tau + HalfInt::from_twice(apb1.as_int());
        if (jp.twice() < 0 || !np.is_integer() || np.twice() < 0) continue;
        HalfInt nrp = HalfInt(ket.n_r) - (np - HalfInt(ket.n) - c.tau) + extra;
        if (nrp.twice() < 0) continue;
        std::complex<double> coef;
        if (c.kind == GenComp::Adag) {
          const std::complex<double> I(0.0, 1.0);
          if (shift == kHalf) coef = I * std::sqrt(s2 * (nr + s2 + 1) / (s2 + 1));
          else if (s2 - 1 > 0) coef = -I * std::sqrt(s2 * (nr + 1) / (s2 - 1));
          else continue;
        } else if (c.kind == GenComp::T && shift == HalfInt(0)) {
          coef = nr + n + 0.5 * (a + b + 1);
        } else {
          auto v = detail::sw_table(c.kind, shift, ket.n_r, s2);
          if (!v) continue;
          coef = *v;
        }
        double g = detail::cg(J, M, rank, c.sigma, jp) * detail::cg(J, Mp, rank, c.tau, jp);
        SWLabel t{static_cast<int>(nrp.as_int()), static_cast<int>(np.as_int()), ket.a + c.sigma - c.tau,
                  ket.b - c.sigma - c.tau};
        detail::push(out, t, coef * g);
      }
      break;
    }
    default: {
      for (const auto& p : predict_osc(c, to_osc_bar(ket))) detail::push(out, to_sw_label(p.target), p.coefficient);
    }
  }
  return out;
}

inline std::complex<double> matrix_element_predicted(const Component& c, const OscBarLabel& bra, const OscBarLabel& ket) {
  std::complex<double> v = 0.0;
  for (const auto& p : predict_osc(c, ket))
    if (p.target == bra) v += p.coefficient;
  return v;
}

inline std::complex<double> matrix_element_predicted(const Component& c, const SWLabel& bra, const SWLabel& ket) {
  std::complex<double> v = 0.0;
  for (const auto& p : predict_sw(c, ket))
    if (p.target == bra) v += p.coefficient;
  return v;
}

// (a, b) shifts reachable in one step.
inline bool allowed_shift(const Component& c, int da2, int db2) {
  // doubled shifts
  auto in = [&](std::initializer_list<std::pair<int, int>> set) {
    for (auto [x, y] : set)
      if (2 * x == da2 && 2 * y == db2) return true;
    return false;
  };
  bool su4 = in({{0, 0}, {1, -1}, {-1, 1}, {1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}});
  if (c.kind != GenComp::Adag && c.kind != GenComp::A) return su4;
  return su4 || in({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

// ---------------------------------------------------------------------------
// Operators for each component

enum class OpSource { display, boson };

inline std::string to_string(OpSource s) { return s == OpSource::display ? "display" : "boson"; }

// Whether the catalogue has a coordinate display for the component in this picture.
inline bool has_display(const Component& c, CoordSystem sys) {
  bool diag = c.sigma == c.tau && abs(c.sigma) == kHalf;
  switch (c.kind) {
    case GenComp::J0:
    case GenComp::Jp:
    case GenComp::Jm:
    case GenComp::K0:
    case GenComp::Kp:
    case GenComp::Km: return true;
    case GenComp::Adag:
    case GenComp::A: return diag;
    case GenComp::T:
    case GenComp::Ddag: return sys == CoordSystem::sw && c.sigma == HalfInt(1) && c.tau == HalfInt(1);
    case GenComp::Ddag_scalar: return sys == CoordSystem::sw;
    default: return false;
  }
}

inline DiffOperator component_operator(const Component& c, CoordSystem sys, OpSource src, double omega = 1.0) {
  if (src == OpSource::display) {
    static const OpName names[] = {OpName::J0, OpName::Jp, OpName::Jm, OpName::K0, OpName::Kp, OpName::Km, OpName::Adag,
                                   OpName::A,  OpName::T,  OpName::Ddag, OpName::Ddag, OpName::Ddag_scalar, OpName::Ddag_scalar};
    if (!has_display(c, sys)) throw CatalogueError("no coordinate display for " + c.str());
    return build_operator(names[static_cast<int>(c.kind)], sys, SWParams{omega, 2, {}}, c.sigma, c.tau);
  }
  GenKind k;
  std::vector<HalfInt> idx;
  switch (c.kind) {
    case GenComp::J0: k = GenKind::J; idx = {3}; break;
    case GenComp::K0: k = GenKind::K; idx = {3}; break;
    case GenComp::Jp: k = GenKind::Jp; break;
    case GenComp::Jm: k = GenKind::Jm; break;
    case GenComp::Kp: k = GenKind::Kp; break;
    case GenComp::Km: k = GenKind::Km; break;
    case GenComp::Adag: k = GenKind::Adag_tensor; idx = {c.sigma, c.tau}; break;
    case GenComp::A: k = GenKind::A_tensor; idx = {c.sigma, c.tau}; break;
    case GenComp::T: k = GenKind::T_tensor; idx = {c.sigma, c.tau}; break;
    case GenComp::Ddag: k = GenKind::Ddag_tensor; idx = {c.sigma, c.tau}; break;
    case GenComp::Dlow: k = GenKind::Dlow_tensor; idx = {c.sigma, c.tau}; break;
    case GenComp::Ddag_scalar: k = GenKind::Ddag_scalar; break;
    default: k = GenKind::Dlow_scalar; break;
  }
  return cartesian_operator(k, idx, sys, 2, omega);
}

}  // namespace swalg
