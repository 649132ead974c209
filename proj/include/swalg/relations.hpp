#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swalg/bosonalg.hpp"

namespace swalg {

struct RelationCheck {
  std::string id;
  std::string family;
  bool pass = false;
  BosonPoly lhs;
  BosonPoly rhs;
  // Commutator operands when lhs = [left, right]; empty otherwise.
  BosonPoly left;
  BosonPoly right;
};

struct RelationReport {
  int D = 0;
  std::vector<RelationCheck> checks;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

namespace detail {

using Term = std::pair<Surd, BosonPoly>;

inline std::string idx(std::initializer_list<int> v) {
  std::string s = "[";
  bool first = true;
  for (int x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "]";
}

inline std::string hidx(std::initializer_list<HalfInt> v) {
  std::string s = "[";
  bool first = true;
  for (HalfInt x : v) {
    s += (first ? "" : ",") + x.str();
    first = false;
  }
  return s + "]";
}

class RelationRecorder {
 public:
  RelationRecorder(int modes, std::optional<std::string> perturb) : modes_(modes), perturb_(std::move(perturb)) {}

  // lhs against sum_k c_k P_k; a perturbed id gets its first structure constant raised by one.
  void expect(std::string id, std::string family, BosonPoly lhs, std::vector<Term> rhs_terms, BosonPoly left = {},
              BosonPoly right = {}) {
    if (perturb_ && *perturb_ == id) {
      if (rhs_terms.empty())
        rhs_terms.emplace_back(Surd(1), BosonPoly::identity(modes_));
      else
        rhs_terms.front().first += Surd(1);
    }
    BosonPoly rhs(modes_);
    for (const auto& [c, p] : rhs_terms) rhs += c * p;
    RelationCheck ck{std::move(id), std::move(family), lhs == rhs, std::move(lhs), std::move(rhs), std::move(left),
                     std::move(right)};
    report.checks.push_back(std::move(ck));
  }

  void commutes(std::string id, std::string family, const BosonPoly& x, const BosonPoly& y, std::vector<Term> rhs) {
    expect(std::move(id), std::move(family), commutator(x, y), std::move(rhs), x, y);
  }

  RelationReport report;

 private:
  int modes_;
  std::optional<std::string> perturb_;
};

inline int delta(int a, int b) { return a == b ? 1 : 0; }

inline void verify_dynamical(const BosonAlgebra& alg, RelationRecorder& rec) {
  int M = alg.modes();
  std::vector<std::vector<BosonPoly>> E(M + 1, std::vector<BosonPoly>(M + 1)), Eb = E, L = E, Dd = E, Dl = E;
  std::vector<BosonPoly> ad(M + 1), a(M + 1);
  for (int m = 1; m <= M; ++m) {
    ad[m] = alg.ad(m);
    a[m] = alg.a(m);
    for (int n = 1; n <= M; ++n) {
      E[m][n] = alg.E(m, n);
      Eb[m][n] = alg.Ebar(m, n);
      L[m][n] = alg.L(m, n);
      Dd[m][n] = alg.Ddag(m, n);
      Dl[m][n] = alg.Dlow(m, n);
    }
  }
  auto term = [](int coeff, const BosonPoly& p) { return Term{Surd(coeff), p}; };
  auto keep = [](std::vector<Term> v) {
    std::vector<Term> out;
    for (auto& t : v)
      if (!t.first.is_zero()) out.push_back(std::move(t));
    return out;
  };

  rec.expect("casimir", "casimir", alg.hamiltonian_osc(), {{Surd(2), alg.casimir1()}});

  for (int m = 1; m <= M; ++m)
    for (int n = 1; n <= M; ++n) {
      rec.commutes("weyl.a-ad" + idx({m, n}), "weyl", a[m], ad[n], keep({term(delta(m, n), alg.I())}));
      rec.commutes("weyl.a-a" + idx({m, n}), "weyl", a[m], a[n], {});
      rec.commutes("weyl.ad-ad" + idx({m, n}), "weyl", ad[m], ad[n], {});
      rec.expect("adjoint.E" + idx({m, n}), "adjoint", E[m][n].adjoint(), {term(1, E[n][m])});
      rec.expect("adjoint.Ebar" + idx({m, n}), "adjoint", Eb[m][n].adjoint(), {term(1, Eb[n][m])});
      rec.expect("adjoint.L" + idx({m, n}), "adjoint", L[m][n].adjoint(), {term(1, L[m][n])});
      rec.expect("antisym.L" + idx({m, n}), "adjoint", L[m][n], {term(-1, L[n][m])});
    }

  for (int m = 1; m <= M; ++m)
    for (int n = 1; n <= M; ++n)
      for (int mp = 1; mp <= M; ++mp)
        for (int np = 1; np <= M; ++np) {
          std::string ix = idx({m, n, mp, np});
          rec.commutes("u.E-E" + ix, "u", E[m][n], E[mp][np],
                       keep({term(delta(n, mp), E[m][np]), term(-delta(m, np), E[mp][n])}));
          rec.commutes("su.Ebar-Ebar" + ix, "su", Eb[m][n], Eb[mp][np],
                       keep({term(delta(n, mp), Eb[m][np]), term(-delta(m, np), Eb[mp][n])}));
          if (m < n && mp < np)
            rec.commutes("so.L-L" + ix, "so", L[m][n], L[mp][np],
                         keep({{Surd::i() * Surd(delta(m, mp)), L[n][np]},
                               {Surd::i() * Surd(-delta(m, np)), L[n][mp]},
                               {Surd::i() * Surd(-delta(n, mp)), L[m][np]},
                               {Surd::i() * Surd(delta(n, np)), L[m][mp]}}));
          if (mp <= np) {
            rec.commutes("sp.E-Ddag" + ix, "sp", E[m][n], Dd[mp][np],
                         keep({term(delta(n, mp), Dd[m][np]), term(delta(n, np), Dd[m][mp])}));
            rec.commutes("sp.E-D" + ix, "sp", E[m][n], Dl[mp][np],
                         keep({term(-delta(m, mp), Dl[n][np]), term(-delta(m, np), Dl[n][mp])}));
          }
          if (m <= n && mp <= np) {
            rec.commutes("sp.D-Ddag" + ix, "sp", Dl[m][n], Dd[mp][np],
                         keep({term(delta(m, mp), E[np][n]), term(delta(m, np), E[mp][n]),
                               term(delta(n, mp), E[np][m]), term(delta(n, np), E[mp][m])}));
            rec.commutes("sp.Ddag-Ddag" + ix, "sp", Dd[m][n], Dd[mp][np], {});
            rec.commutes("sp.D-D" + ix, "sp", Dl[m][n], Dl[mp][np], {});
          }
        }

  for (int m = 1; m <= M; ++m)
    for (int n = 1; n <= M; ++n)
      for (int mp = 1; mp <= M; ++mp) {
        std::string ix = idx({m, n, mp});
        rec.commutes("cross.E-ad" + ix, "cross", E[m][n], ad[mp], keep({term(delta(n, mp), ad[m])}));
        rec.commutes("cross.E-a" + ix, "cross", E[m][n], a[mp], keep({term(-delta(m, mp), a[n])}));
        if (m <= n) {
          rec.commutes("cross.D-ad" + ix, "cross", Dl[m][n], ad[mp],
                       keep({term(delta(m, mp), a[n]), term(delta(n, mp), a[m])}));
          rec.commutes("cross.Ddag-a" + ix, "cross", Dd[m][n], a[mp],
                       keep({term(-delta(m, mp), ad[n]), term(-delta(n, mp), ad[m])}));
          rec.commutes("cross.Ddag-ad" + ix, "cross", Dd[m][n], ad[mp], {});
          rec.commutes("cross.D-a" + ix, "cross", Dl[m][n], a[mp], {});
        }
      }
}

struct TensorFamily {
  std::string name;
  HalfInt s, t;
  std::function<BosonPoly(HalfInt, HalfInt)> comp;
};

inline void verify_d2(const BosonAlgebra& alg, RelationRecorder& rec) {
  BosonPoly Jc[4], Kc[4];
  for (int i = 1; i <= 3; ++i) {
    Jc[i] = alg.J(i);
    Kc[i] = alg.K(i);
  }
  auto eps = [](int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((i % 3) + 1 == j) ? 1 : -1;
  };
  for (int i = 1; i <= 3; ++i) {
    rec.expect("adjoint.J" + idx({i}), "adjoint", Jc[i].adjoint(), {{Surd(1), Jc[i]}});
    rec.expect("adjoint.K" + idx({i}), "adjoint", Kc[i].adjoint(), {{Surd(1), Kc[i]}});
    for (int j = 1; j <= 3; ++j) {
      std::vector<Term> rj, rk;
      for (int k = 1; k <= 3; ++k)
        if (eps(i, j, k)) {
          rj.emplace_back(Surd::i() * Surd(eps(i, j, k)), Jc[k]);
          rk.emplace_back(Surd::i() * Surd(eps(i, j, k)), Kc[k]);
        }
      rec.commutes("jk.J-J" + idx({i, j}), "jk", Jc[i], Jc[j], rj);
      rec.commutes("jk.K-K" + idx({i, j}), "jk", Kc[i], Kc[j], rk);
      rec.commutes("jk.J-K" + idx({i, j}), "jk", Jc[i], Kc[j], {});
    }
  }
  BosonPoly J0 = alg.J0(), Jp = alg.Jp(), Jm = alg.Jm(), K0 = alg.K0(), Kp = alg.Kp(), Km = alg.Km();
  rec.commutes("jk.J0-Jp", "jk", J0, Jp, {{Surd(1), Jp}});
  rec.commutes("jk.J0-Jm", "jk", J0, Jm, {{Surd(-1), Jm}});
  rec.commutes("jk.Jp-Jm", "jk", Jp, Jm, {{Surd(2), J0}});
  rec.commutes("jk.K0-Kp", "jk", K0, Kp, {{Surd(1), Kp}});
  rec.commutes("jk.K0-Km", "jk", K0, Km, {{Surd(-1), Km}});
  rec.commutes("jk.Kp-Km", "jk", Kp, Km, {{Surd(2), K0}});

  auto Ad = [&](HalfInt x, HalfInt y) { return alg.Adag(x, y); };
  auto An = [&](HalfInt x, HalfInt y) { return alg.A(x, y); };
  auto Tt = [&](HalfInt x, HalfInt y) { return alg.Ttensor(x, y); };
  auto Ddt = [&](HalfInt x, HalfInt y) { return alg.Ddag_tensor(x, y); };
  auto Dlt = [&](HalfInt x, HalfInt y) { return alg.Dlow_tensor(x, y); };
  BosonPoly calE = alg.casimir1(), Dsc = alg.Ddag_scalar(), Dlsc = alg.Dlow_scalar();
  std::vector<TensorFamily> fams = {
      {"Adag", kHalf, kHalf, Ad},
      {"A", kHalf, kHalf, An},
      {"T", 1, 1, Tt},
      {"Ddag", 1, 1, Ddt},
      {"D", 1, 1, Dlt},
      {"E", 0, 0, [&](HalfInt, HalfInt) { return calE; }},
      {"Ddag0", 0, 0, [&](HalfInt, HalfInt) { return Dsc; }},
      {"D0", 0, 0, [&](HalfInt, HalfInt) { return Dlsc; }},
  };
  auto ladder = [](HalfInt s, HalfInt sg, int dir) {
    // sqrt((s -+ sg)(s +- sg + 1))
    HalfInt ds = dir > 0 ? sg : -sg;
    Rational x = Rational((s - ds).twice(), 2) * Rational((s + ds + 1).twice(), 2);
    return Surd::sqrt(x);
  };
  for (const auto& f : fams)
    for (long long ts = -f.s.twice(); ts <= f.s.twice(); ts += 2)
      for (long long tt = -f.t.twice(); tt <= f.t.twice(); tt += 2) {
        HalfInt sg = HalfInt::from_twice(ts), tu = HalfInt::from_twice(tt);
        BosonPoly X = f.comp(sg, tu);
        std::string ix = hidx({sg, tu});
        std::string fam = "tensor";
        rec.commutes("tensor." + f.name + ".J0" + ix, fam, J0, X, {{Surd(Rational(sg.twice(), 2)), X}});
        rec.commutes("tensor." + f.name + ".K0" + ix, fam, K0, X, {{Surd(Rational(tu.twice(), 2)), X}});
        for (int dir : {1, -1}) {
          std::string d = dir > 0 ? "p" : "m";
          HalfInt s2 = sg + HalfInt(dir), t2 = tu + HalfInt(dir);
          std::vector<Term> rj, rk;
          if (abs(s2) <= f.s) rj.emplace_back(ladder(f.s, sg, dir), f.comp(s2, tu));
          if (abs(t2) <= f.t) rk.emplace_back(ladder(f.t, tu, dir), f.comp(sg, t2));
          rec.commutes("tensor." + f.name + ".J" + d + ix, fam, dir > 0 ? Jp : Jm, X, rj);
          rec.commutes("tensor." + f.name + ".K" + d + ix, fam, dir > 0 ? Kp : Km, X, rk);
        }
      }

  // Coupled forms against the Cartesian listings.
  Surd h(Rational(1, 2)), q(Rational(1, 4)), ir2 = Surd::sqrt(Rational(1, 2));
  Surd I = Surd::i();
  auto Tc = [&](int m, int n) { return alg.T(m, n); };
  auto Dc = [&](int m, int n) { return alg.Ddag(m, n); };
  std::string fam = "display";
  rec.expect("display.AxA00", fam, alg.couple(Ad, An, 0, 0, 0, 0), {{h, calE}, {Surd(-1), alg.I()}});
  rec.expect("display.Ddag-scalar", fam, Dsc, {{Surd(-2), alg.couple(Ad, Ad, 0, 0, 0, 0)}});
  rec.expect("display.J+1", fam, alg.couple(Ad, An, 1, 0, 1, 0), {{-ir2, Jp}});
  rec.expect("display.J-1", fam, alg.couple(Ad, An, 1, 0, -1, 0), {{ir2, Jm}});
  rec.expect("display.J0", fam, alg.couple(Ad, An, 1, 0, 0, 0), {{Surd(1), J0}});
  rec.expect("display.K+1", fam, alg.couple(Ad, An, 0, 1, 0, 1), {{-ir2, Kp}});
  rec.expect("display.K-1", fam, alg.couple(Ad, An, 0, 1, 0, -1), {{ir2, Km}});
  rec.expect("display.K0", fam, alg.couple(Ad, An, 0, 1, 0, 0), {{Surd(1), K0}});
  for (int sg : {1, -1}) {
    Surd s(sg);
    std::string ix = sg > 0 ? "+" : "-";
    rec.expect("display.T" + ix + "1" + ix + "1", fam, Tt(sg, sg),
               {{-q, Tc(1, 1)}, {-q * s * Surd(2) * I, Tc(1, 2)}, {q, Tc(2, 2)}});
    rec.expect("display.T" + ix + "10", fam, Tt(sg, 0),
               {{s * ir2 * h, Tc(1, 3)}, {-I * ir2 * h, Tc(1, 4)}, {I * ir2 * h, Tc(2, 3)}, {s * ir2 * h, Tc(2, 4)}});
    rec.expect("display.T" + ix + "1" + (sg > 0 ? "-" : "+") + "1", fam, Tt(sg, -sg),
               {{-q, Tc(3, 3)}, {q * s * Surd(2) * I, Tc(3, 4)}, {q, Tc(4, 4)}});
    rec.expect("display.T0" + ix + "1", fam, Tt(0, sg),
               {{s * ir2 * h, Tc(1, 3)}, {I * ir2 * h, Tc(1, 4)}, {I * ir2 * h, Tc(2, 3)}, {-s * ir2 * h, Tc(2, 4)}});
    rec.expect("display.Ddag" + ix + "1" + ix + "1", fam, Ddt(sg, sg),
               {{h, Dc(1, 1)}, {h * s * Surd(2) * I, Dc(1, 2)}, {-h, Dc(2, 2)}});
    rec.expect("display.Ddag" + ix + "10", fam, Ddt(sg, 0),
               {{-s * ir2, Dc(1, 3)}, {I * ir2, Dc(1, 4)}, {-I * ir2, Dc(2, 3)}, {-s * ir2, Dc(2, 4)}});
    rec.expect("display.Ddag" + ix + "1" + (sg > 0 ? "-" : "+") + "1", fam, Ddt(sg, -sg),
               {{h, Dc(3, 3)}, {-h * s * Surd(2) * I, Dc(3, 4)}, {-h, Dc(4, 4)}});
    rec.expect("display.Ddag0" + ix + "1", fam, Ddt(0, sg),
               {{-s * ir2, Dc(1, 3)}, {-I * ir2, Dc(1, 4)}, {-I * ir2, Dc(2, 3)}, {s * ir2, Dc(2, 4)}});
  }
  rec.expect("display.T00", fam, Tt(0, 0), {{h, Tc(1, 1)}, {h, Tc(2, 2)}});
  rec.expect("display.T00-alt", fam, Tt(0, 0), {{-h, Tc(3, 3)}, {-h, Tc(4, 4)}});
  rec.expect("display.Ddag00", fam, Ddt(0, 0), {{-h, Dc(1, 1)}, {-h, Dc(2, 2)}, {h, Dc(3, 3)}, {h, Dc(4, 4)}});
  rec.expect("display.Ddag-scalar-sum", fam, Dsc, {{Surd(1), Dc(1, 1)}, {Surd(1), Dc(2, 2)}, {Surd(1), Dc(3, 3)}, {Surd(1), Dc(4, 4)}});
  rec.expect("display.D-scalar", fam, Dlsc, {{Surd(1), Dsc.adjoint()}});
}

}  // namespace detail

// Every commutation relation of the oscillator algebras, checked exactly.
// With perturb set, the relation of that id has one structure constant raised by one.
inline RelationReport verify_relations(int D, std::optional<std::string> perturb = std::nullopt) {
  if (D < 2 || D > 3) throw std::invalid_argument("verify_relations: D must be 2 or 3");
  BosonAlgebra alg(D);
  detail::RelationRecorder rec(alg.modes(), std::move(perturb));
  rec.report.D = D;
  detail::verify_dynamical(alg, rec);
  if (D == 2) detail::verify_d2(alg, rec);
  return std::move(rec.report);
}

}  // namespace swalg
