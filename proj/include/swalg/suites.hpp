#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swalg/diffops/oracle.hpp"
#include "swalg/relations.hpp"

namespace swalg {

struct SuiteConfig {
  int D = 2;
  double omega = 1.0;
  std::optional<int> n_max;  // each suite has its own default
  QuadOrders orders{};
  std::optional<double> tol;
  unsigned seed = 0;
  HalfInt max_j = HalfInt::from_twice(3);
  int points = 100;  // random points per state for pointwise checks
};

// Aggregate of one family of assertions.
struct CheckFamily {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  double max_error = 0.0;
  double tol = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::deque<CheckFamily> families;  // stable references
  std::vector<std::string> failures;  // first few failing assertions, for the report

  long long checks() const {
    long long n = 0;
    for (const auto& f : families) n += f.checks;
    return n;
  }
  long long failure_count() const {
    long long n = 0;
    for (const auto& f : families) n += f.failures;
    return n;
  }
  double max_error() const {
    double e = 0.0;
    for (const auto& f : families) e = std::max(e, f.max_error);
    return e;
  }
  bool pass() const { return failure_count() == 0; }

  CheckFamily& family(const std::string& name, double tol) {
    for (auto& f : families)
      if (f.name == name) return f;
    families.push_back({name, 0, 0, 0.0, tol});
    return families.back();
  }
  // error <= tol passes; exact checks record error 0 or 1.
  void record(const std::string& fam, double tol, double error, const std::string& what) {
    CheckFamily& f = family(fam, tol);
    ++f.checks;
    f.max_error = std::max(f.max_error, error);
    if (!(error <= tol)) {
      ++f.failures;
      if (failures.size() < 50) failures.push_back(fam + ": " + what);
    }
  }
};

namespace detail {

inline std::vector<double> suite_point(std::mt19937& rng, int D, double omega) {
  std::uniform_real_distribution<double> ur(0.1, 2.5 / std::sqrt(omega)), ua(0.05, std::numbers::pi / 2 - 0.05),
      ul(0.0, 2 * std::numbers::pi);
  std::vector<double> pt{ur(rng)};
  for (int k = 1; k < D; ++k) pt.push_back(ua(rng));
  for (int k = 0; k < D; ++k) pt.push_back(ul(rng));
  return pt;
}

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void need_dim(int D, int lo, int hi, const char* suite) {
  if (D < lo || D > hi)
    throw UsageError(std::string(suite) + ": D must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct SpectrumRow {
  int N = 0;
  double energy = 0.0;
  long long degeneracy = 0;
};

inline std::vector<SpectrumRow> spectrum_rows(const SuiteConfig& cfg) {
  std::vector<SpectrumRow> out;
  for (int N = 0; N <= cfg.n_max.value_or(4); ++N)
    out.push_back({N, 2.0 * (N + cfg.D), static_cast<long long>(enumerate_level(N, cfg.D).size())});
  return out;
}

// Enumerated level sizes against the binomial count.
inline SuiteReport suite_spectrum(const SuiteConfig& cfg) {
  detail::need_dim(cfg.D, 2, kMaxD, "spectrum");
  SuiteReport rep{"spectrum"};
  for (const auto& r : spectrum_rows(cfg)) {
    long long want = osc_degeneracy(r.N, cfg.D);
    rep.record("degeneracy", 0.0, r.degeneracy == want ? 0.0 : 1.0,
               "N=" + std::to_string(r.N) + " enumerated " + std::to_string(r.degeneracy) + " expected " + std::to_string(want));
    for (const auto& l : enumerate_level(r.N, cfg.D))
      rep.record("energy", 0.0, osc_energy(l) == r.energy ? 0.0 : 1.0, l.str());
  }
  return rep;
}

inline SuiteReport suite_enumerate(const SuiteConfig& cfg) {
  detail::need_dim(cfg.D, 2, kMaxD, "enumerate");
  SuiteReport rep{"enumerate"};
  for (int N = 0; N <= cfg.n_max.value_or(2); ++N)
    for (const auto& l : enumerate_level(N, cfg.D)) {
      bool ok = true;
      try {
        DerivedLabels d = derived_labels(l);
        ok = d.N == N;
      } catch (const std::logic_error&) {
        ok = false;
      }
      rep.record("derived-labels", 0.0, ok ? 0.0 : 1.0, l.str());
    }
  return rep;
}

// Exact commutation relations and the Casimir identity.
inline SuiteReport suite_algebra(const SuiteConfig& cfg) {
  detail::need_dim(cfg.D, 2, 3, "verify-algebra");
  SuiteReport rep{"verify-algebra"};
  RelationReport rel = verify_relations(cfg.D);
  for (const auto& c : rel.checks) rep.record(c.family, 0.0, c.pass ? 0.0 : 1.0, c.id);
  BosonAlgebra alg(cfg.D);
  rep.record("casimir", 0.0, (alg.hamiltonian_osc() - Surd(2) * alg.casimir1()).is_zero() ? 0.0 : 1.0,
             "H - 2 sum E_mumu");
  return rep;
}

// Separation constants: closed form against the recursion on random labels.
inline void check_separation(SuiteReport& rep, unsigned seed, int count = 1000) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> uD(2, kMaxD), un(0, 4), up(-5, 5), unr(0, 5);
  for (int t = 0; t < count; ++t) {
    OscLabel l;
    l.D = uD(rng);
    l.n_r = unr(rng);
    for (int k = 0; k < l.D - 1; ++k) l.n.push_back(un(rng));
    for (int k = 0; k < l.D; ++k) l.p.push_back(up(rng));
    SeparationData a = separation_closed_form(l), b = separation_by_recursion(l);
    long long twoj = label_j(l).twice();
    rep.record("separation-recursion", 0.0, a == b ? 0.0 : 1.0, l.str());
    rep.record("separation-C1", 0.0, a.C[0] == twoj * (twoj + 2LL * l.D - 2) ? 0.0 : 1.0, l.str());
  }
}

// Gram matrix and eigen-residuals of the oscillator states.
inline SuiteReport suite_basis(const SuiteConfig& cfg) {
  detail::need_dim(cfg.D, 2, 3, "verify-basis");
  double tol = cfg.tol.value_or(1e-8);
  int nmax = cfg.n_max.value_or(cfg.D == 2 ? 4 : 2);
  SuiteReport rep{"verify-basis"};
  RuleSet rules(cfg.orders);
  std::vector<OscLabel> all;
  for (int N = 0; N <= nmax; ++N)
    for (const auto& l : enumerate_level(N, cfg.D)) all.push_back(l);
  std::vector<WaveEval> psi;
  for (const auto& l : all) psi.push_back(osc_wavefunction(l));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t k = i; k < all.size(); ++k) {
      auto v = inner_product(psi[i], psi[k], Measure::dV, rules).value;
      double err = std::abs(v - (i == k ? 1.0 : 0.0));
      rep.record("gram", tol, err, "<" + all[i].str() + "|" + all[k].str() + "> = " + detail::num(v.real()));
    }
  DiffOperator h = build_operator(OpName::H_osc, CoordSystem::osc, SWParams{1.0, cfg.D, {}});
  std::mt19937 rng(cfg.seed);
  for (std::size_t i = 0; i < all.size(); ++i) {
    double E = osc_energy(all[i]), worst = 0.0, peak = 0.0;
    for (int t = 0; t < cfg.points; ++t) {
      auto pt = detail::suite_point(rng, cfg.D, 1.0);
      peak = std::max(peak, std::abs(psi[i](pt)));
      worst = std::max(worst, std::abs(apply(h, psi[i], pt) - E * psi[i](pt)));
    }
    rep.record("eigen-residual", tol, worst / std::max(peak, 1e-300), all[i].str());
  }
  check_separation(rep, cfg.seed);
  return rep;
}

// The reduction: closed-form states against the transformed oscillator
// states, their norms under dv, and the eigen-residual of the reduced Hamiltonian.
inline SuiteReport suite_reduction(const SuiteConfig& cfg) {
  detail::need_dim(cfg.D, 2, 3, "verify-reduction");
  double tol = cfg.tol.value_or(1e-8);
  double point_tol = std::min(tol, 1e-10);
  int nmax = cfg.n_max.value_or(cfg.D == 2 ? 4 : 3);
  double omega = cfg.omega;
  SuiteReport rep{"verify-reduction"};
  RuleSet rules(cfg.orders);
  std::mt19937 rng(cfg.seed);
  for (int N = 0; N <= nmax; ++N)
    for (const auto& l : enumerate_level(N, cfg.D)) {
      if (std::count(l.p.begin(), l.p.end(), 0) > 0) continue;
      SWParams params = params_for(l, omega);
      WaveEval closed = sw_wavefunction(l, params), mapped = transform_to_sw(osc_wavefunction(l), omega);
      DiffOperator hk = build_operator(OpName::H_k, CoordSystem::sw, params);
      double E = 2 * omega * (2 * l.n_r + label_j(l).twice() + cfg.D);
      rep.record("energy", 0.0, sw_energy(l.n_r, label_j(l), params) == E ? 0.0 : 1.0, l.str());
      double worst = 0.0, res = 0.0, peak = 0.0;
      for (int t = 0; t < cfg.points; ++t) {
        auto pt = detail::suite_point(rng, cfg.D, omega);
        std::complex<double> v = closed(pt);
        worst = std::max(worst, std::abs(v - mapped(pt)));
        peak = std::max(peak, std::abs(v));
        res = std::max(res, std::abs(apply(hk, closed, pt) - E * v));
      }
      rep.record("pointwise", point_tol, worst, l.str());
      rep.record("eigen-residual", tol, res / std::max(peak, 1e-300), l.str());
      auto n = inner_product(closed, closed, Measure::dv, rules, omega).value;
      rep.record("norm", tol, std::abs(n - 1.0), l.str() + " norm " + detail::num(n.real()));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Matrix elements

inline OracleOptions oracle_options(const SuiteConfig& cfg, CoordSystem sys) {
  OracleOptions o;
  o.picture = sys;
  o.omega = cfg.omega;
  o.orders = cfg.orders;
  o.tol = cfg.tol.value_or(1e-7);
  o.j_max = cfg.max_j;
  int nm = cfg.n_max.value_or(2);
  o.nr_max = nm;
  o.n_max = nm;
  return o;
}

inline void fold_oracle(SuiteReport& rep, const OracleReport& o, const OracleOptions& opt) {
  std::string pic = opt.picture == CoordSystem::osc ? "osc" : "sw";
  CheckFamily& f = rep.family(pic + "-elements", opt.tol);
  CheckFamily& c = rep.family(pic + "-completeness", opt.completeness_tol);
  for (const auto& r : o.rows) {
    if (r.pass) continue;
    if (rep.failures.size() < 50)
      rep.failures.push_back(pic + " " + r.op + " <" + r.bra + "|" + r.ket + "> numeric " + detail::num(r.numeric.real()) + "," +
                             detail::num(r.numeric.imag()) + " predicted " + detail::num(r.predicted.real()) + "," +
                             detail::num(r.predicted.imag()));
  }
  long long cfail = 0;
  for (const auto& r : o.completeness) {
    ++c.checks;
    c.max_error = std::max(c.max_error, r.rel);
    if (!r.pass) {
      ++cfail;
      if (rep.failures.size() < 50) rep.failures.push_back(pic + " completeness " + r.op + " " + r.ket);
    }
  }
  c.failures += cfail;
  f.checks += o.checks - static_cast<long long>(o.completeness.size());
  f.failures += o.failures - cfail;
  f.max_error = std::max(f.max_error, o.max_error);
  if (opt.picture == CoordSystem::sw) {
    CheckFamily& p = rep.family("sw-transition-pattern", opt.zero_tol);
    p.checks += o.pattern_checks;
    p.failures += static_cast<long long>(o.pattern_violations.size());
    for (const auto& v : o.pattern_violations) {
      p.max_error = std::max(p.max_error, v.magnitude);
      if (rep.failures.size() < 50) rep.failures.push_back("pattern " + v.op + " " + v.bra + " <- " + v.ket);
    }
  }
}

// Quadrature matrix elements against the closed forms, both pictures.
// The sw grid takes ket labels n, n_r <= n-max and a, b <= 7/2.
inline SuiteReport suite_matrix_elements(const SuiteConfig& cfg, std::vector<OracleReport>* raw = nullptr) {
  if (cfg.D != 2) throw UsageError("verify-matrix-elements: coordinate generators exist for D = 2 only");
  SuiteReport rep{"verify-matrix-elements"};
  for (CoordSystem sys : {CoordSystem::osc, CoordSystem::sw}) {
    OracleOptions opt = oracle_options(cfg, sys);
    OracleReport o = run_oracle(opt);
    fold_oracle(rep, o, opt);
    if (raw) raw->push_back(std::move(o));
  }
  return rep;
}

// su(2) ladder actions on the oscillator states, from both the displays and
// the boson definitions.
inline SuiteReport suite_conventions(const SuiteConfig& cfg) {
  SuiteReport rep{"conventions"};
  OracleOptions opt = oracle_options(cfg, CoordSystem::osc);
  opt.tol = cfg.tol.value_or(1e-8);
  std::vector<std::pair<Component, OpSource>> comps;
  for (GenComp k : {GenComp::J0, GenComp::Jp, GenComp::Jm, GenComp::K0, GenComp::Kp, GenComp::Km})
    for (OpSource s : {OpSource::display, OpSource::boson}) comps.push_back({Component{k}, s});
  fold_oracle(rep, run_oracle(opt, comps), opt);
  return rep;
}

}  // namespace swalg
