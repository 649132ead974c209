#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "swalg/diffops/matrix_elements.hpp"

namespace swalg {

struct OracleOptions {
  CoordSystem picture = CoordSystem::osc;
  double omega = 1.0;
  int nr_max = 2;
  HalfInt j_max = HalfInt::from_twice(3);   // oscillator kets
  int n_max = 2;                            // sw kets
  HalfInt ab_max = HalfInt::from_twice(7);  // sw kets
  QuadOrders orders{};
  double tol = 1e-7;
  double zero_tol = 1e-9;
  double completeness_tol = 1e-6;
  bool boson_route = true;
  bool completeness = true;
  bool parallel = true;
};

struct MERow {
  std::string op, source, bra, ket;
  std::complex<double> numeric, predicted;
  double diff = 0.0;
  bool pass = true;
};

struct CompletenessRow {
  std::string op, source, ket;
  double sum = 0.0, norm = 0.0, rel = 0.0;
  bool pass = true;
};

struct PatternRow {
  std::string op, bra, ket;
  int da2 = 0, db2 = 0;  // doubled (a, b) shift
  double magnitude = 0.0;
};

struct OracleReport {
  CoordSystem picture = CoordSystem::osc;
  std::vector<MERow> rows;  // rows with a nonzero numeric or predicted value
  std::vector<CompletenessRow> completeness;
  std::vector<PatternRow> pattern_violations;
  long long checks = 0;
  long long failures = 0;
  long long pattern_checks = 0;
  double max_error = 0.0;
  double max_zero = 0.0;  // largest numeric value where nothing is predicted
  double max_completeness = 0.0;
  bool pass() const { return failures == 0 && pattern_violations.empty(); }
};

namespace detail {

inline std::string label_text(const OscBarLabel& o, CoordSystem sys) {
  return sys == CoordSystem::osc ? o.str() : to_sw_label(o).str();
}

struct OracleState {
  OscBarLabel label;
  WaveEval psi;
  NodeTable table;
  std::vector<long long> freq;  // doubled lambda frequencies
};

inline WaveEval oracle_wave(const OscBarLabel& o, CoordSystem sys, double omega) {
  if (sys == CoordSystem::osc) return osc_bar_wavefunction(o);
  SWLabel s = to_sw_label(o);
  if (s.a.twice() >= 1 && s.b.twice() >= 1) return sw_bar_wavefunction(s, omega);
  return sw_bar_from_osc(o, omega);
}

inline std::vector<long long> doubled_freqs(const WaveEval& psi) {
  std::vector<long long> f;
  for (int k = 0; k < psi.dim(); ++k) f.push_back(std::llround(2 * psi.frequency(k)));
  return f;
}

}  // namespace detail

inline std::vector<OscBarLabel> oracle_kets(const OracleOptions& opt) {
  std::vector<OscBarLabel> out;
  if (opt.picture == CoordSystem::osc) {
    for (int n_r = 0; n_r <= opt.nr_max; ++n_r)
      for (HalfInt j = 0; j <= opt.j_max; j += kHalf)
        for (HalfInt m = -j; m <= j; m += 1)
          for (HalfInt mp = -j; mp <= j; mp += 1) out.push_back({n_r, j, m, mp});
    return out;
  }
  for (int n_r = 0; n_r <= opt.nr_max; ++n_r)
    for (int n = 0; n <= opt.n_max; ++n)
      for (HalfInt a = kHalf; a <= opt.ab_max; a += 1)
        for (HalfInt b = kHalf; b <= opt.ab_max; b += 1) out.push_back(to_osc_bar(SWLabel{n_r, n, a, b}));
  return out;
}

// Components checked in a picture, each with the source of its coordinate form.
inline std::vector<std::pair<Component, OpSource>> oracle_components(const OracleOptions& opt) {
  std::vector<std::pair<Component, OpSource>> out;
  for (const auto& c : all_components()) {
    if (has_display(c, opt.picture)) out.push_back({c, OpSource::display});
    else if (opt.boson_route) out.push_back({c, OpSource::boson});
  }
  return out;
}

inline OracleReport run_oracle(const OracleOptions& opt,
                               std::vector<std::pair<Component, OpSource>> comps = {}) {
  if (comps.empty()) comps = oracle_components(opt);
  CoordSystem sys = opt.picture;
  MatrixElementEngine eng(sys, 2, RuleSet(opt.orders), opt.omega);
  auto kets = oracle_kets(opt);

  // every state of the levels a ket can reach
  int top = 0;
  for (const auto& k : kets) top = std::max<int>(top, 2 * k.n_r + static_cast<int>(k.j.twice()));
  std::vector<detail::OracleState> states;
  std::map<OscBarLabel, std::size_t> index;
  std::map<std::pair<int, std::vector<long long>>, std::vector<std::size_t>> by_level_freq;
  for (int N = 0; N <= top + 2; ++N)
    for (const auto& o : enumerate_bar_level(N)) {
      WaveEval psi = detail::oracle_wave(o, sys, opt.omega);
      auto f = detail::doubled_freqs(psi);
      index[o] = states.size();
      by_level_freq[{N, f}].push_back(states.size());
      states.push_back({o, psi, eng.table(psi), f});
    }

  auto run_component = [&](const Component& c, OpSource src) {
    OracleReport part;
    DiffOperator op = component_operator(c, sys, src, opt.omega);
    std::vector<std::vector<long long>> phases;
    for (const auto& [key, coef] : op.terms()) {
      std::vector<long long> ph;
      for (int k = 0; k < 2; ++k) ph.push_back(2LL * key.first.phase[k]);
      if (std::find(phases.begin(), phases.end(), ph) == phases.end()) phases.push_back(ph);
    }
    for (const auto& ko : kets) {
      const auto& ket = states[index.at(ko)];
      int N = 2 * ko.n_r + static_cast<int>(ko.j.twice()) + c.level_shift();
      std::map<OscBarLabel, std::complex<double>> predicted;
      if (sys == CoordSystem::osc) {
        for (const auto& p : predict_osc(c, ko)) predicted[p.target] += p.coefficient;
      } else {
        for (const auto& p : predict_sw(c, to_sw_label(ko))) predicted[to_osc_bar(p.target)] += p.coefficient;
      }
      std::map<OscBarLabel, std::complex<double>> numeric;
      if (N >= 0)
        for (const auto& ph : phases) {
          std::vector<long long> f{ket.freq[0] + ph[0], ket.freq[1] + ph[1]};
          auto it = by_level_freq.find({N, f});
          if (it == by_level_freq.end()) continue;
          for (std::size_t bi : it->second) {
            const auto& bra = states[bi];
            if (numeric.count(bra.label)) continue;
            numeric[bra.label] = eng.element(bra.psi, bra.table, op, ket.psi, ket.table);
          }
        }
      for (const auto& [t, v] : predicted)
        if (!numeric.count(t)) numeric[t] = 0.0;
      double sum = 0.0;
      std::string kt = detail::label_text(ko, sys);
      for (const auto& [bl, num] : numeric) {
        auto pit = predicted.find(bl);
        std::complex<double> pred = pit == predicted.end() ? 0.0 : pit->second;
        double diff = std::abs(num - pred);
        bool ok = diff <= opt.tol * (1.0 + std::abs(pred));
        ++part.checks;
        if (!ok) ++part.failures;
        part.max_error = std::max(part.max_error, diff);
        if (pred == 0.0) part.max_zero = std::max(part.max_zero, std::abs(num));
        sum += std::norm(num);
        if (std::abs(num) > 1e-12 || pred != 0.0 || !ok)
          part.rows.push_back({c.str(), to_string(src), detail::label_text(bl, sys), kt, num, pred, diff, ok});
        if (sys == CoordSystem::sw && std::abs(num) > opt.zero_tol) {
          ++part.pattern_checks;
          SWLabel sb = to_sw_label(bl), sk = to_sw_label(ko);
          int da2 = static_cast<int>((sb.a - sk.a).twice()), db2 = static_cast<int>((sb.b - sk.b).twice());
          if (!allowed_shift(c, da2, db2))
            part.pattern_violations.push_back({c.str(), sb.str(), sk.str(), da2, db2, std::abs(num)});
        }
      }
      if (opt.completeness) {
        double norm = eng.norm_sq(op, ket.psi, ket.table);
        // relative, with unit floor: a vanishing image leaves cancellation noise in norm
        double rel = std::abs(sum - norm) / std::max(norm, 1.0);
        bool ok = rel <= opt.completeness_tol;
        ++part.checks;
        if (!ok) ++part.failures;
        part.max_completeness = std::max(part.max_completeness, rel);
        part.completeness.push_back({c.str(), to_string(src), kt, sum, norm, rel, ok});
      }
    }
    return part;
  };

  std::vector<OracleReport> parts(comps.size());
  if (opt.parallel) {
    std::vector<std::future<OracleReport>> fut;
    for (const auto& [c, s] : comps) fut.push_back(std::async(std::launch::async, run_component, c, s));
    for (std::size_t i = 0; i < fut.size(); ++i) parts[i] = fut[i].get();
  } else {
    for (std::size_t i = 0; i < comps.size(); ++i) parts[i] = run_component(comps[i].first, comps[i].second);
  }

  OracleReport rep;
  rep.picture = sys;
  for (auto& p : parts) {
    rep.rows.insert(rep.rows.end(), p.rows.begin(), p.rows.end());
    rep.completeness.insert(rep.completeness.end(), p.completeness.begin(), p.completeness.end());
    rep.pattern_violations.insert(rep.pattern_violations.end(), p.pattern_violations.begin(), p.pattern_violations.end());
    rep.checks += p.checks;
    rep.failures += p.failures;
    rep.pattern_checks += p.pattern_checks;
    rep.max_error = std::max(rep.max_error, p.max_error);
    rep.max_zero = std::max(rep.max_zero, p.max_zero);
    rep.max_completeness = std::max(rep.max_completeness, p.max_completeness);
  }
  return rep;
}

}  // namespace swalg
