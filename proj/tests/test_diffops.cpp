#include <catch_amalgamated.hpp>

#include <random>

#include "swalg/diffops/catalogue.hpp"

using namespace swalg;
using cd = std::complex<double>;

namespace {

std::vector<double> random_point(std::mt19937& rng, int D, double omega) {
  std::uniform_real_distribution<double> ur(0.2, 2.2 / std::sqrt(omega)), ua(0.1, std::numbers::pi / 2 - 0.1),
      ul(0.0, 2 * std::numbers::pi);
  std::vector<double> pt{ur(rng)};
  for (int k = 1; k < D; ++k) pt.push_back(ua(rng));
  for (int k = 0; k < D; ++k) pt.push_back(ul(rng));
  return pt;
}

std::vector<WaveEval> sample_states(CoordSystem sys, double omega, int Nmax = 4) {
  std::vector<WaveEval> out;
  for (int N = 0; N <= Nmax; ++N)
    for (const auto& o : enumerate_bar_level(N))
      out.push_back(sys == CoordSystem::osc ? osc_bar_wavefunction(o) : sw_bar_from_osc(o, omega));
  return out;
}

// max |a psi - b psi| / (1 + |a psi|) over states and random points.
double op_distance(const DiffOperator& a, const DiffOperator& b, const std::vector<WaveEval>& states, double omega,
                   int points = 6, unsigned seed = 1) {
  std::mt19937 rng(seed);
  double worst = 0;
  for (const auto& psi : states)
    for (int t = 0; t < points; ++t) {
      auto pt = random_point(rng, psi.dim(), omega);
      cd x = apply(a, psi, pt), y = apply(b, psi, pt);
      worst = std::max(worst, std::abs(x - y) / (1.0 + std::abs(x)));
    }
  return worst;
}

SWParams sw2(double omega) { return SWParams{omega, 2, {}}; }

}  // namespace

TEST_CASE("trivial operators") {
  WaveEval psi = osc_bar_wavefunction({1, 1, 0, 1});
  std::vector<double> pt{0.8, 0.6, 0.3, 1.2};
  CHECK(apply(DiffOperator(CoordSystem::osc, 2), psi, pt) == cd(0.0));
  CHECK(std::abs(apply(DiffOperator::identity(CoordSystem::osc, 2), psi, pt) - psi(pt)) < 1e-15);
  CHECK_THROWS_AS(apply(DiffOperator::identity(CoordSystem::sw, 2), psi, pt), UsageError);
  DiffOperator third(CoordSystem::osc, 2);
  MultiIndex m = MultiIndex::d(0, 1);
  m.n[2] = 1;
  CHECK_THROWS_AS(third.add_term(1.0, {}, m), ContractViolation);
}

TEST_CASE("oscillator Hamiltonian annihilates E - H") {
  std::mt19937 rng(3);
  for (int D : {2, 3}) {
    DiffOperator h = build_operator(OpName::H_osc, CoordSystem::osc, SWParams{1.0, D, {}});
    for (int N = 0; N <= (D == 2 ? 4 : 3); ++N)
      for (const auto& l : enumerate_level(N, D)) {
        WaveEval psi = osc_wavefunction(l);
        double E = osc_energy(l), worst = 0, peak = 0;
        for (int t = 0; t < 20; ++t) {
          auto pt = random_point(rng, D, 1.0);
          peak = std::max(peak, std::abs(psi(pt)));
          worst = std::max(worst, std::abs(apply(h, psi, pt) - E * psi(pt)));
        }
        INFO(l.str());
        CHECK(worst <= 1e-8 * std::max(peak, 1e-3));
      }
  }
}

TEST_CASE("sw Hamiltonian annihilates E - H") {
  std::mt19937 rng(4);
  for (double omega : {1.0, 2.0})
    for (int D : {2, 3}) {
      SWParams p{omega, D, {}};
      DiffOperator h = build_operator(OpName::H_sw, CoordSystem::sw, p);
      for (int N = 0; N <= 4; ++N)
        for (const auto& l : enumerate_level(N, D)) {
          WaveEval psi = transform_to_sw(osc_wavefunction(l), omega);
          double E = sw_energy(l.n_r, label_j(l), p), worst = 0, peak = 0;
          for (int t = 0; t < 10; ++t) {
            auto pt = random_point(rng, D, omega);
            peak = std::max(peak, std::abs(psi(pt)));
            worst = std::max(worst, std::abs(apply(h, psi, pt) - E * psi(pt)));
          }
          INFO(l.str() << " omega " << omega);
          CHECK(worst <= 1e-8 * std::max(peak, 1e-3));
        }
    }
}

TEST_CASE("sw Hamiltonian is the transformed oscillator Hamiltonian") {
  for (double omega : {1.0, 2.0}) {
    DiffOperator h = build_operator(OpName::H_sw, CoordSystem::sw, sw2(omega));
    DiffOperator t = to_sw_picture(build_operator(OpName::H_osc, CoordSystem::osc), omega) * cd(omega);
    CHECK(op_distance(h, t, sample_states(CoordSystem::sw, omega, 3), omega) < 1e-10);
  }
  SWParams p3{1.5, 3, {}};
  DiffOperator h3 = build_operator(OpName::H_sw, CoordSystem::sw, p3);
  DiffOperator t3 = to_sw_picture(build_operator(OpName::H_osc, CoordSystem::osc, SWParams{1.0, 3, {}}), 1.5) * cd(1.5);
  std::vector<WaveEval> s3;
  for (const auto& l : enumerate_level(2, 3)) s3.push_back(transform_to_sw(osc_wavefunction(l), 1.5));
  CHECK(op_distance(h3, t3, s3, 1.5) < 1e-10);
}

TEST_CASE("reduced Hamiltonian operator matches the projected check") {
  OscLabel l{2, 1, {1}, {2, 1}};
  SWParams p = params_for(l, 2.0);
  DiffOperator hk = build_operator(OpName::H_k, CoordSystem::sw, p);
  WaveEval psi = sw_wavefunction(l, p);
  std::mt19937 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto pt = random_point(rng, 2, 2.0);
    CHECK(std::abs(apply(hk, psi, pt) - apply_hk(psi, p, pt)) < 1e-9 * (1 + std::abs(apply_hk(psi, p, pt))));
    CHECK(std::abs(apply(hk, psi, pt) - sw_energy(1, label_j(l), p) * psi(pt)) < 1e-8);
  }
  CHECK_THROWS_AS(build_operator(OpName::H_k, CoordSystem::sw), CatalogueError);
}

TEST_CASE("J and K act as su(2) generators on the bar states") {
  std::mt19937 rng(8);
  DiffOperator j0 = build_operator(OpName::J0, CoordSystem::osc), k0 = build_operator(OpName::K0, CoordSystem::osc);
  DiffOperator jp = build_operator(OpName::Jp, CoordSystem::osc), jm = build_operator(OpName::Jm, CoordSystem::osc);
  DiffOperator kp = build_operator(OpName::Kp, CoordSystem::osc), km = build_operator(OpName::Km, CoordSystem::osc);
  for (int N = 0; N <= 4; ++N)
    for (const auto& o : enumerate_bar_level(N)) {
      WaveEval psi = osc_bar_wavefunction(o);
      double j = o.j.to_double(), m = o.m.to_double(), mp = o.mp.to_double();
      for (int t = 0; t < 5; ++t) {
        auto pt = random_point(rng, 2, 1.0);
        INFO(o.str());
        CHECK(std::abs(apply(j0, psi, pt) - m * psi(pt)) < 1e-10);
        CHECK(std::abs(apply(k0, psi, pt) - mp * psi(pt)) < 1e-10);
        for (int s : {1, -1}) {
          auto shifted = [&](HalfInt dm, HalfInt dmp) -> cd {
            OscBarLabel q{o.n_r, o.j, o.m + dm, o.mp + dmp};
            if (abs(q.m) > q.j || abs(q.mp) > q.j) return 0.0;
            return osc_bar_wavefunction(q)(pt);
          };
          cd expect_j = std::sqrt((j - s * m) * (j + s * m + 1)) * shifted(HalfInt(s), 0);
          cd expect_k = std::sqrt((j - s * mp) * (j + s * mp + 1)) * shifted(0, HalfInt(s));
          CHECK(std::abs(apply(s > 0 ? jp : jm, psi, pt) - expect_j) < 1e-9);
          CHECK(std::abs(apply(s > 0 ? kp : km, psi, pt) - expect_k) < 1e-9);
        }
      }
    }
}

TEST_CASE("function-level commutation relations in both pictures") {
  for (CoordSystem sys : {CoordSystem::osc, CoordSystem::sw}) {
    double omega = sys == CoordSystem::sw ? 2.0 : 1.0;
    auto op = [&](OpName n) { return build_operator(n, sys, sw2(omega)); };
    auto states = sample_states(sys, omega, 4);
    DiffOperator zero(sys, 2);
    CHECK(op_distance(commutator(op(OpName::Jp), op(OpName::Jm)), op(OpName::J0) * cd(2.0), states, omega) < 1e-8);
    CHECK(op_distance(commutator(op(OpName::Kp), op(OpName::Km)), op(OpName::K0) * cd(2.0), states, omega) < 1e-8);
    CHECK(op_distance(commutator(op(OpName::J0), op(OpName::Jp)), op(OpName::Jp), states, omega) < 1e-8);
    for (OpName a : {OpName::J0, OpName::Jp, OpName::Jm})
      for (OpName b : {OpName::K0, OpName::Kp, OpName::Km})
        CHECK(op_distance(commutator(op(a), op(b)), zero, states, omega) < 1e-8);
  }
}

TEST_CASE("displayed operators agree with their boson definitions") {
  struct Case {
    OpName name;
    GenKind kind;
    std::vector<HalfInt> idx;
  };
  HalfInt h = kHalf;
  std::vector<Case> osc_cases{{OpName::J0, GenKind::J, {3}},
                              {OpName::Jp, GenKind::Jp, {}},
                              {OpName::Jm, GenKind::Jm, {}},
                              {OpName::K0, GenKind::K, {3}},
                              {OpName::Kp, GenKind::Kp, {}},
                              {OpName::Km, GenKind::Km, {}},
                              {OpName::Adag, GenKind::Adag_tensor, {h, h}},
                              {OpName::Adag, GenKind::Adag_tensor, {-h, -h}},
                              {OpName::A, GenKind::A_tensor, {h, h}},
                              {OpName::A, GenKind::A_tensor, {-h, -h}}};
  auto states = sample_states(CoordSystem::osc, 1.0, 3);
  for (const auto& c : osc_cases) {
    INFO(to_string(c.name));
    HalfInt s = c.idx.empty() ? 0 : c.idx[0], t = c.idx.empty() ? 0 : c.idx[1];
    DiffOperator shown = build_operator(c.name, CoordSystem::osc, std::nullopt, s, t);
    CHECK(op_distance(shown, cartesian_operator(c.kind, c.idx, CoordSystem::osc), states, 1.0) < 1e-10);
  }
  std::vector<Case> sw_cases = osc_cases;
  sw_cases.push_back({OpName::T, GenKind::T_tensor, {1, 1}});
  sw_cases.push_back({OpName::Ddag, GenKind::Ddag_tensor, {1, 1}});
  sw_cases.push_back({OpName::Ddag_scalar, GenKind::Ddag_scalar, {}});
  for (double omega : {1.0, 2.0}) {
    auto sws = sample_states(CoordSystem::sw, omega, 3);
    for (const auto& c : sw_cases) {
      INFO(to_string(c.name) << " omega " << omega);
      HalfInt s = c.idx.empty() ? 0 : c.idx[0], t = c.idx.empty() ? 0 : c.idx[1];
      DiffOperator shown = build_operator(c.name, CoordSystem::sw, sw2(omega), s, t);
      CHECK(op_distance(shown, cartesian_operator(c.kind, c.idx, CoordSystem::sw, 2, omega), sws, omega) < 1e-9);
    }
  }
}

TEST_CASE("Ddag scalar display equals its Hamiltonian form") {
  for (double omega : {1.0, 2.0}) {
    DiffOperator shown = build_operator(OpName::Ddag_scalar, CoordSystem::sw, sw2(omega));
    DiffOperator h = build_operator(OpName::H_sw, CoordSystem::sw, sw2(omega));
    DiffOperator rhs = h * cd(-1.0);
    rhs.add_term(-2.0 * omega, CoefMonomial::radius(1), MultiIndex::d(0));
    rhs.add_term(2.0 * omega * omega, CoefMonomial::radius(2), MultiIndex::none());
    rhs.add_term(-2.0 * omega, {}, MultiIndex::none());
    rhs = rhs * cd(1.0 / (2.0 * omega));
    std::vector<WaveEval> five;
    for (auto o : {OscBarLabel{0, 0, 0, 0}, OscBarLabel{1, kHalf, kHalf, -kHalf}, OscBarLabel{0, 1, 0, 1},
                   OscBarLabel{2, 1, -1, 0}, OscBarLabel{1, HalfInt::from_twice(3), kHalf, kHalf}})
      five.push_back(sw_bar_from_osc(o, omega));
    CHECK(op_distance(shown, rhs, five, omega, 10) < 1e-9);
  }
}

TEST_CASE("catalogue rejects undisplayed operators") {
  CHECK_THROWS_AS(build_operator(OpName::T, CoordSystem::osc, std::nullopt, 1, 1), CatalogueError);
  CHECK_THROWS_AS(build_operator(OpName::T, CoordSystem::sw, sw2(1.0), 0, 1), CatalogueError);
  CHECK_THROWS_AS(build_operator(OpName::Adag, CoordSystem::osc, std::nullopt, kHalf, -kHalf), CatalogueError);
  CHECK_THROWS_AS(build_operator(OpName::H_sw, CoordSystem::osc), CatalogueError);
  CHECK_THROWS_AS(build_operator(OpName::H_osc, CoordSystem::sw), CatalogueError);
  CHECK_THROWS_AS(build_operator(OpName::Jp, CoordSystem::osc, SWParams{1.0, 3, {}}), CatalogueError);
  CHECK_THROWS_AS(parse_op_name("Q"), CatalogueError);
  CHECK(parse_op_name("Ddag-scalar") == OpName::Ddag_scalar);
}

TEST_CASE("Cartesian derivatives realize the coordinate map") {
  // d/dX_mu applied to X_nu is delta_{mu nu}
  for (int D : {2, 3}) {
    std::mt19937 rng(D);
    for (int mu = 1; mu <= 2 * D; ++mu)
      for (int nu = 1; nu <= 2 * D; ++nu) {
        DiffOperator x = DiffOperator::multiplication(CoordSystem::osc, D, cartesian_coordinate(nu, D));
        DiffOperator c = cartesian_partial(mu, D) * x - x * cartesian_partial(mu, D);
        WaveEval one(CoordSystem::osc, D, 1.0, [](double) { return Jet{1, 0, 0}; },
                     std::vector<WaveEval::Factor>(D - 1, [](double) { return Jet{1, 0, 0}; }), std::vector<double>(D, 0.0));
        auto pt = random_point(rng, D, 1.0);
        auto X = cartesian_from_hyper(pt[0], {pt.begin() + 1, pt.begin() + D}, {pt.begin() + D, pt.end()}, D);
        CHECK(std::abs(eval(cartesian_coordinate(nu, D), pt, D) - X[nu - 1]) < 1e-12);
        CHECK(std::abs(apply(c, one, pt) - (mu == nu ? 1.0 : 0.0)) < 1e-12);
      }
  }
}
