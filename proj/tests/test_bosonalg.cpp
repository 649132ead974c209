#include <catch_amalgamated.hpp>

#include <Eigen/Sparse>
#include <complex>
#include <random>

#include "swalg/relations.hpp"

using namespace swalg;

namespace {

using C = std::complex<double>;
using SpMat = Eigen::SparseMatrix<C>;

// Four modes truncated at occupation 5 each.
struct Fock {
  static constexpr int kCut = 6;
  int modes;
  int dim;
  std::vector<SpMat> up, down;

  explicit Fock(int m) : modes(m), dim(1) {
    for (int k = 0; k < m; ++k) dim *= kCut;
    for (int k = 0; k < m; ++k) {
      std::vector<Eigen::Triplet<C>> tu, td;
      for (int s = 0; s < dim; ++s) {
        int occ = occupation(s, k);
        if (occ + 1 < kCut) tu.emplace_back(s + stride(k), s, std::sqrt(occ + 1.0));
        if (occ > 0) td.emplace_back(s - stride(k), s, std::sqrt(double(occ)));
      }
      SpMat U(dim, dim), Dn(dim, dim);
      U.setFromTriplets(tu.begin(), tu.end());
      Dn.setFromTriplets(td.begin(), td.end());
      up.push_back(U);
      down.push_back(Dn);
    }
  }

  int stride(int k) const {
    int s = 1;
    for (int i = 0; i < k; ++i) s *= kCut;
    return s;
  }
  int occupation(int state, int k) const { return (state / stride(k)) % kCut; }
  int total(int state) const {
    int t = 0;
    for (int k = 0; k < modes; ++k) t += occupation(state, k);
    return t;
  }

  SpMat identity() const {
    SpMat I(dim, dim);
    I.setIdentity();
    return I;
  }

  SpMat matrix(const BosonPoly& p) const {
    SpMat out(dim, dim);
    for (const auto& [m, c] : p.terms()) {
      SpMat t = identity();
      // annihilators act first
      for (int k = 0; k < modes; ++k)
        for (int e = 0; e < m.ann[k]; ++e) t = SpMat(down[k] * t);
      for (int k = 0; k < modes; ++k)
        for (int e = 0; e < m.cre[k]; ++e) t = SpMat(up[k] * t);
      out += c.to_complex() * t;
    }
    return out;
  }

  SpMat word(const BosonWord& w) const {
    SpMat t = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = SpMat((it->dagger ? up : down)[it->mode - 1] * t);
    return t;
  }

  // Columns with at most three quanta, rows with every mode below the cutoff.
  double safe_diff(const SpMat& x, const SpMat& y) const {
    SpMat d = x - y;
    double worst = 0;
    for (int col = 0; col < d.outerSize(); ++col) {
      if (total(col) > 3) continue;
      for (SpMat::InnerIterator it(d, col); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
  }
};

BosonWord W(std::initializer_list<std::pair<int, bool>> letters) {
  BosonWord w;
  for (auto [m, d] : letters) w.push_back({m, d});
  return w;
}

}  // namespace

TEST_CASE("normal ordering uses the Weyl relation") {
  BosonAlgebra alg(2);
  WordPoly w1{4, {}};
  w1.add(W({{1, false}, {1, true}}), Surd(1));
  CHECK(normal_order(w1) == alg.ad(1) * alg.a(1) + alg.I());
  CHECK(normal_order(w1).str() == "(1)*I + (1)*a+1*a1");

  WordPoly w2{4, {}};
  w2.add(W({{1, true}, {2, false}}), Surd(1));
  CHECK(normal_order(w2) == alg.ad(1) * alg.a(2));

  WordPoly w3{4, {}};
  w3.add(W({{1, false}, {1, false}, {1, true}}), Surd(1));
  BosonPoly n3 = normal_order(w3);
  BosonPoly a11 = alg.a(1) * alg.a(1);
  CHECK(n3 == alg.ad(1) * a11 + Surd(2) * alg.a(1));
  Fock f(4);
  CHECK(f.safe_diff(f.matrix(n3), f.word(w3.terms[0].first)) < 1e-12);
}

TEST_CASE("normal_order is idempotent and linear") {
  BosonAlgebra alg(2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> mode(1, 4), coin(0, 1), len(1, 5);
  for (int t = 0; t < 50; ++t) {
    WordPoly a{4, {}}, b{4, {}}, sum{4, {}};
    BosonWord wa, wb;
    for (int k = len(rng); k > 0; --k) wa.push_back({mode(rng), coin(rng) == 1});
    for (int k = len(rng); k > 0; --k) wb.push_back({mode(rng), coin(rng) == 1});
    a.add(wa, Surd(Rational(1, 3)));
    b.add(wb, Surd::i());
    sum.add(wa, Surd(Rational(1, 3))).add(wb, Surd::i());
    BosonPoly na = normal_order(a), nb = normal_order(b);
    CHECK(normal_order(na) == na);
    CHECK(normal_order(sum) == na + nb);
    // the Wick product agrees with word concatenation
    WordPoly cat{4, {}};
    BosonWord wc = wa;
    wc.insert(wc.end(), wb.begin(), wb.end());
    cat.add(wc, Surd(Rational(1, 3)) * Surd::i());
    CHECK(normal_order(cat) == na * nb);
  }
}

TEST_CASE("commutator examples") {
  BosonAlgebra alg(2);
  CHECK(commutator(alg.E(1, 2), alg.E(2, 1)) == alg.E(1, 1) - alg.E(2, 2));
  BosonPoly A = alg.T(1, 3) + Surd::i() * alg.Ddag(2, 2);
  CHECK(commutator(A, A).is_zero());
  BosonPoly lhs = commutator(alg.Dlow(1, 2), alg.Ddag(1, 2));
  CHECK(lhs == alg.E(2, 2) + alg.E(1, 1));
  Fock f(4);
  SpMat d = f.matrix(alg.Dlow(1, 2)), dd = f.matrix(alg.Ddag(1, 2));
  CHECK(f.safe_diff(SpMat(d * dd - dd * d), f.matrix(lhs)) < 1e-12);
}

TEST_CASE("Casimir relation and tensor displays") {
  BosonAlgebra alg(2);
  CHECK(alg.hamiltonian_osc() - Surd(2) * alg.casimir1() == BosonPoly(4));
  CHECK((alg.hamiltonian_osc() - Surd(2) * alg.casimir1()).is_zero());
  Surd r = Surd::sqrt(Rational(1, 2));
  CHECK(alg.Adag(kHalf, kHalf) == -r * (alg.ad(1) + Surd::i() * alg.ad(2)));
  CHECK(alg.Adag(-kHalf, -kHalf) == r * (alg.ad(1) - Surd::i() * alg.ad(2)));
  CHECK(alg.Adag(kHalf, -kHalf) == r * (alg.ad(3) - Surd::i() * alg.ad(4)));
  BosonPoly scalar = alg.couple([&](HalfInt x, HalfInt y) { return alg.Adag(x, y); },
                                [&](HalfInt x, HalfInt y) { return alg.A(x, y); }, 0, 0, 0, 0);
  CHECK(scalar == Surd(Rational(1, 2)) * (alg.casimir1() - Surd(2) * alg.I()));
  CHECK_THROWS_AS(build_generator(GenKind::T_tensor, {1, 1}, 3), UnsupportedDimensionError);
  CHECK(build_generator(GenKind::Casimir1, {}, 3) == Surd(Rational(1, 2)) * BosonAlgebra(3).hamiltonian_osc());
}

TEST_CASE("adjoint bookkeeping") {
  BosonAlgebra alg(2);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CHECK(alg.E(m, n).adjoint() == alg.E(n, m));
      CHECK(alg.L(m, n).adjoint() == alg.L(m, n));
    }
  for (int s : {-1, 1})
    for (int t : {-1, 1}) {
      HalfInt sg = HalfInt::from_twice(s), tu = HalfInt::from_twice(t);
      CHECK(alg.A(sg, tu) == Surd(sign_power(HalfInt(1) - sg - tu)) * alg.Adag(-sg, -tu).adjoint());
      CHECK(alg.A(sg, tu).adjoint().adjoint() == alg.A(sg, tu));
    }
}

TEST_CASE("commutator is antisymmetric and satisfies Jacobi") {
  BosonAlgebra alg(2);
  std::vector<BosonPoly> gens;
  for (int m = 1; m <= 4; ++m) {
    gens.push_back(alg.ad(m));
    gens.push_back(alg.a(m));
    for (int n = m; n <= 4; ++n) {
      gens.push_back(alg.E(m, n));
      gens.push_back(alg.Ddag(m, n));
      gens.push_back(alg.Dlow(m, n));
      gens.push_back(alg.L(m, n));
    }
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const auto &x = gens[pick(rng)], &y = gens[pick(rng)], &z = gens[pick(rng)];
    CHECK(commutator(x, y) == -commutator(y, x));
    BosonPoly jac = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("full relation suite passes for D = 2 and D = 3") {
  for (int D : {2, 3}) {
    auto rep = verify_relations(D);
    for (const auto& c : rep.checks) {
      INFO(c.id << "\n lhs = " << c.lhs.str() << "\n rhs = " << c.rhs.str());
      CHECK(c.pass);
    }
    CHECK(rep.failures() == 0);
    CHECK(rep.checks.size() > 1000);
  }
}

TEST_CASE("a perturbed structure constant is caught exactly once") {
  for (std::string id : {"sp.D-Ddag[1,2,1,2]", "so.L-L[1,2,2,3]", "tensor.T.Jp[0,1]", "weyl.a-a[1,2]"}) {
    auto rep = verify_relations(2, id);
    REQUIRE(rep.failures() == 1);
    for (const auto& c : rep.checks)
      if (!c.pass) CHECK(c.id == id);
  }
}

TEST_CASE("every D = 2 commutation relation holds on the truncated Fock space") {
  Fock f(4);
  auto rep = verify_relations(2);
  std::size_t checked = 0;
  for (const auto& c : rep.checks) {
    if (c.left.is_zero() && c.right.is_zero()) {
      INFO(c.id);
      CHECK(f.safe_diff(f.matrix(c.lhs), f.matrix(c.rhs)) < 1e-10);
      continue;
    }
    SpMat x = f.matrix(c.left), y = f.matrix(c.right);
    INFO(c.id);
    CHECK(f.safe_diff(SpMat(x * y - y * x), f.matrix(c.rhs)) < 1e-10);
    ++checked;
  }
  CHECK(checked > 1000);
}
