// A few matrix elements in the sw picture: quadrature against the closed forms.
#include <cstdio>

#include "swalg/diffops/matrix_elements.hpp"

using namespace swalg;

int main() {
  double omega = 1.0;
  HalfInt h = kHalf;
  SWLabel ket{1, 1, 3 * h, 5 * h};  // n_r, n, a, b
  MatrixElementEngine eng(CoordSystem::sw, 2, RuleSet(), omega);
  WaveEval k = sw_bar_wavefunction(ket, omega);
  NodeTable tk = eng.table(k);

  for (Component c : {Component{GenComp::Jp}, Component{GenComp::Km}, Component{GenComp::T, 1, 1},
                      Component{GenComp::Ddag_scalar}}) {
    DiffOperator op = component_operator(c, CoordSystem::sw, OpSource::display, omega);
    for (const auto& p : predict_sw(c, ket)) {
      if (p.target.a.twice() < 1 || p.target.b.twice() < 1) continue;
      WaveEval b = sw_bar_wavefunction(p.target, omega);
      auto num = eng.element(b, eng.table(b), op, k, tk);
      std::printf("<%s|%s|%s>  numeric %+.12f%+.12fi  closed form %+.12f%+.12fi\n", p.target.str().c_str(),
                  c.str().c_str(), ket.str().c_str(), num.real(), num.imag(), p.coefficient.real(), p.coefficient.imag());
    }
  }
}
