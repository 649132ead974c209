// Evaluate a reduced state, its energy and its norm under dv.
#include <cstdio>

#include "swalg/diffops/catalogue.hpp"
#include "swalg/quadrature.hpp"

using namespace swalg;

int main() {
  double omega = 2.0;
  OscLabel l{2, 1, {1}, {2, -1}};  // D, n_r, n_1, (p_1, p_2)
  SWParams params = params_for(l, omega);
  WaveEval psi = sw_wavefunction(l, params);

  std::printf("label %s  k = (%.6f, %.6f)  E = %g\n", l.str().c_str(), params.k[0], params.k[1],
              sw_energy(l.n_r, label_j(l), params));

  std::vector<double> pt{0.7, 0.4, 0.0, 0.0};  // r, phi, lambda_1, lambda_2
  DiffOperator h = build_operator(OpName::H_k, CoordSystem::sw, params);
  std::printf("psi = %.10f  (H psi)/psi = %.10f\n", psi(pt).real(), (apply(h, psi, pt) / psi(pt)).real());

  auto n = inner_product(psi, psi, Measure::dv, RuleSet(), omega);
  std::printf("norm = %.12f (est. error %.1e)\n", n.value.real(), n.est_error);
}
