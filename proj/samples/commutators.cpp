// Exact commutators in the boson realization.
#include <iostream>

#include "swalg/bosonalg.hpp"

using namespace swalg;

int main() {
  BosonAlgebra alg(2);
  BosonPoly t = build_generator(GenKind::T_tensor, {1, 1}, 2);
  BosonPoly d = build_generator(GenKind::Ddag_tensor, {-1, -1}, 2);
  std::cout << "[T(1,1), Ddag(-1,-1)] = " << commutator(t, d).str() << "\n";
  std::cout << "H - 2 C1 is zero: " << std::boolalpha << (alg.hamiltonian_osc() - Surd(2) * alg.casimir1()).is_zero() << "\n";
}
