#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "swalg/bosonalg.hpp"
#include "swalg/diffops/operator.hpp"
#include "swalg/swreduce.hpp"

namespace swalg {

class CatalogueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OpName { H_osc, H_sw, H_k, J0, Jp, Jm, K0, Kp, Km, Adag, A, T, Ddag, Ddag_scalar };

inline OpName parse_op_name(const std::string& s) {
  static const std::pair<const char*, OpName> table[] = {
      {"H-osc", OpName::H_osc}, {"H-sw", OpName::H_sw}, {"H-k", OpName::H_k},   {"J0", OpName::J0},
      {"Jp", OpName::Jp},       {"Jm", OpName::Jm},     {"K0", OpName::K0},     {"Kp", OpName::Kp},
      {"Km", OpName::Km},       {"Adag", OpName::Adag}, {"A", OpName::A},       {"T", OpName::T},
      {"Ddag", OpName::Ddag},   {"Ddag-scalar", OpName::Ddag_scalar}};
  for (const auto& [k, v] : table)
    if (s == k) return v;
  throw CatalogueError("unknown operator name: " + s);
}

inline std::string to_string(OpName n) {
  switch (n) {
    case OpName::H_osc: return "H-osc";
    case OpName::H_sw: return "H-sw";
    case OpName::H_k: return "H-k";
    case OpName::J0: return "J0";
    case OpName::Jp: return "Jp";
    case OpName::Jm: return "Jm";
    case OpName::K0: return "K0";
    case OpName::Kp: return "Kp";
    case OpName::Km: return "Km";
    case OpName::Adag: return "Adag";
    case OpName::A: return "A";
    case OpName::T: return "T";
    case OpName::Ddag: return "Ddag";
    case OpName::Ddag_scalar: return "Ddag-scalar";
  }
  return "?";
}

namespace detail {

using cd = std::complex<double>;
inline constexpr cd I1{0.0, 1.0};

inline CoefMonomial rpow(int k) { return CoefMonomial::radius(k); }
inline CoefMonomial tr(int nu, int s, int c) { return CoefMonomial::trig(nu, s, c); }
inline CoefMonomial ex(int nu, int k) { return CoefMonomial::expi(nu, k); }

inline MultiIndex none() { return MultiIndex::none(); }
inline MultiIndex d(int i) { return MultiIndex::d(i); }
inline MultiIndex d(int i, int j) { return MultiIndex::d(i, j); }

// 1 / (sin^2 angle_1 ... sin^2 angle_{D-nu} cos^2 angle_{D-nu+1}) weighting lambda_nu, cos absent for nu = 1.
inline CoefMonomial lambda_weight(int D, int nu) {
  CoefMonomial m;
  for (int k = 1; k <= D - nu; ++k) m = m * tr(k, -2, 0);
  if (nu > 1) m = m * tr(D - nu + 1, 0, -2);
  return m;
}

inline DiffOperator hamiltonian_osc(int D) {
  DiffOperator h(CoordSystem::osc, D);
  h.add_term(-1.0, {}, d(0, 0));
  h.add_term(-(2.0 * D - 1), rpow(-1), d(0));
  CoefMonomial pre = rpow(-2);
  for (int nu = 1; nu <= D - 1; ++nu) {
    if (nu > 1) pre = pre * tr(nu - 1, -2, 0);
    h.add_term(-1.0, pre, d(nu, nu));
    h.add_term(-(2.0 * D - 2 * nu - 1), pre * tr(nu, -1, 1), d(nu));
    h.add_term(1.0, pre * tr(nu, 1, -1), d(nu));
  }
  for (int nu = 1; nu <= D; ++nu) h.add_term(-1.0, rpow(-2) * lambda_weight(D, nu), d(D + nu - 1, D + nu - 1));
  h.add_term(1.0, rpow(2), none());
  return h;
}

// The angular and radial part shared by H and H^(k).
inline DiffOperator hamiltonian_sw_base(int D, double omega) {
  DiffOperator h(CoordSystem::sw, D);
  h.add_term(-1.0, {}, d(0, 0));
  h.add_term(-(D - 1.0), rpow(-1), d(0));
  CoefMonomial pre = rpow(-2);
  for (int nu = 1; nu <= D - 1; ++nu) {
    if (nu > 1) pre = pre * tr(nu - 1, -2, 0);
    h.add_term(-1.0, pre, d(nu, nu));
    h.add_term(-(D - nu - 1.0), pre * tr(nu, -1, 1), d(nu));
  }
  h.add_term(omega * omega, rpow(2), none());
  return h;
}

inline DiffOperator hamiltonian_sw(int D, double omega) {
  DiffOperator h = hamiltonian_sw_base(D, omega);
  for (int nu = 1; nu <= D; ++nu) {
    CoefMonomial w = rpow(-2) * lambda_weight(D, nu);
    h.add_term(-1.0, w, d(D + nu - 1, D + nu - 1));
    h.add_term(-0.25, w, none());
  }
  return h;
}

inline DiffOperator hamiltonian_k(const SWParams& params) {
  int D = params.D;
  if (static_cast<int>(params.k.size()) != D) throw CatalogueError("H-k needs D values of k");
  DiffOperator h = hamiltonian_sw_base(D, params.omega);
  for (int nu = 1; nu <= D; ++nu)
    h.add_term(params.k[nu - 1] * params.k[nu - 1], rpow(-2) * lambda_weight(D, nu), none());
  return h;
}

// D = 2 coordinates: 0 radius, 1 angle, 2 lambda_1, 3 lambda_2.
inline DiffOperator jk_zero(CoordSystem s, int sign) {
  DiffOperator op(s, 2);
  op.add_term(0.5 * I1, {}, d(2));
  op.add_term(0.5 * I1 * double(sign), {}, d(3));
  return op;
}

// J+- (sign of e = -+) in the oscillator picture.
inline DiffOperator j_ladder_osc(int pm) {
  DiffOperator op(CoordSystem::osc, 2);
  CoefMonomial e = ex(1, -pm) * ex(2, pm);
  op.add_term(0.5 * pm, e, d(1));
  op.add_term(-0.5 * I1, e * tr(1, -1, 1), d(2));
  op.add_term(-0.5 * I1, e * tr(1, 1, -1), d(3));
  return op;
}

inline DiffOperator k_ladder_osc(int pm) {
  DiffOperator op(CoordSystem::osc, 2);
  CoefMonomial e = ex(1, -pm) * ex(2, -pm);
  op.add_term(-0.5 * pm, e, d(1));
  op.add_term(0.5 * I1, e * tr(1, -1, 1), d(2));
  op.add_term(-0.5 * I1, e * tr(1, 1, -1), d(3));
  return op;
}

inline DiffOperator j_ladder_sw(int pm) {
  DiffOperator op(CoordSystem::sw, 2);
  CoefMonomial e = ex(1, -pm) * ex(2, pm);
  CoefMonomial cot = tr(1, -1, 1), tan = tr(1, 1, -1);
  op.add_term(0.5 * pm, e, d(1));
  op.add_term(-0.5 * I1, e * cot, d(2));
  op.add_term(-0.25 * pm, e * cot, none());
  op.add_term(-0.5 * I1, e * tan, d(3));
  op.add_term(0.25 * pm, e * tan, none());
  return op;
}

inline DiffOperator k_ladder_sw(int pm) {
  DiffOperator op(CoordSystem::sw, 2);
  CoefMonomial e = ex(1, -pm) * ex(2, -pm);
  CoefMonomial cot = tr(1, -1, 1), tan = tr(1, 1, -1);
  op.add_term(-0.5 * pm, e, d(1));
  op.add_term(0.5 * I1, e * cot, d(2));
  op.add_term(0.25 * pm, e * cot, none());
  op.add_term(-0.5 * I1, e * tan, d(3));
  op.add_term(-0.25 * pm, e * tan, none());
  return op;
}

// A-dagger_{+-1/2,+-1/2}; omega = 1 with the osc tag gives the oscillator display.
inline DiffOperator adag_diag(CoordSystem s, int pm, double omega) {
  DiffOperator op(s, 2);
  CoefMonomial e = ex(1, -pm);
  double w = s == CoordSystem::sw ? 1.0 / std::sqrt(omega) : 1.0, v = s == CoordSystem::sw ? std::sqrt(omega) : 1.0;
  op.add_term(0.5 * I1 * w, e * tr(1, 1, 0), d(0));
  op.add_term(0.5 * I1 * w, e * rpow(-1) * tr(1, 0, 1), d(1));
  op.add_term(0.5 * pm * w, e * rpow(-1) * tr(1, -1, 0), d(2));
  if (s == CoordSystem::sw) op.add_term(-0.25 * I1 * w, e * rpow(-1) * tr(1, -1, 0), none());
  op.add_term(-0.5 * I1 * v, e * rpow(1) * tr(1, 1, 0), none());
  return op;
}

// Second-order part shared by T_{+1,+1} and D-dagger_{+1,+1}, without the 1/(4 omega) prefactor.
inline void second_order_pp(DiffOperator& op, const CoefMonomial& e) {
  op.add_term(-1.0, e * tr(1, 2, 0), d(0, 0));
  op.add_term(-2.0, e * rpow(-1) * tr(1, 1, 1), d(0, 1));
  op.add_term(2.0 * I1, e * rpow(-1), d(0, 2));
  op.add_term(-1.0, e * rpow(-2) * tr(1, 0, 2), d(1, 1));
  op.add_term(2.0 * I1, e * rpow(-2) * tr(1, -1, 1), d(1, 2));
  op.add_term(1.0, e * rpow(-2) * tr(1, -2, 0), d(2, 2));
}

inline DiffOperator t_pp_sw(double omega) {
  DiffOperator op(CoordSystem::sw, 2);
  CoefMonomial e = ex(1, -2);
  second_order_pp(op, e);
  op.add_term(1.0, e * rpow(-1), d(0));
  op.add_term(1.0, e * rpow(-1) * tr(1, 2, 0), d(0));
  op.add_term(2.0, e * rpow(-2) * tr(1, -1, 1), d(1));
  op.add_term(2.0, e * rpow(-2) * tr(1, 1, 1), d(1));
  op.add_term(-3.0 * I1, e * rpow(-2) * tr(1, -2, 0), d(2));
  op.add_term(-1.25, e * rpow(-2) * tr(1, -2, 0), none());
  op.add_term(omega * omega, e * rpow(2) * tr(1, 2, 0), none());
  return op * cd(1.0 / (4.0 * omega));
}

inline DiffOperator ddag_pp_sw(double omega) {
  DiffOperator op(CoordSystem::sw, 2);
  CoefMonomial e = ex(1, -2);
  second_order_pp(op, e);
  op.add_term(1.0, e * rpow(-1), d(0));
  op.add_term(1.0, e * rpow(-1) * tr(1, 2, 0), d(0));
  op.add_term(2.0 * omega, e * rpow(1) * tr(1, 2, 0), d(0));
  op.add_term(2.0, e * rpow(-2) * tr(1, -1, 1), d(1));
  op.add_term(2.0, e * rpow(-2) * tr(1, 1, 1), d(1));
  op.add_term(2.0 * omega, e * tr(1, 1, 1), d(1));
  op.add_term(-3.0 * I1, e * rpow(-2) * tr(1, -2, 0), d(2));
  op.add_term(-2.0 * omega * I1, e, d(2));
  op.add_term(-1.25, e * rpow(-2) * tr(1, -2, 0), none());
  op.add_term(-omega * omega, e * rpow(2) * tr(1, 2, 0), none());
  op.add_term(-omega, e, none());
  return op * cd(1.0 / (4.0 * omega));
}

inline DiffOperator ddag_scalar_sw(double omega) {
  DiffOperator op = hamiltonian_sw(2, omega) * cd(-1.0);
  op.add_term(-2.0 * omega, rpow(1), d(0));
  op.add_term(2.0 * omega * omega, rpow(2), none());
  op.add_term(-2.0 * omega, {}, none());
  return op * cd(1.0 / (2.0 * omega));
}

inline bool is_diag_half(HalfInt s, HalfInt t) { return s == t && abs(s) == kHalf; }

}  // namespace detail

// Operators transcribed from their coordinate displays. Adag and A take the
// component (sigma, tau); only the displayed components are available.
inline DiffOperator build_operator(OpName name, CoordSystem sys, const std::optional<SWParams>& params = std::nullopt,
                                   HalfInt sigma = 0, HalfInt tau = 0) {
  using namespace detail;
  bool sw = sys == CoordSystem::sw;
  double omega = params ? params->omega : 1.0;
  int D = params ? params->D : 2;
  if (params) params->validate();
  auto unsupported = [&]() {
    return CatalogueError("no coordinate display for " + to_string(name) + " in the " + to_string(sys) + " picture");
  };
  bool d2_only = name != OpName::H_osc && name != OpName::H_sw && name != OpName::H_k;
  if (d2_only && D != 2) throw CatalogueError(to_string(name) + " is only displayed for D = 2");
  switch (name) {
    case OpName::H_osc:
      if (sw) throw unsupported();
      return hamiltonian_osc(D);
    case OpName::H_sw:
      if (!sw) throw unsupported();
      return hamiltonian_sw(D, omega);
    case OpName::H_k:
      if (!sw || !params) throw unsupported();
      return hamiltonian_k(*params);
    case OpName::J0: return jk_zero(sys, -1);
    case OpName::K0: return jk_zero(sys, +1);
    case OpName::Jp: return sw ? j_ladder_sw(+1) : j_ladder_osc(+1);
    case OpName::Jm: return sw ? j_ladder_sw(-1) : j_ladder_osc(-1);
    case OpName::Kp: return sw ? k_ladder_sw(+1) : k_ladder_osc(+1);
    case OpName::Km: return sw ? k_ladder_sw(-1) : k_ladder_osc(-1);
    case OpName::Adag:
      if (!is_diag_half(sigma, tau)) throw unsupported();
      return adag_diag(sys, sigma.twice() > 0 ? 1 : -1, omega);
    case OpName::A: {
      // A_{s,t} = (-1)^{1-s-t} (A-dagger_{-s,-t})^dagger
      if (!is_diag_half(sigma, tau)) throw unsupported();
      DiffOperator ad = adag_diag(sys, sigma.twice() > 0 ? -1 : 1, omega);
      return adjoint(ad) * cd(sign_power(HalfInt(1) - sigma - tau));
    }
    case OpName::T:
      if (!sw || sigma != HalfInt(1) || tau != HalfInt(1)) throw unsupported();
      return t_pp_sw(omega);
    case OpName::Ddag:
      if (!sw || sigma != HalfInt(1) || tau != HalfInt(1)) throw unsupported();
      return ddag_pp_sw(omega);
    case OpName::Ddag_scalar:
      if (!sw) throw unsupported();
      return ddag_scalar_sw(omega);
  }
  throw unsupported();
}

// Cartesian route: X_mu and d/dX_mu in the oscillator coordinates, then the
// boson operators alpha-dagger = (X - dX)/sqrt2 and alpha = (X + dX)/sqrt2.
namespace detail {

// Coefficient monomial of rho_nu = X_{2nu-1} / sin lambda_nu without R.
inline CoefMonomial rho_trig(int D, int nu) {
  CoefMonomial m;
  for (int k = 1; k <= D - nu; ++k) m = m * tr(k, 1, 0);
  if (nu > 1) m = m * tr(D - nu + 1, 0, 1);
  return m;
}

inline CoefExpr sin_lambda(int nu) {
  CoefExpr e;
  accumulate(e, ex(nu, 1), -0.5 * I1);
  accumulate(e, ex(nu, -1), 0.5 * I1);
  return e;
}

inline CoefExpr cos_lambda(int nu) {
  CoefExpr e;
  accumulate(e, ex(nu, 1), 0.5);
  accumulate(e, ex(nu, -1), 0.5);
  return e;
}

// d^{(nu,1)} as a first-order operator.
inline DiffOperator partial_nu1(int D, int nu) {
  DiffOperator op(CoordSystem::osc, D);
  op.add_term(1.0, rho_trig(D, nu), d(0));
  int top = D - nu;  // angles theta_1..theta_top carry sines in rho
  for (int rho = 1; rho <= top; ++rho) {
    CoefMonomial m = rpow(-1);
    for (int k = 1; k < rho; ++k) m = m * tr(k, -1, 0);
    m = m * tr(rho, 0, 1);
    for (int k = rho + 1; k <= top; ++k) m = m * tr(k, 1, 0);
    if (nu > 1) m = m * tr(top + 1, 0, 1);
    op.add_term(1.0, m, d(rho));
  }
  if (nu > 1) {
    CoefMonomial m = rpow(-1);
    for (int k = 1; k <= top; ++k) m = m * tr(k, -1, 0);
    m = m * tr(top + 1, 1, 0);
    op.add_term(-1.0, m, d(top + 1));
  }
  return op;
}

// d^{(nu,2)} = (1/rho_nu) d/dlambda_nu.
inline DiffOperator partial_nu2(int D, int nu) {
  DiffOperator op(CoordSystem::osc, D);
  op.add_term(1.0, rpow(-1) * rho_trig(D, nu).inverse(), d(D + nu - 1));
  return op;
}

}  // namespace detail

inline CoefExpr cartesian_coordinate(int mu, int D) {
  using namespace detail;
  int nu = (mu + 1) / 2;
  CoefExpr rho = monomial_expr(rpow(1) * rho_trig(D, nu));
  return rho * (mu % 2 ? sin_lambda(nu) : cos_lambda(nu));
}

inline DiffOperator cartesian_partial(int mu, int D) {
  using namespace detail;
  if (mu < 1 || mu > 2 * D) throw UsageError("cartesian_partial: index out of range");
  int nu = (mu + 1) / 2;
  auto mult = [&](const CoefExpr& f) { return DiffOperator::multiplication(CoordSystem::osc, D, f); };
  DiffOperator p1 = partial_nu1(D, nu), p2 = partial_nu2(D, nu);
  if (mu % 2) return mult(sin_lambda(nu)) * p1 + mult(cos_lambda(nu)) * p2;
  return mult(cos_lambda(nu)) * p1 - mult(sin_lambda(nu)) * p2;
}

inline DiffOperator boson_operator(int mu, bool dagger, int D) {
  DiffOperator x = DiffOperator::multiplication(CoordSystem::osc, D, cartesian_coordinate(mu, D));
  DiffOperator p = cartesian_partial(mu, D);
  return (dagger ? x - p : x + p) * std::complex<double>(1.0 / std::sqrt(2.0));
}

// Normal-ordered polynomial of degree at most two as an oscillator-picture operator.
inline DiffOperator realize(const BosonPoly& p, int D) {
  if (p.modes() != 2 * D) throw UsageError("realize: mode count does not match D");
  std::vector<DiffOperator> up, down;
  for (int mu = 1; mu <= 2 * D; ++mu) {
    up.push_back(boson_operator(mu, true, D));
    down.push_back(boson_operator(mu, false, D));
  }
  DiffOperator out(CoordSystem::osc, D);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > 2) throw ContractViolation("realize: boson monomial of degree above 2");
    DiffOperator t = DiffOperator::identity(CoordSystem::osc, D);
    for (int k = 0; k < 2 * D; ++k)
      for (int e = 0; e < m.cre[k]; ++e) t = t * up[k];
    for (int k = 0; k < 2 * D; ++k)
      for (int e = 0; e < m.ann[k]; ++e) t = t * down[k];
    out += t * c.to_complex();
  }
  return out;
}

// Generator from its boson definition, in either picture.
inline DiffOperator cartesian_operator(GenKind kind, const std::vector<HalfInt>& idx, CoordSystem sys, int D = 2,
                                       double omega = 1.0) {
  DiffOperator op = realize(build_generator(kind, idx, D), D);
  return sys == CoordSystem::sw ? to_sw_picture(op, omega) : op;
}

}  // namespace swalg
