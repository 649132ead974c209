#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalg/specfun.hpp"

namespace swalg {

inline constexpr int kMaxD = 6;
inline constexpr int kMaxCoords = 2 * kMaxD;

// Coordinate tuple layout for both systems: index 0 is the radius (R or r),
// 1..D-1 the angles (theta or phi), D..2D-1 the phases lambda_1..lambda_D.
enum class CoordSystem { osc, sw };

inline std::string to_string(CoordSystem s) { return s == CoordSystem::osc ? "osc-RthetaLambda" : "sw-rphiLambda"; }

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MultiIndex {
  std::array<std::uint8_t, kMaxCoords> n{};

  int total() const {
    int t = 0;
    for (auto v : n) t += v;
    return t;
  }
  static MultiIndex none() { return {}; }
  static MultiIndex d(int i) {
    MultiIndex m;
    m.n[i] += 1;
    return m;
  }
  static MultiIndex d(int i, int j) {
    MultiIndex m;
    m.n[i] += 1;
    m.n[j] += 1;
    return m;
  }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

using CJet = std::array<std::complex<double>, 3>;

// Derivatives through total order 2 of a separable function at one point.
class DerivTable {
 public:
  DerivTable(std::complex<double> scale, std::vector<CJet> jets) : scale_(scale), jets_(std::move(jets)) {}

  std::complex<double> partial(const MultiIndex& a) const {
    if (a.total() > 2) throw ContractViolation("derivative order above 2 requested");
    std::complex<double> v = scale_;
    for (std::size_t c = 0; c < jets_.size(); ++c) v *= jets_[c][a.n[c]];
    for (std::size_t c = jets_.size(); c < a.n.size(); ++c)
      if (a.n[c]) throw ContractViolation("derivative along a missing coordinate");
    return v;
  }
  std::complex<double> value() const { return partial(MultiIndex::none()); }

 private:
  std::complex<double> scale_;
  std::vector<CJet> jets_;
};

// Wavefunction scale * f_0(x_0) * prod f_nu(angle_nu) * prod exp(i q_nu lambda_nu).
// Every state in this library has this product structure, which lets both the
// derivative table and the quadrature factorize coordinate by coordinate.
class WaveEval {
 public:
  using Factor = std::function<Jet(double)>;

  WaveEval(CoordSystem sys, int D, std::complex<double> scale, Factor radial, std::vector<Factor> angular,
           std::vector<double> freqs)
      : sys_(sys), D_(D), scale_(scale), radial_(std::move(radial)), angular_(std::move(angular)),
        freqs_(std::move(freqs)) {
    if (D < 1 || D > kMaxD) throw UsageError("WaveEval: unsupported dimension");
    if (static_cast<int>(angular_.size()) != D - 1 || static_cast<int>(freqs_.size()) != D)
      throw UsageError("WaveEval: factor count does not match D");
  }

  CoordSystem system() const { return sys_; }
  int dim() const { return D_; }
  int coord_count() const { return 2 * D_; }
  std::complex<double> scale() const { return scale_; }
  const Factor& radial() const { return radial_; }
  const Factor& angular(int k) const { return angular_[k]; }
  double frequency(int k) const { return freqs_[k]; }

  DerivTable derivatives(const std::vector<double>& pt) const {
    if (static_cast<int>(pt.size()) != coord_count()) throw UsageError("WaveEval: point has wrong arity");
    std::vector<CJet> jets(coord_count());
    auto real_jet = [](const Jet& j) { return CJet{j.value, j.d1, j.d2}; };
    jets[0] = real_jet(radial_(pt[0]));
    for (int k = 0; k < D_ - 1; ++k) jets[1 + k] = real_jet(angular_[k](pt[1 + k]));
    for (int k = 0; k < D_; ++k) {
      double q = freqs_[k];
      std::complex<double> e = std::polar(1.0, q * pt[D_ + k]);
      std::complex<double> iq(0.0, q);
      jets[D_ + k] = CJet{e, iq * e, iq * iq * e};
    }
    return DerivTable(scale_, std::move(jets));
  }

  std::complex<double> operator()(const std::vector<double>& pt) const { return derivatives(pt).value(); }

 private:
  CoordSystem sys_;
  int D_;
  std::complex<double> scale_;
  Factor radial_;
  std::vector<Factor> angular_;
  std::vector<double> freqs_;
};

}  // namespace swalg
