#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace swalg {

// Element of (1/2)Z held as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice_(2 * static_cast<long long>(v)) {}

  static constexpr HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return 0.5 * static_cast<double>(twice_); }

  long long as_int() const {
    if (!is_integer()) throw std::logic_error("HalfInt: " + str() + " is not an integer");
    return twice_ / 2;
  }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(int k, HalfInt a) { return from_twice(k * a.twice_); }
  friend constexpr HalfInt operator*(HalfInt a, int k) { return from_twice(k * a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  long long twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

// (-1)^h for integer h.
inline int sign_power(HalfInt h) {
  long long k = h.as_int();
  return (k % 2 == 0) ? 1 : -1;
}

inline int sign_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

// Parses "3/2", "-1/2", "2", "1.5".
inline HalfInt parse_half_int(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 1) return HalfInt::from_twice(2 * num);
    if (den == 2) return HalfInt::from_twice(num);
    throw std::invalid_argument("not a half-integer: " + s);
  }
  double v = std::stod(s);
  double t = 2.0 * v;
  long long ti = std::llround(t);
  if (std::abs(t - static_cast<double>(ti)) > 1e-12) throw std::invalid_argument("not a half-integer: " + s);
  return HalfInt::from_twice(ti);
}

}  // namespace swalg
