#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace koszul {

/// Exponent triple of q, t and a. Ordered canonically by (t, q, a).
struct Degree {
  int q = 0;
  int t = 0;
  int a = 0;

  constexpr Degree& operator+=(const Degree& o) {
    q += o.q;
    t += o.t;
    a += o.a;
    return *this;
  }
  constexpr Degree& operator-=(const Degree& o) {
    q -= o.q;
    t -= o.t;
    a -= o.a;
    return *this;
  }
  friend constexpr Degree operator+(Degree x, const Degree& y) { return x += y; }
  friend constexpr Degree operator-(Degree x, const Degree& y) { return x -= y; }
  friend constexpr Degree operator-(const Degree& x) { return {-x.q, -x.t, -x.a}; }
  friend constexpr Degree operator*(int k, const Degree& x) { return {k * x.q, k * x.t, k * x.a}; }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& x, const Degree& y) {
    if (auto c = x.t <=> y.t; c != 0) return c;
    if (auto c = x.q <=> y.q; c != 0) return c;
    return x.a <=> y.a;
  }
};

/// The homological differential: preserves q, lowers t by one.
inline constexpr Degree kDifferentialDegree{0, -1, 0};

inline std::string to_string(const Degree& d) {
  std::string s = "(q=" + std::to_string(d.q) + ", t=" + std::to_string(d.t);
  if (d.a != 0) s += ", a=" + std::to_string(d.a);
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << to_string(d); }

}  // namespace koszul
