#ifndef MFZ_RATIONAL_HPP
#define MFZ_RATIONAL_HPP

#include <cstdint>
#include <numeric>

#include "mfz/error.hpp"

namespace mfz {

// Exact rational arithmetic for the strict inequalities the spec requires to be
// decided without rounding (xi < 2, barrier atom conditions). Desk-scale
// magnitudes only; comparisons go through __int128 so d^k up to ~2^63 is safe.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, reduced

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(Errc::bad_dimensions, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

// d^k with overflow guard; throws Overflow rather than wrapping.
inline std::int64_t ipow_checked(std::int64_t base, int exp) {
  __int128 v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > static_cast<__int128>(INT64_MAX)) fail(Errc::overflow, "d^k exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace mfz

#endif
