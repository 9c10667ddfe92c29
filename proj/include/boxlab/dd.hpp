#pragma once

// Compact double-double arithmetic (~31 significant digits). Used where plain
// doubles cannot support the request: continued fractions of algebraic reals,
// certified Diophantine constants, and last-ulp-consistent algebraic inputs.

#include <cmath>
#include <cstdint>

namespace boxlab {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  explicit dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}
  static dd from_int(std::int64_t n) { return dd(static_cast<double>(n)); }

  double to_double() const { return hi + lo; }
};

namespace dd_detail {
inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}
inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline dd operator+(dd a, dd b) {
  using namespace dd_detail;
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  using namespace dd_detail;
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  const double q3 = r.hi / b.hi;
  dd q = dd_detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }

inline bool operator<(dd a, dd b) { return (a - b).hi < 0.0; }
inline bool operator>(dd a, dd b) { return (a - b).hi > 0.0; }
inline bool operator<=(dd a, dd b) { return !(a > b); }
inline bool operator>=(dd a, dd b) { return !(a < b); }

inline dd dd_abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd dd_sqrt(dd a) {
  double y0 = std::sqrt(a.hi);
  dd y(y0);
  // Two Newton steps: y <- y + (a - y^2) / (2 y).
  for (int i = 0; i < 2; ++i) y = y + (a - y * y) / (y * 2.0);
  return y;
}

// Integer power by repeated squaring.
inline dd dd_powi(dd a, int n) {
  if (n < 0) return dd(1.0) / dd_powi(a, -n);
  dd r(1.0);
  dd base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// floor(x) for |x| < 2^52, together with the exact fractional part.
struct dd_floor_result {
  std::int64_t n;
  dd frac;  // x - n, in [0, 1)
};
dd_floor_result dd_floor(dd x);

// base^(num/den) refined to ~1e-30 relative by Newton iteration on
// y^den = base^num, with an a-posteriori certified residual bound.
// Throws PrecisionExhausted if certification fails.
dd dd_pow_rational(double base, int num, int den);

// The same value rounded to double; deterministic across call sites.
double pow_rational_double(double base, int num, int den);

inline dd dd_sqrt2() { return dd_sqrt(dd(2.0)); }
inline dd dd_golden() { return (dd_sqrt(dd(5.0)) + 1.0) / 2.0; }

}  // namespace boxlab
