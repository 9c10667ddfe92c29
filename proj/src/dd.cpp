#include "boxlab/dd.hpp"

#include <cmath>

#include "boxlab/errors.hpp"

namespace boxlab {

dd_floor_result dd_floor(dd x) {
  double f = std::floor(x.hi);
  // Exact because f is integral and |x.hi - f| <= 1.
  dd frac = x - dd(f);
  // The low word can push the value across an integer boundary.
  while (frac.hi < 0.0) {
    f -= 1.0;
    frac = frac + dd(1.0);
  }
  while (frac.hi >= 1.0) {
    f += 1.0;
    frac = frac - dd(1.0);
  }
  return {static_cast<std::int64_t>(f), frac};
}

dd dd_pow_rational(double base, int num, int den) {
  if (base <= 0.0 || den == 0) {
    throw ConfigInvalid("pow requires positive base and nonzero root index");
  }
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const dd target = dd_powi(dd(base), num >= 0 ? num : -num);
  const dd p = (num >= 0) ? target : dd(1.0) / target;
  if (den == 1) return p;

  dd y(std::pow(base, static_cast<double>(num) / den));
  for (int it = 0; it < 4; ++it) {
    const dd yd1 = dd_powi(y, den - 1);
    const dd f = yd1 * y - p;
    const dd fp = yd1 * static_cast<double>(den);
    y = y - f / fp;
  }
  // Certified residual check: |f(y)| / |f'(y)| bounds the root distance for
  // this convex monotone branch; require it below 1e-30 * y.
  const dd yd1 = dd_powi(y, den - 1);
  const dd resid = dd_abs(yd1 * y - p) / (yd1 * static_cast<double>(den));
  if (!(resid.to_double() <= 1e-30 * y.to_double() + 1e-300)) {
    throw PrecisionExhausted("rational power refinement did not certify");
  }
  return y;
}

double pow_rational_double(double base, int num, int den) {
  return dd_pow_rational(base, num, den).to_double();
}

}  // namespace boxlab
