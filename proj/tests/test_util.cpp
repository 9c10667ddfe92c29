#include <doctest.h>

#include <cmath>
#include <complex>

#include "boxlab/dd.hpp"
#include "boxlab/errors.hpp"
#include "boxlab/shape.hpp"
#include "boxlab/util.hpp"

using namespace boxlab;

TEST_CASE("e2pi basic values") {
  CHECK(std::abs(e2pi(0.0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(e2pi(0.25) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(e2pi(0.5) - cplx(-1.0, 0.0)) < 1e-15);
  // Complex argument: e(i) = exp(-2 pi).
  CHECK(std::abs(e2pi(cplx(0.0, 1.0)) - cplx(std::exp(-kTwoPi), 0.0)) < 1e-18);
  // Agreement with std::exp on a grid.
  for (int k = -5; k <= 5; ++k) {
    const cplx z(0.3 * k, 0.1 * std::abs(k));
    const cplx expect = std::exp(cplx(0.0, kTwoPi) * z);
    CHECK(std::abs(e2pi(z) - expect) <= 1e-12 * std::abs(expect));
  }
}

TEST_CASE("compensated summation recovers tiny addends") {
  Kahan acc;
  acc.add(1.0);
  for (int i = 0; i < 10; ++i) acc.add(1e-16);
  CHECK(acc.value() == doctest::Approx(1.0 + 1e-15).epsilon(1e-15));

  // Alternating catastrophic cancellation.
  Kahan acc2;
  for (int i = 0; i < 1000; ++i) {
    acc2.add(1e16);
    acc2.add(1.0);
    acc2.add(-1e16);
  }
  CHECK(acc2.value() == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("rng determinism and ranges") {
  Rng r1(12345), r2(12345);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r1.next_u64() == r2.next_u64());
  }
  Rng r(987);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = r.uniform_int(-3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
  }
  // Different seeds diverge.
  Rng a(1), b(2);
  CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("fnv1a known vectors") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -1.5, kPi, 1e-300, 6.02e23, 0.1, 2.0 / 3.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("double-double arithmetic") {
  // sqrt(2)^2 = 2 to ~1e-31.
  const dd s2 = dd_sqrt2();
  const dd err = dd_abs(s2 * s2 - dd(2.0));
  CHECK(err.to_double() < 1e-30);

  // Golden ratio satisfies x^2 = x + 1.
  const dd g = dd_golden();
  CHECK(dd_abs(g * g - (g + 1.0)).to_double() < 1e-30);

  // Exact small-integer arithmetic.
  CHECK((dd(1.0) / dd(3.0) * dd(3.0) - dd(1.0)).to_double() == doctest::Approx(0.0).epsilon(1e-30));

  // floor with carries from the low word.
  auto f1 = dd_floor(dd(2.0, -1e-20));
  CHECK(f1.n == 1);
  CHECK(f1.frac.to_double() == doctest::Approx(1.0).epsilon(1e-19));
  auto f2 = dd_floor(dd(-0.25));
  CHECK(f2.n == -1);
  CHECK(f2.frac.to_double() == doctest::Approx(0.75));
  auto f3 = dd_floor(dd(5.0, 1e-22));
  CHECK(f3.n == 5);
}

TEST_CASE("rational powers certified") {
  const dd c = dd_pow_rational(2.0, 1, 3);
  CHECK(dd_abs(dd_powi(c, 3) - dd(2.0)).to_double() < 1e-29);
  const dd c2 = dd_pow_rational(2.0, -1, 3);
  CHECK(dd_abs(c * c2 - dd(1.0)).to_double() < 1e-29);
  CHECK(pow_rational_double(2.0, 1, 3) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
  CHECK(pow_rational_double(4.0, 1, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(dd_pow_rational(-1.0, 1, 2), ConfigInvalid);
}

TEST_CASE("box shapes validate and stay consistent") {
  const BoxShape s = standard_shape();
  CHECK(s.coeffs[0] == doctest::Approx(kPi * kPi).epsilon(1e-15));
  // x2 = pi^2 2^(-2/3), x3 = pi^2 2^(2/3).
  CHECK(s.coeffs[1] == doctest::Approx(kPi * kPi * std::pow(2.0, -2.0 / 3.0)).epsilon(1e-14));
  CHECK(s.coeffs[2] == doctest::Approx(kPi * kPi * std::pow(2.0, 2.0 / 3.0)).epsilon(1e-14));
  CHECK_NOTHROW(validate_shape(s));

  BoxShape bad = s;
  bad.coeffs[1] *= 1.0 + 1e-9;
  CHECK_THROWS_AS(validate_shape(bad), InvalidShape);

  CHECK_THROWS_AS(shape_from_lengths({1.0, -2.0, 3.0}), InvalidShape);
  CHECK_THROWS_AS(shape_from_coeffs({0.0, 1.0, 1.0}), InvalidShape);

  const BoxShape c = shape_from_coeffs({1.0, 2.0, 3.0});
  CHECK(c.lengths[0] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK_NOTHROW(validate_shape(c));
}
