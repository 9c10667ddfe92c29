#include "boxlab/shape.hpp"

#include <cmath>

#include "boxlab/dd.hpp"
#include "boxlab/errors.hpp"
#include "boxlab/util.hpp"

namespace boxlab {

namespace {
void check_positive_finite(const std::array<double, 3>& v, const char* what) {
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InvalidShape(std::string(what) + " must be positive and finite");
    }
  }
}
}  // namespace

BoxShape shape_from_lengths(const std::array<double, 3>& lengths, IndexSet index_set) {
  check_positive_finite(lengths, "lengths");
  BoxShape s;
  s.lengths = lengths;
  for (int j = 0; j < 3; ++j) s.coeffs[j] = kPi * kPi / (lengths[j] * lengths[j]);
  s.index_set = index_set;
  return s;
}

BoxShape shape_from_coeffs(const std::array<double, 3>& coeffs, IndexSet index_set) {
  check_positive_finite(coeffs, "coeffs");
  BoxShape s;
  s.coeffs = coeffs;
  for (int j = 0; j < 3; ++j) s.lengths[j] = kPi / std::sqrt(coeffs[j]);
  s.index_set = index_set;
  return s;
}

void validate_shape(const BoxShape& s) {
  check_positive_finite(s.lengths, "lengths");
  check_positive_finite(s.coeffs, "coeffs");
  for (int j = 0; j < 3; ++j) {
    const double expect = kPi * kPi / (s.lengths[j] * s.lengths[j]);
    if (std::abs(s.coeffs[j] - expect) > 4e-16 * expect) {
      throw InvalidShape("coeffs and lengths are inconsistent");
    }
  }
}

BoxShape standard_shape(IndexSet index_set) {
  const double c = pow_rational_double(2.0, 1, 3);
  return shape_from_lengths({1.0, c, 1.0 / c}, index_set);
}

std::string index_set_name(IndexSet s) {
  return s == IndexSet::Dirichlet ? "dirichlet" : "full_torus";
}

}  // namespace boxlab
