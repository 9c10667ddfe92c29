#pragma once

// Rectangular box / torus geometry. A box with side lengths l_j carries the
// positive form Q0(m) = sum_j x_j m_j^2 with x_j = pi^2 / l_j^2; the spectrum
// is Q0 over positive integer vectors (Dirichlet) or all integer vectors
// (full torus).

#include <array>
#include <string>

namespace boxlab {

enum class IndexSet { Dirichlet, FullTorus };

struct BoxShape {
  std::array<double, 3> lengths{};  // l_j > 0
  std::array<double, 3> coeffs{};   // x_j = pi^2 / l_j^2
  IndexSet index_set = IndexSet::Dirichlet;

  double volume() const { return lengths[0] * lengths[1] * lengths[2]; }
};

// Constructors recompute the derived array so the pair is always consistent
// to the last ulp. Throw InvalidShape on non-positive or non-finite input.
BoxShape shape_from_lengths(const std::array<double, 3>& lengths,
                            IndexSet index_set = IndexSet::Dirichlet);
BoxShape shape_from_coeffs(const std::array<double, 3>& coeffs,
                           IndexSet index_set = IndexSet::Dirichlet);

// Consistency check used by tests and config validation.
void validate_shape(const BoxShape& s);

// The incommensurable reference shape l = (1, 2^(1/3), 2^(-1/3)).
BoxShape standard_shape(IndexSet index_set = IndexSet::Dirichlet);

std::string index_set_name(IndexSet s);

}  // namespace boxlab
