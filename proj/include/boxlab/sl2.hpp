#pragma once

// Tuples of unimodular 2x2 real matrices: Iwasawa coordinates, reduction to
// the classical fundamental domain, shortest-vector heights, and the
// ratio-gap functions used by the orbit-average machinery.
//
// Conventions:
//   n(xi)  = [[1, xi], [0, 1]]
//   a(t)   = [[e^-t, 0], [0, e^t]]            (upper half-plane: a(t).i = e^-2t i)
//   av(v)  = [[sqrt v, 0], [0, 1/sqrt v]]     (av(v).i = v i)
//   k(th)  = [[cos th, -sin th], [sin th, cos th]]
//   g0(x)  = [[sqrt x, 0], [0, 1/sqrt x]] per factor, x_j the form coefficients
//
// The fundamental domain is D+ (0 <= u <= 1/2, u^2+v^2 >= 1) together with
// D- (-1/2 < u < 0, u^2+v^2 > 1); boundary ties are resolved toward that
// closure at tolerance 1e-12.

#include <array>
#include <cstdint>
#include <vector>

#include "boxlab/shape.hpp"

namespace boxlab::sl2 {

struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;  // [[a, b], [c, d]]

  double det() const { return a * d - b * c; }
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const;
  // Scales entries so det becomes exactly 1; throws if |det - 1| > 1e-10.
  Mat2 renormalized() const;
};

Mat2 mat_n(double xi);
Mat2 mat_a(double t);
Mat2 mat_av(double v);
Mat2 mat_k(double theta);
Mat2 mat_g0(double coeff);

// Integer matrices (reduction words live in SL(2, Z)).
struct IMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  IMat2 mul(const IMat2& o) const;
  IMat2 inverse() const;  // requires det = +-1
  Mat2 real() const { return {double(a), double(b), double(c), double(d)}; }
  bool operator==(const IMat2&) const = default;
};

// True when m = +-[[1, k], [0, 1]].
bool is_upper_unipotent_pm(const IMat2& m);

struct GroupTuple {
  int d = 3;
  std::array<Mat2, 3> f{};

  GroupTuple() = default;
  explicit GroupTuple(int dim) : d(dim) {}

  GroupTuple mul(const GroupTuple& o) const;
  GroupTuple inverse() const;
};

GroupTuple tuple_identity(int d);
GroupTuple tuple_n(int d, double xi);                     // same xi in each factor
GroupTuple tuple_n(const std::array<double, 3>& xi, int d);
GroupTuple tuple_a(int d, double t);
GroupTuple tuple_k(const std::array<double, 3>& theta, int d);
GroupTuple tuple_g0(const BoxShape& shape);               // d = 3
// g . n(xi) a(s) applied factor-wise (the unipotent-then-diagonal flow).
GroupTuple flow(const GroupTuple& g, double xi, double s);
Mat2 flow(const Mat2& g, double xi, double s);

struct FactorIwasawa {
  double u = 0.0;
  double v = 1.0;
  double theta = 0.0;  // in [0, pi)
  int sign = 1;        // g = sign * n(u) av(v) k(theta)
};

struct IwasawaCoords {
  int d = 1;
  std::array<FactorIwasawa, 3> factor{};
};

FactorIwasawa iwasawa(const Mat2& g);
IwasawaCoords iwasawa(const GroupTuple& g);
Mat2 assemble(const FactorIwasawa& c);

struct FactorReduction {
  IMat2 gamma;     // gamma * g lies over the fundamental domain
  Mat2 reduced;    // gamma * g
  double u = 0.0;  // Iwasawa coordinates of the reduced point
  double v = 1.0;
  double lambda1 = 1.0;  // shortest primitive-row norm = 1/sqrt(v)
  int iterations = 0;
};

FactorReduction reduce(const Mat2& g);

struct GapReport {
  double delta2 = 1.0;                            // clamped two-gap statistic
  double delta3 = 1.0;                            // clamped three-gap statistic
  std::array<double, 3> delta_j{1.0, 1.0, 1.0};   // unclamped per-index products
  std::array<std::array<double, 3>, 3> delta_ij;  // unclamped pairwise gaps
};

// Gap statistics of the factors' bottom rows (c_j, d_j). Whenever
// c_i c_j = 0 the corresponding gap is taken as 1.
GapReport gaps(const GroupTuple& g);

struct Heights {
  std::array<double, 3> rho{1.0, 1.0, 1.0};    // rho_l, products of the l smallest raw row norms
  std::array<double, 3> alpha{1.0, 1.0, 1.0};  // alpha_l, from per-factor shortest vectors
};

Heights heights(const GroupTuple& g);

struct ReductionReport {
  int d = 3;
  std::array<IMat2, 3> gamma{};
  GroupTuple reduced;
  std::array<double, 3> lambda1{1.0, 1.0, 1.0};
  Heights heights;
  GapReport gaps_raw;  // gaps of the input tuple's rows
};

ReductionReport reduce(const GroupTuple& g);

// alpha_l directly from per-factor shortest-vector norms.
double alpha_level(const std::array<double, 3>& lambda1, int d, int level);

// All primitive integer rows (c, d) with |(c, d) g| <= bound, one per +- pair
// (canonical representative: c > 0, or c = 0 and d > 0). Brute-force oracle
// for the reduction-based heights and the enumeration engine for the
// exceptional-set scans.
struct ShortRow {
  std::int64_t c = 0, d = 0;
  double norm = 0.0;
};
std::vector<ShortRow> enumerate_short_rows(const Mat2& g, double bound,
                                           std::size_t budget = 50'000'000);

}  // namespace boxlab::sl2
