#include "boxlab/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boxlab/errors.hpp"
#include "boxlab/util.hpp"

namespace boxlab::sl2 {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr int kReduceCap = 10'000;
}  // namespace

Mat2 Mat2::inverse() const {
  const double dt = det();
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 Mat2::renormalized() const {
  const double dt = det();
  if (!(std::abs(dt - 1.0) <= 1e-10)) {
    throw PreconditionViolated("matrix determinant differs from 1 by more than 1e-10");
  }
  const double s = 1.0 / std::sqrt(dt);
  return {a * s, b * s, c * s, d * s};
}

Mat2 mat_n(double xi) { return {1.0, xi, 0.0, 1.0}; }
Mat2 mat_a(double t) { return {std::exp(-t), 0.0, 0.0, std::exp(t)}; }
Mat2 mat_av(double v) {
  const double r = std::sqrt(v);
  return {r, 0.0, 0.0, 1.0 / r};
}
Mat2 mat_k(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}
Mat2 mat_g0(double coeff) {
  const double r = std::sqrt(coeff);
  return {r, 0.0, 0.0, 1.0 / r};
}

IMat2 IMat2::mul(const IMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d,
          c * o.a + d * o.c, c * o.b + d * o.d};
}

IMat2 IMat2::inverse() const {
  const std::int64_t dt = det();
  if (dt != 1 && dt != -1) throw PreconditionViolated("integer matrix is not unimodular");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

bool is_upper_unipotent_pm(const IMat2& m) {
  return m.c == 0 && m.a == m.d && (m.a == 1 || m.a == -1);
}

GroupTuple GroupTuple::mul(const GroupTuple& o) const {
  if (d != o.d) throw DimensionMismatch("tuple ranks differ");
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = f[j].mul(o.f[j]);
  return r;
}

GroupTuple GroupTuple::inverse() const {
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = f[j].inverse();
  return r;
}

GroupTuple tuple_identity(int d) { return GroupTuple(d); }

GroupTuple tuple_n(int d, double xi) {
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = mat_n(xi);
  return r;
}

GroupTuple tuple_n(const std::array<double, 3>& xi, int d) {
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = mat_n(xi[j]);
  return r;
}

GroupTuple tuple_a(int d, double t) {
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = mat_a(t);
  return r;
}

GroupTuple tuple_k(const std::array<double, 3>& theta, int d) {
  GroupTuple r(d);
  for (int j = 0; j < d; ++j) r.f[j] = mat_k(theta[j]);
  return r;
}

GroupTuple tuple_g0(const BoxShape& shape) {
  GroupTuple r(3);
  for (int j = 0; j < 3; ++j) r.f[j] = mat_g0(shape.coeffs[j]);
  return r;
}

Mat2 flow(const Mat2& g, double xi, double s) {
  // g n(xi) a(s): columns scale as (e^-s, e^s) after the shear.
  const double es = std::exp(s), ems = std::exp(-s);
  return {g.a * ems, (g.a * xi + g.b) * es,
          g.c * ems, (g.c * xi + g.d) * es};
}

GroupTuple flow(const GroupTuple& g, double xi, double s) {
  GroupTuple r(g.d);
  for (int j = 0; j < g.d; ++j) r.f[j] = flow(g.f[j], xi, s);
  return r;
}

FactorIwasawa iwasawa(const Mat2& g) {
  const Mat2 m = g.renormalized();
  FactorIwasawa out;
  const double r2 = m.c * m.c + m.d * m.d;
  out.v = 1.0 / r2;
  out.u = (m.a * m.c + m.b * m.d) * out.v;
  double theta = std::atan2(m.c, m.d);  // sin = c sqrt(v), cos = d sqrt(v)
  out.sign = 1;
  if (theta < 0.0) {
    theta += kPi;
    out.sign = -1;
  }
  if (theta >= kPi) {  // atan2 returned exactly pi
    theta -= kPi;
    out.sign = -out.sign;
  }
  out.theta = theta;
  return out;
}

IwasawaCoords iwasawa(const GroupTuple& g) {
  IwasawaCoords out;
  out.d = g.d;
  for (int j = 0; j < g.d; ++j) out.factor[j] = iwasawa(g.f[j]);
  return out;
}

Mat2 assemble(const FactorIwasawa& c) {
  Mat2 m = mat_n(c.u).mul(mat_av(c.v)).mul(mat_k(c.theta));
  if (c.sign < 0) m = Mat2{-m.a, -m.b, -m.c, -m.d};
  return m;
}

FactorReduction reduce(const Mat2& g_in) {
  const Mat2 g = g_in.renormalized();
  FactorReduction out;
  double u, v;
  {
    const double r2 = g.c * g.c + g.d * g.d;
    v = 1.0 / r2;
    u = (g.a * g.c + g.b * g.d) * v;
  }
  IMat2 gamma;  // identity
  int it = 0;
  for (; it < kReduceCap; ++it) {
    // Translate u into (-1/2, 1/2], keeping the +1/2 edge.
    const double m = std::ceil(u - 0.5);
    if (m != 0.0) {
      u -= m;
      const std::int64_t mi = static_cast<std::int64_t>(m);
      gamma = IMat2{1, -mi, 0, 1}.mul(gamma);
    }
    const double r2 = u * u + v * v;
    if (r2 < 1.0 - kBoundaryTol) {
      // Invert: z -> -1/z.
      u = -u / r2;
      v = v / r2;
      gamma = IMat2{0, -1, 1, 0}.mul(gamma);
      continue;
    }
    // Boundary conventions: on the unit circle keep the u >= 0 side.
    if (r2 <= 1.0 + kBoundaryTol && u < 0.0) {
      u = -u / r2;
      v = v / r2;
      gamma = IMat2{0, -1, 1, 0}.mul(gamma);
      // |u| <= 1/2 is preserved on the circle; no retranslation needed.
    }
    break;
  }
  if (it >= kReduceCap) throw ReductionDiverged("fundamental-domain reduction hit the iteration cap");
  out.gamma = gamma;
  out.reduced = gamma.real().mul(g);
  out.u = u;
  out.v = v;
  out.lambda1 = std::hypot(out.reduced.c, out.reduced.d);
  out.iterations = it + 1;
  return out;
}

GapReport gaps(const GroupTuple& g) {
  GapReport out;
  for (auto& row : out.delta_ij) row = {1.0, 1.0, 1.0};
  if (g.d < 2) return out;

  std::array<double, 3> ratio{};
  std::array<bool, 3> has_ratio{};
  for (int j = 0; j < g.d; ++j) {
    has_ratio[j] = g.f[j].c != 0.0;
    ratio[j] = has_ratio[j] ? g.f[j].d / g.f[j].c : 0.0;
  }
  auto gap = [&](int i, int j) {
    if (!has_ratio[i] || !has_ratio[j]) return 1.0;
    return std::abs(ratio[i] - ratio[j]);
  };
  for (int i = 0; i < g.d; ++i) {
    for (int j = 0; j < g.d; ++j) {
      if (i != j) out.delta_ij[i][j] = gap(i, j);
    }
  }
  if (g.d == 2) {
    out.delta2 = std::min(1.0, gap(0, 1));
    out.delta3 = 1.0;
    out.delta_j = {gap(0, 1), gap(0, 1), 1.0};
    return out;
  }
  double d2 = 2.0, d3 = 2.0;
  for (int j = 0; j < 3; ++j) {
    double mx = 0.0, prod_clamped = 1.0, prod_raw = 1.0;
    for (int i = 0; i < 3; ++i) {
      if (i == j) continue;
      const double gij = gap(i, j);
      mx = std::max(mx, std::min(1.0, gij));
      prod_clamped *= std::min(1.0, gij);
      prod_raw *= gij;
    }
    d2 = std::min(d2, mx);
    d3 = std::min(d3, prod_clamped);
    out.delta_j[j] = prod_raw;
  }
  out.delta2 = d2;
  out.delta3 = d3;
  return out;
}

double alpha_level(const std::array<double, 3>& lambda1, int d, int level) {
  std::array<double, 3> s{};
  for (int j = 0; j < d; ++j) s[j] = lambda1[j];
  std::sort(s.begin(), s.begin() + d);
  double prod = 1.0;
  for (int l = 0; l < level; ++l) prod *= s[l];
  return 1.0 / prod;
}

Heights heights(const GroupTuple& g) {
  Heights out;
  std::array<double, 3> raw{}, lam{};
  for (int j = 0; j < g.d; ++j) {
    raw[j] = std::hypot(g.f[j].c, g.f[j].d);
    lam[j] = reduce(g.f[j]).lambda1;
  }
  std::sort(raw.begin(), raw.begin() + g.d);
  double prod = 1.0;
  for (int l = 0; l < g.d; ++l) {
    prod *= raw[l];
    out.rho[l] = prod;
  }
  for (int l = 1; l <= g.d; ++l) out.alpha[l - 1] = alpha_level(lam, g.d, l);
  return out;
}

ReductionReport reduce(const GroupTuple& g) {
  ReductionReport out;
  out.d = g.d;
  out.reduced = GroupTuple(g.d);
  for (int j = 0; j < g.d; ++j) {
    const FactorReduction fr = reduce(g.f[j]);
    out.gamma[j] = fr.gamma;
    out.reduced.f[j] = fr.reduced;
    out.lambda1[j] = fr.lambda1;
  }
  std::array<double, 3> raw{};
  for (int j = 0; j < g.d; ++j) raw[j] = std::hypot(g.f[j].c, g.f[j].d);
  std::sort(raw.begin(), raw.begin() + g.d);
  double prod = 1.0;
  for (int l = 0; l < g.d; ++l) {
    prod *= raw[l];
    out.heights.rho[l] = prod;
  }
  for (int l = 1; l <= g.d; ++l) out.heights.alpha[l - 1] = alpha_level(out.lambda1, g.d, l);
  out.gaps_raw = gaps(g);
  return out;
}

std::vector<ShortRow> enumerate_short_rows(const Mat2& g, double bound, std::size_t budget) {
  std::vector<ShortRow> out;
  const double det = g.det();
  // (c, d) = w g^{-1} with |w| <= bound gives |c| <= bound * |(d_g, -c_g)| / det.
  const double cmax_f = bound * std::hypot(g.d, g.c) / std::abs(det);
  const auto cmax = static_cast<std::int64_t>(std::floor(cmax_f + 1e-9));
  const double A = g.c * g.c + g.d * g.d;
  std::size_t visited = 0;
  for (std::int64_t c = 0; c <= cmax; ++c) {
    // |c row1 + d row2|^2 = A d^2 + 2 B_c d + C_c <= bound^2.
    const double Bc = c * (g.a * g.c + g.b * g.d);
    const double Cc = c * c * (g.a * g.a + g.b * g.b) - bound * bound;
    const double disc = Bc * Bc - A * Cc;
    if (disc < 0.0) continue;
    const double sq = std::sqrt(disc);
    auto dlo = static_cast<std::int64_t>(std::ceil((-Bc - sq) / A - 1e-9));
    auto dhi = static_cast<std::int64_t>(std::floor((-Bc + sq) / A + 1e-9));
    for (std::int64_t d = dlo; d <= dhi; ++d) {
      if (++visited > budget) throw BudgetExceeded("short-row enumeration budget");
      if (c == 0 && d <= 0) continue;  // canonical representative of +-(c, d)
      if (std::gcd(std::llabs(c), std::llabs(d)) != 1) continue;
      const double n1 = c * g.a + d * g.c;
      const double n2 = c * g.b + d * g.d;
      const double norm = std::hypot(n1, n2);
      if (norm <= bound) out.push_back({c, d, norm});
    }
  }
  std::sort(out.begin(), out.end(), [](const ShortRow& x, const ShortRow& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  });
  return out;
}

}  // namespace boxlab::sl2
