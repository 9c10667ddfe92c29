#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace boxlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

using cplx = std::complex<double>;

// e(z) = exp(2*pi*i*z) for complex z.
inline cplx e2pi(cplx z) {
  const double mag = std::exp(-kTwoPi * z.imag());
  const double ph = kTwoPi * z.real();
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

inline cplx e2pi(double x) {
  return {std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
}

// Neumaier compensated accumulator. Deterministic for a fixed input order.
class Kahan {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanC {
 public:
  void add(cplx v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  Kahan re_, im_;
};

// Deterministic 64-bit RNG (splitmix64-seeded xoshiro256**). All derived
// distributions are implemented here so results are identical across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the xoshiro state.
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9E3779B97F4A7C15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
      s = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection-free modulo is fine here: span << 2^64 in all our uses.
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  // Standard normal via Box-Muller (deterministic, no cached spare).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::uint64_t state_[4];
};

// FNV-1a 64-bit hash of a byte string; used for config fingerprints.
std::uint64_t fnv1a(const std::string& bytes);

// Shortest text that round-trips a double exactly (%.17g with trim attempts).
std::string format_double(double v);

std::string hex64(std::uint64_t v);

}  // namespace boxlab
