#pragma once

#include "bolalg/scalar.hpp"

#include <cstdint>
#include <random>

namespace bolalg {

/// MT19937-64 with doubles taken from the top 53 bits, so that streams are
/// identical across standard libraries (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform on [lo, hi]; modulo bias is below 2^-40 for the ranges used here.
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(int max_num, int max_den) {
    const auto p = integer(-max_num, max_num);
    const auto q = integer(1, max_den);
    return Rational(p) / Rational(q);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bolalg
