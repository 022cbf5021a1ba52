#pragma once

#include <cstdint>
#include <random>

#include "spinor10/dense.hpp"

namespace spinor10 {

// Deterministic generator. mt19937_64 output is pinned by the standard, and
// bounded draws go through rejection sampling instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  Int field_element(Int p) { return static_cast<Int>(below(static_cast<std::uint64_t>(p))); }

  IntVector field_vector(Eigen::Index n, Int p) {
    IntVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = field_element(p);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spinor10
