#pragma once

#include <cstdint>
#include <random>

namespace dsharp {

// Deterministic uniform source. std::mt19937_64 output is pinned by the
// standard, the <random> distributions are not, so all variate generation
// in this library goes through inverse-cdf transforms of these uniforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform on the open interval (0,1); safe as a quantile argument
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // uniform index in [0, n)
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dsharp
