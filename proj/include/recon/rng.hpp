#pragma once

#include <cstdint>

namespace recon {

// Deterministic random stream used by the simulator. The generator is part
// of the dataset format: dataset.json records {name, version, seed} so the
// exact byte stream can be reproduced later (or in another language). Do
// not change the update rules without bumping kVersion.
//
//  - core stream: splitmix64
//  - gaussian:    Box-Muller on two uniforms (one spare cached per pair)
//  - poisson:     sequential inversion for small means, transformed
//                 rejection (PTRS) for large means
class Rng {
 public:
  static constexpr const char* kName = "splitmix64-bm-ptrs";
  static constexpr int kVersion = 1;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double gaussian();
  std::int64_t poisson(double lambda);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace recon
