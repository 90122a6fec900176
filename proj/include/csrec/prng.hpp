#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "csrec/error.hpp"

namespace csrec {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because streams can be derived
// by key mixing: every user/epoch gets its own stream keyed by
// (master seed, stream id), so generation order and thread scheduling cannot
// change the output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller (both values consumed deterministically).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(6.283185307179586476925286766559 * u2);
    have_spare_ = true;
    return mag * std::cos(6.283185307179586476925286766559 * u2);
  }

  double exponential() {
    double u = next_double();
    return -std::log1p(-u);
  }

  // Index i with probability weights[i] / sum(weights).
  int discrete(const std::vector<double>& weights) {
    require(!weights.empty(), Errc::EmptyInput, "discrete: empty weight vector");
    double total = 0.0;
    for (double w : weights) total += w;
    require(total > 0.0, Errc::ValidationError, "discrete: weights sum to zero");
    double u = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

  int uniform_int(int n) {  // 0..n-1
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  // Dirichlet(1,...,1): normalized exponentials.
  std::vector<double> dirichlet_uniform(int dim) {
    std::vector<double> v(dim);
    double total = 0.0;
    for (auto& x : v) {
      x = exponential();
      total += x;
    }
    if (total <= 0.0) {  // all-zero draw is measure zero; fall back to uniform
      for (auto& x : v) x = 1.0 / dim;
      return v;
    }
    for (auto& x : v) x /= total;
    return v;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream seed keyed by (master, stream id); independent of call order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

}  // namespace csrec
