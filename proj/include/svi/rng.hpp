#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

namespace svi {

// Seedable random generator with platform-independent output.
//
// std::mt19937_64 itself generates the same stream everywhere, but the
// standard <random> distributions are implementation-defined, so every
// distribution here is spelled out explicitly. The full generator state
// serializes to text, which is what checkpoints store.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform01(); }

  // Uniform integer in [0, n) by rejection; unbiased for any n >= 1.
  uint64_t uniform_below(uint64_t n);

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal();

  // Gamma(shape, 1) via Marsaglia-Tsang, with the shape<1 boost.
  double gamma(double shape);

  // Symmetric Dirichlet(conc, ..., conc) over out.size() components.
  void dirichlet_symmetric(double conc, std::span<double> out);

  // Categorical draw from a probability vector (assumed to sum to ~1).
  int categorical(std::span<const double> probs);

  std::string serialize() const;
  void deserialize(const std::string& text);

 private:
  std::mt19937_64 gen_;
};

}  // namespace svi
