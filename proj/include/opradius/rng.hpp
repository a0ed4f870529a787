#ifndef OPRADIUS_RNG_HPP
#define OPRADIUS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace opradius {

// Counter-based pseudo-random generator. The k-th output of a stream with
// seed s is
//
//   out_k(s) = mix64(s + (k+1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer. Every draw is a pure function of
// (seed, counter), so streams can be split, replayed, and reproduced in any
// other language from this description alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    counter_ += 1;
    return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform double in [0, 1), 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal pair via Box-Muller on two uniforms:
  //   r = sqrt(-2 ln(1 - u1)),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2).
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double a = 6.283185307179586476925286766559 * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Derived seed for substream k of a parent seed. The salt keeps substream
// seeds disjoint from the parent's own output stream.
inline std::uint64_t child_seed(std::uint64_t parent, std::uint64_t k) {
  return CounterRng::mix64((parent ^ 0x6A09E667F3BCC909ULL) + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace opradius

#endif
