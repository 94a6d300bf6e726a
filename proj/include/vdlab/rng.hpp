#pragma once

#include <cstdint>
#include <cmath>

namespace vdlab {

// Counter-free seeding helper. Also used to hash stream coordinates so that
// every (analysis, radius, shell, block) tuple gets an independent generator
// no matter how work is scheduled across threads.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256++ with hand-rolled float conversion. std::uniform_real_distribution
// is implementation-defined, which would break the byte-identical-output
// contract, so no <random> machinery is used anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  // Deterministic substream: mixes up to three coordinates into the root seed.
  static Rng stream(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    std::uint64_t sm = root;
    std::uint64_t h = splitmix64_next(sm);
    sm = h ^ (0xd1b54a32d192ed03ull * (a + 1));
    h = splitmix64_next(sm);
    sm = h ^ (0x8cb92ba72f3d8dd7ull * (b + 1));
    h = splitmix64_next(sm);
    sm = h ^ (0x9e6c63d0a9838f2full * (c + 1));
    return Rng(splitmix64_next(sm));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Box-Muller pair; fully deterministic given the stream.
  void gaussian2(double& g0, double& g1) {
    double u1 = uniform();
    while (u1 <= 0x1.0p-60) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * uniform();
    g0 = r * std::cos(t);
    g1 = r * std::sin(t);
  }

  // Uniform direction on the unit sphere of C^k (= S^{2k-1} in R^{2k}).
  // Writes 2k reals interpreted as k complex coordinates.
  void sphere_direction(double* out, int k) {
    const int n = 2 * k;
    double norm2 = 0.0;
    for (int i = 0; i < n; i += 2) {
      double a, b;
      gaussian2(a, b);
      out[i] = a;
      out[i + 1] = b;
      norm2 += a * a + b * b;
    }
    while (norm2 < 1e-300) {  // astronomically unlikely; stay defined
      norm2 = 0.0;
      for (int i = 0; i < n; i += 2) {
        double a, b;
        gaussian2(a, b);
        out[i] = a;
        out[i + 1] = b;
        norm2 += a * a + b * b;
      }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) out[i] *= inv;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace vdlab
