#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace emff {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent sub-stream seed derived from one master seed. Stream 0 is the
/// first splitmix64 output, stream 1 the second, and so on.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) out = splitmix64(s);
  return out;
}

/// mt19937_64 with hand-rolled uniform draws. The engine's output sequence is
/// pinned by the standard; std::uniform_* distributions are not, so draws are
/// built from raw engine words to keep seeded runs reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n); requires n > 0. 128-bit scaling keeps the bias
  /// below 2^-64.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(gen_()) * static_cast<unsigned __int128>(n)) >> 64);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace emff
