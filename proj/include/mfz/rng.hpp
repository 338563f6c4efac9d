#ifndef MFZ_RNG_HPP
#define MFZ_RNG_HPP

#include <cstdint>

namespace mfz {

// SplitMix64. Each Monte-Carlo sample owns the stream keyed by (seed, sample
// index), so results are reproducible from (seed, samples) and independent of
// the worker count.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 g(seed ^ (0x2545f4914f6cdd1dULL * (counter + 1)));
  g.next();
  return g.next();
}

}  // namespace mfz

#endif
