// Brute-force oracles, independent of the DP / transfer-matrix code paths.
#ifndef MFZ_TESTS_ORACLES_HPP
#define MFZ_TESTS_ORACLES_HPP

#include <vector>

#include "mfz/system.hpp"

namespace mfz::oracle {

// Walks every word of length k and accumulates p(sigma) by projection index,
// in linear long-double arithmetic.
inline std::vector<long double> atom_masses(const DigitSystem& sys, int k) {
  std::vector<long double> mass(static_cast<size_t>(sys.atom_count(k)) + 1, 0.0L);
  Word w(static_cast<size_t>(k), 0);
  while (true) {
    long double p = 1.0L;
    long long j = 0;
    for (int digit : w) {
      p *= static_cast<long double>(sys.p()[static_cast<size_t>(digit)]);
      j = j * sys.d() + digit;
    }
    mass[static_cast<size_t>(j)] += p;
    int pos = k - 1;
    while (pos >= 0 && w[static_cast<size_t>(pos)] == sys.m()) w[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++w[static_cast<size_t>(pos)];
  }
  return mass;
}

inline long double eta(const DigitSystem& sys, const Word& w) {
  const auto mass = mfz::oracle::atom_masses(sys, static_cast<int>(w.size()));
  return mass[static_cast<size_t>(sys.word_index(w))];
}

}  // namespace mfz::oracle

#endif
