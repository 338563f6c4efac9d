#ifndef MFZ_BUDGET_HPP
#define MFZ_BUDGET_HPP

#include <cstdint>

namespace mfz {

// Exceeding a budget is an error, never silent truncation.
struct Budget {
  std::int64_t max_atoms = std::int64_t(1) << 28;  // atoms per level
  std::int64_t max_words = 100'000'000;            // enumerated words per bound
};

}  // namespace mfz

#endif
