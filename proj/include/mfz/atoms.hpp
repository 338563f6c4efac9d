#ifndef MFZ_ATOMS_HPP
#define MFZ_ATOMS_HPP

#include <cstdint>
#include <vector>

#include "mfz/budget.hpp"
#include "mfz/system.hpp"

namespace mfz {

// Level-k atom masses in natural-log domain. Index j runs over the full
// arithmetic range 0..J_k; every atom has strictly positive mass.
struct AtomLevel {
  int k = 0;
  std::vector<double> log_mass;

  std::int64_t max_index() const { return static_cast<std::int64_t>(log_mass.size()) - 1; }
};

// Level-by-level DP: w_{k+1}(j') = sum { p_a w_k((j'-a)/d) : a == j' (mod d) },
// seeded with w_1 = p. Cells within a level are independent; the OpenMP kernel
// fills them in parallel with a fixed per-cell term order.
AtomLevel atom_masses(const DigitSystem& sys, int k, const Budget& budget = {});

namespace ref {
// Serial reference DP, kept for testing against the parallel kernel.
AtomLevel atom_masses(const DigitSystem& sys, int k, const Budget& budget = {});
}

// log eta(sigma) read off the level-|sigma| atom vector.
double eta_word(const DigitSystem& sys, const Word& w, const Budget& budget = {});
double eta_word(const AtomLevel& level, const DigitSystem& sys, const Word& w);

// log S-bar_k(q) = log sum_j w_k(j)^q
double sbar(const DigitSystem& sys, int k, double q, const Budget& budget = {});
double sbar(const AtomLevel& level, double q);

// log S-hat_k(q) = log sum_{j=0..J_{k-1}} w_k(b d^{k-1} + j)^q, b a verified
// barrier digit. Throws NotABarrier otherwise.
double shat(const DigitSystem& sys, int b, int k, double q, const Budget& budget = {});
double shat(const AtomLevel& level, const DigitSystem& sys, int b, double q);

// (1/(k log d)) sum_j -w_k(j) log w_k(j); upper bound for the almost-sure
// dimension, non-increasing along level doublings.
double entropy_sum(const DigitSystem& sys, int k, const Budget& budget = {});
double entropy_sum(const AtomLevel& level, const DigitSystem& sys);

// max over adjacent atoms of (w_k(j)/w_k(j+1)) / (k theta), both orientations;
// the neighbor-weight bound says this is <= 1.
double neighbor_ratio_audit(const DigitSystem& sys, int k, const Budget& budget = {});
double neighbor_ratio_audit(const AtomLevel& level, const DigitSystem& sys);

}  // namespace mfz

#endif
