#ifndef MFZ_SYSTEM_HPP
#define MFZ_SYSTEM_HPP

#include <cstdint>
#include <vector>

#include "mfz/budget.hpp"
#include "mfz/rational.hpp"
#include "mfz/weights.hpp"

namespace mfz {

// Finite digit word over {0,...,m}; digits[0] is the most significant digit.
using Word = std::vector<int>;

// Base-d digit system with maximum digit m >= d (overlap regime) and weights p.
// Immutable after construction; derived constants are cached.
class DigitSystem {
 public:
  // Validates dimensions, the probability vector and regularity.
  static DigitSystem create(int d, int m, WeightVector p);

  // Skips the regularity check (flip pipelines and tests); everything else is
  // still validated.
  static DigitSystem create_unchecked(int d, int m, WeightVector p);

  int d() const { return d_; }
  int m() const { return m_; }
  const WeightVector& p() const { return p_; }
  double delta() const { return delta_; }        // -1/log d
  Rational xi() const { return xi_; }            // m/(d-1), exact
  double xi_value() const { return xi_.value(); }
  double theta() const { return theta_; }        // max p_i / min p_i
  int a() const { return a_; }                   // 1 + floor((m-d)/(d-1))
  double log_d() const { return log_d_; }
  double log_p(int i) const { return log_p_[i]; }
  bool regular() const;

  // J_k = m (d^k - 1)/(d - 1); throws Overflow past the atom budget.
  std::int64_t atom_count(int k, const Budget& budget = {}) const;

  // j(sigma) = sum sigma_i d^(|sigma|-i); validates digits.
  std::int64_t word_index(const Word& w) const;

 private:
  DigitSystem(int d, int m, WeightVector p, bool require_regular);

  int d_, m_, a_;
  WeightVector p_;
  std::vector<double> log_p_;
  double delta_, theta_, log_d_;
  Rational xi_;
};

inline DigitSystem new_system(int d, int m, WeightVector p) {
  return DigitSystem::create(d, m, std::move(p));
}

// Flips the weights when p_0 > p_m; identity otherwise.
DigitSystem flip(const DigitSystem& sys);

// Base d^k system whose weights are the level-k atom masses of sys. Same
// attractor; output weights are regular whenever the input is.
DigitSystem iterate(const DigitSystem& sys, int k, const Budget& budget = {});

// d=3, m=k, p_i = C(k,i)(1-bias)^i bias^(k-i). Throws NotRegular below the
// regularity threshold.
DigitSystem cantor_convolution(int k, double bias);

struct BarrierSearch {
  int level = 0;
  std::vector<std::int64_t> atoms;  // all qualifying level-`level` atom indices
};

// Smallest level k <= max_level whose atom block stays inside (xi-1, 1); both
// inequalities are decided in exact rational arithmetic. Compose with
// iterate(sys, level) to turn each atom into a single barrier digit.
BarrierSearch find_barrier(const DigitSystem& sys, int max_level = 4);

// Exact level-1 barrier test for a single digit b of sys.
bool is_barrier_digit(const DigitSystem& sys, int b);

}  // namespace mfz

#endif
