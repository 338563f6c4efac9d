#ifndef MFZ_TRANSFER_HPP
#define MFZ_TRANSFER_HPP

#include <cstdint>
#include <vector>

#include "mfz/bracket.hpp"
#include "mfz/budget.hpp"
#include "mfz/matrix.hpp"
#include "mfz/system.hpp"

namespace mfz {

// The m+1 transfer matrices M_i(k,l) = p_{-ld+k+i}, k,l in {-a,...,a}, stored
// 0-based with offset a (central entry M_i(a,a) = p_i).
struct TransferMatrixSet {
  int a = 0;
  int n = 0;  // 2a+1
  std::vector<Matrix> mats;

  int central() const { return a; }
};

TransferMatrixSet build_matrices(const DigitSystem& sys);
// With an index bound other than the default a (the absolute-continuity
// certificate enlarges it to floor(1+xi)).
TransferMatrixSet build_matrices(const DigitSystem& sys, int a_override);

// M(sigma) = M_{sigma_k} ... M_{sigma_1} (word reversed in the product), with
// per-step scaling. Central entry of the product is eta(sigma).
ScaledMatrix word_product(const TransferMatrixSet& tms, const Word& w);

// log eta(sigma) via the central entry of the scaled product.
double word_log_eta(const TransferMatrixSet& tms, const ScaledMatrix& P);

// Enumerates all words of length k (DFS, incremental scaled products) and
// returns the radius bracket [rho~_k, rho^_k] = [max rho(M(sigma))^{1/k},
// max ||M(sigma)||_1^{1/k}]. Pruning uses the conservative norm envelope
// ||prefix||_1 * (max_i ||M_i||_1)^remaining and is off by default.
Bracket jsr_bounds(const DigitSystem& sys, int k, bool prune = false, const Budget& budget = {});

// Words with first digit in {1,...,m-1}: [rho~*_k, rho^*_k] =
// [min rho(M(sigma))^{1/k}, min eta(sigma)^{1/k}]. Never prunes.
Bracket restricted_min_bounds(const DigitSystem& sys, int k, const Budget& budget = {});

namespace ref {
Bracket jsr_bounds(const DigitSystem& sys, int k, const Budget& budget = {});
Bracket restricted_min_bounds(const DigitSystem& sys, int k, const Budget& budget = {});
}

enum class LyapMode { exact, montecarlo };

struct LyapunovResult {
  double value = 0.0;      // (1/(k log d)) E[-log ||M(omega|k)||_1]
  double std_error = 0.0;  // 0 in exact mode
  std::int64_t samples = 0;
};

// Lower bound for the almost-sure dimension. Exact mode sums over all words
// weighted by p(sigma); Monte-Carlo mode draws `samples` i.i.d. words with a
// counter-based generator, so the result depends only on (seed, samples).
LyapunovResult lyapunov_sum(const DigitSystem& sys, int k, LyapMode mode,
                            std::int64_t samples = 0, std::uint64_t seed = 0,
                            const Budget& budget = {});

namespace ref {
LyapunovResult lyapunov_sum(const DigitSystem& sys, int k, LyapMode mode,
                            std::int64_t samples = 0, std::uint64_t seed = 0,
                            const Budget& budget = {});
}

}  // namespace mfz

#endif
