#ifndef MFZ_DIMS_HPP
#define MFZ_DIMS_HPP

#include <cstdint>

#include "mfz/bracket.hpp"
#include "mfz/budget.hpp"
#include "mfz/system.hpp"
#include "mfz/transfer.hpp"

namespace mfz {

// dim mu(0) = -log p_0 / log d, the global maximum of the local dimensions.
double alpha_bar(const DigitSystem& sys);

// dim mu(xi) = -log p_m / log d.
double dim_at_xi(const DigitSystem& sys);

// delta log rho^_k <= alpha_lower <= delta log rho~_k (delta < 0 flips the
// radius bracket into dimension order).
Bracket alpha_lower_bracket(const DigitSystem& sys, int k, bool prune = false,
                            const Budget& budget = {});

// delta log rho~*_k <= alpha* <= delta log rho^*_k.
Bracket alpha_star_bracket(const DigitSystem& sys, int k, const Budget& budget = {});

// [lyapunov_sum(k_lyap), entropy_sum(k_entropy)]; Monte-Carlo lower side is
// widened by 3 standard errors.
Bracket gamma_bracket(const DigitSystem& sys, int k_entropy, int k_lyap, LyapMode mode,
                      std::int64_t samples = 0, std::uint64_t seed = 0,
                      const Budget& budget = {});

// Local dimension at the periodic point with period sigma:
// -log rho(M(sigma)) / (|sigma| log d). Rejects all-0 / all-m words.
double periodic_dim(const DigitSystem& sys, const Word& w);

// alpha* = alpha-bar iff m <= 2d-2 and p_0 = p_i for some i in
// {m-d+1,...,d-1} (1e-15 tolerance on the weight comparison).
bool formalism_holds(const DigitSystem& sys);

// alpha_lower for the uniform m=d family: (log(d+1) - log zeta)/log d.
double golden_closed_form(int d);

// True iff every ||M_i||_inf <= 1/d + 1e-15 with the enlarged index bound
// a = floor(1+xi); certifies a bounded density.
bool abs_continuity_certificate(const DigitSystem& sys);

struct DimensionReport {
  double alpha_bar = 0.0;
  double dim_at_xi = 0.0;
  Bracket alpha_lower;
  Bracket alpha_star;
  Bracket gamma;
  double gamma_std_error = 0.0;
  bool formalism_holds = false;
  bool isolated_top = false;  // p_0 strictly below every interior weight
};

DimensionReport dimension_report(const DigitSystem& sys, int k, int k_entropy = 0,
                                 int k_lyap = 0, const Budget& budget = {});

}  // namespace mfz

#endif
