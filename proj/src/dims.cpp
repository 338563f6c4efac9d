#include "mfz/dims.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfz/atoms.hpp"
#include "mfz/error.hpp"

namespace mfz {

double alpha_bar(const DigitSystem& sys) { return -sys.log_p(0) / sys.log_d(); }

double dim_at_xi(const DigitSystem& sys) { return -sys.log_p(sys.m()) / sys.log_d(); }

Bracket alpha_lower_bracket(const DigitSystem& sys, int k, bool prune, const Budget& budget) {
  const Bracket radius = jsr_bounds(sys, k, prune, budget);
  // delta < 0 flips [rho~, rho^] into dimension order
  return make_bracket(-std::log(radius.upper) / sys.log_d(),
                      -std::log(radius.lower) / sys.log_d(),
                      "alpha_lower " + radius.meta);
}

Bracket alpha_star_bracket(const DigitSystem& sys, int k, const Budget& budget) {
  const Bracket radius = restricted_min_bounds(sys, k, budget);
  // radius bracket [min eta, min rho]^(1/k); delta log flips it into
  // [delta log rho~*, delta log rho^*]
  return make_bracket(-std::log(radius.upper) / sys.log_d(),
                      -std::log(radius.lower) / sys.log_d(),
                      "alpha_star " + radius.meta);
}

Bracket gamma_bracket(const DigitSystem& sys, int k_entropy, int k_lyap, LyapMode mode,
                      std::int64_t samples, std::uint64_t seed, const Budget& budget) {
  const double upper = entropy_sum(sys, k_entropy, budget);
  const LyapunovResult lyap = lyapunov_sum(sys, k_lyap, mode, samples, seed, budget);
  double lower = lyap.value;
  std::string meta = "gamma entropy_k=" + std::to_string(k_entropy) +
                     " lyap_k=" + std::to_string(k_lyap);
  if (mode == LyapMode::montecarlo) {
    lower -= 3.0 * lyap.std_error;  // widen by 3 standard errors
    meta += " mc_samples=" + std::to_string(lyap.samples) +
            " se=" + std::to_string(lyap.std_error);
  } else {
    meta += " exact";
  }
  return make_bracket(lower, upper, meta);
}

double periodic_dim(const DigitSystem& sys, const Word& w) {
  if (w.empty()) fail(Errc::bad_dimensions, "empty word");
  const bool all0 = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
  const bool allm = std::all_of(w.begin(), w.end(), [&](int x) { return x == sys.m(); });
  if (all0 || allm)
    fail(Errc::degenerate_word, "periodic dimension is undefined for all-0 / all-m words");
  sys.word_index(w);  // digit validation
  const TransferMatrixSet tms = build_matrices(sys);
  const double log_rho = log_spectral_radius(word_product(tms, w));
  return -log_rho / (static_cast<double>(w.size()) * sys.log_d());
}

bool formalism_holds(const DigitSystem& sys) {
  if (sys.m() > 2 * sys.d() - 2) return false;
  for (int i = sys.m() - sys.d() + 1; i <= sys.d() - 1; ++i)
    if (std::abs(sys.p()[0] - sys.p()[static_cast<size_t>(i)]) <= 1e-15) return true;
  return false;
}

double golden_closed_form(int d) {
  if (d < 3) fail(Errc::bad_dimensions, "need d >= 3");
  const double zeta = 0.5 * (1.0 + std::sqrt(5.0));
  return (std::log(d + 1.0) - std::log(zeta)) / std::log(static_cast<double>(d));
}

bool abs_continuity_certificate(const DigitSystem& sys) {
  // the proof enlarges the index bound to floor(1+xi)
  const int a_big = 1 + sys.m() / (sys.d() - 1);
  const TransferMatrixSet tms = build_matrices(sys, a_big);
  const double limit = 1.0 / sys.d() + 1e-15;
  for (const Matrix& M : tms.mats)
    if (opinf_norm(M) > limit) return false;
  return true;
}

DimensionReport dimension_report(const DigitSystem& sys, int k, int k_entropy, int k_lyap,
                                 const Budget& budget) {
  if (k_entropy <= 0) {
    // deepest level within ~4M atoms, capped at 12
    k_entropy = 1;
    while (k_entropy < 12) {
      Budget probe;
      probe.max_atoms = 4'000'000;
      try {
        sys.atom_count(k_entropy + 1, probe);
      } catch (const Error&) {
        break;
      }
      ++k_entropy;
    }
  }
  if (k_lyap <= 0) {
    k_lyap = 1;
    __int128 words = sys.m() + 1;
    while (k_lyap < 8 && words * (sys.m() + 1) <= 2'000'000) {
      words *= sys.m() + 1;
      ++k_lyap;
    }
  }

  DimensionReport r;
  r.alpha_bar = alpha_bar(sys);
  r.dim_at_xi = dim_at_xi(sys);
  r.alpha_lower = alpha_lower_bracket(sys, k, false, budget);
  r.alpha_star = alpha_star_bracket(sys, k, budget);
  r.gamma = gamma_bracket(sys, k_entropy, k_lyap, LyapMode::exact, 0, 0, budget);
  r.formalism_holds = formalism_holds(sys);
  double interior_min = std::numeric_limits<double>::infinity();
  for (int i = 1; i < sys.m(); ++i)
    interior_min = std::min(interior_min, sys.p()[static_cast<size_t>(i)]);
  r.isolated_top = sys.p()[0] < interior_min - 1e-15;
  return r;
}

}  // namespace mfz
