#include "mfz/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfz/error.hpp"
#include "mfz/logsum.hpp"
#include "mfz/rng.hpp"

namespace mfz {

TransferMatrixSet build_matrices(const DigitSystem& sys, int a_override) {
  TransferMatrixSet tms;
  tms.a = a_override;
  tms.n = 2 * a_override + 1;
  tms.mats.reserve(static_cast<size_t>(sys.m()) + 1);
  for (int i = 0; i <= sys.m(); ++i) {
    Matrix M(tms.n);
    for (int k = -tms.a; k <= tms.a; ++k)
      for (int l = -tms.a; l <= tms.a; ++l) {
        const long long idx = static_cast<long long>(-l) * sys.d() + k + i;
        if (idx >= 0 && idx <= sys.m())
          M(k + tms.a, l + tms.a) = sys.p()[static_cast<size_t>(idx)];
      }
    tms.mats.push_back(std::move(M));
  }
  return tms;
}

TransferMatrixSet build_matrices(const DigitSystem& sys) {
  return build_matrices(sys, sys.a());
}

namespace {

// M_digit as a scaled product of length one.
ScaledMatrix seed_factor(const TransferMatrixSet& tms, int digit) {
  ScaledMatrix P{tms.mats[static_cast<size_t>(digit)], 0.0};
  const double me = max_entry(P.mat);
  P.log_scale = std::log(me);
  const double inv = 1.0 / me;
  for (int i = 0; i < P.mat.n(); ++i)
    for (int j = 0; j < P.mat.n(); ++j) P.mat(i, j) *= inv;
  return P;
}

// Left-multiply the running product by M_digit and refresh the scale so the
// max entry stays 1. Central entries never vanish for this family, so the
// scale is always finite.
inline void push_factor(const Matrix& factor, ScaledMatrix& P, Matrix& scratch) {
  mul_into(factor, P.mat, scratch);
  const double me = max_entry(scratch);
  const double inv = 1.0 / me;
  for (int i = 0; i < scratch.n(); ++i)
    for (int j = 0; j < scratch.n(); ++j) P.mat(i, j) = scratch(i, j) * inv;
  P.log_scale += std::log(me);
}

}  // namespace

ScaledMatrix word_product(const TransferMatrixSet& tms, const Word& w) {
  if (w.empty()) fail(Errc::bad_dimensions, "empty word");
  for (int digit : w)
    if (digit < 0 || digit >= static_cast<int>(tms.mats.size()))
      fail(Errc::bad_dimensions, "digit outside 0..m");
  ScaledMatrix P = seed_factor(tms, w[0]);
  Matrix scratch(tms.n);
  for (size_t pos = 1; pos < w.size(); ++pos)
    push_factor(tms.mats[static_cast<size_t>(w[pos])], P, scratch);
  return P;
}

double word_log_eta(const TransferMatrixSet& tms, const ScaledMatrix& P) {
  const int c = tms.central();
  return P.log_scale + std::log(P.mat(c, c));
}

// ---------------------------------------------------------------------------
// Word-tree enumeration for the radius brackets

namespace {

struct EnumAcc {
  double max_log_rho = kNegInf;
  double max_log_norm = kNegInf;
  double min_log_rho = std::numeric_limits<double>::infinity();
  double min_log_eta = std::numeric_limits<double>::infinity();

  void merge(const EnumAcc& o) {
    max_log_rho = std::max(max_log_rho, o.max_log_rho);
    max_log_norm = std::max(max_log_norm, o.max_log_norm);
    min_log_rho = std::min(min_log_rho, o.min_log_rho);
    min_log_eta = std::min(min_log_eta, o.min_log_eta);
  }
};

struct EnumCtx {
  const TransferMatrixSet* tms = nullptr;
  int k = 0;
  int letters = 0;
  bool want_max = false;  // jsr: rho / norm maxima
  bool want_min = false;  // restricted: rho / eta minima
  bool prune = false;     // norm-envelope pruning, max pass only
  double log_max_factor_norm = 0.0;
};

// DFS over the remaining digit positions; stack[depth] holds the product of
// the first `depth` digits (rightmost factors of M(sigma)).
void dfs(const EnumCtx& ctx, int depth, std::vector<ScaledMatrix>& stack, Matrix& scratch,
         EnumAcc& acc) {
  const ScaledMatrix& P = stack[static_cast<size_t>(depth)];
  if (depth == ctx.k) {
    if (ctx.want_max) {
      acc.max_log_norm = std::max(acc.max_log_norm, P.log_scale + std::log(op1_norm(P.mat)));
      acc.max_log_rho = std::max(acc.max_log_rho, log_spectral_radius(P));
    }
    if (ctx.want_min) {
      const int c = ctx.tms->central();
      acc.min_log_eta = std::min(acc.min_log_eta, P.log_scale + std::log(P.mat(c, c)));
      acc.min_log_rho = std::min(acc.min_log_rho, log_spectral_radius(P));
    }
    return;
  }
  if (ctx.prune && ctx.want_max) {
    // ||M(suffix) P||_1 <= ||P||_1 (max_i ||M_i||_1)^remaining; the margin
    // keeps the comparison conservative under rounding
    const double envelope = P.log_scale + std::log(op1_norm(P.mat)) +
                            (ctx.k - depth) * ctx.log_max_factor_norm + 1e-12;
    if (envelope < acc.max_log_rho && envelope < acc.max_log_norm) return;
  }
  for (int digit = 0; digit < ctx.letters; ++digit) {
    ScaledMatrix& next = stack[static_cast<size_t>(depth) + 1];
    next = P;
    push_factor(ctx.tms->mats[static_cast<size_t>(digit)], next, scratch);
    dfs(ctx, depth + 1, stack, scratch, acc);
  }
}

void run_subtree(const EnumCtx& ctx, const Word& prefix, const ScaledMatrix& seed,
                 EnumAcc& acc) {
  std::vector<ScaledMatrix> stack(static_cast<size_t>(ctx.k) + 1,
                                  ScaledMatrix{Matrix(ctx.tms->n), 0.0});
  Matrix scratch(ctx.tms->n);
  const int depth = static_cast<int>(prefix.size());
  stack[static_cast<size_t>(depth)] = seed;
  dfs(ctx, depth, stack, scratch, acc);
}

// Prefixes of length min(k,2): first digit restricted to [first_lo, first_hi],
// later digits free. Gives the two OMP workers enough tasks to balance.
std::vector<std::pair<Word, ScaledMatrix>> seed_prefixes(const TransferMatrixSet& tms, int k,
                                                         int letters, int first_lo,
                                                         int first_hi) {
  std::vector<std::pair<Word, ScaledMatrix>> seeds;
  Matrix scratch(tms.n);
  for (int first = first_lo; first <= first_hi; ++first) {
    ScaledMatrix P = seed_factor(tms, first);
    if (k == 1) {
      seeds.emplace_back(Word{first}, P);
      continue;
    }
    for (int second = 0; second < letters; ++second) {
      ScaledMatrix Q = P;
      push_factor(tms.mats[static_cast<size_t>(second)], Q, scratch);
      seeds.emplace_back(Word{first, second}, Q);
    }
  }
  return seeds;
}

EnumAcc enumerate_words(const EnumCtx& ctx, int first_lo, int first_hi, bool parallel) {
  if (!parallel) {
    EnumAcc acc;
    for (int first = first_lo; first <= first_hi; ++first)
      run_subtree(ctx, Word{first}, seed_factor(*ctx.tms, first), acc);
    return acc;
  }
  const auto seeds = seed_prefixes(*ctx.tms, ctx.k, ctx.letters, first_lo, first_hi);
  const std::int64_t n = static_cast<std::int64_t>(seeds.size());
  std::vector<EnumAcc> acc(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < n; ++s)
    run_subtree(ctx, seeds[static_cast<size_t>(s)].first, seeds[static_cast<size_t>(s)].second,
                acc[static_cast<size_t>(s)]);
  EnumAcc total;
  for (const EnumAcc& a : acc) total.merge(a);  // fixed prefix order
  return total;
}

void check_word_budget(const DigitSystem& sys, int k, int first_letters, const Budget& budget) {
  __int128 words = first_letters;
  for (int i = 1; i < k; ++i) {
    words *= sys.m() + 1;
    if (words > budget.max_words)
      fail(Errc::budget,
           "word enumeration at length " + std::to_string(k) + " exceeds the word budget");
  }
  if (words > budget.max_words)
    fail(Errc::budget,
         "word enumeration at length " + std::to_string(k) + " exceeds the word budget");
}

std::string bracket_meta(const char* kind, int k) {
  return std::string(kind) + " k=" + std::to_string(k) + " norm=op1";
}

Bracket jsr_bounds_impl(const DigitSystem& sys, int k, bool prune, const Budget& budget,
                        bool parallel) {
  if (k < 1) fail(Errc::bad_dimensions, "word length must be >= 1");
  check_word_budget(sys, k, sys.m() + 1, budget);
  const TransferMatrixSet tms = build_matrices(sys);
  EnumCtx ctx;
  ctx.tms = &tms;
  ctx.k = k;
  ctx.letters = sys.m() + 1;
  ctx.want_max = true;
  ctx.prune = prune;
  double mf = 0.0;
  for (const Matrix& M : tms.mats) mf = std::max(mf, op1_norm(M));
  ctx.log_max_factor_norm = std::log(mf);
  const EnumAcc acc = enumerate_words(ctx, 0, sys.m(), parallel);
  return make_bracket(std::exp(acc.max_log_rho / k), std::exp(acc.max_log_norm / k),
                      bracket_meta("jsr", k));
}

Bracket restricted_min_bounds_impl(const DigitSystem& sys, int k, const Budget& budget,
                                   bool parallel) {
  if (k < 1) fail(Errc::bad_dimensions, "word length must be >= 1");
  if (sys.m() < 2) fail(Errc::bad_dimensions, "no interior digits");
  check_word_budget(sys, k, sys.m() - 1, budget);
  const TransferMatrixSet tms = build_matrices(sys);
  EnumCtx ctx;
  ctx.tms = &tms;
  ctx.k = k;
  ctx.letters = sys.m() + 1;
  ctx.want_min = true;
  const EnumAcc acc = enumerate_words(ctx, 1, sys.m() - 1, parallel);
  // min eta <= min rho (eta <= rho per word), so the eta side is the lower end
  return make_bracket(std::exp(acc.min_log_eta / k), std::exp(acc.min_log_rho / k),
                      bracket_meta("restricted", k));
}

}  // namespace

Bracket jsr_bounds(const DigitSystem& sys, int k, bool prune, const Budget& budget) {
  return jsr_bounds_impl(sys, k, prune, budget, true);
}

Bracket restricted_min_bounds(const DigitSystem& sys, int k, const Budget& budget) {
  return restricted_min_bounds_impl(sys, k, budget, true);
}

namespace ref {

Bracket jsr_bounds(const DigitSystem& sys, int k, const Budget& budget) {
  return jsr_bounds_impl(sys, k, false, budget, false);
}

Bracket restricted_min_bounds(const DigitSystem& sys, int k, const Budget& budget) {
  return restricted_min_bounds_impl(sys, k, budget, false);
}

}  // namespace ref

// ---------------------------------------------------------------------------
// Lyapunov-type sums

namespace {

// Exact expectation: DFS accumulating p(sigma) * (-log ||M(sigma)||_1) in the
// natural word order.
void lyap_walk(const TransferMatrixSet& tms, const DigitSystem& sys, int k, int depth,
               double log_p_word, std::vector<ScaledMatrix>& stack, Matrix& scratch,
               double& sum) {
  if (depth == k) {
    const ScaledMatrix& P = stack[static_cast<size_t>(depth)];
    const double log_norm = P.log_scale + std::log(op1_norm(P.mat));
    sum += std::exp(log_p_word) * (-log_norm);
    return;
  }
  for (int digit = 0; digit <= sys.m(); ++digit) {
    ScaledMatrix& next = stack[static_cast<size_t>(depth) + 1];
    if (depth == 0) {
      next = seed_factor(tms, digit);
    } else {
      next = stack[static_cast<size_t>(depth)];
      push_factor(tms.mats[static_cast<size_t>(digit)], next, scratch);
    }
    lyap_walk(tms, sys, k, depth + 1, log_p_word + sys.log_p(digit), stack, scratch, sum);
  }
}

double mc_sample(const TransferMatrixSet& tms, const DigitSystem& sys,
                 const std::vector<double>& cdf, int k, std::uint64_t seed, std::int64_t idx,
                 std::vector<ScaledMatrix>& stack, Matrix& scratch) {
  SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(idx)));
  for (int pos = 0; pos < k; ++pos) {
    const double u = rng.next_unit();
    int digit = static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    digit = std::min(digit, sys.m());
    ScaledMatrix& next = stack[static_cast<size_t>(pos) + 1];
    if (pos == 0) {
      next = seed_factor(tms, digit);
    } else {
      next = stack[static_cast<size_t>(pos)];
      push_factor(tms.mats[static_cast<size_t>(digit)], next, scratch);
    }
  }
  const ScaledMatrix& P = stack[static_cast<size_t>(k)];
  return -(P.log_scale + std::log(op1_norm(P.mat)));
}

LyapunovResult lyapunov_impl(const DigitSystem& sys, int k, LyapMode mode,
                             std::int64_t samples, std::uint64_t seed, const Budget& budget,
                             bool parallel) {
  if (k < 1) fail(Errc::bad_dimensions, "word length must be >= 1");
  const TransferMatrixSet tms = build_matrices(sys);

  if (mode == LyapMode::exact) {
    check_word_budget(sys, k, sys.m() + 1, budget);
    LyapunovResult out;
    if (!parallel || k == 1) {
      double sum = 0.0;
      std::vector<ScaledMatrix> stack(static_cast<size_t>(k) + 1,
                                      ScaledMatrix{Matrix(tms.n), 0.0});
      Matrix scratch(tms.n);
      lyap_walk(tms, sys, k, 0, 0.0, stack, scratch, sum);
      out.value = sum / (k * sys.log_d());
      return out;
    }
    // one task per first digit; partials combined in digit order
    std::vector<double> partial(static_cast<size_t>(sys.m()) + 1, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 0; first <= sys.m(); ++first) {
      double sum = 0.0;
      std::vector<ScaledMatrix> stack(static_cast<size_t>(k) + 1,
                                      ScaledMatrix{Matrix(tms.n), 0.0});
      Matrix scratch(tms.n);
      stack[1] = seed_factor(tms, first);
      lyap_walk(tms, sys, k, 1, sys.log_p(first), stack, scratch, sum);
      partial[static_cast<size_t>(first)] = sum;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    out.value = total / (k * sys.log_d());
    return out;
  }

  if (samples < 1) fail(Errc::bad_sample_count, "montecarlo mode needs samples >= 1");
  std::vector<double> cdf(static_cast<size_t>(sys.m()) + 1);
  double run = 0.0;
  for (int i = 0; i <= sys.m(); ++i) {
    run += sys.p()[static_cast<size_t>(i)];
    cdf[static_cast<size_t>(i)] = run;
  }
  cdf.back() = 1.0;

  // per-sample counter-based streams; chunked partial sums keep the reduction
  // order independent of the thread count
  constexpr std::int64_t kChunk = 4096;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> sum1(static_cast<size_t>(chunks), 0.0);
  std::vector<double> sum2(static_cast<size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::vector<ScaledMatrix> stack(static_cast<size_t>(k) + 1,
                                    ScaledMatrix{Matrix(tms.n), 0.0});
    Matrix scratch(tms.n);
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(samples, lo + kChunk);
    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) {
      const double x = mc_sample(tms, sys, cdf, k, seed, i, stack, scratch);
      s1 += x;
      s2 += x * x;
    }
    sum1[static_cast<size_t>(c)] = s1;
    sum2[static_cast<size_t>(c)] = s2;
  }
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) {
    s1 += sum1[static_cast<size_t>(c)];
    s2 += sum2[static_cast<size_t>(c)];
  }
  const double n = static_cast<double>(samples);
  const double mean = s1 / n;
  const double var = std::max(0.0, s2 / n - mean * mean);
  const double scale = 1.0 / (k * sys.log_d());
  LyapunovResult out;
  out.value = mean * scale;
  out.std_error = std::sqrt(var / std::max(1.0, n - 1.0)) * scale;
  out.samples = samples;
  return out;
}

}  // namespace

LyapunovResult lyapunov_sum(const DigitSystem& sys, int k, LyapMode mode, std::int64_t samples,
                            std::uint64_t seed, const Budget& budget) {
  return lyapunov_impl(sys, k, mode, samples, seed, budget, true);
}

namespace ref {
LyapunovResult lyapunov_sum(const DigitSystem& sys, int k, LyapMode mode, std::int64_t samples,
                            std::uint64_t seed, const Budget& budget) {
  return lyapunov_impl(sys, k, mode, samples, seed, budget, false);
}
}  // namespace ref

}  // namespace mfz
