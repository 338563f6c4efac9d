#include "mfz/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfz/error.hpp"
#include "mfz/logsum.hpp"

namespace mfz {

namespace {

// One DP cell: log w_next(j') = lse over a in {j' mod d, j' mod d + d, ...}
// of log p_a + log w_prev((j'-a)/d). Term order is fixed (ascending a) in both
// the serial and the parallel kernel.
inline double dp_cell(std::int64_t jp, int d, int m, const std::vector<double>& log_p,
                      const std::vector<double>& prev) {
  const std::int64_t j_prev_max = static_cast<std::int64_t>(prev.size()) - 1;
  const int a0 = static_cast<int>(jp % d);
  double mx = kNegInf;
  for (int a = a0; a <= m; a += d) {
    const std::int64_t idx = (jp - a) / d;
    if (idx < 0 || idx > j_prev_max) continue;
    mx = std::max(mx, log_p[static_cast<size_t>(a)] + prev[static_cast<size_t>(idx)]);
  }
  double s = 0.0;
  for (int a = a0; a <= m; a += d) {
    const std::int64_t idx = (jp - a) / d;
    if (idx < 0 || idx > j_prev_max) continue;
    s += std::exp(log_p[static_cast<size_t>(a)] + prev[static_cast<size_t>(idx)] - mx);
  }
  return mx + std::log(s);
}

AtomLevel seed_level(const DigitSystem& sys) {
  AtomLevel lv;
  lv.k = 1;
  lv.log_mass.resize(static_cast<size_t>(sys.m()) + 1);
  for (int i = 0; i <= sys.m(); ++i) lv.log_mass[static_cast<size_t>(i)] = sys.log_p(i);
  return lv;
}

}  // namespace

AtomLevel atom_masses(const DigitSystem& sys, int k, const Budget& budget) {
  if (k < 1) fail(Errc::bad_dimensions, "level must be >= 1");
  sys.atom_count(k, budget);  // budget gate before allocating anything
  AtomLevel lv = seed_level(sys);
  const int d = sys.d();
  const int m = sys.m();
  std::vector<double> log_p(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) log_p[static_cast<size_t>(i)] = sys.log_p(i);

  std::vector<double> next;
  for (int lvl = 2; lvl <= k; ++lvl) {
    const std::int64_t jmax = sys.atom_count(lvl, budget);
    next.assign(static_cast<size_t>(jmax) + 1, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t jp = 0; jp <= jmax; ++jp)
      next[static_cast<size_t>(jp)] = dp_cell(jp, d, m, log_p, lv.log_mass);
    lv.log_mass.swap(next);
    lv.k = lvl;
  }
  return lv;
}

namespace ref {

AtomLevel atom_masses(const DigitSystem& sys, int k, const Budget& budget) {
  if (k < 1) fail(Errc::bad_dimensions, "level must be >= 1");
  sys.atom_count(k, budget);
  AtomLevel lv = seed_level(sys);
  const int d = sys.d();
  const int m = sys.m();
  std::vector<double> log_p(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) log_p[static_cast<size_t>(i)] = sys.log_p(i);

  std::vector<double> next;
  for (int lvl = 2; lvl <= k; ++lvl) {
    const std::int64_t jmax = sys.atom_count(lvl, budget);
    next.assign(static_cast<size_t>(jmax) + 1, 0.0);
    for (std::int64_t jp = 0; jp <= jmax; ++jp)
      next[static_cast<size_t>(jp)] = dp_cell(jp, d, m, log_p, lv.log_mass);
    lv.log_mass.swap(next);
    lv.k = lvl;
  }
  return lv;
}

}  // namespace ref

double eta_word(const AtomLevel& level, const DigitSystem& sys, const Word& w) {
  if (static_cast<int>(w.size()) != level.k)
    fail(Errc::bad_dimensions, "word length does not match the atom level");
  return level.log_mass[static_cast<size_t>(sys.word_index(w))];
}

double eta_word(const DigitSystem& sys, const Word& w, const Budget& budget) {
  if (w.empty()) fail(Errc::bad_dimensions, "empty word");
  AtomLevel lv = atom_masses(sys, static_cast<int>(w.size()), budget);
  return eta_word(lv, sys, w);
}

double sbar(const AtomLevel& level, double q) {
  return log_sum_exp_scaled(level.log_mass, q);
}

double sbar(const DigitSystem& sys, int k, double q, const Budget& budget) {
  return sbar(atom_masses(sys, k, budget), q);
}

double shat(const AtomLevel& level, const DigitSystem& sys, int b, double q) {
  if (!is_barrier_digit(sys, b))
    fail(Errc::not_a_barrier, "digit " + std::to_string(b) + " is not a verified barrier");
  if (level.k < 2) fail(Errc::bad_dimensions, "shat needs level k >= 2");
  const std::int64_t start = b * ipow_checked(sys.d(), level.k - 1);
  const std::int64_t count = sys.atom_count(level.k - 1) + 1;
  return log_sum_exp_scaled(
      std::span<const double>(level.log_mass.data() + start, static_cast<size_t>(count)), q);
}

double shat(const DigitSystem& sys, int b, int k, double q, const Budget& budget) {
  return shat(atom_masses(sys, k, budget), sys, b, q);
}

double entropy_sum(const AtomLevel& level, const DigitSystem& sys) {
  const std::int64_t n = static_cast<std::int64_t>(level.log_mass.size());
  const std::int64_t chunk = 8192;
  const std::int64_t chunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(static_cast<size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    double s = 0.0;
    for (std::int64_t j = lo; j < hi; ++j) {
      const double lw = level.log_mass[static_cast<size_t>(j)];
      s -= std::exp(lw) * lw;
    }
    partial[static_cast<size_t>(c)] = s;
  }
  double h = 0.0;
  for (double v : partial) h += v;
  return h / (level.k * sys.log_d());
}

double entropy_sum(const DigitSystem& sys, int k, const Budget& budget) {
  return entropy_sum(atom_masses(sys, k, budget), sys);
}

double neighbor_ratio_audit(const AtomLevel& level, const DigitSystem& sys) {
  const std::int64_t n = static_cast<std::int64_t>(level.log_mass.size());
  double max_gap = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_gap)
  for (std::int64_t j = 0; j < n - 1; ++j) {
    const double gap = std::abs(level.log_mass[static_cast<size_t>(j)] -
                                level.log_mass[static_cast<size_t>(j + 1)]);
    max_gap = std::max(max_gap, gap);
  }
  return std::exp(max_gap) / (level.k * sys.theta());
}

double neighbor_ratio_audit(const DigitSystem& sys, int k, const Budget& budget) {
  return neighbor_ratio_audit(atom_masses(sys, k, budget), sys);
}

}  // namespace mfz
