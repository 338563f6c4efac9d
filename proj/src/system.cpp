#include "mfz/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfz/atoms.hpp"
#include "mfz/error.hpp"

namespace mfz {

DigitSystem::DigitSystem(int d, int m, WeightVector p, bool require_regular)
    : d_(d), m_(m), p_(std::move(p)), xi_(m, d - 1) {
  if (d_ < 3 || m_ < d_) fail(Errc::bad_dimensions, "need d >= 3 and m >= d");
  if (p_.size() != static_cast<size_t>(m_) + 1)
    fail(Errc::not_probability_vector, "expected m+1 weights");
  check_probability_vector(p_);
  if (require_regular && !is_regular(p_))
    fail(Errc::not_regular, "p_0 or p_m exceeds an interior weight (flip or iterate first)");

  log_d_ = std::log(static_cast<double>(d_));
  delta_ = -1.0 / log_d_;
  a_ = 1 + (m_ - d_) / (d_ - 1);
  const auto [mn, mx] = std::minmax_element(p_.begin(), p_.end());
  theta_ = *mx / *mn;
  log_p_.resize(p_.size());
  for (size_t i = 0; i < p_.size(); ++i) log_p_[i] = std::log(p_[i]);
}

DigitSystem DigitSystem::create(int d, int m, WeightVector p) {
  return DigitSystem(d, m, std::move(p), true);
}

DigitSystem DigitSystem::create_unchecked(int d, int m, WeightVector p) {
  return DigitSystem(d, m, std::move(p), false);
}

bool DigitSystem::regular() const { return is_regular(p_); }

std::int64_t DigitSystem::atom_count(int k, const Budget& budget) const {
  if (k < 1) fail(Errc::bad_dimensions, "level must be >= 1");
  __int128 j = 0;  // m (1 + d + ... + d^{k-1})
  __int128 pow = 1;
  for (int i = 0; i < k; ++i) {
    j += pow;
    pow *= d_;
    if (j * m_ > budget.max_atoms)
      fail(Errc::overflow, "level " + std::to_string(k) + " exceeds the atom budget");
  }
  return static_cast<std::int64_t>(j * m_);
}

std::int64_t DigitSystem::word_index(const Word& w) const {
  if (w.empty()) fail(Errc::bad_dimensions, "empty word");
  __int128 j = 0;
  for (int digit : w) {
    if (digit < 0 || digit > m_) fail(Errc::bad_dimensions, "digit outside 0..m");
    j = j * d_ + digit;
    if (j > INT64_MAX) fail(Errc::overflow, "word index exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(j);
}

DigitSystem flip(const DigitSystem& sys) {
  if (sys.p().front() <= sys.p().back()) return sys;
  return DigitSystem::create_unchecked(sys.d(), sys.m(), flip_weights(sys.p()));
}

DigitSystem iterate(const DigitSystem& sys, int k, const Budget& budget) {
  if (k < 1) fail(Errc::bad_dimensions, "iteration depth must be >= 1");
  if (k == 1) return sys;
  const std::int64_t d_new = ipow_checked(sys.d(), k);
  if (d_new > (std::int64_t(1) << 30)) fail(Errc::overflow, "iterated base too large");
  const std::int64_t m_new = sys.atom_count(k, budget);

  AtomLevel level = atom_masses(sys, k, budget);
  WeightVector p_new(level.log_mass.size());
  for (size_t j = 0; j < p_new.size(); ++j) p_new[j] = std::exp(level.log_mass[j]);

  // new weights are regular whenever the input is
  return DigitSystem::create_unchecked(static_cast<int>(d_new), static_cast<int>(m_new),
                                       std::move(p_new));
}

DigitSystem cantor_convolution(int k, double bias) {
  if (k < 3) fail(Errc::bad_dimensions, "convolution order must be >= 3");
  if (!(bias > 0.0 && bias <= 0.5)) fail(Errc::bad_config, "bias outside (0, 1/2]");
  if (bias < regularity_threshold(k))
    fail(Errc::not_regular, "bias below the regularity threshold " +
                                std::to_string(regularity_threshold(k)));
  return DigitSystem::create(3, k, binomial_weights(k, bias));
}

namespace {

// Level-k atom block [j d^-k, (j + xi) d^-k] inside (xi - 1, 1), both strict,
// in exact integer arithmetic:
//   j (d-1) > (m-d+1) d^k   and   j (d-1) + m < d^k (d-1).
bool barrier_atom_ok(std::int64_t j, int d, int m, std::int64_t dk) {
  const __int128 lhs = static_cast<__int128>(j) * (d - 1);
  const __int128 left = static_cast<__int128>(m - d + 1) * dk;
  const __int128 right = static_cast<__int128>(dk) * (d - 1) - m;
  return lhs > left && lhs < right;
}

}  // namespace

bool is_barrier_digit(const DigitSystem& sys, int b) {
  if (b < 0 || b > sys.m()) return false;
  if (!(Rational(sys.m(), sys.d() - 1) < Rational(2, 1))) return false;
  return barrier_atom_ok(b, sys.d(), sys.m(), sys.d());
}

BarrierSearch find_barrier(const DigitSystem& sys, int max_level) {
  if (!(sys.xi() < Rational(2, 1)))
    fail(Errc::no_barrier, "xi >= 2: the support is too wide for a barrier digit");
  if (max_level < 1) fail(Errc::bad_dimensions, "max_level must be >= 1");

  for (int k = 1; k <= max_level; ++k) {
    const std::int64_t dk = ipow_checked(sys.d(), k);
    const std::int64_t jmax = sys.atom_count(k);
    BarrierSearch out;
    out.level = k;
    for (std::int64_t j = 0; j <= jmax; ++j)
      if (barrier_atom_ok(j, sys.d(), sys.m(), dk)) out.atoms.push_back(j);
    if (!out.atoms.empty()) return out;
  }
  fail(Errc::not_found, "no barrier atom up to level " + std::to_string(max_level) +
                            " (raise max_level)");
}

}  // namespace mfz
