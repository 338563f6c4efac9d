#ifndef MFZ_LOGSUM_HPP
#define MFZ_LOGSUM_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace mfz {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum exp(x_i)), two-pass, accumulation in ascending index order.
inline double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return kNegInf;
  double m = xs[0];
  for (double x : xs)
    if (x > m) m = x;
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// log(sum_j exp(q * logw_j)). Fixed chunk size keeps the reduction order
// independent of the thread count, so runs are bit-reproducible.
double log_sum_exp_scaled(std::span<const double> logw, double q);

namespace ref {
double log_sum_exp_scaled(std::span<const double> logw, double q);
}

}  // namespace mfz

#endif
