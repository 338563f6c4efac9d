#include "mfz/logsum.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace mfz {

namespace {
constexpr std::int64_t kChunk = 8192;
}

namespace ref {

double log_sum_exp_scaled(std::span<const double> logw, double q) {
  if (logw.empty()) return kNegInf;
  double m = q * logw[0];
  for (double lw : logw) m = std::max(m, q * lw);
  double s = 0.0;
  for (double lw : logw) s += std::exp(q * lw - m);
  return m + std::log(s);
}

}  // namespace ref

double log_sum_exp_scaled(std::span<const double> logw, double q) {
  const std::int64_t n = static_cast<std::int64_t>(logw.size());
  if (n == 0) return kNegInf;
  if (n < 4 * kChunk) return ref::log_sum_exp_scaled(logw, q);

  double m = q * logw[0];
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::int64_t i = 0; i < n; ++i) m = std::max(m, q * logw[i]);

  const std::int64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(static_cast<size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(n, lo + kChunk);
    double s = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) s += std::exp(q * logw[i] - m);
    partial[static_cast<size_t>(c)] = s;
  }
  // fixed chunk combination order -> bit-reproducible across thread counts
  double s = 0.0;
  for (double v : partial) s += v;
  return m + std::log(s);
}

}  // namespace mfz
