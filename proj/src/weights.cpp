#include "mfz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfz/error.hpp"

namespace mfz {

void check_probability_vector(const WeightVector& p) {
  if (p.size() < 2) fail(Errc::not_probability_vector, "need at least two weights");
  double sum = 0.0;
  for (double x : p) {
    if (!(x > 0.0))
      fail(Errc::not_probability_vector, "weights must be strictly positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    fail(Errc::not_probability_vector, "weights sum to " + std::to_string(sum));
}

bool is_regular(const WeightVector& p) {
  const size_t m = p.size() - 1;
  const double ends = std::max(p.front(), p.back());
  for (size_t i = 1; i < m; ++i)
    if (p[i] < ends) return false;
  return true;
}

WeightVector flip_weights(const WeightVector& p) {
  if (p.front() <= p.back()) return p;
  WeightVector out(p.rbegin(), p.rend());
  return out;
}

namespace {

// convolution admits the trivial length-1 identity (1)
void check_convolvable(const WeightVector& p) {
  if (p.empty()) fail(Errc::not_probability_vector, "empty weight vector");
  double sum = 0.0;
  for (double x : p) {
    if (!(x > 0.0)) fail(Errc::not_probability_vector, "weights must be strictly positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    fail(Errc::not_probability_vector, "weights sum to " + std::to_string(sum));
}

}  // namespace

WeightVector convolve_weights(const WeightVector& p, const WeightVector& q) {
  check_convolvable(p);
  check_convolvable(q);
  WeightVector v(p.size() + q.size() - 1, 0.0);
  for (size_t j = 0; j < p.size(); ++j)
    for (size_t j2 = 0; j2 < q.size(); ++j2) v[j + j2] += p[j] * q[j2];
  return v;
}

double regularity_threshold(int m) {
  if (m < 2) fail(Errc::bad_dimensions, "regularity threshold needs m >= 2");
  return 1.0 / (1.0 + std::pow(static_cast<double>(m), 1.0 / (m - 1)));
}

WeightVector binomial_weights(int m, double bias) {
  if (m < 1) fail(Errc::bad_dimensions, "binomial weights need m >= 1");
  if (!(bias > 0.0 && bias < 1.0)) fail(Errc::not_probability_vector, "bias outside (0,1)");
  WeightVector p(static_cast<size_t>(m) + 1);
  double binom = 1.0;  // C(m,i), exact in double for desk-scale m
  for (int i = 0; i <= m; ++i) {
    p[static_cast<size_t>(i)] =
        binom * std::pow(1.0 - bias, i) * std::pow(bias, m - i);
    binom = binom * (m - i) / (i + 1);
  }
  return p;
}

}  // namespace mfz
