#ifndef MFZ_WEIGHTS_HPP
#define MFZ_WEIGHTS_HPP

#include <vector>

namespace mfz {

// Probability vector p_0..p_m over the digit set.
using WeightVector = std::vector<double>;

// Throws NotAProbabilityVector unless length >= 2, all entries > 0 and the sum
// is 1 within 1e-12.
void check_probability_vector(const WeightVector& p);

// p_0 <= p_i and p_m <= p_i for all interior i.
bool is_regular(const WeightVector& p);

// Reverses p when p_0 > p_m; identity otherwise. Output has p_0 <= p_m.
WeightVector flip_weights(const WeightVector& p);

// v_i = sum { p_j * q_j' : j + j' = i }, length m + m' + 1.
WeightVector convolve_weights(const WeightVector& p, const WeightVector& q);

// Minimal bias that keeps the m-fold biased-Cantor weights regular:
// 1 / (1 + m^(1/(m-1))).
double regularity_threshold(int m);

// p_i = C(m,i) (1-bias)^i bias^(m-i)
WeightVector binomial_weights(int m, double bias);

}  // namespace mfz

#endif
