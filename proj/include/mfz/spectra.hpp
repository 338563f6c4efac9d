#ifndef MFZ_SPECTRA_HPP
#define MFZ_SPECTRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfz/atoms.hpp"
#include "mfz/budget.hpp"
#include "mfz/system.hpp"

namespace mfz {

// Which side of the limit a finite-k value certifiably bounds.
enum class BoundDir { exact, lower_approx, upper_approx };

const char* to_string(BoundDir d);

struct DirectedValue {
  double value = 0.0;
  BoundDir dir = BoundDir::exact;
};

// Finite-k L^q spectrum value delta (1/k) log Sbar_k(q), Fekete-certified:
// q = 1 -> 0 exactly; q <= 0 -> the raw value is a lower bound; q > 0 -> the
// value plus the log(floor(xi)+1)/(k log d) slack is an upper bound (the
// returned value includes the slack).
DirectedValue tau(const DigitSystem& sys, double q, int k, const Budget& budget = {});
DirectedValue tau(const AtomLevel& level, const DigitSystem& sys, double q);

// Finite-k restricted spectrum delta (1/k) log Shat_k(q). log Shat is exactly
// superadditive, so every finite k is an upper approximant of tau-hat.
DirectedValue tau_hat(const DigitSystem& sys, int b, double q, int k, const Budget& budget = {});
DirectedValue tau_hat(const AtomLevel& level, const DigitSystem& sys, int b, double q);

// Unique root of Shat_k(beta) = 1 in (0,1), bisected to 1e-12.
double beta_k(const DigitSystem& sys, int b, int k, const Budget& budget = {});
double beta_k(const AtomLevel& level, const DigitSystem& sys, int b);

// Crossing tau-hat_k(q) = alpha-bar q on q < 0. nullopt when the formalism
// criterion reports alpha* = alpha-bar; Unresolved when the alpha* bracket at
// word length cert_len cannot certify alpha* < alpha-bar.
std::optional<double> q_crossing(const DigitSystem& sys, int b, int k, int cert_len = 4,
                                 const Budget& budget = {});

// tau(q) = alpha-bar q for q <= q0, tau-hat_k(q) past the crossing.
DirectedValue tau_piecewise(const DigitSystem& sys, int b, double q, int k, int cert_len = 4,
                            const Budget& budget = {});

struct CurvePoint {
  double x = 0.0;
  double value = 0.0;
  BoundDir dir = BoundDir::exact;
  bool trusted = true;
};

struct SpectrumCurve {
  enum class Axis { q, alpha };
  Axis axis = Axis::q;
  std::vector<CurvePoint> points;  // x strictly increasing
  int k = 0;                       // level used
  std::string method;
};

SpectrumCurve tau_curve(const DigitSystem& sys, int k, double q_min, double q_max,
                        double q_step, const Budget& budget = {});
SpectrumCurve tau_hat_curve(const DigitSystem& sys, int b, int k, double q_min, double q_max,
                            double q_step, const Budget& budget = {});

// Discrete concave conjugate g*(alpha) = min_q (q alpha - g(q)) over the grid,
// alpha spanning the extreme discrete slopes; ties break toward smaller q.
// Throws NotConcave when second differences violate the 1e-8 tolerance.
SpectrumCurve legendre(const SpectrumCurve& curve, int alpha_points = 0);

// Legendre conjugate of the finite-k tau-hat curve, restricted to the
// certified (alpha_lower, alpha*) interior; outside points flagged untrusted.
SpectrumCurve multifractal_spectrum(const DigitSystem& sys, int b, int k, double q_min,
                                    double q_max, double q_step, int cert_len = 4,
                                    const Budget& budget = {});

struct DimRange {
  double lo = 0.0;
  double hi = 0.0;
  double beta = 0.0;  // auxiliary exponent used for the scaling
};

// Interval certified to lie inside the attained-dimension set, built from the
// barrier block of level-k masses and beta_k.
DimRange dim_range_inner(const DigitSystem& sys, int b, int k, const Budget& budget = {});
DimRange dim_range_inner(const AtomLevel& level, const DigitSystem& sys, int b);

}  // namespace mfz

#endif
