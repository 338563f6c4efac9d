#include "mfz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfz/dims.hpp"
#include "mfz/error.hpp"
#include "mfz/logsum.hpp"

namespace mfz {

const char* to_string(BoundDir d) {
  switch (d) {
    case BoundDir::exact: return "exact";
    case BoundDir::lower_approx: return "lower_approx";
    case BoundDir::upper_approx: return "upper_approx";
  }
  return "unknown";
}

namespace {

// log(floor(xi)+1)/(k log d): the constant in the q >= 0 Fekete sandwich.
double tau_slack(const DigitSystem& sys, int k) {
  const std::int64_t floor_xi = sys.m() / (sys.d() - 1);
  return std::log(static_cast<double>(floor_xi + 1)) / (k * sys.log_d());
}

}  // namespace

DirectedValue tau(const AtomLevel& level, const DigitSystem& sys, double q) {
  if (q == 1.0) return {0.0, BoundDir::exact};  // Sbar_k(1) = 1 identically
  const double raw = sys.delta() / level.k * sbar(level, q);
  if (q <= 0.0) return {raw, BoundDir::lower_approx};
  // log Sbar - log(floor(xi)+1) is superadditive, so the slack-corrected
  // value certifiably bounds tau from above
  return {raw + tau_slack(sys, level.k), BoundDir::upper_approx};
}

DirectedValue tau(const DigitSystem& sys, double q, int k, const Budget& budget) {
  return tau(atom_masses(sys, k, budget), sys, q);
}

DirectedValue tau_hat(const AtomLevel& level, const DigitSystem& sys, int b, double q) {
  // log Shat is superadditive with no constant, so (1/k) log Shat_k increases
  // to its supremum and the delta-scaled value decreases to tau-hat: every
  // finite k is an upper approximant.
  return {sys.delta() / level.k * shat(level, sys, b, q), BoundDir::upper_approx};
}

DirectedValue tau_hat(const DigitSystem& sys, int b, double q, int k, const Budget& budget) {
  return tau_hat(atom_masses(sys, k, budget), sys, b, q);
}

double beta_k(const AtomLevel& level, const DigitSystem& sys, int b) {
  double lo = 0.0, hi = 1.0;
  const double f_lo = shat(level, sys, b, lo);
  const double f_hi = shat(level, sys, b, hi);
  if (!(f_lo > 0.0) || !(f_hi < 0.0))
    fail(Errc::unresolved, "Shat bracket check failed: Shat(0)=" + std::to_string(f_lo) +
                               " Shat(1)=" + std::to_string(f_hi));
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (shat(level, sys, b, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double beta_k(const DigitSystem& sys, int b, int k, const Budget& budget) {
  if (k < 2) fail(Errc::bad_dimensions, "beta_k needs k >= 2");
  return beta_k(atom_masses(sys, k, budget), sys, b);
}

std::optional<double> q_crossing(const DigitSystem& sys, int b, int k, int cert_len,
                                 const Budget& budget) {
  if (!is_barrier_digit(sys, b))
    fail(Errc::not_a_barrier, "digit " + std::to_string(b) + " is not a verified barrier");
  if (formalism_holds(sys)) return std::nullopt;  // alpha* = alpha-bar

  const double abar = alpha_bar(sys);
  const Bracket star = alpha_star_bracket(sys, cert_len, budget);
  if (!(star.upper < abar))
    fail(Errc::unresolved, "alpha* bracket at length " + std::to_string(cert_len) +
                               " cannot certify alpha* < alpha-bar");

  const AtomLevel level = atom_masses(sys, k, budget);
  auto g = [&](double q) { return tau_hat(level, sys, b, q).value - abar * q; };
  // g is concave with g(0) < 0 and g -> +inf as q -> -inf: unique crossing
  double q_neg = -1.0;
  while (g(q_neg) <= 0.0) {
    q_neg *= 2.0;
    if (q_neg < -1e4)
      fail(Errc::unresolved, "no crossing found down to q = -1e4");
  }
  double lo = q_neg, hi = 0.0;  // g(lo) > 0 >= g(hi)
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, -lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DirectedValue tau_piecewise(const DigitSystem& sys, int b, double q, int k, int cert_len,
                            const Budget& budget) {
  const std::optional<double> q0 = q_crossing(sys, b, k, cert_len, budget);
  if (q0 && q <= *q0) return {alpha_bar(sys) * q, BoundDir::exact};
  return tau_hat(sys, b, q, k, budget);
}

namespace {

SpectrumCurve curve_on_grid(const DigitSystem& sys, int k, double q_min, double q_max,
                            double q_step, const Budget& budget, int b, bool hat) {
  if (!(q_step > 0.0) || !(q_min < q_max)) fail(Errc::bad_config, "bad q grid");
  const AtomLevel level = atom_masses(sys, k, budget);
  SpectrumCurve c;
  c.axis = SpectrumCurve::Axis::q;
  c.k = k;
  c.method = hat ? "tau_hat finite-k" : "tau finite-k";
  const int n = static_cast<int>(std::floor((q_max - q_min) / q_step + 1e-9)) + 1;
  c.points.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double q = q_min + i * q_step;
    const DirectedValue v = hat ? tau_hat(level, sys, b, q) : tau(level, sys, q);
    c.points.push_back({q, v.value, v.dir, true});
  }
  return c;
}

}  // namespace

SpectrumCurve tau_curve(const DigitSystem& sys, int k, double q_min, double q_max,
                        double q_step, const Budget& budget) {
  return curve_on_grid(sys, k, q_min, q_max, q_step, budget, 0, false);
}

SpectrumCurve tau_hat_curve(const DigitSystem& sys, int b, int k, double q_min, double q_max,
                            double q_step, const Budget& budget) {
  return curve_on_grid(sys, k, q_min, q_max, q_step, budget, b, true);
}

SpectrumCurve legendre(const SpectrumCurve& curve, int alpha_points) {
  const auto& pts = curve.points;
  if (pts.size() < 2) fail(Errc::bad_config, "legendre needs at least two grid points");
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i].x < pts[i + 1].x)) fail(Errc::bad_config, "grid not strictly increasing");

  // concavity check: divided-difference slopes must be non-increasing
  std::vector<double> slope(pts.size() - 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    slope[i] = (pts[i + 1].value - pts[i].value) / (pts[i + 1].x - pts[i].x);
  for (size_t i = 0; i + 1 < slope.size(); ++i)
    if (slope[i + 1] > slope[i] + 1e-8)
      fail(Errc::not_concave, "second-difference violation at grid index " + std::to_string(i));

  const double alpha_min = slope.back();
  const double alpha_max = slope.front();
  // a linear input has a single attainable slope (its conjugate is one point)
  const int n_alpha = alpha_max - alpha_min < 1e-12
                          ? 1
                          : (alpha_points > 1 ? alpha_points : 2 * static_cast<int>(pts.size()));

  bool all_exact = true;
  for (const CurvePoint& p : pts) all_exact = all_exact && p.dir == BoundDir::exact;
  // conjugating an upper approximant yields a lower approximant
  const BoundDir out_dir = all_exact ? BoundDir::exact : BoundDir::lower_approx;

  SpectrumCurve out;
  out.axis = SpectrumCurve::Axis::alpha;
  out.k = curve.k;
  out.method = "legendre(" + curve.method + ")";
  out.points.reserve(static_cast<size_t>(n_alpha));
  for (int i = 0; i < n_alpha; ++i) {
    const double alpha =
        n_alpha == 1 ? alpha_min
                     : alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) /
                           (n_alpha - 1);
    double best = std::numeric_limits<double>::infinity();
    for (const CurvePoint& p : pts) {
      const double v = p.x * alpha - p.value;
      if (v < best) best = v;  // strict: ties break toward smaller q
    }
    out.points.push_back({alpha, best, out_dir, true});
  }
  return out;
}

SpectrumCurve multifractal_spectrum(const DigitSystem& sys, int b, int k, double q_min,
                                    double q_max, double q_step, int cert_len,
                                    const Budget& budget) {
  SpectrumCurve fh = legendre(tau_hat_curve(sys, b, k, q_min, q_max, q_step, budget));
  const Bracket lower = alpha_lower_bracket(sys, cert_len, false, budget);
  const Bracket star = alpha_star_bracket(sys, cert_len, budget);
  // trusted only strictly inside the certified (alpha_lower, alpha*) interval
  for (CurvePoint& p : fh.points)
    p.trusted = lower.upper < p.x && p.x < star.lower;
  fh.method += " restricted to certified range";
  return fh;
}

DimRange dim_range_inner(const AtomLevel& level, const DigitSystem& sys, int b) {
  const double beta = beta_k(level, sys, b);
  const std::int64_t start = b * ipow_checked(sys.d(), level.k - 1);
  const std::int64_t count = sys.atom_count(level.k - 1) + 1;
  double max_log = kNegInf, min_log = 0.0;
  for (std::int64_t j = 0; j < count; ++j) {
    const double lw = level.log_mass[static_cast<size_t>(start + j)];
    max_log = std::max(max_log, lw);
    min_log = std::min(min_log, lw);
  }
  // The barrier sub-IFS carries weights eta(b,sigma)^beta_k and contraction
  // d^-k, so its local dimensions are beta_k * (delta log eta / k); scaling
  // the attained set back by 1/beta_k cancels the exponent, leaving
  // [delta max log / k, delta min log / k] inside the attained-dimension set.
  DimRange r;
  r.beta = beta;
  r.lo = sys.delta() * max_log / level.k;
  r.hi = sys.delta() * min_log / level.k;
  return r;
}

DimRange dim_range_inner(const DigitSystem& sys, int b, int k, const Budget& budget) {
  if (k < 2) fail(Errc::bad_dimensions, "dim_range_inner needs k >= 2");
  return dim_range_inner(atom_masses(sys, k, budget), sys, b);
}

}  // namespace mfz
