#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mfz/dims.hpp"
#include "mfz/error.hpp"
#include "mfz/system.hpp"

using namespace mfz;

namespace {
DigitSystem cantor3() { return cantor_convolution(3, 0.5); }
DigitSystem cantor4() { return cantor_convolution(4, 0.5); }
DigitSystem uniform(int d) {
  return new_system(d, d, WeightVector(static_cast<size_t>(d) + 1, 1.0 / (d + 1)));
}
}  // namespace

TEST_CASE("alpha_bar and dim_at_xi") {
  CHECK(alpha_bar(cantor3()) ==
        doctest::Approx(3 * std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(alpha_bar(cantor3()) == doctest::Approx(1.892789).epsilon(1e-6));
  CHECK(alpha_bar(cantor4()) ==
        doctest::Approx(4 * std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(alpha_bar(cantor4()) == doctest::Approx(2.523719).epsilon(1e-6));
  // symmetric weights: both endpoint dimensions agree
  CHECK(alpha_bar(cantor3()) == dim_at_xi(cantor3()));
  CHECK(alpha_bar(uniform(3)) == dim_at_xi(uniform(3)));
}

TEST_CASE("alpha_lower_bracket") {
  const Bracket br = alpha_lower_bracket(uniform(3), 6);
  CHECK(br.lower <= br.upper + 1e-12);
  CHECK(br.contains(golden_closed_form(3)));

  // rho~ is monotone along doubling, so the dimension upper endpoint
  // (delta log rho~) is nonincreasing from k to 2k
  const Bracket b2 = alpha_lower_bracket(cantor3(), 2);
  const Bracket b4 = alpha_lower_bracket(cantor3(), 4);
  CHECK(b4.upper <= b2.upper + 1e-12);
}

TEST_CASE("alpha_star_bracket") {
  const double target = std::log(16.0 / 5.0) / std::log(3.0);
  for (int k : {1, 2, 4}) {
    const Bracket br = alpha_star_bracket(cantor4(), k);
    CHECK(br.lower <= br.upper + 1e-12);
    CHECK(br.contains(target));
  }
  // isolation certificate at modest depth
  const Bracket b4 = alpha_star_bracket(cantor4(), 4);
  CHECK(b4.upper < alpha_bar(cantor4()));
}

TEST_CASE("gamma bracket") {
  const Bracket g = gamma_bracket(cantor3(), 8, 5, LyapMode::exact);
  CHECK(g.lower <= g.upper);
  // almost-sure dimension sits between the extreme dimensions
  const Bracket lower = alpha_lower_bracket(cantor3(), 5);
  CHECK(g.lower >= lower.lower - 0.5);  // loose sanity at shallow k
  CHECK(g.upper <= alpha_bar(cantor3()) + 1e-9);

  const Bracket gmc = gamma_bracket(cantor3(), 8, 5, LyapMode::montecarlo, 50000, 7u);
  CHECK(gmc.lower <= gmc.upper);
  CHECK(gmc.lower <= g.lower + 1e-9);  // widened by 3 standard errors
}

TEST_CASE("periodic_dim") {
  CHECK(periodic_dim(cantor4(), {1}) ==
        doctest::Approx(std::log(16.0 / 5.0) / std::log(3.0)).epsilon(1e-9));
  CHECK(periodic_dim(cantor4(), {1}) == doctest::Approx(1.0587455).epsilon(1e-6));

  const double zeta = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(periodic_dim(uniform(3), {0, 1}) ==
        doctest::Approx((std::log(4.0) - std::log(zeta)) / std::log(3.0)).epsilon(1e-9));

  // rho(A^2) = rho(A)^2 makes sigma and sigma sigma equivalent
  CHECK(periodic_dim(cantor3(), {1, 2}) ==
        doctest::Approx(periodic_dim(cantor3(), {1, 2, 1, 2})).epsilon(1e-9));

  CHECK_THROWS_AS(periodic_dim(cantor3(), {0, 0}), Error);
  CHECK_THROWS_AS(periodic_dim(cantor3(), {3, 3, 3}), Error);
  try {
    periodic_dim(cantor3(), {0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_word);
  }

  // interior-start periodic dimensions live inside the [alpha_lower, alpha*]
  // envelope
  const Bracket lower = alpha_lower_bracket(cantor4(), 5);
  const Bracket star = alpha_star_bracket(cantor4(), 5);
  for (const Word& w : {Word{1}, Word{2}, Word{3}, Word{1, 2}, Word{2, 2, 1}, Word{3, 0, 1}}) {
    CHECK(periodic_dim(cantor4(), w) >= lower.lower - 1e-9);
    CHECK(periodic_dim(cantor4(), w) <= star.upper + 1e-9);
  }
}

TEST_CASE("formalism_holds") {
  CHECK(formalism_holds(uniform(3)));
  CHECK(formalism_holds(uniform(4)));
  CHECK_FALSE(formalism_holds(cantor3()));
  CHECK_FALSE(formalism_holds(cantor4()));
  // m = 2d-1 always fails the m <= 2d-2 gate
  const DigitSystem wide = new_system(3, 5, WeightVector(6, 1.0 / 6));
  CHECK_FALSE(formalism_holds(wide));
}

TEST_CASE("golden_closed_form") {
  CHECK(golden_closed_form(3) == doctest::Approx(0.823842).epsilon(1e-6));
  const double zeta = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(golden_closed_form(4) ==
        doctest::Approx((std::log(5.0) - std::log(zeta)) / std::log(4.0)).epsilon(1e-12));
  CHECK(golden_closed_form(4) == doctest::Approx(0.813843).epsilon(1e-6));
}

TEST_CASE("abs_continuity_certificate") {
  CHECK(abs_continuity_certificate(new_system(3, 5, WeightVector(6, 1.0 / 6))));
  CHECK(abs_continuity_certificate(new_system(3, 8, WeightVector(9, 1.0 / 9))));
  CHECK_FALSE(abs_continuity_certificate(cantor3()));
}

TEST_CASE("dimension report invariants") {
  const DimensionReport r = dimension_report(cantor4(), 4, 6, 4);
  CHECK(r.alpha_lower.upper <= r.gamma.upper + 1e-9);
  CHECK(r.gamma.upper <= r.alpha_bar + 1e-9);
  CHECK(r.alpha_lower.upper <= r.alpha_star.upper + 1e-9);
  CHECK(r.dim_at_xi <= r.alpha_bar + 1e-12);
  CHECK(r.isolated_top);  // p_0 strictly minimal for the 4-fold convolution
  CHECK_FALSE(r.formalism_holds);

  const DimensionReport u = dimension_report(uniform(3), 4, 6, 4);
  CHECK(u.formalism_holds);
  CHECK_FALSE(u.isolated_top);
}
