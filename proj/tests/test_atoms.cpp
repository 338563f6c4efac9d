#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mfz/atoms.hpp"
#include "mfz/error.hpp"
#include "mfz/logsum.hpp"
#include "mfz/system.hpp"
#include "oracles.hpp"

using namespace mfz;

namespace {
DigitSystem cantor3() { return cantor_convolution(3, 0.5); }
}  // namespace

TEST_CASE("level 1 equals the weights") {
  const DigitSystem sys = cantor3();
  const AtomLevel lv = atom_masses(sys, 1);
  REQUIRE(lv.log_mass.size() == 4);
  for (int i = 0; i <= 3; ++i)
    CHECK(lv.log_mass[static_cast<size_t>(i)] == doctest::Approx(sys.log_p(i)));
}

TEST_CASE("DP equals exhaustive enumeration") {
  for (int fold : {3, 4, 5}) {
    const DigitSystem sys = cantor_convolution(fold, 0.5);
    const int kmax = fold == 3 ? 6 : (fold == 4 ? 5 : 4);
    for (int k = 1; k <= kmax; ++k) {
      const AtomLevel lv = atom_masses(sys, k);
      const auto oracle = oracle::atom_masses(sys, k);
      REQUIRE(lv.log_mass.size() == oracle.size());
      for (size_t j = 0; j < oracle.size(); ++j) {
        const double rel =
            std::abs(std::exp(lv.log_mass[j]) - static_cast<double>(oracle[j])) /
            static_cast<double>(oracle[j]);
        CHECK(rel <= 1e-10);
      }
    }
  }
}

TEST_CASE("serial reference matches the parallel kernel bit for bit") {
  const DigitSystem sys = cantor_convolution(4, 0.5);
  const AtomLevel par = atom_masses(sys, 7);
  const AtomLevel ser = ref::atom_masses(sys, 7);
  REQUIRE(par.log_mass.size() == ser.log_mass.size());
  for (size_t j = 0; j < par.log_mass.size(); ++j) CHECK(par.log_mass[j] == ser.log_mass[j]);
}

TEST_CASE("total mass stays 1") {
  const DigitSystem sys = cantor3();
  for (int k : {1, 2, 4, 8, 10}) {
    const AtomLevel lv = atom_masses(sys, k);
    CHECK(std::abs(log_sum_exp(lv.log_mass)) <= 1e-10);
  }
}

TEST_CASE("specific class masses") {
  const DigitSystem sys = cantor3();
  const AtomLevel l2 = atom_masses(sys, 2);
  CHECK(std::exp(l2.log_mass[3]) == doctest::Approx(1.0 / 16).epsilon(1e-12));

  CHECK(eta_word(sys, {1, 0}) == doctest::Approx(std::log(1.0 / 16)));
  for (int i = 0; i <= 3; ++i) CHECK(eta_word(sys, {i}) == doctest::Approx(sys.log_p(i)));
  CHECK(eta_word(sys, {0, 3}) == eta_word(sys, {1, 0}));  // class function
}

TEST_CASE("sbar") {
  const DigitSystem sys = cantor3();
  const AtomLevel l2 = atom_masses(sys, 2);
  CHECK(std::abs(sbar(l2, 1.0)) <= 1e-12);
  CHECK(sbar(l2, 0.0) == doctest::Approx(std::log(13.0)));

  // q=2 against the enumeration oracle
  const auto oracle = oracle::atom_masses(sys, 2);
  long double s = 0.0L;
  for (long double w : oracle) s += w * w;
  CHECK(sbar(l2, 2.0) == doctest::Approx(static_cast<double>(std::log(s))).epsilon(1e-12));

  // strictly decreasing in q at fixed k
  const AtomLevel l4 = atom_masses(sys, 4);
  double prev = sbar(l4, -3.0);
  for (double q : {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
    const double cur = sbar(l4, q);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("shat against direct enumeration") {
  const DigitSystem it2 = iterate(cantor3(), 2);
  const int b = 5;
  const AtomLevel l2 = atom_masses(it2, 2);

  CHECK(shat(l2, it2, b, 0.0) == doctest::Approx(std::log(13.0)));  // counts representatives
  CHECK(shat(l2, it2, b, 1.0) < 0.0);                               // Shat(1) < 1

  // brute force: sum of eta(5, sigma)^q over one representative per level-1 atom
  const auto mass2 = oracle::atom_masses(it2, 2);
  for (double q : {-2.0, -0.5, 0.7, 2.0}) {
    long double s = 0.0L;
    for (int j = 0; j <= 12; ++j)
      s += std::pow(static_cast<long double>(mass2[static_cast<size_t>(5 * 9 + j)]),
                    static_cast<long double>(q));
    CHECK(shat(l2, it2, b, q) ==
          doctest::Approx(static_cast<double>(std::log(s))).epsilon(1e-10));
  }

  CHECK_THROWS_AS(shat(l2, it2, 4, 1.0), Error);  // NotABarrier
}

TEST_CASE("entropy sum") {
  const DigitSystem sys = cantor3();
  // closed form at k=1: (3 ln 2 - 0.75 ln 3)/ln 3
  const double expect = (3.0 * std::log(2.0) - 0.75 * std::log(3.0)) / std::log(3.0);
  CHECK(entropy_sum(sys, 1) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(entropy_sum(sys, 1) == doctest::Approx(1.142790).epsilon(1e-5));

  // non-increasing along doublings
  for (int k : {1, 2, 3, 4, 5})
    CHECK(entropy_sum(sys, 2 * k) <= entropy_sum(sys, k) + 1e-12);

  // deep value sits in the expected window
  const double e12 = entropy_sum(sys, 12);
  CHECK(e12 > 0.95);
  CHECK(e12 < 1.01);
}

TEST_CASE("neighbor ratio audit") {
  const DigitSystem sys = cantor3();
  // k=1 boundary case: ratio 3 = theta, violation exactly 1
  CHECK(neighbor_ratio_audit(sys, 1) == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 2; k <= 8; ++k) CHECK(neighbor_ratio_audit(sys, k) <= 1.0 + 1e-12);

  // symmetric weights mirror the audit pairs
  const AtomLevel l3 = atom_masses(sys, 3);
  const std::int64_t J = l3.max_index();
  for (std::int64_t j = 0; j + 1 <= J; ++j) {
    const double fwd = l3.log_mass[static_cast<size_t>(j)] -
                       l3.log_mass[static_cast<size_t>(j + 1)];
    const double mir = l3.log_mass[static_cast<size_t>(J - j)] -
                       l3.log_mass[static_cast<size_t>(J - j - 1)];
    CHECK(fwd == doctest::Approx(mir).epsilon(1e-12));
  }
}

TEST_CASE("supermultiplicativity and composition") {
  const DigitSystem sys = cantor3();
  // eta(sigma sigma') >= eta(sigma) eta(sigma') exhaustively for short words
  for (int la = 1; la <= 2; ++la)
    for (int lb = 1; lb <= 2; ++lb) {
      const AtomLevel la_lv = atom_masses(sys, la);
      const AtomLevel lb_lv = atom_masses(sys, lb);
      const AtomLevel lab = atom_masses(sys, la + lb);
      Word a(static_cast<size_t>(la), 0), bword(static_cast<size_t>(lb), 0);
      for (int ia = 0; ia < (la == 1 ? 4 : 16); ++ia) {
        for (int ib = 0; ib < (lb == 1 ? 4 : 16); ++ib) {
          Word ab = a;
          ab.insert(ab.end(), bword.begin(), bword.end());
          CHECK(eta_word(lab, sys, ab) >=
                eta_word(la_lv, sys, a) + eta_word(lb_lv, sys, bword) - 1e-10);
          int pos = lb - 1;
          while (pos >= 0 && bword[static_cast<size_t>(pos)] == 3)
            bword[static_cast<size_t>(pos--)] = 0;
          if (pos >= 0) ++bword[static_cast<size_t>(pos)];
        }
        int pos = la - 1;
        while (pos >= 0 && a[static_cast<size_t>(pos)] == 3) a[static_cast<size_t>(pos--)] = 0;
        if (pos >= 0) ++a[static_cast<size_t>(pos)];
      }
    }

  // iterate-then-DP consistency: level n of the iterated system equals level
  // k*n of the base system atom for atom
  const DigitSystem it2 = iterate(sys, 2);
  const AtomLevel via_iterated = atom_masses(it2, 2);
  const AtomLevel direct = atom_masses(sys, 4);
  REQUIRE(via_iterated.log_mass.size() == direct.log_mass.size());
  for (size_t j = 0; j < direct.log_mass.size(); ++j)
    CHECK(via_iterated.log_mass[j] == doctest::Approx(direct.log_mass[j]).epsilon(1e-10));
}

TEST_CASE("atom budget") {
  const DigitSystem sys = cantor3();
  Budget tiny;
  tiny.max_atoms = 100;
  CHECK_THROWS_AS(atom_masses(sys, 6, tiny), Error);
  try {
    atom_masses(sys, 6, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::overflow);
  }
}
