#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mfz/error.hpp"
#include "mfz/rational.hpp"
#include "mfz/system.hpp"
#include "mfz/weights.hpp"

using namespace mfz;

namespace {
const WeightVector kCantor3{1.0 / 8, 3.0 / 8, 3.0 / 8, 1.0 / 8};
const WeightVector kCantor4{1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
}  // namespace

TEST_CASE("probability vector validation") {
  CHECK_NOTHROW(check_probability_vector(kCantor3));
  CHECK_THROWS_AS(check_probability_vector({0.5, 0.4}), Error);
  CHECK_THROWS_AS(check_probability_vector({1.0}), Error);
  CHECK_THROWS_AS(check_probability_vector({0.5, 0.5, 0.0}), Error);
}

TEST_CASE("regularity") {
  CHECK(is_regular(kCantor3));
  CHECK_FALSE(is_regular({0.4, 0.2, 0.4}));
  // biased binomial below the threshold: (1-p)^m > m p^(m-1) (1-p) at p=0.3
  CHECK_FALSE(is_regular(binomial_weights(3, 0.3)));
  CHECK(is_regular(binomial_weights(3, 0.37)));
}

TEST_CASE("flip") {
  const WeightVector already{0.1, 0.3, 0.35, 0.25};
  CHECK(flip_weights(already) == already);
  const WeightVector reversed{0.25, 0.35, 0.3, 0.1};
  CHECK(flip_weights(reversed) == WeightVector{0.1, 0.3, 0.35, 0.25});

  const DigitSystem s = DigitSystem::create_unchecked(3, 3, reversed);
  const DigitSystem f = flip(s);
  CHECK(f.p().front() <= f.p().back());
  CHECK(flip(flip(s)).p() == flip(s).p());  // involution on the flipped branch
}

TEST_CASE("convolution") {
  const WeightVector half{0.5, 0.5};
  CHECK(convolve_weights(half, half) == WeightVector{0.25, 0.5, 0.25});

  const WeightVector c3 = convolve_weights(convolve_weights(half, half), half);
  for (size_t i = 0; i < 4; ++i) CHECK(c3[i] == doctest::Approx(kCantor3[i]).epsilon(1e-14));

  CHECK(convolve_weights(kCantor3, {1.0}) == kCantor3);

  // commutative and associative on a scalene triple
  const WeightVector a{0.2, 0.8}, b{0.5, 0.3, 0.2}, c{0.1, 0.9};
  const auto ab_c = convolve_weights(convolve_weights(a, b), c);
  const auto a_bc = convolve_weights(a, convolve_weights(b, c));
  const auto ba_c = convolve_weights(convolve_weights(b, a), c);
  REQUIRE(ab_c.size() == a_bc.size());
  for (size_t i = 0; i < ab_c.size(); ++i) {
    CHECK(ab_c[i] == doctest::Approx(a_bc[i]).epsilon(1e-14));
    CHECK(ab_c[i] == doctest::Approx(ba_c[i]).epsilon(1e-14));
  }
}

TEST_CASE("regularity threshold") {
  CHECK(regularity_threshold(3) == doctest::Approx(0.366025).epsilon(1e-6));
  CHECK(regularity_threshold(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(regularity_threshold(4) == doctest::Approx(1.0 / (1.0 + std::pow(4.0, 1.0 / 3.0))));
  CHECK(regularity_threshold(4) == doctest::Approx(0.386488).epsilon(1e-4));
}

TEST_CASE("system construction and derived constants") {
  const DigitSystem s3 = new_system(3, 3, kCantor3);
  CHECK(s3.xi() == Rational(3, 2));
  CHECK(s3.xi_value() == doctest::Approx(1.5));
  CHECK(s3.a() == 1);
  CHECK(s3.theta() == doctest::Approx(3.0));
  CHECK(s3.delta() == doctest::Approx(-1.0 / std::log(3.0)));

  const DigitSystem s4 = new_system(3, 4, kCantor4);
  CHECK(s4.xi() == Rational(2, 1));
  CHECK(s4.a() == 1);

  CHECK_THROWS_AS(new_system(3, 3, {0.5, 0.2, 0.2, 0.1}), Error);  // NotRegular
  CHECK_THROWS_AS(new_system(2, 3, {0.25, 0.25, 0.25, 0.25}), Error);
  CHECK_THROWS_AS(new_system(3, 2, {0.3, 0.4, 0.3}), Error);  // m < d
  try {
    new_system(3, 3, {0.5, 0.2, 0.2, 0.1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_regular);
  }
}

TEST_CASE("cantor_convolution") {
  const DigitSystem c3 = cantor_convolution(3, 0.5);
  CHECK(c3.d() == 3);
  CHECK(c3.m() == 3);
  for (size_t i = 0; i < 4; ++i) CHECK(c3.p()[i] == doctest::Approx(kCantor3[i]).epsilon(1e-14));

  const DigitSystem c4 = cantor_convolution(4, 0.5);
  for (size_t i = 0; i < 5; ++i) CHECK(c4.p()[i] == doctest::Approx(kCantor4[i]).epsilon(1e-14));

  CHECK_THROWS_AS(cantor_convolution(3, 0.36), Error);
  CHECK_NOTHROW(cantor_convolution(3, 0.37));
  CHECK_THROWS_AS(cantor_convolution(2, 0.5), Error);

  // symmetric weights at bias 1/2
  for (int k : {3, 4, 5, 6}) {
    const DigitSystem c = cantor_convolution(k, 0.5);
    for (int i = 0; i <= k; ++i)
      CHECK(c.p()[static_cast<size_t>(i)] == c.p()[static_cast<size_t>(k - i)]);
  }
}

TEST_CASE("iterate") {
  const DigitSystem s3 = cantor_convolution(3, 0.5);
  const DigitSystem it1 = iterate(s3, 1);
  CHECK(it1.d() == 3);
  CHECK(it1.p() == s3.p());

  const DigitSystem it2 = iterate(s3, 2);
  CHECK(it2.d() == 9);
  CHECK(it2.m() == 12);
  REQUIRE(it2.p().size() == 13);
  double sum = 0.0;
  for (double w : it2.p()) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(it2.regular());
  // hand-checked level-2 class masses of the 3-fold convolution
  const double e = 1.0 / 64;
  const WeightVector expect{e, 3 * e, 3 * e, 4 * e, 9 * e, 9 * e, 6 * e,
                            9 * e, 9 * e, 4 * e, 3 * e, 3 * e, e};
  for (size_t i = 0; i < 13; ++i)
    CHECK(it2.p()[i] == doctest::Approx(expect[i]).epsilon(1e-12));

  // (d^2)^2 = d^4 and the digit-count formula composes
  const DigitSystem it22 = iterate(iterate(s3, 2), 2);
  const DigitSystem it4 = iterate(s3, 4);
  CHECK(it22.d() == it4.d());
  CHECK(it22.m() == it4.m());
}

TEST_CASE("find_barrier") {
  const DigitSystem s3 = cantor_convolution(3, 0.5);
  const BarrierSearch bs = find_barrier(s3, 3);
  CHECK(bs.level == 2);
  CHECK(bs.atoms == std::vector<std::int64_t>{5, 6, 7});

  CHECK_THROWS_AS(find_barrier(cantor_convolution(4, 0.5), 4), Error);  // xi = 2
  try {
    find_barrier(cantor_convolution(4, 0.5), 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_barrier);
  }

  // barrier atoms recheck as barrier digits of the iterated system
  const DigitSystem it2 = iterate(s3, 2);
  CHECK(is_barrier_digit(it2, 5));
  CHECK(is_barrier_digit(it2, 6));
  CHECK(is_barrier_digit(it2, 7));
  CHECK_FALSE(is_barrier_digit(it2, 4));
  CHECK_FALSE(is_barrier_digit(it2, 8));

  // uniform d=4 has a level-1 barrier digit
  const DigitSystem u4 = new_system(4, 4, WeightVector(5, 0.2));
  CHECK(find_barrier(u4, 2).level == 1);
  CHECK(is_barrier_digit(u4, 2));
}

TEST_CASE("word index") {
  const DigitSystem s3 = cantor_convolution(3, 0.5);
  CHECK(s3.word_index({1, 0}) == 3);
  CHECK(s3.word_index({0, 3}) == 3);
  CHECK(s3.word_index({3, 3}) == 12);
  CHECK_THROWS_AS(s3.word_index({4}), Error);
  CHECK_THROWS_AS(s3.word_index({}), Error);
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(3, 2) < Rational(2, 1));
  CHECK(Rational(4, 2) == Rational(2, 1));
  CHECK(Rational(12, 8) == Rational(3, 2));
  CHECK(Rational(5, 3) > Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}
