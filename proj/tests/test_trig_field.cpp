#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

#include "fricke/trig_field.hpp"

using namespace fricke;

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

// Independent 50-digit evaluation used as the numeric oracle.
Big oracle(const CosSum& s) {
  const Big pi = boost::multiprecision::acos(Big(-1));
  Big total = 0;
  for (const auto& [a, c] : s.terms()) {
    total += Big(c.get_num().get_str()) / Big(c.get_den().get_str()) * 2 *
             boost::multiprecision::cos(pi * Big(a.num) / Big(a.den));
  }
  return total;
}

// Denominators are drawn from divisors of `level` so the sums stay at bounded level.
CosSum random_sum(std::mt19937_64& rng, int level) {
  std::vector<int> divisors;
  for (int d = 1; d <= level; ++d) {
    if (level % d == 0) divisors.push_back(d);
  }
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  CosSum s;
  for (int i = count(rng); i > 0; --i) {
    const int d = divisors[pick(rng)];
    std::uniform_int_distribution<int> num(0, 2 * d);
    s += CosSum::cos(num(rng), d) * make_rational(coeff(rng), 1 + (i % 2));
  }
  return s;
}

}  // namespace

TEST_CASE("angles fold into [0,1]") {
  CHECK(RationalAngle::folded(4, 3) == RationalAngle{2, 3});
  CHECK(RationalAngle::folded(-1, 5) == RationalAngle{1, 5});
  CHECK(RationalAngle::folded(7, 2) == RationalAngle{1, 2});
  CHECK(RationalAngle::folded(2, 1) == RationalAngle{0, 1});
  CHECK(RationalAngle::folded(3, -6) == RationalAngle{1, 2});
  CHECK(RationalAngle::parse("11/12") == RationalAngle{11, 12});
}

TEST_CASE("single cosines") {
  CHECK(CosSum::cos(0, 1).as_rational() == Rational(2));
  CHECK(exactly_equal(CosSum::cos(1, 3), CosSum(1)));
  CHECK(exactly_equal(CosSum::cos(4, 3), CosSum::cos(2, 3)));
  CHECK(CosSum::cos(1, 2).is_zero());
  CHECK(CosSum::cos(1, 3).to_double() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(CosSum::cos(1, 5).to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-14));
  CHECK(CosSum(2).to_double() == 2.0);
}

TEST_CASE("classical identities") {
  const CosSum golden = CosSum::cos(1, 5) - CosSum::cos(2, 5) - 1;
  CHECK(golden.is_zero());
  CHECK(abs(oracle(golden)) < Big("1e-45"));

  const CosSum heptagon = CosSum::cos(1, 7) + CosSum::cos(3, 7) + CosSum::cos(5, 7) - 1;
  CHECK(heptagon.is_zero());
  CHECK(abs(oracle(heptagon)) < Big("1e-45"));

  const CosSum product = CosSum::cos(1, 5) * CosSum::cos(2, 5);
  CHECK(exactly_equal(product, CosSum(1)));
  CHECK(product.to_double() == doctest::Approx(1.0));

  const CosSum a = CosSum::cos(2, 7) * Rational(3, 2) + 5;
  CHECK(exactly_equal(a * CosSum::cos(0, 1), a * Rational(2)));
  CHECK((a + (-a)).is_zero());
  CHECK_FALSE(CosSum::cos(1, 7).is_zero());
}

TEST_CASE("dense and sparse zero tests agree") {
  std::mt19937_64 rng(7);
  int zeros = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CosSum s = random_sum(rng, trial % 2 ? 60 : 210);
    if (trial % 3 == 0) s -= s.reduced();  // guaranteed zero, nontrivial representation
    std::vector<std::pair<std::int64_t, Rational>> powers;
    const std::int64_t l = s.level();
    for (const auto& [a, c] : s.terms()) {
      const std::int64_t e = a.num * (l / a.den);
      powers.emplace_back(e, c);
      powers.emplace_back(2 * l - e, c);
    }
    const bool dense = s.is_zero();
    CHECK(dense == is_zero_sparse(powers, 2 * l));
    CHECK(dense == (abs(oracle(s)) < Big("1e-40")));
    zeros += dense;
  }
  CHECK(zeros >= 100);
}

TEST_CASE("large levels use the sparse route") {
  const CosSum s = CosSum::cos(1, 7) * CosSum::cos(1, 11) * CosSum::cos(1, 13);
  const CosSum t = CosSum::cos(1, 7) * CosSum::cos(1, 143);
  CHECK(s.level() == 1001);
  CHECK(exactly_equal(s, s.reduced()));
  CHECK_FALSE(exactly_equal(s, t));
  CHECK(exactly_equal(t * t, t * t + CosSum::cos(1, 7) - CosSum::cos(1, 7)));
}

TEST_CASE("ring laws on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CosSum a = random_sum(rng, 30);
    const CosSum b = random_sum(rng, 30);
    const CosSum c = random_sum(rng, 30);
    CHECK(exactly_equal(a + b, b + a));
    CHECK(exactly_equal(a * b, b * a));
    CHECK(exactly_equal((a * b) * c, a * (b * c)));
    CHECK(exactly_equal(a * (b + c), a * b + a * c));
    CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
  }
}

TEST_CASE("reduction, inverse and Galois conjugation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CosSum a = random_sum(rng, 42);
    const CosSum r = a.reduced();
    CHECK(exactly_equal(a, r));
    if (a.is_zero()) continue;
    CHECK(exactly_equal(a * a.inverse(), CosSum(1)));
  }
  CHECK(exactly_equal(CosSum::cos(1, 5).galois(3), CosSum::cos(3, 5)));
  CHECK(exactly_equal(CosSum::cos(1, 5).inverse(), CosSum::cos(1, 5) - 1));
}

TEST_CASE("recognizing rationals and single cosines") {
  CHECK(((CosSum::cos(1, 5) - CosSum::cos(2, 5)).as_rational() == Rational(1)));
  CHECK_FALSE(CosSum::cos(1, 5).as_rational().has_value());
  const CosSum shifted = CosSum::cos(1, 15) * CosSum::cos(2, 15) - CosSum::cos(1, 15);
  const auto angle = shifted.as_single_cos();
  REQUIRE(angle.has_value());
  CHECK(*angle == RationalAngle{1, 5});
  CHECK(CosSum(1).as_single_cos() == RationalAngle{1, 3});
}

TEST_CASE("text round trip and ordering") {
  const CosSum sqrt5 = CosSum::cos(1, 5) * Rational(2) - 1;
  CHECK(sqrt5.to_string() == "2*2cos(pi*1/5)-1");
  CHECK(exactly_equal(CosSum::parse("2*2cos(pi*1/5)-1"), sqrt5));
  CHECK(exactly_equal(CosSum::parse(" -3/2*2cos(pi*2/7) + 2cos(pi*1/3) - 1/2"),
                      CosSum::cos(2, 7) * Rational(-3, 2) + Rational(1, 2)));
  CHECK(CosSum().to_string() == "0");
  CHECK_THROWS(CosSum::parse("2cos(x)"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const CosSum a = random_sum(rng, 84);
    CHECK(exactly_equal(CosSum::parse(a.to_string()), a));
  }
  CHECK(compare(CosSum::cos(1, 5), CosSum::cos(2, 5) + 1) == 0);
  CHECK(compare(CosSum::cos(1, 5), CosSum::cos(1, 4)) > 0);
  CHECK(compare(CosSum(-2), CosSum::cos(9, 10)) < 0);
}

TEST_CASE("dictionary matching") {
  std::vector<ValueEntry> dict;
  for (int n = 1; n < 3; ++n) dict.push_back({CosSum::cos(n, 3).to_double(), static_cast<std::size_t>(n)});
  std::sort(dict.begin(), dict.end(), [](auto& a, auto& b) { return a.value < b.value; });
  CHECK(match_dictionary(1.0000000003, dict, 1e-8) == std::size_t{1});
  CHECK(match_dictionary(-1.0, dict, 1e-8) == std::size_t{2});
  CHECK_FALSE(match_dictionary(1.93, dict, 1e-8).has_value());
}
