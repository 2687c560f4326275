#include <doctest.h>

#include "symlat/exactnum.hpp"
#include "test_support.hpp"

using namespace symlat;

TEST_CASE("generalized binomial") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 5) == 0);
  for (int z = -6; z <= 6; ++z) CHECK(binom(z, -1) == 0);
  CHECK(binom(-1, 22) == 1);
  CHECK(binom(-2, 22) == 23);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-3, 2) == 6);  // (-3)(-4)/2

  SUBCASE("negation identity") {
    for (int z = 1; z <= 12; ++z)
      for (int k = 0; k <= 12; ++k) {
        Integer expect = binom(z + k - 1, k);
        if (k % 2) expect = -expect;
        CHECK(binom(-z, k) == expect);
      }
  }
  SUBCASE("difference identity") {
    for (int n = -5; n <= 30; ++n)
      for (int k = -2; k <= 30; ++k) CHECK(binom(n + 1, k) - binom(n, k) == binom(n, k - 1));
  }
  SUBCASE("falling product definition") {
    for (int z = -8; z <= 8; ++z)
      for (int k = 0; k <= 8; ++k) {
        Integer num = 1;
        for (int i = 0; i < k; ++i) num *= (z - i);
        CHECK(binom(z, k) == num / factorial(k));
      }
  }
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(double_factorial(6) == Integer(8) * factorial(3));
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  for (int n = 0; n <= 30; ++n) CHECK(double_factorial(n - 1) * double_factorial(n) == factorial(n));
  for (int n = 0; n <= 20; ++n) {
    Integer two_n = 1;
    for (int i = 0; i < n; ++i) two_n *= 2;
    CHECK(double_factorial(2 * n) == two_n * factorial(n));
  }
}

TEST_CASE("scalar parsing and canonical form") {
  Scalar q = parse_scalar("6/-4");
  CHECK(q == make_scalar(-3, 2));
  CHECK(q.get_den() == 2);
  CHECK(to_string(parse_scalar(" 10/5 ")) == "2");
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("abc"));
  CHECK(pow(make_scalar(2, 3), -2) == make_scalar(9, 4));
}

TEST_CASE("factored integer operations") {
  auto big = FactoredInteger::parse("2^46 * 5^2");
  CHECK(big.sqrt() == FactoredInteger::parse("2^23 * 5"));
  CHECK(big.sqrt().to_string() == "2^23 * 5");

  auto disc = FactoredInteger::parse("2^1106 * 3^92");
  auto tors = FactoredInteger::parse("2^277 * 3^46");
  CHECK((disc / tors.pow(2)).to_string() == "2^552");

  auto twelve = FactoredInteger(12);
  auto support = twelve.prime_support();
  REQUIRE(support.size() == 2);
  CHECK(support[0] == 2);
  CHECK(support[1] == 3);

  CHECK(FactoredInteger(1).to_string() == "1");
  CHECK(FactoredInteger(-1).to_string() == "-1");
  CHECK(FactoredInteger(-360).to_string() == "-2^3 * 3^2 * 5");
  CHECK(FactoredInteger(make_scalar(3, 8)).to_string() == "2^-3 * 3");
  CHECK_FALSE(FactoredInteger(make_scalar(3, 8)).is_integer());
  CHECK_THROWS_AS(FactoredInteger(12).sqrt(), std::domain_error);
  CHECK_THROWS_AS(FactoredInteger(-4).sqrt(), std::domain_error);
  CHECK_THROWS_AS(FactoredInteger(0), std::domain_error);
  CHECK(FactoredInteger::parse("-1") == FactoredInteger(-1));
  CHECK(FactoredInteger::parse("105") == FactoredInteger::parse("3 * 5 * 7"));
  CHECK(FactoredInteger::parse("4^3") == FactoredInteger::parse("2^6"));
  CHECK_THROWS(FactoredInteger::parse("2^x"));
  CHECK_THROWS(FactoredInteger::from_factors(1, {{Integer(4), 1}}));
  CHECK(FactoredInteger(18).square_free_part().to_string() == "2");
  CHECK(FactoredInteger(4).divides(FactoredInteger(12)));
  CHECK_FALSE(FactoredInteger(8).divides(FactoredInteger(12)));
}

TEST_CASE("factoring large prime cofactors") {
  // 999983 is the largest prime below 10^6; its square sits at the trial limit.
  Integer p = 999983;
  CHECK(FactoredInteger(Integer(p * p * 4)).to_string() == "2^2 * 999983^2");
  Integer q("1000003", 10);  // prime just above the trial range
  CHECK(FactoredInteger(Integer(q * 6)).to_string() == "2 * 3 * 1000003");
  Integer a("1000000007", 10), b("1000000009", 10);
  CHECK(FactoredInteger(Integer(a * b * 12)).to_string() == "2^2 * 3 * 1000000007 * 1000000009");
  CHECK(FactoredInteger(Integer(a * a * a * 8)).to_string() == "2^3 * 1000000007^3");
  Integer mersenne61 = (Integer(1) << 61) - 1;
  CHECK(FactoredInteger(Integer(mersenne61 * mersenne61)).to_string() == "2305843009213693951^2");
  // composite, not a perfect power, and above 2^64
  Integer mersenne31 = (Integer(1) << 31) - 1;
  CHECK_THROWS_AS(FactoredInteger(Integer(mersenne61 * mersenne31 * mersenne31)), std::domain_error);
}

TEST_CASE("factored arithmetic agrees with big-integer arithmetic") {
  testing::Rng rng(20241016);
  for (int trial = 0; trial < 200; ++trial) {
    Integer a = rng.uniform(1, 1L << 32), b = rng.uniform(1, 1L << 32);
    if (rng.uniform(0, 1)) a = -a;
    FactoredInteger fa(a), fb(b);
    CHECK(fa.value() == Scalar(a));
    CHECK((fa * fb).value() == Scalar(a * b));
    CHECK((fa / fb).value() == make_scalar(a, b));
    CHECK(fa.pow(3).value() == Scalar(a * a * a));
    CHECK(FactoredInteger::parse(fa.to_string()) == fa);
    CHECK(FactoredInteger(Integer(abs(a) * abs(a))).sqrt() == fa.abs());
  }
}

TEST_CASE("refactoring round trip below 2^64") {
  testing::Rng rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    Integer v = rng.uniform(1, 1L << 31);
    v *= rng.uniform(1, 1L << 31);
    v *= rng.uniform(1, 3);
    auto f = FactoredInteger(v);
    CHECK(f.integer_value() == v);
    for (const auto& [p, e] : f.factors()) CHECK(mpz_probab_prime_p(p.get_mpz_t(), 40) != 0);
    CHECK(FactoredInteger::from_factors(1, f.factors()) == f);
  }
}
