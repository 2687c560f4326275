#include <doctest.h>

#include "symlat/theta.hpp"
#include "test_support.hpp"

using namespace symlat;

TEST_CASE("theta special values") {
  CHECK(theta(3, 2).integer_value() == 48);
  CHECK(theta(0, 3).integer_value() == 15);
  CHECK(theta(1, 3).integer_value() == 1296);
  CHECK(theta(22, 3).to_string() == "2^506 * 3^92");
  CHECK(theta(22, 2).to_string() == "2^22 * 5^2");
  CHECK(theta(0, 4).to_string() == "3 * 5 * 7");
  CHECK(FactoredInteger::parse("2^600") * theta(22, 3) == FactoredInteger::parse("2^1106 * 3^92"));

  for (int d = 0; d <= 20; ++d) {
    CHECK(theta(d, 0).is_one());
    CHECK(theta(d, 1).is_one());
  }
  for (int d = 0; d <= 12; ++d) CHECK(theta(d, 2).integer_value() == (Integer(1) << d) * (d + 3));
  for (int k = 0; k <= 10; ++k) {
    CHECK(theta(0, k).integer_value() == double_factorial(2 * k - 1));
    Integer fk = factorial(k), expect = 1;
    for (int i = 0; i <= k; ++i) expect *= fk;
    CHECK(theta(1, k).integer_value() == expect);
  }
  CHECK_THROWS(theta(-1, 2));
}

TEST_CASE("theta is a positive integer") {
  for (int d = 0; d <= 12; ++d)
    for (int k = 0; k <= 8; ++k) {
      auto t = theta(d, k);
      CHECK(t.sign() == 1);
      CHECK(t.is_integer());
    }
}

TEST_CASE("closed-form determinant") {
  CHECK(det_exponent(1, 2) == 3);
  for (int k = 0; k <= 6; ++k) {
    Scalar g = 7;
    CHECK(det_closed_form(g, 0, k) == pow(g, k) * Scalar(double_factorial(2 * k - 1)));
  }
  CHECK(det_closed_form(Scalar(1), 4, 3) == theta(4, 3).value());
  CHECK(det_closed_form(Scalar(-1), 1, 2) == -8);
  CHECK(det_closed_form(FactoredInteger(-1), 1, 2) == FactoredInteger(-8));
}

TEST_CASE("inductive ratio reconstructs theta") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= 5; ++k) {
      Scalar lower = 1;
      for (int j = 0; j <= k; ++j) lower *= theta(d - 1, j).value();
      CHECK(lower * inductive_ratio(d, k) == theta(d, k).value());
    }
}

TEST_CASE("determinant formula on worked examples") {
  auto r = verify_maintheorem(GramMatrix::identity(2), 2);
  CHECK(r.lhs == 8);
  CHECK(r.rhs == 8);
  CHECK(r.equal);

  r = verify_maintheorem(GramMatrix::diagonal({Scalar(1), Scalar(2)}), 2);
  CHECK(r.lhs == 64);
  CHECK(r.equal);

  r = verify_maintheorem(GramMatrix::diagonal({Scalar(-3)}), 4);
  CHECK(r.lhs == 105 * 81);
  CHECK(r.equal);

  CHECK_THROWS_AS(verify_maintheorem(GramMatrix::identity(10), 4), SizeLimitError);
}

TEST_CASE("determinant formula on random forms") {
  testing::Rng rng(42);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int s = 0; s < 5; ++s) {
        IntMatrix g = testing::random_symmetric(rng, static_cast<std::size_t>(n), -5, 5);
        if (det_exact(g) == 0) continue;
        CHECK(verify_maintheorem(GramMatrix(g), k).equal);
      }
  // singular forms also satisfy the identity (both sides vanish)
  auto r = verify_maintheorem(GramMatrix(IntMatrix{{1, 1}, {1, 1}}), 2);
  CHECK(r.lhs == 0);
  CHECK(r.equal);
}
