#include <doctest.h>

#include <set>

#include "symlat/combinat.hpp"

using namespace symlat;

TEST_CASE("multi-index basics") {
  MultiIndex a{2, 0, 1};
  CHECK(a.degree() == 3);
  CHECK(a.factorial() == 2);
  CHECK(a.truncated() == MultiIndex{2, 0});
  CHECK(a.to_string() == "(2,0,1)");
  CHECK(MultiIndex::parse("(2, 0,1)") == a);
  CHECK(a.as_multiset() == std::vector<int>{0, 0, 2});
  CHECK_THROWS(MultiIndex::parse("2,0,1"));
  CHECK_THROWS(MultiIndex::parse("(2,-1)"));
}

TEST_CASE("last coordinate is most significant") {
  CHECK(MultiIndex{2, 0} < MultiIndex{1, 1});
  CHECK(MultiIndex{1, 1} < MultiIndex{0, 2});
  CHECK(MultiIndex{5, 0, 0} < MultiIndex{0, 0, 1});
  CHECK(MultiIndex{0, 1, 0} < MultiIndex{1, 0, 1});
  CHECK(MultiIndex{1, 2} > MultiIndex{3, 1});

  // strict total order on all (d=2, k=3) indices
  auto all = enumerate_monomials(2, 3);
  for (const auto& x : all)
    for (const auto& y : all) {
      int relations = (x < y) + (y < x) + (x == y);
      CHECK(relations == 1);
    }
}

TEST_CASE("monomial enumeration") {
  auto m = enumerate_monomials(1, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == MultiIndex{2, 0});
  CHECK(m[1] == MultiIndex{1, 1});
  CHECK(m[2] == MultiIndex{0, 2});
  CHECK(enumerate_monomials(22, 3).size() == 2300);
  auto single = enumerate_monomials(0, 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == MultiIndex{5});

  for (int d = 0; d <= 6; ++d)
    for (int k = 0; k <= 6; ++k) {
      auto list = enumerate_monomials(d, k);
      CHECK(Integer(list.size()) == binom(k + d, d));
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
      for (const auto& a : list) {
        CHECK(a.length() == static_cast<std::size_t>(d + 1));
        CHECK(a.degree() == k);
      }
      if (d >= 1 && k >= 1) {
        CHECK(list.size() == enumerate_monomials(d - 1, k).size() + enumerate_monomials(d, k - 1).size());
      }
    }
}

TEST_CASE("pair partitions") {
  auto one = enumerate_pair_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "{1,2}");

  auto two = enumerate_pair_partitions(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].to_string() == "{1,2}{3,4}");
  CHECK(two[1].to_string() == "{1,3}{2,4}");
  CHECK(two[2].to_string() == "{1,4}{2,3}");

  CHECK(enumerate_pair_partitions(0).size() == 1);
  CHECK(enumerate_pair_partitions(5).size() == 945);
  CHECK_THROWS_AS(PairPartitionGenerator(9), SizeLimitError);

  for (int k = 0; k <= 7; ++k) {
    PairPartitionGenerator gen(k);
    std::set<std::string> seen;
    std::size_t count = 0;
    while (gen.next()) {
      const auto& p = gen.current();
      std::vector<int> hit(2 * k, 0);
      for (auto [a, b] : p.pairs) {
        CHECK(a < b);
        ++hit[a];
        ++hit[b];
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
      if (k <= 5) seen.insert(p.to_string());
      ++count;
    }
    CHECK(Integer(count) == double_factorial(2 * k - 1));
    if (k <= 5) CHECK(seen.size() == count);
  }
}

TEST_CASE("block-respecting pair partitions") {
  // Label positions by block; count matchings that never pair across blocks.
  const std::vector<std::vector<int>> shapes = {{2, 2}, {4, 2}, {3, 3}, {2, 2, 2}, {6}, {4, 4}, {1, 3},
                                                {2, 4, 6}, {5, 1}, {8, 2}, {2, 2, 2, 2, 2, 2}, {4, 4, 4}};
  for (const auto& blocks : shapes) {
    std::vector<int> label;
    for (std::size_t b = 0; b < blocks.size(); ++b) label.insert(label.end(), blocks[b], static_cast<int>(b));
    const int k = static_cast<int>(label.size()) / 2;
    PairPartitionGenerator gen(k);
    Integer count = 0;
    while (gen.next()) {
      bool ok = true;
      for (auto [a, b] : gen.current().pairs) ok = ok && label[a] == label[b];
      if (ok) ++count;
    }
    Integer expect = 1;
    for (int size : blocks) expect = (size % 2 == 0) ? Integer(expect * double_factorial(size - 1)) : Integer(0);
    CHECK(count == expect);
  }
}

TEST_CASE("factorial product and even-sum identities") {
  auto fp = factorial_product_identity(1, 3);
  CHECK(fp.lhs == 12);
  CHECK(fp.rhs == 12);
  CHECK(even_sum_identity(2, 3).lhs == 0);
  CHECK(even_sum_identity(1, 2).lhs == 3);
  CHECK(even_sum_identity(1, 2).rhs == binom(3, 1));
  for (int d = 1; d <= 8; ++d)
    for (int k = 0; k <= 10; ++k) {
      CHECK(factorial_product_identity(d, k).holds());
      CHECK(even_sum_identity(d, k).holds());
    }
  CHECK_THROWS(factorial_product_identity(0, 2));
}
