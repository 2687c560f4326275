#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symlat/exactnum.hpp"

namespace symlat {

/// Exponent vector (a_0, ..., a_d).
///
/// Ordering compares the LAST coordinate first: a < b iff a_d < b_d, or
/// a_d == b_d and the truncations compare a' < b'. This is not the usual
/// lexicographic order; every ordered monomial basis in the library uses it.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex parse(std::string_view text);  // "(2,0,1)"

  std::size_t length() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  Integer factorial() const;
  int last() const { return exps_.back(); }
  MultiIndex truncated() const;  // drops the last coordinate
  MultiIndex extended(int last_exponent) const;

  /// Basis-vector indices with multiplicity: (2,0,1) -> {0,0,2}.
  std::vector<int> as_multiset() const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exps_;
};

/// All exponent vectors of length d+1 and degree k, ascending in the
/// last-coordinate-first order. There are binom(k+d, d) of them.
std::vector<MultiIndex> enumerate_monomials(int d, int k);

/// Perfect matching of {0, ..., 2k-1}; each pair stored as (smaller, larger),
/// pairs listed by increasing first element.
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;
  std::string to_string() const;  // 1-based, e.g. "{1,2}{3,4}"
  friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

inline constexpr int kMaxPairPartitionK = 8;

/// Enumerates perfect matchings by pairing the smallest free element with
/// each free partner in turn. Usage:
///
///   PairPartitionGenerator gen(k);
///   while (gen.next()) use(gen.current());
class PairPartitionGenerator {
 public:
  explicit PairPartitionGenerator(int k);  // SizeLimitError for k > 8
  bool next();
  const PairPartition& current() const { return current_; }

 private:
  void fill_from(std::size_t level);
  std::vector<int> partner_choice_;  // per level: index among free partners
  std::vector<std::vector<int>> free_at_level_;
  PairPartition current_;
  int k_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<PairPartition> enumerate_pair_partitions(int k);

struct IdentitySides {
  Integer lhs;
  Integer rhs;
  bool holds() const { return lhs == rhs; }
};

/// prod_{j=0}^k (k-j)!^binom(j+d-1, d-1)  vs  prod_{i=1}^k i^binom(k-i+d, d).
IdentitySides factorial_product_identity(int d, int k);

/// Sum over even i in [1, 2k+d+1] of binom(k-i+d, d-1) vs its closed form
/// (0 for even d, binom(k+d, d) for odd d).
IdentitySides even_sum_identity(int d, int k);

}  // namespace symlat
