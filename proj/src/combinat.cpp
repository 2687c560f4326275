#include "symlat/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symlat {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("multi-index exponents must be nonnegative");
  }
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("multi-index must look like (a,b,...): " + std::string(text));
  }
  std::vector<int> exps;
  std::istringstream is(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad multi-index entry: " + tok);
    }
    exps.push_back(std::stoi(tok));
  }
  if (exps.empty()) throw std::invalid_argument("empty multi-index");
  return MultiIndex(std::move(exps));
}

int MultiIndex::degree() const {
  int s = 0;
  for (int e : exps_) s += e;
  return s;
}

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (int e : exps_) r *= symlat::factorial(e);
  return r;
}

MultiIndex MultiIndex::truncated() const {
  if (exps_.empty()) throw std::logic_error("truncating an empty multi-index");
  return MultiIndex(std::vector<int>(exps_.begin(), exps_.end() - 1));
}

MultiIndex MultiIndex::extended(int last_exponent) const {
  auto e = exps_;
  e.push_back(last_exponent);
  return MultiIndex(std::move(e));
}

std::vector<int> MultiIndex::as_multiset() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.insert(out.end(), exps_[i], static_cast<int>(i));
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (a.exps_.size() != b.exps_.size()) return a.exps_.size() <=> b.exps_.size();
  for (std::size_t i = a.exps_.size(); i-- > 0;) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::vector<MultiIndex> enumerate_monomials(int d, int k) {
  if (d < 0 || k < 0) return {};
  if (d == 0) return {MultiIndex{k}};
  std::vector<MultiIndex> out;
  for (int last = 0; last <= k; ++last) {
    for (auto& head : enumerate_monomials(d - 1, k - last)) out.push_back(head.extended(last));
  }
  return out;
}

std::string PairPartition::to_string() const {
  std::string s;
  for (auto [a, b] : pairs) s += "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
  return s;
}

PairPartitionGenerator::PairPartitionGenerator(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("pair partitions need k >= 0");
  if (k > kMaxPairPartitionK) {
    throw SizeLimitError("pair partition enumeration limited to k <= " + std::to_string(kMaxPairPartitionK));
  }
  partner_choice_.assign(k, 0);
  free_at_level_.resize(k + 1);
  free_at_level_[0].resize(2 * k);
  for (int i = 0; i < 2 * k; ++i) free_at_level_[0][i] = i;
  current_.pairs.resize(k);
}

void PairPartitionGenerator::fill_from(std::size_t level) {
  for (std::size_t l = level; l < static_cast<std::size_t>(k_); ++l) {
    if (l > level) partner_choice_[l] = 0;
    const auto& avail = free_at_level_[l];
    int first = avail[0];
    int partner = avail[1 + partner_choice_[l]];
    current_.pairs[l] = {first, partner};
    auto& rest = free_at_level_[l + 1];
    rest.clear();
    for (std::size_t i = 1; i < avail.size(); ++i) {
      if (avail[i] != partner) rest.push_back(avail[i]);
    }
  }
}

bool PairPartitionGenerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill_from(0);
    return true;
  }
  for (int l = k_ - 1; l >= 0; --l) {
    int options = static_cast<int>(free_at_level_[l].size()) - 1;
    if (partner_choice_[l] + 1 < options) {
      ++partner_choice_[l];
      fill_from(static_cast<std::size_t>(l));
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<PairPartition> enumerate_pair_partitions(int k) {
  std::vector<PairPartition> out;
  PairPartitionGenerator gen(k);
  while (gen.next()) out.push_back(gen.current());
  return out;
}

IdentitySides factorial_product_identity(int d, int k) {
  if (d < 1 || k < 0) throw std::domain_error("factorial product identity needs d >= 1, k >= 0");
  IdentitySides s{1, 1};
  for (int j = 0; j <= k; ++j) {
    Integer base = factorial(k - j);
    Integer e = binom(j + d - 1, d - 1);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    s.lhs *= p;
  }
  for (int i = 1; i <= k; ++i) {
    Integer e = binom(k - i + d, d);
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), e.get_ui());
    s.rhs *= p;
  }
  return s;
}

IdentitySides even_sum_identity(int d, int k) {
  if (d < 1 || k < 0) throw std::domain_error("even-sum identity needs d >= 1, k >= 0");
  IdentitySides s{0, 0};
  for (int i = 2; i <= 2 * k + d + 1; i += 2) s.lhs += binom(k - i + d, d - 1);
  s.rhs = (d % 2 == 0) ? Integer(0) : binom(k + d, d);
  return s;
}

}  // namespace symlat
