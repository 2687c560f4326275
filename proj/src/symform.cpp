#include "symlat/symform.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "symlat/parallel.hpp"

namespace symlat {

GramMatrix::GramMatrix(ExactMatrix entries) : m_(std::move(entries)) {
  if (!m_.is_square() || m_.rows() == 0) throw std::invalid_argument("Gram matrix must be square with size >= 1");
  if (!m_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
}

GramMatrix GramMatrix::identity(std::size_t n) { return GramMatrix(ExactMatrix::identity(n)); }

GramMatrix GramMatrix::diagonal(const std::vector<Scalar>& diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return GramMatrix(std::move(m));
}

namespace {

class HafnianMemo {
 public:
  explicit HafnianMemo(const ExactMatrix& m)
      : m_(m), value_(std::size_t{1} << m.rows()), known_(std::size_t{1} << m.rows(), 0) {}

  Scalar eval(std::uint32_t mask) {
    if (mask == 0) return 1;
    if (known_[mask]) return value_[mask];
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    Scalar sum = 0;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = __builtin_ctz(r);
      const Scalar& w = m_(i, j);
      if (w == 0) continue;
      sum += w * eval(rest & ~(1u << j));
    }
    known_[mask] = 1;
    value_[mask] = sum;
    return sum;
  }

 private:
  const ExactMatrix& m_;
  std::vector<Scalar> value_;
  std::vector<std::uint8_t> known_;
};

std::vector<int> merged_key(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> key;
  key.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(key));
  return key;
}

}  // namespace

Scalar hafnian(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hafnian needs a square matrix");
  if (m.rows() % 2 != 0) throw std::invalid_argument("hafnian needs even dimension");
  if (m.rows() > static_cast<std::size_t>(kMaxHafnianSize)) {
    throw SizeLimitError("hafnian limited to dimension " + std::to_string(kMaxHafnianSize));
  }
  if (!m.is_symmetric()) throw std::invalid_argument("hafnian needs a symmetric matrix");
  if (m.rows() == 0) return 1;
  HafnianMemo memo(m);
  return memo.eval(static_cast<std::uint32_t>((std::uint64_t{1} << m.rows()) - 1));
}

Scalar bracket_monomials(const GramMatrix& g, const std::vector<int>& indices) {
  if (indices.size() % 2 != 0) throw std::invalid_argument("bracket needs an even number of factors");
  const std::size_t n = indices.size();
  if (n > static_cast<std::size_t>(kMaxHafnianSize)) {
    throw SizeLimitError("bracket limited to total degree " + std::to_string(kMaxHafnianSize));
  }
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= g.size()) throw std::out_of_range("base-vector index out of range");
  }
  ExactMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = g(indices[a], indices[b]);
  return hafnian(m);
}

SymPowerForm induced_gram(const GramMatrix& g, int k) {
  if (k < 0) throw std::invalid_argument("symmetric power degree must be >= 0");
  if (2 * k > kMaxHafnianSize) throw SizeLimitError("induced Gram limited to k <= " + std::to_string(kMaxHafnianSize / 2));
  const int d = static_cast<int>(g.size()) - 1;
  if (binom(k + d, d) > static_cast<unsigned long>(kMaxInducedRank)) {
    throw SizeLimitError("Sym^k rank exceeds " + std::to_string(kMaxInducedRank));
  }
  SymPowerForm out{g, k, enumerate_monomials(d, k), {}};
  const std::size_t n = out.basis.size();

  std::vector<std::vector<int>> multisets;
  multisets.reserve(n);
  for (const auto& a : out.basis) multisets.push_back(a.as_multiset());

  // Brackets depend only on the merged multiset, so evaluate each once.
  std::map<std::vector<int>, std::size_t> key_ids;
  std::vector<std::size_t> entry_key(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto [it, inserted] = key_ids.try_emplace(merged_key(multisets[i], multisets[j]), key_ids.size());
      entry_key[i * n + j] = it->second;
    }
  std::vector<const std::vector<int>*> keys(key_ids.size());
  for (const auto& [key, id] : key_ids) keys[id] = &key;
  std::vector<Scalar> values(keys.size());
  parallel_for(keys.size(), [&](std::size_t id) { values[id] = bracket_monomials(g, *keys[id]); });

  out.gram = ExactMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      out.gram(i, j) = values[entry_key[i * n + j]];
      out.gram(j, i) = out.gram(i, j);
    }
  return out;
}

Scalar bracket_poly(const GramMatrix& g, const MultiPoly& f, const MultiPoly& h) {
  if (f.vars() != g.size() || h.vars() != g.size()) {
    throw std::invalid_argument("polynomial variable count does not match the Gram matrix");
  }
  if (!f.is_homogeneous() || !h.is_homogeneous()) throw std::invalid_argument("bracket_poly needs homogeneous input");
  if (f.is_zero() || h.is_zero()) return 0;
  const int total = f.degree() + h.degree();
  if (total % 2 != 0) return 0;
  if (total > kMaxHafnianSize) throw SizeLimitError("bracket limited to total degree " + std::to_string(kMaxHafnianSize));
  std::map<std::vector<int>, Scalar> cache;
  Scalar sum = 0;
  for (const auto& [a, ca] : f.terms()) {
    auto ma = a.as_multiset();
    for (const auto& [b, cb] : h.terms()) {
      auto key = merged_key(ma, b.as_multiset());
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, bracket_monomials(g, key)).first;
      sum += ca * cb * it->second;
    }
  }
  return sum;
}

}  // namespace symlat
