#pragma once

// The bilinear form induced on Sym^k V by a symmetric form on V:
//
//   <<x_{n_1}...x_{n_k}, x_{n_{k+1}}...x_{n_{2k}}>> = sum over perfect
//   matchings P of {1..2k} of prod_{{i,j} in P} <x_{n_i}, x_{n_j}>
//
// i.e. the hafnian of the 2k x 2k matrix of pairwise base-form values.

#include <vector>

#include "symlat/combinat.hpp"
#include "symlat/exactnum.hpp"
#include "symlat/linalg.hpp"
#include "symlat/multipoly.hpp"

namespace symlat {

inline constexpr int kMaxHafnianSize = 16;
inline constexpr std::size_t kMaxInducedRank = 5000;

/// Symmetric matrix of a bilinear form in a fixed basis.
class GramMatrix {
 public:
  explicit GramMatrix(ExactMatrix entries);  // validates square, symmetric, size >= 1
  explicit GramMatrix(const IntMatrix& entries) : GramMatrix(to_exact(entries)) {}

  static GramMatrix identity(std::size_t n);
  static GramMatrix diagonal(const std::vector<Scalar>& diag);

  std::size_t size() const { return m_.rows(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ExactMatrix& matrix() const { return m_; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  ExactMatrix m_;
};

struct SymPowerForm {
  GramMatrix base;
  int k = 0;
  std::vector<MultiIndex> basis;  // last-coordinate-first order
  ExactMatrix gram;
};

/// Sum over perfect matchings of products of matched entries. Memoized on
/// the set of unmatched indices. 0x0 gives 1.
Scalar hafnian(const ExactMatrix& m);

/// Bracket of two monomials given by the concatenated list of their
/// base-vector indices (any split; only the multiset matters).
Scalar bracket_monomials(const GramMatrix& g, const std::vector<int>& indices);

SymPowerForm induced_gram(const GramMatrix& g, int k);

/// Bilinear extension of the monomial bracket to homogeneous polynomials;
/// zero when the total degree is odd.
Scalar bracket_poly(const GramMatrix& g, const MultiPoly& f, const MultiPoly& h);

}  // namespace symlat
