#pragma once

// Homogeneous polynomials orthogonal for the Gaussian inner product
//
//   <<f, g>> = (2 pi)^{-(d+1)/2} int f g exp(-|x|^2 / 2) dx,
//
// which on monomials is prod_i (a_i + b_i - 1)!! when every a_i + b_i is even
// and 0 otherwise. The basis h_alpha is built recursively on the number of
// variables from the one-variable family p_n^m.

#include <vector>

#include "symlat/combinat.hpp"
#include "symlat/exactnum.hpp"
#include "symlat/linalg.hpp"
#include "symlat/multipoly.hpp"

namespace symlat {

inline constexpr std::size_t kMaxHBasisRank = 200;

Scalar moment_bracket(const MultiPoly& f, const MultiPoly& g);
Scalar moment_bracket(const MultiIndex& a, const MultiIndex& b);

struct HBasisElement {
  MultiIndex alpha;
  MultiPoly poly;
  Scalar norm;  // <<h_alpha, h_alpha>>, from the norm recursion
};

/// Exact h_alpha: leading monomial x^alpha with coefficient 1. Results are
/// memoized process-wide; safe to call from several threads.
HBasisElement h_alpha(const MultiIndex& alpha);
const MultiPoly& h_alpha_poly(const MultiIndex& alpha);

/// <<h_alpha, h_alpha>> via
///   alpha_d! (2|a'|+d)!! (2|a|+d-1)!! / (|a'|+|a|+d)! * <<h_a', h_a'>>
/// down to <<x_0^a, x_0^a>> = (2a-1)!!.
Scalar h_norm(const MultiIndex& alpha);

struct GramHReport {
  std::vector<MultiIndex> basis;
  std::vector<Scalar> diagonal;   // <<h_a, h_a>> computed by direct bracket
  std::vector<Scalar> recursion;  // h_norm(a)
  bool off_diagonal_zero = false;
  bool recursion_matches = false;
  Scalar determinant;  // D(d,k) = product of the diagonal
};

GramHReport gram_h(int d, int k);

struct TransitionReport {
  std::vector<MultiIndex> basis;
  ExactMatrix inverse_transition;  // row a, column b: <<x^a, h_b>> / <<h_b, h_b>>
  bool unit_lower_triangular = false;
  bool reconstructs_monomials = false;  // x^a == sum_b T^{-1}_{ab} h_b
};

TransitionReport transition_check(int d, int k);

}  // namespace symlat
