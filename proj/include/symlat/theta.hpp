#pragma once

#include <cstdint>

#include "symlat/exactnum.hpp"
#include "symlat/symform.hpp"

namespace symlat {

/// det of the induced Gram on Sym^k of a rank d+1 form equals
/// det(G)^binom(d+k, d+1) * theta(d, k).
struct ThetaResult {
  int d = 0;
  int k = 0;
  FactoredInteger value;
  Integer exponent_of_det_g;  // binom(d+k, d+1)
};

/// The combinatorial factor theta_{d,k}, factored.
///
/// Both parity branches evaluate binomials with negative upper argument
/// (the generalized binomial); clamping those to zero silently drops factors,
/// e.g. theta_{d,2} would lose its (d+3).
FactoredInteger theta(int d, int k);
ThetaResult theta_result(int d, int k);

Integer det_exponent(int d, int k);  // binom(d+k, d+1)

Scalar det_closed_form(const Scalar& det_g, int d, int k);
FactoredInteger det_closed_form(const FactoredInteger& det_g, int d, int k);

/// theta(d,k) / prod_{j<=k} theta(d-1, j), written as a product over j of
/// [(k-j)! (2j+d)!! (2k+d-1)!! / (j+k+d)!]^binom(j+d-1, d-1). Needs d >= 1.
Scalar inductive_ratio(int d, int k);

inline constexpr std::size_t kMaxVerifyRank = 200;

struct MainTheoremReport {
  Scalar lhs;  // det of the brute-force induced Gram matrix
  Scalar rhs;  // closed form
  bool equal = false;
};

MainTheoremReport verify_maintheorem(const GramMatrix& g, int k);

}  // namespace symlat
