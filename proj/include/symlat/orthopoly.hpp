#pragma once

// Monic one-variable polynomials p_n^m (parameter m, degree n, 0 <= 2n <= m+1)
// with the three-term recurrence p_{n+1} = x p_n - d_n^m p_{n-1}, and the
// normalized moment functional that makes them orthogonal.

#include <string>
#include <vector>

#include "symlat/exactnum.hpp"

namespace symlat {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coefficients);  // index = degree

  static UniPoly x();
  static UniPoly constant(const Scalar& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(int j) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  UniPoly derivative() const;
  Scalar evaluate(const Scalar& t) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Scalar& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string() const;  // "x^3 - 3/5*x", "0" for zero

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// p_n^m. Throws std::domain_error outside 0 <= 2n <= m+1.
UniPoly p_poly(int n, int m);

/// d_n^m = n(m-n+1) / ((m-2n)(m-2n+2)), for n >= 1 and 2n <= m-1.
Scalar d_coeff(int n, int m);

/// Normalized moment Lhat(x^j) = L(x^j) / L(1): zero for odd j, and
/// (j-1)!! / prod_{l=1}^{j/2} (m-2l) for even j. Needs 0 <= j <= m-1.
Scalar moment(int j, int m);

/// Lhat on polynomials of degree <= m-1, with the moment table precomputed.
class MomentFunctional {
 public:
  explicit MomentFunctional(int m);
  int m() const { return m_; }
  const Scalar& moment(int j) const;
  Scalar operator()(const UniPoly& f) const;

 private:
  int m_;
  std::vector<Scalar> moments_;
};

Scalar functional(const UniPoly& f, int m);

/// prod_{l=1}^n d_l^m = Lhat(p_n^m p_n^m); needs 2n <= m-1.
Scalar norm_hat(int n, int m);

}  // namespace symlat
