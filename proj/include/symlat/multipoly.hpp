#pragma once

#include <map>
#include <string>

#include "symlat/combinat.hpp"
#include "symlat/exactnum.hpp"

namespace symlat {

/// Sparse polynomial in a fixed number of variables with exact coefficients.
/// Terms are kept in the last-coordinate-first monomial order; zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, Scalar>;

  explicit MultiPoly(std::size_t vars = 1) : vars_(vars) {}

  static MultiPoly monomial(const MultiIndex& alpha, const Scalar& coef = 1);
  static MultiPoly variable(std::size_t index, std::size_t vars);
  static MultiPoly constant(const Scalar& c, std::size_t vars);

  std::size_t vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const Scalar& coef);

  /// Degree of a homogeneous polynomial; std::domain_error if inhomogeneous
  /// or zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Largest monomial with a nonzero coefficient.
  const MultiIndex& leading_monomial() const;

  /// Embeds into one more variable (the new variable is last).
  MultiPoly lifted() const;
  MultiPoly pow(int e) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;  // e.g. "x1^2 - 1/3*x0^2"

 private:
  void check_vars(const MultiPoly& other) const;
  std::size_t vars_;
  TermMap terms_;
};

}  // namespace symlat
