#pragma once

// Exact integers and rationals, factored integers, and the scalar
// combinatorial functions everything else is built from.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symlat {

using Integer = mpz_class;
using Scalar = mpq_class;  // always kept canonical (reduced, den > 0)

/// Raised when an input exceeds one of the library's hard size caps.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

Scalar make_scalar(const Integer& num, const Integer& den = 1);
Scalar parse_scalar(std::string_view text);  // "p/q" or "p"
std::string to_string(const Scalar& q);
std::string to_string(const Integer& z);

bool is_integral(const Scalar& q);
Integer to_integer(const Scalar& q);  // throws std::domain_error if not integral

/// Generalized binomial coefficient: z(z-1)...(z-k+1)/k! for k >= 0, zero
/// for k < 0. Defined for every integer z, negative ones included.
Integer binom(std::int64_t z, std::int64_t k);

Integer factorial(std::int64_t n);

/// n!! = n(n-2)(n-4)..., with (-1)!! = 0!! = 1. Throws std::domain_error
/// for n < -1.
Integer double_factorial(std::int64_t n);

Scalar pow(const Scalar& base, std::int64_t exponent);

std::int64_t to_int64(const Integer& z);  // throws std::overflow_error

/// A nonzero rational held as a sign and a prime -> exponent map.
/// Exponents may be negative; zero exponents are never stored.
class FactoredInteger {
 public:
  using FactorMap = std::map<Integer, std::int64_t>;

  FactoredInteger() = default;  // the value 1
  explicit FactoredInteger(std::int64_t value);
  explicit FactoredInteger(const Integer& value);
  explicit FactoredInteger(const Scalar& value);

  /// Builds from explicit factors. Keys must be prime; this is checked.
  static FactoredInteger from_factors(int sign, const FactorMap& factors);
  static FactoredInteger parse(std::string_view text);

  int sign() const { return sign_; }
  const FactorMap& factors() const { return factors_; }
  std::int64_t exponent(const Integer& prime) const;

  bool is_one() const { return sign_ == 1 && factors_.empty(); }
  bool is_integer() const;  // no negative exponents
  bool is_square() const;   // positive, all exponents even

  Scalar value() const;
  Integer integer_value() const;  // throws std::domain_error if not integral

  FactoredInteger abs() const;
  FactoredInteger pow(std::int64_t e) const;
  FactoredInteger sqrt() const;  // throws std::domain_error unless is_square()
  FactoredInteger square_free_part() const;

  /// Primes with positive exponent, ascending.
  std::vector<Integer> prime_support() const;
  /// a.divides(b): b / a is an integer.
  bool divides(const FactoredInteger& other) const;

  std::string to_string() const;

  FactoredInteger& operator*=(const FactoredInteger& rhs);
  FactoredInteger& operator/=(const FactoredInteger& rhs);
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }
  friend FactoredInteger operator/(FactoredInteger a, const FactoredInteger& b) { return a /= b; }
  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

  /// Multiplies in prime^exponent without re-factoring.
  void multiply_prime_power(const Integer& prime, std::int64_t exponent);

 private:
  int sign_ = 1;
  FactorMap factors_;
};

/// Trial division up to one million. The remaining cofactor is resolved when
/// it is prime, a perfect power, or below 2^64 (Pollard-Brent); otherwise
/// std::domain_error.
FactoredInteger::FactorMap factor_integer(Integer n);

}  // namespace symlat
