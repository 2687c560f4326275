#include "symlat/exactnum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace symlat {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

std::int64_t parse_int64(std::string_view text) {
  text = trim(text);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed exponent: " + std::string(text));
  }
  return v;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

// Pollard-Brent on a composite n < 2^64 with no factor below the trial limit.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t split_composite(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Cofactor left after trial division: every prime factor exceeds the trial
// limit. Primes and perfect powers are resolved at any size, other
// composites only below 2^64.
void add_cofactor(const Integer& n, std::int64_t multiplicity, FactoredInteger::FactorMap& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        add_cofactor(root, multiplicity * static_cast<std::int64_t>(e), out);
        return;
      }
    }
  }
  if (!n.fits_ulong_p() || sizeof(unsigned long) < 8) {
    throw std::domain_error("unfactored cofactor beyond trial-division range: " + to_string(n));
  }
  const std::uint64_t d = split_composite(n.get_ui());
  add_cofactor(Integer(static_cast<unsigned long>(d)), multiplicity, out);
  add_cofactor(Integer(n / static_cast<unsigned long>(d)), multiplicity, out);
}

}  // namespace

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  return make_scalar(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Scalar& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

bool is_integral(const Scalar& q) { return q.get_den() == 1; }

Integer to_integer(const Scalar& q) {
  if (!is_integral(q)) throw std::domain_error("not an integer: " + to_string(q));
  return q.get_num();
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string(z));
  return z.get_si();
}

Integer binom(std::int64_t z, std::int64_t k) {
  if (k < 0) return 0;
  if (z >= 0) {
    if (z < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(z), static_cast<unsigned long>(k));
    return r;
  }
  // binom(-w, k) = (-1)^k binom(w + k - 1, k)
  Integer r = binom(-z + k - 1, k);
  return (k % 2 == 0) ? r : Integer(-r);
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial(std::int64_t n) {
  if (n < -1) throw std::domain_error("double factorial requires n >= -1, got " + std::to_string(n));
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Scalar pow(const Scalar& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Scalar inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(num, den);  // already coprime
}

FactoredInteger::FactorMap factor_integer(Integer n) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  if (n < 0) n = -n;
  FactoredInteger::FactorMap out;
  auto strip = [&](unsigned long p) {
    std::int64_t e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out[Integer(p)] = e;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    strip(p);
  }
  if (n > 1) add_cofactor(n, 1, out);
  return out;
}

FactoredInteger::FactoredInteger(std::int64_t value) : FactoredInteger(Integer(static_cast<long>(value))) {}

FactoredInteger::FactoredInteger(const Integer& value) {
  if (value == 0) throw std::domain_error("FactoredInteger cannot represent zero");
  sign_ = value < 0 ? -1 : 1;
  factors_ = factor_integer(value);
}

FactoredInteger::FactoredInteger(const Scalar& value) {
  if (value == 0) throw std::domain_error("FactoredInteger cannot represent zero");
  sign_ = value < 0 ? -1 : 1;
  factors_ = factor_integer(value.get_num());
  for (const auto& [p, e] : factor_integer(value.get_den())) factors_[p] -= e;
}

FactoredInteger FactoredInteger::from_factors(int sign, const FactorMap& factors) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  FactoredInteger f;
  f.sign_ = sign;
  for (const auto& [p, e] : factors) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + symlat::to_string(p));
    f.multiply_prime_power(p, e);
  }
  return f;
}

FactoredInteger FactoredInteger::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty factored integer");
  FactoredInteger out;
  if (text.front() == '-') {
    out.sign_ = -1;
    text.remove_prefix(1);
  }
  while (true) {
    auto star = text.find('*');
    std::string_view term = trim(text.substr(0, star));
    auto caret = term.find('^');
    Integer base = parse_integer(term.substr(0, caret));
    std::int64_t e = caret == std::string_view::npos ? 1 : parse_int64(term.substr(caret + 1));
    if (base <= 0) throw std::invalid_argument("factor bases must be positive");
    for (const auto& [p, pe] : factor_integer(base)) out.multiply_prime_power(p, pe * e);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return out;
}

std::int64_t FactoredInteger::exponent(const Integer& prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? 0 : it->second;
}

bool FactoredInteger::is_integer() const {
  for (const auto& [p, e] : factors_) {
    if (e < 0) return false;
  }
  return true;
}

bool FactoredInteger::is_square() const {
  if (sign_ < 0) return false;
  for (const auto& [p, e] : factors_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

Scalar FactoredInteger::value() const {
  Integer num = sign_, den = 1;
  for (const auto& [p, e] : factors_) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0) num *= pe; else den *= pe;
  }
  return Scalar(num, den);
}

Integer FactoredInteger::integer_value() const {
  if (!is_integer()) throw std::domain_error("factored value is not an integer: " + to_string());
  return value().get_num();
}

FactoredInteger FactoredInteger::abs() const {
  FactoredInteger r = *this;
  r.sign_ = 1;
  return r;
}

FactoredInteger FactoredInteger::pow(std::int64_t e) const {
  FactoredInteger r;
  r.sign_ = (sign_ < 0 && e % 2 != 0) ? -1 : 1;
  if (e == 0) return r;
  for (const auto& [p, pe] : factors_) r.factors_[p] = pe * e;
  return r;
}

FactoredInteger FactoredInteger::sqrt() const {
  if (!is_square()) throw std::domain_error("not a perfect square: " + to_string());
  FactoredInteger r;
  for (const auto& [p, e] : factors_) r.factors_[p] = e / 2;
  return r;
}

FactoredInteger FactoredInteger::square_free_part() const {
  FactoredInteger r;
  r.sign_ = sign_;
  for (const auto& [p, e] : factors_) {
    if (e % 2 != 0) r.factors_[p] = 1;
  }
  return r;
}

std::vector<Integer> FactoredInteger::prime_support() const {
  std::vector<Integer> out;
  for (const auto& [p, e] : factors_) {
    if (e > 0) out.push_back(p);
  }
  return out;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
  return (other / *this).is_integer();
}

std::string FactoredInteger::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  if (factors_.empty()) {
    os << '1';
    return os.str();
  }
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str(10);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

void FactoredInteger::multiply_prime_power(const Integer& prime, std::int64_t exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = factors_.try_emplace(prime, 0);
  it->second += exponent;
  if (it->second == 0) factors_.erase(it);
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& rhs) {
  sign_ *= rhs.sign_;
  for (const auto& [p, e] : rhs.factors_) multiply_prime_power(p, e);
  return *this;
}

FactoredInteger& FactoredInteger::operator/=(const FactoredInteger& rhs) {
  sign_ *= rhs.sign_;
  for (const auto& [p, e] : rhs.factors_) multiply_prime_power(p, -e);
  return *this;
}

}  // namespace symlat
