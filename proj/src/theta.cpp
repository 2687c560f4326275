#include "symlat/theta.hpp"

#include <stdexcept>

#include "symlat/linalg.hpp"

namespace symlat {

namespace {

void check_dk(int d, int k) {
  if (d < 0 || k < 0) throw std::domain_error("theta needs d >= 0 and k >= 0");
}

// result *= base^exponent for a small positive base
void accumulate(FactoredInteger& result, std::int64_t base, const Integer& exponent) {
  if (base == 1 || exponent == 0) return;
  const std::int64_t e = to_int64(exponent);
  for (const auto& [p, pe] : factor_integer(Integer(static_cast<long>(base)))) result.multiply_prime_power(p, pe * e);
}

}  // namespace

FactoredInteger theta(int d, int k) {
  check_dk(d, k);
  FactoredInteger result;
  for (int i = 1; i <= k; ++i) accumulate(result, i, binom(k - i + d, d) * d);
  if (d % 2 == 0) {
    for (int i = 1; i <= 2 * k + d - 1; i += 2) accumulate(result, i, binom(k - i + d, d));
  } else {
    for (int i = 1; i <= k + (d - 1) / 2; ++i) accumulate(result, i, binom(k - i + d, d) - binom(k - 2 * i + d, d));
  }
  return result;
}

Integer det_exponent(int d, int k) {
  check_dk(d, k);
  return binom(d + k, d + 1);
}

ThetaResult theta_result(int d, int k) { return ThetaResult{d, k, theta(d, k), det_exponent(d, k)}; }

Scalar det_closed_form(const Scalar& det_g, int d, int k) {
  return pow(det_g, to_int64(det_exponent(d, k))) * theta(d, k).value();
}

FactoredInteger det_closed_form(const FactoredInteger& det_g, int d, int k) {
  return det_g.pow(to_int64(det_exponent(d, k))) * theta(d, k);
}

Scalar inductive_ratio(int d, int k) {
  if (d < 1 || k < 0) throw std::domain_error("inductive ratio needs d >= 1, k >= 0");
  Scalar r = 1;
  for (int j = 0; j <= k; ++j) {
    Scalar factor = make_scalar(factorial(k - j) * double_factorial(2 * j + d) * double_factorial(2 * k + d - 1),
                                factorial(j + k + d));
    r *= pow(factor, to_int64(binom(j + d - 1, d - 1)));
  }
  return r;
}

MainTheoremReport verify_maintheorem(const GramMatrix& g, int k) {
  const int d = static_cast<int>(g.size()) - 1;
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (binom(k + d, d) > static_cast<unsigned long>(kMaxVerifyRank)) {
    throw SizeLimitError("verification limited to Sym^k rank " + std::to_string(kMaxVerifyRank));
  }
  MainTheoremReport report;
  report.lhs = det_exact(induced_gram(g, k).gram);
  report.rhs = det_closed_form(det_exact(g.matrix()), d, k);
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace symlat
