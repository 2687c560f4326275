#include "symlat/orthopoly.hpp"

#include <stdexcept>

namespace symlat {

UniPoly::UniPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::x() { return UniPoly({Scalar(0), Scalar(1)}); }
UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar UniPoly::coefficient(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[j];
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Scalar> c(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) c[j - 1] = coeffs_[j] * static_cast<long>(j);
  return UniPoly(std::move(c));
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc = 0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * t + coeffs_[j];
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Scalar& c = coeffs_[j];
    if (c == 0) continue;
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string power = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
    if (power.empty()) {
      s += symlat::to_string(mag);
    } else if (mag == 1) {
      s += power;
    } else {
      s += symlat::to_string(mag) + "*" + power;
    }
  }
  return s;
}

UniPoly p_poly(int n, int m) {
  if (n < 0 || 2 * n > m + 1) {
    throw std::domain_error("p_n^m needs 0 <= 2n <= m+1, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  std::vector<Scalar> c(n + 1, Scalar(0));
  const Integer top = factorial(n) * double_factorial(m - 2 * n);
  for (int j = n; j >= 0; j -= 2) {
    Integer den = factorial(j) * double_factorial(m - n - j) * double_factorial(n - j);
    Scalar v = make_scalar(top, den);
    c[j] = ((n - j) / 2 % 2 == 0) ? v : Scalar(-v);
  }
  return UniPoly(std::move(c));
}

Scalar d_coeff(int n, int m) {
  if (n < 1 || 2 * n > m - 1) {
    throw std::domain_error("d_n^m needs n >= 1 and 2n <= m-1, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  return make_scalar(Integer(n) * (m - n + 1), Integer(m - 2 * n) * (m - 2 * n + 2));
}

Scalar moment(int j, int m) {
  if (j < 0 || j > m - 1) {
    throw std::domain_error("moment needs 0 <= j <= m-1, got j=" + std::to_string(j) + ", m=" + std::to_string(m));
  }
  if (j % 2 != 0) return 0;
  Integer den = 1;
  for (int l = 1; l <= j / 2; ++l) den *= (m - 2 * l);
  return make_scalar(double_factorial(j - 1), den);
}

MomentFunctional::MomentFunctional(int m) : m_(m) {
  if (m < 1) throw std::domain_error("moment functional needs m >= 1");
  moments_.reserve(m);
  for (int j = 0; j < m; ++j) moments_.push_back(symlat::moment(j, m));
}

const Scalar& MomentFunctional::moment(int j) const {
  if (j < 0 || j >= m_) throw std::domain_error("moment index outside [0, m-1]");
  return moments_[j];
}

Scalar MomentFunctional::operator()(const UniPoly& f) const {
  if (f.degree() > m_ - 1) {
    throw std::domain_error("functional defined only up to degree m-1 = " + std::to_string(m_ - 1));
  }
  Scalar acc = 0;
  for (int j = 0; j <= f.degree(); ++j) acc += f.coefficient(j) * moments_[j];
  return acc;
}

Scalar functional(const UniPoly& f, int m) { return MomentFunctional(m)(f); }

Scalar norm_hat(int n, int m) {
  if (n < 0 || 2 * n > m - 1) throw std::domain_error("norm_hat needs 0 <= 2n <= m-1");
  Scalar r = 1;
  for (int l = 1; l <= n; ++l) r *= d_coeff(l, m);
  return r;
}

}  // namespace symlat
