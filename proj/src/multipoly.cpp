#include "symlat/multipoly.hpp"

#include <stdexcept>

namespace symlat {

MultiPoly MultiPoly::monomial(const MultiIndex& alpha, const Scalar& coef) {
  MultiPoly p(alpha.length());
  p.add_term(alpha, coef);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t vars) {
  if (index >= vars) throw std::out_of_range("variable index out of range");
  std::vector<int> e(vars, 0);
  e[index] = 1;
  return monomial(MultiIndex(std::move(e)));
}

MultiPoly MultiPoly::constant(const Scalar& c, std::size_t vars) {
  return monomial(MultiIndex(std::vector<int>(vars, 0)), c);
}

Scalar MultiPoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Scalar& coef) {
  if (alpha.length() != vars_) throw std::invalid_argument("monomial has the wrong number of variables");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [a, c] : terms_) {
    if (a.degree() != d) return false;
  }
  return true;
}

int MultiPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  if (!is_homogeneous()) throw std::domain_error("polynomial is not homogeneous");
  return terms_.begin()->first.degree();
}

const MultiIndex& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

MultiPoly MultiPoly::lifted() const {
  MultiPoly out(vars_ + 1);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a.extended(0), c);
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  MultiPoly result = constant(1, vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void MultiPoly::check_vars(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_vars(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_vars(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly out(a.vars_);
  std::vector<int> e(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ma[i] + mb[i];
      out.add_term(MultiIndex(e), ca * cb);
    }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
    }
    if (mono.empty()) {
      s += symlat::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += symlat::to_string(mag) + "*" + mono;
    }
  }
  return s;
}

}  // namespace symlat
