#include "symlat/homobasis.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "symlat/orthopoly.hpp"
#include "symlat/parallel.hpp"

namespace symlat {

Scalar moment_bracket(const MultiIndex& a, const MultiIndex& b) {
  if (a.length() != b.length()) throw std::invalid_argument("monomials have different variable counts");
  Integer r = 1;
  for (std::size_t i = 0; i < a.length(); ++i) {
    int s = a[i] + b[i];
    if (s % 2 != 0) return 0;
    r *= double_factorial(s - 1);
  }
  return Scalar(r);
}

Scalar moment_bracket(const MultiPoly& f, const MultiPoly& g) {
  if (f.vars() != g.vars()) throw std::invalid_argument("polynomials have different variable counts");
  Scalar sum = 0;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      Scalar m = moment_bracket(a, b);
      if (m != 0) sum += ca * cb * m;
    }
  return sum;
}

namespace {

class HCache {
 public:
  const MultiPoly& get(const MultiIndex& alpha) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(alpha);
      if (it != cache_.end()) return *it->second;
    }
    auto built = std::make_unique<MultiPoly>(build(alpha));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(alpha, std::move(built));
    return *it->second;
  }

 private:
  MultiPoly build(const MultiIndex& alpha) {
    if (alpha.length() == 0) throw std::invalid_argument("h_alpha needs a nonempty multi-index");
    if (alpha.length() == 1) return MultiPoly::monomial(alpha);
    const std::size_t vars = alpha.length();
    const int d = static_cast<int>(vars) - 1;
    const int n = alpha.last();
    const UniPoly p = p_poly(n, 2 * alpha.degree() + d);

    // p(x_d / r) r^n with r^2 = x_0^2 + ... + x_{d-1}^2; only even powers of r occur.
    MultiPoly r2(vars);
    for (int i = 0; i < d; ++i) {
      std::vector<int> e(vars, 0);
      e[i] = 2;
      r2.add_term(MultiIndex(std::move(e)), 1);
    }
    std::vector<MultiPoly> r2_pow{MultiPoly::constant(1, vars)};
    for (int s = 1; s <= n / 2; ++s) r2_pow.push_back(r2_pow.back() * r2);

    MultiPoly head(vars);
    for (int j = n; j >= 0; j -= 2) {
      std::vector<int> e(vars, 0);
      e[d] = j;
      head += MultiPoly::monomial(MultiIndex(std::move(e)), p.coefficient(j)) * r2_pow[(n - j) / 2];
    }
    return head * get(alpha.truncated()).lifted();
  }

  std::shared_mutex mutex_;
  std::map<MultiIndex, std::unique_ptr<MultiPoly>> cache_;
};

HCache& h_cache() {
  static HCache cache;
  return cache;
}

void check_rank(int d, int k) {
  if (d < 0 || k < 0) throw std::invalid_argument("need d >= 0 and k >= 0");
  if (binom(k + d, d) > static_cast<unsigned long>(kMaxHBasisRank)) {
    throw SizeLimitError("homogeneous basis checks limited to rank " + std::to_string(kMaxHBasisRank));
  }
}

// Coefficient matrix of the h basis (rows) over the monomial basis (columns)
// and the monomial moment matrix.
struct BasisData {
  std::vector<MultiIndex> basis;
  ExactMatrix coeffs;
  ExactMatrix moments;
};

BasisData basis_data(int d, int k) {
  BasisData out{enumerate_monomials(d, k), {}, {}};
  const std::size_t n = out.basis.size();
  std::map<MultiIndex, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(out.basis[i], i);
  out.coeffs = ExactMatrix(n, n);
  out.moments = ExactMatrix(n, n);
  parallel_for(n, [&](std::size_t i) {
    const MultiPoly& h = h_alpha_poly(out.basis[i]);
    for (const auto& [a, c] : h.terms()) out.coeffs(i, position.at(a)) = c;
    for (std::size_t j = 0; j < n; ++j) out.moments(i, j) = moment_bracket(out.basis[i], out.basis[j]);
  });
  return out;
}

}  // namespace

const MultiPoly& h_alpha_poly(const MultiIndex& alpha) { return h_cache().get(alpha); }

HBasisElement h_alpha(const MultiIndex& alpha) { return HBasisElement{alpha, h_alpha_poly(alpha), h_norm(alpha)}; }

Scalar h_norm(const MultiIndex& alpha) {
  if (alpha.length() == 0) throw std::invalid_argument("h_norm needs a nonempty multi-index");
  if (alpha.length() == 1) return Scalar(double_factorial(2 * alpha[0] - 1));
  const int d = static_cast<int>(alpha.length()) - 1;
  const MultiIndex head = alpha.truncated();
  const int full = alpha.degree(), trunc = head.degree();
  Scalar factor = make_scalar(
      factorial(alpha.last()) * double_factorial(2 * trunc + d) * double_factorial(2 * full + d - 1),
      factorial(trunc + full + d));
  return factor * h_norm(head);
}

GramHReport gram_h(int d, int k) {
  check_rank(d, k);
  BasisData data = basis_data(d, k);
  const std::size_t n = data.basis.size();
  ExactMatrix gram = data.coeffs * data.moments * data.coeffs.transpose();

  GramHReport report;
  report.basis = data.basis;
  report.off_diagonal_zero = true;
  report.recursion_matches = true;
  report.determinant = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && gram(i, j) != 0) report.off_diagonal_zero = false;
    }
    report.diagonal.push_back(gram(i, i));
    report.recursion.push_back(h_norm(data.basis[i]));
    if (report.recursion.back() != gram(i, i)) report.recursion_matches = false;
    report.determinant *= gram(i, i);
  }
  return report;
}

TransitionReport transition_check(int d, int k) {
  check_rank(d, k);
  BasisData data = basis_data(d, k);
  const std::size_t n = data.basis.size();
  // column b of (moments * coeffs^T) holds <<x^a, h_b>>
  ExactMatrix cross = data.moments * data.coeffs.transpose();

  TransitionReport report;
  report.basis = data.basis;
  report.inverse_transition = ExactMatrix(n, n);
  report.unit_lower_triangular = true;
  for (std::size_t b = 0; b < n; ++b) {
    Scalar norm = h_norm(data.basis[b]);
    for (std::size_t a = 0; a < n; ++a) {
      Scalar v = cross(a, b) / norm;
      report.inverse_transition(a, b) = v;
      if (a < b && v != 0) report.unit_lower_triangular = false;
      if (a == b && v != 1) report.unit_lower_triangular = false;
    }
  }
  report.reconstructs_monomials = true;
  for (std::size_t a = 0; a < n; ++a) {
    MultiPoly sum(data.basis[a].length());
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& t = report.inverse_transition(a, b);
      if (t != 0) sum += h_alpha_poly(data.basis[b]) * t;
    }
    if (!(sum == MultiPoly::monomial(data.basis[a]))) report.reconstructs_monomials = false;
  }
  return report;
}

}  // namespace symlat
