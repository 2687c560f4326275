#include "symlat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace symlat {

namespace {

void check_det_size(std::size_t n) {
  if (n > kMaxDeterminantSize) {
    throw SizeLimitError("determinant limited to size " + std::to_string(kMaxDeterminantSize) + ", got " +
                         std::to_string(n));
  }
}

// row_a += factor * row_b
void add_row_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < a.cols(); ++j) a(target, j) += factor * a(source, j);
}

void add_col_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, target) += factor * a(i, source);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

IntMatrix to_integer_matrix(const ExactMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_integer(m(i, j));
  return out;
}

Integer det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  check_det_size(m.rows());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a(i,j) = (a(i,j) a(k,k) - a(i,k) a(k,j)) / prev, exact by Sylvester's identity
        mpz_mul(t.get_mpz_t(), a(i, j).get_mpz_t(), a(k, k).get_mpz_t());
        mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Scalar det_exact(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  check_det_size(m.rows());
  const std::size_t n = m.rows();
  IntMatrix lifted(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) lifted(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return make_scalar(det_exact(lifted), scale);
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Scalar f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Scalar piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm out;
  std::size_t t = 0;
  auto move_min_to_pivot = [&](bool whole_block) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (a(i, j) == 0) continue;
        Integer v = ::abs(a(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (found) {
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
    }
    return found;
  };

  while (t < std::min(m, n)) {
    if (!move_min_to_pivot(true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        add_row_multiple(a, i, t, -tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        add_col_multiple(a, j, t, -tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // pivot must divide the remaining block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row_multiple(a, t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    out.factors.push_back(::abs(a(t, t)));
    ++t;
  }
  out.rank = t;
  return out;
}

IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (best == m || ::abs(a(i, c)) < ::abs(a(best, c))) best = i;
      }
      if (best == m) break;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        add_row_multiple(a, i, r, -tdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) add_row_multiple(a, i, r, -fdiv(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t pc = 0;
  for (std::size_t r = 0; r < rows && pc < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = pc; c < n; ++c) {
        if (a(r, c) == 0) continue;
        if (best == n || ::abs(a(r, c)) < ::abs(a(r, best))) best = c;
      }
      if (best == n) break;
      a.swap_cols(pc, best);
      u.swap_cols(pc, best);
      bool clean = true;
      for (std::size_t c = pc + 1; c < n; ++c) {
        if (a(r, c) == 0) continue;
        Integer q = -tdiv(a(r, c), a(r, pc));
        add_col_multiple(a, c, pc, q);
        add_col_multiple(u, c, pc, q);
        if (a(r, c) != 0) clean = false;
      }
      if (clean) {
        ++pc;
        break;
      }
    }
  }
  IntMatrix kernel(n - pc, n);
  for (std::size_t c = pc; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) kernel(c - pc, i) = u(i, c);
  return hermite_normal_form(kernel);
}

IntMatrix saturate(const IntMatrix& l) {
  if (l.rows() == 0) return IntMatrix(0, l.cols());
  return integer_kernel(integer_kernel(l));
}

std::string to_string(const ExactMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace symlat
