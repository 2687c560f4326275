// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "symlat/homobasis.hpp"
#include "symlat/hyperkahler.hpp"
#include "symlat/lattices.hpp"
#include "symlat/orthopoly.hpp"
#include "symlat/theta.hpp"
#include "test_support.hpp"

using namespace symlat;
using testing::Rng;

namespace {

// Counts failed checks and remembers the first one.
struct Check {
  int failures = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::string shape(int d, int k) { return "d=" + std::to_string(d) + " k=" + std::to_string(k); }

void theta_special_cases(Check& check) {
  for (int d = 0; d <= 12; ++d) {
    check(theta(d, 0).is_one(), "theta_{d,0} " + shape(d, 0));
    check(theta(d, 1).is_one(), "theta_{d,1} " + shape(d, 1));
    check(theta(d, 2).integer_value() == (Integer(1) << d) * (d + 3), "theta_{d,2} " + shape(d, 2));
  }
  for (int k = 0; k <= 10; ++k) {
    check(theta(0, k).integer_value() == double_factorial(2 * k - 1), "theta_{0,k} " + shape(0, k));
    Integer expect = 1;
    for (int i = 0; i <= k; ++i) expect *= factorial(k);
    check(theta(1, k).integer_value() == expect, "theta_{1,k} " + shape(1, k));
  }
}

void determinant_brute_force(Check& check) {
  Rng rng(2024);
  for (int d = 0; d <= 3; ++d)
    for (int k = 1; k <= 4; ++k)
      for (int sample = 0; sample < 20;) {
        IntMatrix g = testing::random_symmetric(rng, static_cast<std::size_t>(d + 1), -5, 5);
        Integer det_g = det_exact(g);
        if (det_g == 0) continue;
        ++sample;
        Scalar lhs = det_exact(induced_gram(GramMatrix(g), k).gram);
        Scalar rhs = pow(Scalar(det_g), to_int64(binom(d + k, d + 1))) * theta(d, k).value();
        check(lhs == rhs, "det formula " + shape(d, k) + " sample " + std::to_string(sample));
      }
}

void hyperkaehler_numbers(Check& check) {
  auto k3_2 = sym_discriminant(registry("K3_Hilb", 2), false);
  check(k3_2.is_square() && k3_2.sqrt() == FactoredInteger::parse("2^23 * 5"), "sqrt discr K3[2]");
  check(sym_rank(registry("K3_Hilb", 2)) == 276, "rank Sym^2 for K3[2]");
  check(sym_discriminant(registry("K3_Hilb", 3), false) == FactoredInteger::parse("2^1106 * 3^92"), "discr K3[3]");
  auto rep = torsion_report(registry("K3_Hilb", 3), FactoredInteger::parse("2^277 * 3^46"));
  check(rep.complement_discriminant && *rep.complement_discriminant == FactoredInteger::parse("2^552"),
        "complement discr K3[3]");
  check(prime_set_z(registry("OG6")) == std::vector<Integer>{2, 3}, "Z(OG6)");
  check(prime_set_z(registry("OG10")) == std::vector<Integer>{2, 3, 5}, "Z(OG10)");
}

void orthogonal_polynomials(Check& check) {
  const UniPoly x = UniPoly::x();
  const UniPoly one_plus_x2 = UniPoly::constant(1) + x * x;
  for (int m = 1; m <= 30; ++m) {
    MomentFunctional lhat(m);
    std::vector<UniPoly> p;
    for (int n = 0; 2 * n <= m + 1; ++n) p.push_back(p_poly(n, m));
    const int top = static_cast<int>(p.size()) - 1;
    for (int n = 1; n + 1 <= top && 2 * (n + 1) <= m - 1; ++n)
      check(p[n + 1] == x * p[n] - d_coeff(n, m) * p[n - 1], "recurrence n=" + std::to_string(n) + " m=" + std::to_string(m));
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j)
        if (i != j && i + j <= m - 1)
          check(lhat(p[i] * p[j]) == 0, "orthogonality m=" + std::to_string(m));
    for (int n = 0; 2 * n <= m - 1; ++n) {
      Scalar product = 1;
      for (int l = 1; l <= n; ++l) product *= d_coeff(l, m);
      check(lhat(p[n] * p[n]) == product, "norm n=" + std::to_string(n) + " m=" + std::to_string(m));
      UniPoly xk = UniPoly::constant(1);
      for (int k = 0; k < n; ++k, xk = xk * x) check(lhat(xk * p[n]) == 0, "L(x^k p_n) m=" + std::to_string(m));
      check(lhat(xk * p[n]) == product, "L(x^n p_n) m=" + std::to_string(m));
    }
    for (int n = 1; n <= top; ++n) {
      UniPoly q = p_poly(n - 1, m - 2);
      check(one_plus_x2 * q.derivative() - Scalar(m - 1) * (x * q) == Scalar(n - m) * p[n],
            "differential relation n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
}

void homogeneous_basis(Check& check) {
  for (int d = 0; d <= 3; ++d)
    for (int k = 0; k <= 4; ++k) {
      GramHReport g = gram_h(d, k);
      check(g.off_diagonal_zero, "pairwise orthogonality " + shape(d, k));
      check(g.recursion_matches, "norm recursion " + shape(d, k));
      check(transition_check(d, k).unit_lower_triangular, "transition " + shape(d, k));
    }
  for (int d = 0; d <= 3; ++d)
    for (int k = 0; k <= 5; ++k) {
      Scalar product = 1;
      for (const auto& a : enumerate_monomials(d, k)) product *= h_norm(a);
      check(product == theta(d, k).value(), "product of norms " + shape(d, k));
    }
}

MultiIndex random_index(Rng& rng, int d, int degree) {
  std::vector<int> e(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(rng.uniform(0, d))];
  return MultiIndex(e);
}

std::vector<int> positions(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> out = a.as_multiset();
  for (int i : b.as_multiset()) out.push_back(i);
  return out;
}

void bracket_oracles(Check& check) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    int d = static_cast<int>(rng.uniform(0, 3));
    int deg = static_cast<int>(rng.uniform(0, 4));
    int deg2 = static_cast<int>(rng.uniform(0, 4));
    if ((deg + deg2) % 2) deg2 = deg2 == 4 ? 3 : deg2 + 1;
    MultiIndex a = random_index(rng, d, deg), b = random_index(rng, d, deg2);
    auto id = GramMatrix::identity(static_cast<std::size_t>(d + 1));
    check(moment_bracket(a, b) == testing::matching_bracket(id, positions(a, b)),
          "moment bracket " + a.to_string() + " " + b.to_string());
  }
  for (int trial = 0; trial < 200; ++trial) {
    int d = static_cast<int>(rng.uniform(0, 3));
    std::vector<Scalar> diag;
    for (int i = 0; i <= d; ++i) diag.push_back(make_scalar(rng.uniform(-6, 6), rng.uniform(1, 3)));
    auto g = GramMatrix::diagonal(diag);
    MultiIndex a = random_index(rng, d, static_cast<int>(rng.uniform(0, 4)));
    MultiIndex b = random_index(rng, d, static_cast<int>(rng.uniform(0, 4)));
    auto idx = positions(a, b);
    if (idx.size() % 2) idx.push_back(0);  // keep the total degree even
    Scalar closed = 1;
    for (int c = 0; c <= d; ++c) {
      int s = static_cast<int>(std::count(idx.begin(), idx.end(), c));
      closed *= s % 2 ? Scalar(0) : pow(diag[c], s / 2) * Scalar(double_factorial(s - 1));
    }
    ExactMatrix m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = g(idx[i], idx[j]);
    check(hafnian(m) == closed, "diagonal closed form trial " + std::to_string(trial));
  }
}

IntMatrix independent_rows(Rng& rng, std::size_t r, std::size_t n) {
  for (;;) {
    IntMatrix b = testing::random_int_matrix(rng, r, n, -3, 3);
    if (rank(to_exact(b)) == r) return b;
  }
}

void lattice_properties(Check& check) {
  Rng rng(7);
  const auto nondegenerate = [](const Embedding& e) { return det_exact(e.source_gram()) != 0; };
  for (int done = 0; done < 100;) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    Lattice m(testing::random_unimodular_gram(rng, n));
    IntMatrix t = testing::random_int_matrix(rng, n, n, -3, 3);
    Integer det = det_exact(t);
    if (det == 0 || abs(det) > 20) continue;
    ++done;
    Embedding e(m, t);
    check(discriminant(m).is_one(), "unimodular target");
    check(FactoredInteger(Integer(abs(det))).pow(2) == discriminant(e.source()), "index squared = discr");
    check(quotient_torsion(e).integer_value() == abs(det), "torsion = index");
  }
  for (int done = 0; done < 100;) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
    Embedding e(Lattice(testing::random_unimodular_gram(rng, n)), independent_rows(rng, r, n));
    if (!nondegenerate(e)) continue;
    ++done;
    check(quotient_torsion(e).divides(discriminant(e.source())), "torsion divides discr");
  }
  for (int done = 0; done < 100;) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
    Embedding e(Lattice(testing::random_unimodular_gram(rng, n)), saturate(independent_rows(rng, r, n)));
    if (!nondegenerate(e)) continue;
    ++done;
    check(discriminant(e.source()) == discriminant(orthogonal_complement(e).source()), "primitive: discr L = discr L^perp");
  }
  for (int done = 0; done < 100;) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
    Embedding e(Lattice(testing::random_unimodular_gram(rng, n)), independent_rows(rng, r, n));
    if (!nondegenerate(e)) continue;
    ++done;
    FactoredInteger expect = complement_discriminant(discriminant(e.source()), quotient_torsion(e));
    check(discriminant(orthogonal_complement(e).source()) == expect, "discr L^perp = discr L / n^2");
    check(discriminant(double_complement(e).source()) == expect, "discr L^perp perp = discr L / n^2");
  }
}

void combinatorial_identities(Check& check) {
  for (int d = 1; d <= 8; ++d)
    for (int k = 0; k <= 10; ++k) {
      check(factorial_product_identity(d, k).holds(), "factorial product " + shape(d, k));
      check(even_sum_identity(d, k).holds(), "even sum " + shape(d, k));
    }
  for (int k = 0; k <= 7; ++k) {
    PairPartitionGenerator gen(k);
    Integer count = 0;
    while (gen.next()) ++count;
    check(count == double_factorial(2 * k - 1), "pair partitions k=" + std::to_string(k));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {"theta special cases", theta_special_cases},
      {"determinant formula by brute force (rank <= 4, k <= 4, 20 forms each)", determinant_brute_force},
      {"hyperkaehler discriminants and prime sets", hyperkaehler_numbers},
      {"orthogonal polynomial suite (m <= 30)", orthogonal_polynomials},
      {"homogeneous orthogonal basis (d <= 3)", homogeneous_basis},
      {"bracket oracle equivalence (2 x 200 cases)", bracket_oracles},
      {"lattice properties (4 x 100 instances)", lattice_properties},
      {"combinatorial identities and pair-partition counts", combinatorial_identities},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures == 0 && error.empty();
    failed += !ok;
    std::printf("%s  %d  %s  (%.2f s)\n", ok ? "PASS" : "FAIL", index, c.name, secs);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (check.failures) std::printf("      %d failed checks, first: %s\n", check.failures, check.first.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
