#include "symlat/hyperkahler.hpp"

#include <set>
#include <stdexcept>

#include "symlat/lattices.hpp"
#include "symlat/theta.hpp"

namespace symlat {

namespace {

int require_k(const std::string& name, std::optional<int> k, int minimum) {
  if (!k) throw std::invalid_argument(name + " needs k");
  if (*k < minimum) throw std::invalid_argument(name + " needs k >= " + std::to_string(minimum));
  return *k;
}

int fixed_k(const std::string& name, std::optional<int> k, int value) {
  if (k && *k != value) throw std::invalid_argument(name + " has k = " + std::to_string(value));
  return value;
}

}  // namespace

std::vector<std::string> registry_names() { return {"K3_Hilb", "Kummer", "OG6", "OG10"}; }

ManifoldData registry(const std::string& name, std::optional<int> k) {
  if (name == "K3_Hilb") {
    int kk = require_k(name, k, 2);
    return {name, kk, 23, FactoredInteger(2 * (kk - 1)), Scalar(1)};
  }
  if (name == "Kummer") {
    int kk = require_k(name, k, 2);
    return {name, kk, 7, FactoredInteger(2 * (kk + 1)), Scalar(kk + 1)};
  }
  if (name == "OG6") return {name, fixed_k(name, k, 3), 8, FactoredInteger(4), Scalar(4)};
  if (name == "OG10") return {name, fixed_k(name, k, 5), 24, FactoredInteger(3), Scalar(1)};
  throw std::invalid_argument("unknown manifold: " + name);
}

Integer sym_rank(const ManifoldData& m) { return binom(m.b2 - 1 + m.k, m.k); }

FactoredInteger sym_discriminant(const ManifoldData& m, bool include_cx) {
  const int d = m.b2 - 1;
  FactoredInteger disc = det_closed_form(m.d2, d, m.k);
  if (include_cx) {
    if (!is_integral(m.c_x)) throw std::domain_error("c_X must be integral to scale the lattice form");
    disc *= FactoredInteger(m.c_x).pow(to_int64(sym_rank(m)));
  }
  return disc;
}

std::vector<Integer> prime_set_z(const ManifoldData& m) {
  std::set<Integer> primes;
  auto add = [&](const FactoredInteger& f) {
    for (const auto& [p, e] : f.factors()) primes.insert(p);
  };
  add(FactoredInteger(m.c_x).pow(m.b2) * m.d2);
  for (int i = 2; i <= m.k; ++i) add(FactoredInteger(i));
  if (m.b2 % 2 != 0) {
    for (int i = m.k + m.b2; i <= 2 * m.k + m.b2 - 2; ++i)
      if (i % 2 != 0) add(FactoredInteger(i));
  } else {
    // (k + b2)/2 <= i, rounded up for odd k
    for (int i = (m.k + m.b2 + 1) / 2; i <= m.k + m.b2 / 2 - 1; ++i) add(FactoredInteger(i));
  }
  return {primes.begin(), primes.end()};
}

HKReport hk_report(const ManifoldData& m) {
  HKReport r;
  r.manifold = m.name;
  r.k = m.k;
  r.rank = sym_rank(m);
  r.discriminant = sym_discriminant(m, true);
  r.prime_set = prime_set_z(m);
  return r;
}

HKReport torsion_report(const ManifoldData& m, const FactoredInteger& torsion_order) {
  HKReport r = hk_report(m);
  r.torsion = torsion_order;
  r.complement_discriminant = complement_discriminant(r.discriminant, torsion_order);
  return r;
}

}  // namespace symlat
