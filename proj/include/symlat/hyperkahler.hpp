#pragma once

// Sym^k H^2 of a compact hyperkaehler manifold of dimension 2k, with the form
// c_X <<,>> induced by the Beauville-Bogomolov form, inside the unimodular
// lattice H^{2k}.

#include <optional>
#include <string>
#include <vector>

#include "symlat/exactnum.hpp"

namespace symlat {

struct ManifoldData {
  std::string name;
  int k = 0;  // complex dimension is 2k
  int b2 = 0;
  FactoredInteger d2;  // discriminant of H^2
  Scalar c_x;          // Fujiki constant
};

/// Known deformation classes: "K3_Hilb" and "Kummer" (k >= 2), "OG6" (k = 3),
/// "OG10" (k = 5). std::invalid_argument for an unknown name or bad k.
ManifoldData registry(const std::string& name, std::optional<int> k = std::nullopt);
std::vector<std::string> registry_names();

/// Rank of Sym^k H^2: binom(b2 - 1 + k, k).
Integer sym_rank(const ManifoldData& m);

/// d2^binom(b2-1+k, b2) * theta(b2-1, k), times c_X^rank when include_cx.
FactoredInteger sym_discriminant(const ManifoldData& m, bool include_cx);

/// Primes dividing some element of
///   {c_X^b2 d2} u {1..k} u {odd i in [k+b2, 2k+b2-2]}   (b2 odd)
///   {c_X^b2 d2} u {1..k} u {i in [(k+b2)/2, k+b2/2-1]}  (b2 even)
std::vector<Integer> prime_set_z(const ManifoldData& m);

struct HKReport {
  std::string manifold;
  int k = 0;
  Integer rank;
  FactoredInteger discriminant;  // of (Sym^k H^2, c_X <<,>>)
  std::vector<Integer> prime_set;
  std::optional<FactoredInteger> torsion;
  std::optional<FactoredInteger> complement_discriminant;
};

HKReport hk_report(const ManifoldData& m);
/// Adds the complement / primitive-overlattice discriminant
/// sym_discriminant / torsion^2.
HKReport torsion_report(const ManifoldData& m, const FactoredInteger& torsion_order);

}  // namespace symlat
