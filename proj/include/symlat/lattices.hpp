#pragma once

#include "symlat/exactnum.hpp"
#include "symlat/linalg.hpp"

namespace symlat {

/// Free Z-module with a non-degenerate integral symmetric form, given by its
/// Gram matrix. Indefinite forms are fine.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);  // std::domain_error if degenerate or not symmetric

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

 private:
  IntMatrix gram_;
};

/// Sublattice of `target` spanned by the rows of `basis` (coordinates in the
/// target's basis). Rows must be independent; the pulled-back form may be
/// degenerate (e.g. an isotropic line).
class Embedding {
 public:
  Embedding(Lattice target, IntMatrix basis);

  const Lattice& target() const { return target_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  /// B * Gram(M) * B^T
  IntMatrix source_gram() const;
  /// The sublattice as a lattice in its own right; throws if degenerate.
  Lattice source() const;

 private:
  Lattice target_;
  IntMatrix basis_;
};

/// |det Gram|.
FactoredInteger discriminant(const Lattice& l);

/// Order of the torsion part of M/L: product of the invariant factors of
/// the basis matrix. Equals |M : L| when the ranks agree.
FactoredInteger quotient_torsion(const Embedding& e);

Embedding orthogonal_complement(const Embedding& e);
/// L^perp perp, computed as the saturation of L.
Embedding double_complement(const Embedding& e);

/// discr(L) / n^2; std::domain_error unless n^2 divides discr(L).
FactoredInteger complement_discriminant(const FactoredInteger& discr_l, const FactoredInteger& torsion_n);

bool same_sublattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace symlat
