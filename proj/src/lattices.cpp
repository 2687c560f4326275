#include "symlat/lattices.hpp"

#include <stdexcept>

namespace symlat {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::domain_error("lattice Gram matrix must be square and symmetric");
  if (gram_.rows() > 0 && det_exact(gram_) == 0) throw std::domain_error("lattice form is degenerate");
}

Embedding::Embedding(Lattice target, IntMatrix basis) : target_(std::move(target)), basis_(std::move(basis)) {
  if (basis_.cols() != target_.rank()) throw std::invalid_argument("embedding rows must have the target's rank as length");
  if (symlat::rank(to_exact(basis_)) != basis_.rows()) throw std::invalid_argument("embedding rows are not independent");
}

IntMatrix Embedding::source_gram() const { return basis_ * target_.gram() * basis_.transpose(); }

Lattice Embedding::source() const { return Lattice(source_gram()); }

FactoredInteger discriminant(const Lattice& l) {
  Integer det = det_exact(l.gram());
  return FactoredInteger(Integer(abs(det)));
}

FactoredInteger quotient_torsion(const Embedding& e) {
  FactoredInteger order;
  for (const auto& f : smith_normal_form(e.basis()).factors) order *= FactoredInteger(f);
  return order;
}

Embedding orthogonal_complement(const Embedding& e) {
  // x in M with <b, x> = 0 for every basis row b: kernel of B * Gram(M)
  IntMatrix pairing = e.basis() * e.target().gram();
  return Embedding(e.target(), integer_kernel(pairing));
}

Embedding double_complement(const Embedding& e) { return Embedding(e.target(), saturate(e.basis())); }

FactoredInteger complement_discriminant(const FactoredInteger& discr_l, const FactoredInteger& torsion_n) {
  FactoredInteger n2 = torsion_n.pow(2);
  if (!n2.divides(discr_l)) {
    throw std::domain_error("torsion order squared (" + n2.to_string() + ") does not divide the discriminant (" +
                            discr_l.to_string() + ")");
  }
  return discr_l / n2;
}

bool same_sublattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hermite_normal_form(a) == hermite_normal_form(b);
}

}  // namespace symlat
