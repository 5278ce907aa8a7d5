#include "adelic/lattices/lattice.hpp"

#include "adelic/core/errors.hpp"
#include "adelic/lattices/integer_linalg.hpp"

namespace adelic::lattices {

EuclideanLattice::EuclideanLattice(RationalMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw ValidationError("lattice dimension must be positive");
  if (!gram_.is_square()) throw ValidationError("gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) gram_(i, j).canonicalize();
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw ValidationError("gram matrix is not symmetric");
  if (!is_symmetric_positive_definite(gram_)) throw ValidationError("gram matrix is not positive definite");
}

EuclideanLattice EuclideanLattice::identity(std::size_t d) { return EuclideanLattice(RationalMatrix::identity(d)); }

EuclideanLattice EuclideanLattice::diagonal(const RationalVector& entries) {
  RationalMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return EuclideanLattice(std::move(g));
}

EuclideanLattice EuclideanLattice::from_basis(const RationalMatrix& ambient_gram, const RationalMatrix& basis) {
  if (basis.cols() != ambient_gram.rows()) throw ValidationError("basis width does not match gram size");
  if (rank(basis) != basis.rows()) throw ValidationError("basis rows are linearly dependent");
  // Clear denominators, take the Hermite form of the integer lattice, then
  // scale back. The Hermite form is unique, so the Gram is canonical.
  Integer l = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), basis(i, j).get_den_mpz_t());
  IntMatrix scaled(basis.rows(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const Rational v = basis(i, j) * l;
      scaled(i, j) = v.get_num();
    }
  const IntMatrix h = hermite_normal_form(scaled);
  RationalMatrix g = restrict_gram(ambient_gram, h);
  const Rational inv_l2 = Rational(1) / (Rational(l) * l);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= inv_l2;
  return EuclideanLattice(std::move(g));
}

Rational EuclideanLattice::determinant() const { return adelic::determinant(gram_); }

bool EuclideanLattice::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j && gram_(i, j) != 0) return false;
  return true;
}

LogValue degree(const EuclideanLattice& e) { return Rational(-1, 2) * LogValue::of_rational(e.determinant()); }

LogValue slope(const EuclideanLattice& e) { return Rational(1, static_cast<long>(e.dim())) * degree(e); }

EuclideanLattice dual(const EuclideanLattice& e) { return EuclideanLattice(inverse(e.gram())); }

EuclideanLattice direct_sum(const EuclideanLattice& a, const EuclideanLattice& b) {
  const std::size_t n = a.dim() + b.dim();
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
  return EuclideanLattice(std::move(g));
}

LogValue height_of_vector(const EuclideanLattice& e, const RationalVector& s) {
  if (s.size() != e.dim()) throw ValidationError("vector length does not match lattice dimension");
  bool nonzero = false;
  for (const auto& x : s) nonzero = nonzero || x != 0;
  if (!nonzero) throw DomainError("height of the zero vector");
  const IntVector p = primitive_vector(s);
  return Rational(1, 2) * LogValue::of_rational(quadratic_form(e.gram(), p));
}

Rational saturated_determinant(const EuclideanLattice& e, const IntMatrix& generators) {
  const Saturation sat = saturate(generators);
  return adelic::determinant(restrict_gram(e.gram(), sat.basis));
}

LogValue sublattice_degree(const EuclideanLattice& e, const IntMatrix& generators) {
  return Rational(-1, 2) * LogValue::of_rational(saturated_determinant(e, generators));
}

}  // namespace adelic::lattices
