#pragma once

#include <vector>

#include "adelic/lattices/lattice.hpp"

namespace adelic::multilinear {

using lattices::EuclideanLattice;

using Exponent = std::vector<unsigned>;

/// Exponent vectors of total degree n in d variables, in reverse
/// lexicographic order: (n,0,..), (n-1,1,..), ..., (0,..,n).
std::vector<Exponent> monomials(std::size_t d, unsigned n);

/// r-subsets of {0..d-1} in colexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t r);

/// Permanent by Ryser's formula.
Rational permanent(const RationalMatrix& m);

Rational kronecker_entry(const RationalMatrix& a, const RationalMatrix& b, std::size_t i, std::size_t j);

/// Kronecker product Gram on e_i ⊗ f_j (index i*d2 + j).
EuclideanLattice tensor(const EuclideanLattice& a, const EuclideanLattice& b, std::size_t cap = 4096);

/// Monomial-basis Gram of the n-th symmetric power, always via permanents.
RationalMatrix permanent_sym_gram(const RationalMatrix& gram, unsigned n);

/// Quotient symmetric power: Gram on monomials is per(<x_i, y_j>) / n!.
/// Diagonal inputs use the closed form of diagonal_sym_entry. Throws
/// ResourceError when C(n+d-1, d-1) exceeds `cap`.
EuclideanLattice sym_power(const EuclideanLattice& e, unsigned n, std::size_t cap = 4096);

/// Gram entries are r x r minors of the Gram matrix on colex subsets.
EuclideanLattice wedge_power(const EuclideanLattice& e, std::size_t r, std::size_t cap = 4096);

/// S^n(E^dual).
EuclideanLattice sym_of_dual(const EuclideanLattice& e, unsigned n, std::size_t cap = 4096);
/// (S^n E)^dual.
EuclideanLattice dual_of_sym(const EuclideanLattice& e, unsigned n, std::size_t cap = 4096);

/// Closed-form diagonal entry of S^n(diag q) at exponent k:
/// prod q_i^{k_i} * prod k_i! / n!.
Rational diagonal_sym_entry(const RationalVector& q, const Exponent& k);

}  // namespace adelic::multilinear
