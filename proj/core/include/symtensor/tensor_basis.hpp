#ifndef SYMTENSOR_TENSOR_BASIS_HPP
#define SYMTENSOR_TENSOR_BASIS_HPP

#include <cstdint>
#include <vector>

#include "symtensor/complex_matrix.hpp"

namespace symtensor {

enum class Flavor { symmetric, antisymmetric };

/// Sorted tuple of basis indices labeling one symmetric (non-decreasing) or
/// antisymmetric (strictly increasing) basis vector of a tensor power.
struct MultiIndex {
  std::vector<int> entries;

  int degree() const { return static_cast<int>(entries.size()); }

  /// Occurrence count of each distinct entry, in order of first appearance.
  std::vector<int> multiplicities() const;

  bool operator==(const MultiIndex&) const = default;
};

/// C(n, k) with overflow detection.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Dimension budget for materialized tensor powers; defaults to 10^6 and can
/// be overridden with the SYMTENSOR_MAX_DIM environment variable.
std::uint64_t max_tensor_dim();

/// d^n, throwing SizeGuardError past the budget.
std::size_t tensor_power_dim(int d, int n);

/// All non-decreasing n-tuples over [0, d), lexicographically ordered.
std::vector<MultiIndex> enumerate_sym_indices(int d, int n);

/// All strictly increasing n-tuples over [0, d); empty when n > d.
std::vector<MultiIndex> enumerate_asym_indices(int d, int n);

/// Norm of the projected basis tensor for a symmetric multi-index:
/// sqrt(m_1! m_2! ... / n!).
double multiindex_norm(const MultiIndex& idx, int n);

/// Enumerated orthonormal basis of a symmetric or antisymmetric tensor power,
/// with the normalization constant attached to each multi-index.
struct TensorBasis {
  int dim = 0;
  int degree = 0;
  Flavor flavor = Flavor::symmetric;
  std::vector<MultiIndex> indices;
  std::vector<double> norms;

  std::size_t size() const { return indices.size(); }
};

TensorBasis sym_basis(int d, int n);
TensorBasis asym_basis(int d, int n);

// Permutations of {0, ..., n-1}; p[j] is the image of slot j.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);

/// Composition such that permutation_matrix(compose(p, q), d) equals
/// permutation_matrix(p, d) * permutation_matrix(q, d).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

int permutation_sign(const Permutation& p);

/// 0/1 unitary realizing the slot permutation on the product basis
/// e_{i_1} (x) ... (x) e_{i_n}, first slot most significant.
ComplexMatrix permutation_matrix(const Permutation& p, int d);

/// (1/n!) sum of all slot permutations; the orthogonal projection onto the
/// symmetric subspace.
ComplexMatrix symmetrizer(int d, int n);

/// Signed average of slot permutations; projects onto the antisymmetric part.
ComplexMatrix antisymmetrizer(int d, int n);

/// Isometry whose columns are the normalized symmetric basis vectors in
/// product coordinates: Q*Q = I and QQ* = symmetrizer(d, n).  Column order
/// matches enumerate_sym_indices.
ComplexMatrix embed_sym(int d, int n);

/// Antisymmetric counterpart of embed_sym.
ComplexMatrix embed_asym(int d, int n);

/// Coordinates of the projected simple tensor of the given vectors in the
/// orthonormal basis of embed_sym (resp. embed_asym).
std::vector<Complex> sym_tensor_of_vectors(const std::vector<std::vector<Complex>>& vs);
std::vector<Complex> wedge_of_vectors(const std::vector<std::vector<Complex>>& vs);

}  // namespace symtensor

#endif  // SYMTENSOR_TENSOR_BASIS_HPP
