#ifndef SYMTENSOR_SYM_PRODUCT_HPP
#define SYMTENSOR_SYM_PRODUCT_HPP

#include <span>
#include <vector>

#include "symtensor/complex_matrix.hpp"
#include "symtensor/operator_model.hpp"
#include "symtensor/tensor_basis.hpp"

namespace symtensor {

enum class ProductFlavor { symmetric, antisymmetric, full_averaged };

/// Request for a tensor product of operators.  The factor list is flat by
/// construction: nesting products of products is not representable.
struct ProductRequest {
  std::vector<OperatorSpec> operators;
  ProductFlavor flavor = ProductFlavor::symmetric;
  std::size_t trunc = 0;  // ambient dimension per factor

  void validate() const;
};

/// (1/n!) sum over permutations pi of kron(A_{pi(1)}, ..., A_{pi(n)}).
/// Permutation terms are accumulated in lexicographic order so results are
/// bit-for-bit reproducible.
ComplexMatrix averaged_tensor(std::span<const ComplexMatrix> factors);

/// Restriction of averaged_tensor to the symmetric subspace, expressed in the
/// orthonormal coordinates of embed_sym: Q* M Q.
ComplexMatrix sym_product(std::span<const ComplexMatrix> factors);
ComplexMatrix sym_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Antisymmetric counterpart via embed_asym.
ComplexMatrix asym_product(std::span<const ComplexMatrix> factors);
ComplexMatrix asym_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix product_of(const ProductRequest& request);

/// Applies (A (x) B + B (x) A)/2 to a vector given in the orthonormal
/// coordinates of embed_sym(d, 2), without forming the tensor matrix.
std::vector<Complex> apply_sym_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                    std::span<const Complex> sym_coords);

struct BlockDecomposition {
  ComplexMatrix sym;          // Q_s* M Q_s
  ComplexMatrix asym;         // Q_a* M Q_a
  double cross_residual = 0;  // max entry of Q_s* M Q_a, zero in exact arithmetic
};

/// Splits M = (A (x) B + B (x) A)/2 into its symmetric and antisymmetric
/// diagonal blocks and reports the off-diagonal coupling residual.
BlockDecomposition block_decompose(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace symtensor

#endif  // SYMTENSOR_SYM_PRODUCT_HPP
