#ifndef SYMTENSOR_OPERATOR_MODEL_HPP
#define SYMTENSOR_OPERATOR_MODEL_HPP

#include <span>
#include <string>
#include <vector>

#include "symtensor/complex_matrix.hpp"

namespace symtensor {

/// Symbolic description of an operator, materialized to a finite matrix by
/// corner compression P_N T P_N.
struct OperatorSpec {
  enum class Kind { dense, diagonal, shift, back_shift, weighted_shift };

  Kind kind = Kind::dense;
  ComplexMatrix matrix;          // dense only
  std::vector<Complex> values;   // diagonal entries or shift weights
  std::string label;

  static OperatorSpec dense(ComplexMatrix m, std::string label = "dense");
  static OperatorSpec diagonal(std::vector<Complex> values, std::string label = "diagonal");
  static OperatorSpec shift();
  static OperatorSpec back_shift();
  static OperatorSpec weighted_shift(std::vector<Complex> weights,
                                     std::string label = "weighted-shift");
};

/// N x N compression of the described operator.  Shift maps e_i to e_{i+1}
/// for i < N-1 and kills e_{N-1}; BackShift is its adjoint.  Dense specs must
/// carry at least N rows and columns; sequence-backed specs must supply every
/// value the compression reads.
ComplexMatrix materialize(const OperatorSpec& spec, std::size_t n);

/// Kronecker product, first factor most significant; the basis order agrees
/// with the tensor-basis enumeration.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::span<const ComplexMatrix> factors);

/// Componentwise conjugation relative to the fixed coordinate basis:
/// conjugate linear, isometric, involutive.
std::vector<Complex> apply_conjugation(std::span<const Complex> v);

/// C A* C for the componentwise conjugation C, which works out to the
/// entrywise transpose of A.
ComplexMatrix conjugate_operator(const ComplexMatrix& a);

}  // namespace symtensor

#endif  // SYMTENSOR_OPERATOR_MODEL_HPP
