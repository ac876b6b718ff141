#include "symtensor/operator_model.hpp"

#include <stdexcept>

#include "symtensor/tensor_basis.hpp"

namespace symtensor {

OperatorSpec OperatorSpec::dense(ComplexMatrix m, std::string label) {
  if (!m.is_square()) throw std::invalid_argument("dense operator matrix must be square");
  OperatorSpec s;
  s.kind = Kind::dense;
  s.matrix = std::move(m);
  s.label = std::move(label);
  return s;
}

OperatorSpec OperatorSpec::diagonal(std::vector<Complex> values, std::string label) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("diagonal value is not finite");
    }
  }
  OperatorSpec s;
  s.kind = Kind::diagonal;
  s.values = std::move(values);
  s.label = std::move(label);
  return s;
}

OperatorSpec OperatorSpec::shift() {
  OperatorSpec s;
  s.kind = Kind::shift;
  s.label = "shift";
  return s;
}

OperatorSpec OperatorSpec::back_shift() {
  OperatorSpec s;
  s.kind = Kind::back_shift;
  s.label = "back-shift";
  return s;
}

OperatorSpec OperatorSpec::weighted_shift(std::vector<Complex> weights, std::string label) {
  for (const auto& v : weights) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("shift weight is not finite");
    }
  }
  OperatorSpec s;
  s.kind = Kind::weighted_shift;
  s.values = std::move(weights);
  s.label = std::move(label);
  return s;
}

ComplexMatrix materialize(const OperatorSpec& spec, std::size_t n) {
  if (n < 1) throw std::invalid_argument("compression size must be at least 1");
  switch (spec.kind) {
    case OperatorSpec::Kind::dense: {
      if (spec.matrix.rows() < n || spec.matrix.cols() < n) {
        throw std::invalid_argument("dense operator smaller than requested compression");
      }
      return spec.matrix.leading_block(n);
    }
    case OperatorSpec::Kind::diagonal: {
      if (spec.values.size() < n) {
        throw std::invalid_argument("diagonal sequence shorter than requested compression");
      }
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = spec.values[i];
      return m;
    }
    case OperatorSpec::Kind::shift: {
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
      return m;
    }
    case OperatorSpec::Kind::back_shift: {
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
      return m;
    }
    case OperatorSpec::Kind::weighted_shift: {
      if (spec.values.size() + 1 < n) {
        throw std::invalid_argument("weight sequence shorter than requested compression");
      }
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = spec.values[i];
      return m;
    }
  }
  throw std::logic_error("unknown operator kind");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_tensor_dim() || cols > max_tensor_dim()) {
    throw SizeGuardError("Kronecker product dimension exceeds budget");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("Kronecker product of no factors");
  for (const auto& f : factors) {
    if (!f.is_square()) throw std::invalid_argument("Kronecker factors must be square");
  }
  ComplexMatrix result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = kron(result, factors[i]);
  return result;
}

std::vector<Complex> apply_conjugation(std::span<const Complex> v) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

ComplexMatrix conjugate_operator(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("conjugate_operator requires a square matrix");
  return a.transpose();
}

}  // namespace symtensor
