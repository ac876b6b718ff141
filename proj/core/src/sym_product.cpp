#include "symtensor/sym_product.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtensor {
namespace {

constexpr std::size_t kMaxFactors = 6;

int common_dimension(std::span<const ComplexMatrix> factors) {
  if (factors.size() < 2) throw std::invalid_argument("at least two factors required");
  if (factors.size() > kMaxFactors) {
    throw SizeGuardError("factor count exceeds the supported maximum of 6");
  }
  const ComplexMatrix& first = factors.front();
  if (!first.is_square()) throw std::invalid_argument("product factors must be square");
  for (const auto& f : factors) {
    if (f.rows() != first.rows() || f.cols() != first.cols()) {
      throw std::invalid_argument("product factors must share one size");
    }
  }
  return static_cast<int>(first.rows());
}

ComplexMatrix projected_product(std::span<const ComplexMatrix> factors, Flavor flavor) {
  const int d = common_dimension(factors);
  const int n = static_cast<int>(factors.size());
  const ComplexMatrix m = averaged_tensor(factors);
  const ComplexMatrix q = flavor == Flavor::symmetric ? embed_sym(d, n) : embed_asym(d, n);
  return q.adjoint() * m * q;
}

}  // namespace

void ProductRequest::validate() const {
  if (operators.size() < 2) throw std::invalid_argument("a product needs at least two factors");
  if (operators.size() > kMaxFactors) {
    throw SizeGuardError("factor count exceeds the supported maximum of 6");
  }
  if (trunc < 1) throw std::invalid_argument("truncation size must be at least 1");
}

ComplexMatrix averaged_tensor(std::span<const ComplexMatrix> factors) {
  const int d = common_dimension(factors);
  const int n = static_cast<int>(factors.size());
  const std::size_t dim = tensor_power_dim(d, n);

  Permutation p = identity_permutation(n);
  ComplexMatrix sum(dim, dim);
  std::uint64_t terms = 0;
  std::vector<ComplexMatrix> arranged(factors.size());
  do {
    for (int j = 0; j < n; ++j) arranged[j] = factors[p[j]];
    sum += kron(arranged);
    ++terms;
  } while (std::next_permutation(p.begin(), p.end()));
  sum *= Complex(1.0 / static_cast<double>(terms));
  return sum;
}

ComplexMatrix sym_product(std::span<const ComplexMatrix> factors) {
  return projected_product(factors, Flavor::symmetric);
}

ComplexMatrix sym_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix factors[] = {a, b};
  return sym_product(std::span<const ComplexMatrix>(factors));
}

ComplexMatrix asym_product(std::span<const ComplexMatrix> factors) {
  return projected_product(factors, Flavor::antisymmetric);
}

ComplexMatrix asym_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix factors[] = {a, b};
  return asym_product(std::span<const ComplexMatrix>(factors));
}

ComplexMatrix product_of(const ProductRequest& request) {
  request.validate();
  std::vector<ComplexMatrix> mats;
  mats.reserve(request.operators.size());
  for (const auto& spec : request.operators) mats.push_back(materialize(spec, request.trunc));
  switch (request.flavor) {
    case ProductFlavor::symmetric:
      return sym_product(mats);
    case ProductFlavor::antisymmetric:
      return asym_product(mats);
    case ProductFlavor::full_averaged:
      return averaged_tensor(mats);
  }
  throw std::logic_error("unknown product flavor");
}

std::vector<Complex> apply_sym_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                    std::span<const Complex> sym_coords) {
  const ComplexMatrix factors[] = {a, b};
  const int d = common_dimension(factors);
  const std::size_t expected = static_cast<std::size_t>(d) * (d + 1) / 2;
  if (sym_coords.size() != expected) {
    throw std::invalid_argument("symmetric coordinate vector has the wrong length");
  }

  // Unpack coordinates into the symmetric coefficient matrix X, apply
  // (A X B^T + B X A^T)/2, and project back.
  ComplexMatrix x(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::size_t pos = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j, ++pos) {
      if (i == j) {
        x(i, i) = sym_coords[pos];
      } else {
        x(i, j) = sym_coords[pos] * inv_sqrt2;
        x(j, i) = sym_coords[pos] * inv_sqrt2;
      }
    }
  }
  const ComplexMatrix bt = b.transpose();
  const ComplexMatrix at = a.transpose();
  ComplexMatrix image = a * x * bt + b * x * at;
  image *= Complex(0.5);

  std::vector<Complex> out(expected);
  pos = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j, ++pos) {
      out[pos] = (i == j) ? image(i, i) : (image(i, j) + image(j, i)) * inv_sqrt2;
    }
  }
  return out;
}

BlockDecomposition block_decompose(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix factors[] = {a, b};
  const int d = common_dimension(factors);
  const ComplexMatrix m = averaged_tensor(factors);
  const ComplexMatrix qs = embed_sym(d, 2);
  const ComplexMatrix qa = embed_asym(d, 2);
  BlockDecomposition out;
  out.sym = qs.adjoint() * m * qs;
  out.asym = qa.adjoint() * m * qa;
  out.cross_residual = (qs.adjoint() * m * qa).max_abs();
  return out;
}

}  // namespace symtensor
