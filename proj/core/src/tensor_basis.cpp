#include "symtensor/tensor_basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace symtensor {
namespace {

void require_positive(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("dimension and degree must be at least 1");
}

std::size_t encode(const std::vector<int>& tuple, int d) {
  std::size_t idx = 0;
  for (int v : tuple) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return idx;
}

// Parity of the tuple as a permutation of its sorted order; entries must be
// distinct.
int arrangement_sign(const std::vector<int>& tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::vector<int> MultiIndex::multiplicities() const {
  std::vector<int> counts;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i] == entries[i - 1]) {
      ++counts.back();
    } else {
      counts.push_back(1);
    }
  }
  return counts;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("binomial coefficient overflows");
    }
    result = result * factor / i;
  }
  return result;
}

std::uint64_t max_tensor_dim() {
  if (const char* env = std::getenv("SYMTENSOR_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::uint64_t>(v);
  }
  return 1000000;
}

std::size_t tensor_power_dim(int d, int n) {
  require_positive(d, n);
  const std::uint64_t budget = max_tensor_dim();
  std::uint64_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::uint64_t>(d);
    if (dim > budget) {
      throw SizeGuardError("tensor power dimension " + std::to_string(d) + "^" +
                           std::to_string(n) + " exceeds budget " + std::to_string(budget));
    }
  }
  return static_cast<std::size_t>(dim);
}

std::vector<MultiIndex> enumerate_sym_indices(int d, int n) {
  require_positive(d, n);
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(d) + n - 1, n);
  if (count > std::numeric_limits<std::size_t>::max() / 2) {
    throw std::overflow_error("symmetric index count overflows");
  }
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> tuple(n, 0);
  while (true) {
    out.push_back(MultiIndex{tuple});
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == d - 1) --pos;
    if (pos < 0) break;
    const int next = tuple[pos] + 1;
    for (int i = pos; i < n; ++i) tuple[i] = next;
  }
  return out;
}

std::vector<MultiIndex> enumerate_asym_indices(int d, int n) {
  require_positive(d, n);
  std::vector<MultiIndex> out;
  if (n > d) return out;
  out.reserve(static_cast<std::size_t>(binomial(d, n)));
  std::vector<int> tuple(n);
  for (int i = 0; i < n; ++i) tuple[i] = i;
  while (true) {
    out.push_back(MultiIndex{tuple});
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == d - n + pos) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int i = pos + 1; i < n; ++i) tuple[i] = tuple[i - 1] + 1;
  }
  return out;
}

double multiindex_norm(const MultiIndex& idx, int n) {
  if (idx.degree() != n) throw std::invalid_argument("multi-index degree mismatch");
  double product = 1.0;
  for (int m : idx.multiplicities()) product *= static_cast<double>(factorial(m));
  return std::sqrt(product / static_cast<double>(factorial(n)));
}

TensorBasis sym_basis(int d, int n) {
  TensorBasis b;
  b.dim = d;
  b.degree = n;
  b.flavor = Flavor::symmetric;
  b.indices = enumerate_sym_indices(d, n);
  b.norms.reserve(b.indices.size());
  for (const auto& idx : b.indices) b.norms.push_back(multiindex_norm(idx, n));
  return b;
}

TensorBasis asym_basis(int d, int n) {
  TensorBasis b;
  b.dim = d;
  b.degree = n;
  b.flavor = Flavor::antisymmetric;
  b.indices = enumerate_asym_indices(d, n);
  b.norms.assign(b.indices.size(), 1.0 / std::sqrt(static_cast<double>(factorial(n))));
  return b;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[j] = q[p[j]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[p[j]] = static_cast<int>(j);
  return r;
}

int permutation_sign(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

ComplexMatrix permutation_matrix(const Permutation& p, int d) {
  const int n = static_cast<int>(p.size());
  const std::size_t dim = tensor_power_dim(d, n);
  ComplexMatrix m(dim, dim);
  std::vector<int> tuple(n, 0);
  std::vector<int> image(n, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    // Decode the column index into slot indices.
    std::size_t rest = col;
    for (int j = n - 1; j >= 0; --j) {
      tuple[j] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    for (int j = 0; j < n; ++j) image[j] = tuple[p[j]];
    m(encode(image, d), col) = 1.0;
  }
  return m;
}

namespace {

ComplexMatrix averaged_permutations(int d, int n, bool signed_sum) {
  const std::size_t dim = tensor_power_dim(d, n);
  ComplexMatrix sum(dim, dim);
  Permutation p = identity_permutation(n);
  std::uint64_t terms = 0;
  do {
    const double weight = signed_sum ? static_cast<double>(permutation_sign(p)) : 1.0;
    const ComplexMatrix pm = permutation_matrix(p, d);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) sum(i, j) += weight * pm(i, j);
    ++terms;
  } while (std::next_permutation(p.begin(), p.end()));
  sum *= Complex(1.0 / static_cast<double>(terms));
  return sum;
}

}  // namespace

ComplexMatrix symmetrizer(int d, int n) { return averaged_permutations(d, n, false); }

ComplexMatrix antisymmetrizer(int d, int n) { return averaged_permutations(d, n, true); }

ComplexMatrix embed_sym(int d, int n) {
  const std::size_t dim = tensor_power_dim(d, n);
  const auto indices = enumerate_sym_indices(d, n);
  ComplexMatrix q(dim, indices.size());
  for (std::size_t col = 0; col < indices.size(); ++col) {
    std::vector<int> tuple = indices[col].entries;
    std::size_t arrangements = 0;
    {
      std::vector<int> t = tuple;
      do {
        ++arrangements;
      } while (std::next_permutation(t.begin(), t.end()));
    }
    const double value = 1.0 / std::sqrt(static_cast<double>(arrangements));
    do {
      q(encode(tuple, d), col) = value;
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return q;
}

ComplexMatrix embed_asym(int d, int n) {
  const std::size_t dim = tensor_power_dim(d, n);
  const auto indices = enumerate_asym_indices(d, n);
  ComplexMatrix q(dim, indices.size());
  const double value = 1.0 / std::sqrt(static_cast<double>(factorial(n)));
  for (std::size_t col = 0; col < indices.size(); ++col) {
    std::vector<int> tuple = indices[col].entries;
    do {
      q(encode(tuple, d), col) = value * static_cast<double>(arrangement_sign(tuple));
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return q;
}

namespace {

std::vector<Complex> projected_simple_tensor(const std::vector<std::vector<Complex>>& vs,
                                             Flavor flavor) {
  if (vs.empty()) throw std::invalid_argument("at least one factor required");
  const int n = static_cast<int>(vs.size());
  const int d = static_cast<int>(vs.front().size());
  for (const auto& v : vs) {
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("factor length mismatch");
  }
  const std::size_t dim = tensor_power_dim(d, n);
  std::vector<Complex> product(dim);
  std::vector<int> tuple(n, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (int j = n - 1; j >= 0; --j) {
      tuple[j] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    Complex value = 1.0;
    for (int j = 0; j < n; ++j) value *= vs[j][tuple[j]];
    product[idx] = value;
  }
  const ComplexMatrix q = flavor == Flavor::symmetric ? embed_sym(d, n) : embed_asym(d, n);
  return q.adjoint().apply(product);
}

}  // namespace

std::vector<Complex> sym_tensor_of_vectors(const std::vector<std::vector<Complex>>& vs) {
  return projected_simple_tensor(vs, Flavor::symmetric);
}

std::vector<Complex> wedge_of_vectors(const std::vector<std::vector<Complex>>& vs) {
  return projected_simple_tensor(vs, Flavor::antisymmetric);
}

}  // namespace symtensor
