#include "symtensor/rng.hpp"

#include <cmath>
#include <numbers>

namespace symtensor {

std::uint64_t Rng::integer(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % bound;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Complex Rng::unit_phase() {
  const double t = 2.0 * std::numbers::pi * uniform();
  return Complex(std::cos(t), std::sin(t));
}

std::vector<Complex> Rng::complex_normal_vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& x : v) x = complex_normal();
  return v;
}

std::vector<Complex> Rng::unit_vector(std::size_t n) {
  std::vector<Complex> v;
  double norm = 0.0;
  do {
    v = complex_normal_vector(n);
    norm = norm2(v);
  } while (norm == 0.0);
  for (auto& x : v) x /= norm;
  return v;
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex_normal();
  return m;
}

ComplexMatrix Rng::unitary(std::size_t n) {
  // Modified Gram-Schmidt on a Gaussian matrix; n stays small here.
  ComplexMatrix g = gaussian_matrix(n, n);
  std::vector<std::vector<Complex>> q;
  q.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> v = g.column(j);
    for (const auto& prev : q) {
      const Complex c = inner(v, prev);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * prev[i];
    }
    double nv = norm2(v);
    while (nv < 1e-12) {
      v = complex_normal_vector(n);
      for (const auto& prev : q) {
        const Complex c = inner(v, prev);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * prev[i];
      }
      nv = norm2(v);
    }
    for (auto& x : v) x /= nv;
    q.push_back(std::move(v));
  }
  ComplexMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = q[j][i];
  return u;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(integer(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace symtensor
