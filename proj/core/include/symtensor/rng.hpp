#ifndef SYMTENSOR_RNG_HPP
#define SYMTENSOR_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "symtensor/complex_matrix.hpp"

namespace symtensor {

/// Deterministic random source for the verification suites.  All
/// distributions are realized in-house on top of mt19937_64 so a (seed,
/// trials) pair reproduces the same draws on every platform; failures stay
/// replayable from the reported seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t integer(std::uint64_t bound);  // uniform on [0, bound)

  /// Standard real normal via Box-Muller.
  double normal();

  /// Standard complex normal: real and imaginary parts N(0, 1/2), so the
  /// entry has unit variance.
  Complex complex_normal();

  /// Uniform on the complex unit circle.
  Complex unit_phase();

  std::vector<Complex> complex_normal_vector(std::size_t n);
  std::vector<Complex> unit_vector(std::size_t n);

  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

  /// Haar-ish unitary from the QR factorization of a Gaussian matrix with the
  /// phase convention that R has positive diagonal.
  ComplexMatrix unitary(std::size_t n);

  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace symtensor

#endif  // SYMTENSOR_RNG_HPP
