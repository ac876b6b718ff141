#ifndef SYMTENSOR_TESTS_ORACLES_HPP
#define SYMTENSOR_TESTS_ORACLES_HPP

// Independent brute-force oracles for the unit and acceptance tests.  These
// deliberately avoid the library's enumeration and projection code paths so
// expected values come from a second route.

#include <algorithm>
#include <vector>

#include "symtensor/complex_matrix.hpp"

namespace oracles {

using symtensor::Complex;
using symtensor::ComplexMatrix;

/// All n-tuples over [0, d), filtered to non-decreasing ones.
inline std::vector<std::vector<int>> brute_sorted_tuples(int d, int n, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(n, 0);
  const auto total = static_cast<long long>(std::pow(static_cast<double>(d), n) + 0.5);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int j = n - 1; j >= 0; --j) {
      tuple[j] = static_cast<int>(rest % d);
      rest /= d;
    }
    bool keep = true;
    for (int j = 0; j + 1 < n; ++j) {
      if (strict ? tuple[j] >= tuple[j + 1] : tuple[j] > tuple[j + 1]) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(tuple);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of distinct arrangements of a sorted tuple, by direct permutation.
inline int brute_arrangement_count(std::vector<int> tuple) {
  std::sort(tuple.begin(), tuple.end());
  int count = 0;
  do {
    ++count;
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return count;
}

/// The 4x4 matrix of (A (x) B + B (x) A)/2 on the product basis of two 2x2
/// factors, written entry by entry.
inline ComplexMatrix pair_average_2x2_closed_form(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
  const Complex b11 = b(0, 0), b12 = b(0, 1), b21 = b(1, 0), b22 = b(1, 1);
  ComplexMatrix m{{2.0 * a11 * b11, a11 * b12 + b11 * a12, a12 * b11 + b12 * a11, 2.0 * a12 * b12},
                  {a11 * b21 + b11 * a21, a11 * b22 + b11 * a22, a12 * b21 + b12 * a21,
                   a12 * b22 + b12 * a22},
                  {a21 * b11 + b21 * a11, a21 * b12 + b21 * a12, a22 * b11 + b22 * a11,
                   a22 * b12 + b22 * a12},
                  {2.0 * a21 * b21, a21 * b22 + b21 * a22, a22 * b21 + b22 * a21, 2.0 * a22 * b22}};
  m *= Complex(0.5);
  return m;
}

/// The 3x3 coordinate matrix of the symmetric product of two 2x2 matrices in
/// the basis (e0 e0, sqrt(2) e0 (.) e1, e1 e1), written entry by entry.
inline ComplexMatrix sym_product_2x2_closed_form(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double s = std::sqrt(2.0);
  const Complex a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
  const Complex b11 = b(0, 0), b12 = b(0, 1), b21 = b(1, 0), b22 = b(1, 1);
  ComplexMatrix m(3, 3);
  m(0, 0) = a11 * b11;
  m(0, 1) = (a11 * b12 + b11 * a12) / s;
  m(0, 2) = a12 * b12;
  m(1, 0) = (a11 * b21 + b11 * a21) / s;
  m(1, 1) = (a11 * b22 + b11 * a22 + a12 * b21 + b12 * a21) / 2.0;
  m(1, 2) = (a12 * b22 + b12 * a22) / s;
  m(2, 0) = a21 * b21;
  m(2, 1) = (a21 * b22 + b21 * a22) / s;
  m(2, 2) = a22 * b22;
  return m;
}

}  // namespace oracles

#endif  // SYMTENSOR_TESTS_ORACLES_HPP
