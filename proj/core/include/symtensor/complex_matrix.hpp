#ifndef SYMTENSOR_COMPLEX_MATRIX_HPP
#define SYMTENSOR_COMPLEX_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtensor {

using Complex = std::complex<double>;

/// Thrown when a requested tensor dimension exceeds the configured budget.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix.  Entries are validated to be finite when a
/// matrix is built from external data; results of internal arithmetic are
/// trusted.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix data size does not match shape");
    }
    require_finite();
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  /// Largest entry magnitude.
  double max_abs() const;
  double frobenius_norm() const;
  Complex trace() const;

  /// Leading principal submatrix of size n.
  ComplexMatrix leading_block(std::size_t n) const;

  std::vector<Complex> column(std::size_t j) const;
  std::vector<Complex> apply(std::span<const Complex> x) const;

  /// Throws std::invalid_argument if any entry is NaN or infinite.
  void require_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

/// max |a_ij - b_ij|; the shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Vector helpers, using the convention that the inner product is linear in
// the first argument and conjugate linear in the second.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);
std::vector<Complex> scaled(std::span<const Complex> v, Complex s);

}  // namespace symtensor

#endif  // SYMTENSOR_COMPLEX_MATRIX_HPP
