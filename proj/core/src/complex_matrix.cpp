#include "symtensor/complex_matrix.hpp"

#include <algorithm>

namespace symtensor {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged initializer for ComplexMatrix");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite();
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch in addition");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::leading_block(std::size_t n) const {
  if (n > rows_ || n > cols_) {
    throw std::invalid_argument("leading block larger than matrix");
  }
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const {
  std::vector<Complex> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
  std::vector<Complex> y(rows_, Complex(0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

void ComplexMatrix::require_finite() const {
  for (const auto& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("matrix entry is not finite");
    }
  }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch in comparison");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch in inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<Complex> scaled(std::span<const Complex> v, Complex s) {
  std::vector<Complex> out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace symtensor
