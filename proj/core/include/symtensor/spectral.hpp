#ifndef SYMTENSOR_SPECTRAL_HPP
#define SYMTENSOR_SPECTRAL_HPP

#include <span>
#include <string>
#include <vector>

#include "symtensor/complex_matrix.hpp"
#include "symtensor/tensor_basis.hpp"

namespace symtensor {

/// Eigenvalue multiset with the residual evidence backing it.
struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  std::string method;                // hermitian-jacobi | general-qr | closed-form
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool converged = true;
  std::string note;
};

struct NormReport {
  double value = 0.0;
  std::string method;  // power-iteration | svd-via-hermitian
  int iterations = 0;
  double tolerance = 0.0;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// ascending, with residuals measured against the input matrix.  Inputs whose
/// deviation from Hermitian exceeds tol * ||M|| are rejected.
SpectrumReport hermitian_eigen(const ComplexMatrix& m, double tol = 1e-12);

/// Eigenvalues of a general square matrix (dimension <= 500) via Householder
/// Hessenberg reduction and shifted QR.  Each eigenvalue is certified through
/// the characteristic polynomial, |det(M - lambda I)| <= tol * ||M||^dim;
/// max_residual carries the scaled dim-th root of the worst determinant.
/// Non-convergence is reported on the result, never silently ignored.
SpectrumReport general_eigen(const ComplexMatrix& m, double tol = 1e-9);

enum class NormMethod { svd_via_hermitian, power_iteration };

/// Largest singular value.
NormReport operator_norm(const ComplexMatrix& m, double tol = 1e-12,
                         NormMethod method = NormMethod::svd_via_hermitian);

double spectral_radius(const ComplexMatrix& m);

/// ||M^k||^(1/k), an upper bound on the spectral radius for every k.
double gelfand_estimate(const ComplexMatrix& m, int k);

// Tridiagonal blocks of the compression of (S (x) S* + S* (x) S)/2 to the
// degree-k monomial subspaces and their symmetric/antisymmetric parts,
// together with the cosine closed forms for their spectra.
ComplexMatrix build_Ak(int k);  // k >= 0, size k+1
ComplexMatrix build_Bk(int k);  // k >= 0, size floor((k+2)/2)
ComplexMatrix build_Ck(int k);  // k >= 1, size floor((k+1)/2)

std::vector<double> spec_Ak(int k);
std::vector<double> spec_Bk(int k);
std::vector<double> spec_Ck(int k);

/// Eigenvalue multiset {(lambda_i mu_j + lambda_j mu_i)/2 : i <= j < N} of the
/// symmetric product of two diagonal operators.
std::vector<Complex> diag_sym_spectrum(std::span<const Complex> lambdas,
                                       std::span<const Complex> mus, int n);

/// n-factor generalization: permutation-averaged products over non-decreasing
/// index tuples.  Guarded to n <= 4 factors and N <= 12.
std::vector<Complex> multi_diag_sym_spectrum(const std::vector<std::vector<Complex>>& sequences,
                                             int n);

// Multiset comparison by sorted tolerance-matched pairing.
struct MultisetMatch {
  bool matched = false;
  double max_deviation = 0.0;
};

std::vector<Complex> sorted_by_parts(std::vector<Complex> values);

/// Equality as multisets: equal sizes and sorted elements pairwise within tol.
MultisetMatch match_multisets(std::vector<Complex> a, std::vector<Complex> b, double tol);

/// Containment: every element of `part` greedily matched to a distinct
/// element of `whole` within tol.
MultisetMatch multiset_contained(std::vector<Complex> part, std::vector<Complex> whole,
                                 double tol);

}  // namespace symtensor

#endif  // SYMTENSOR_SPECTRAL_HPP
