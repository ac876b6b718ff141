#include <cmath>
#include <stdexcept>

#include "symtensor/operator_model.hpp"
#include "symtensor/theorems.hpp"

namespace symtensor {
namespace {

// Index of e_a (x) e_b in the product basis of C^N (x) C^N.
std::size_t pair_index(int a, int b, int n) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

ComplexMatrix pair_average_of_shifts(int n) {
  const ComplexMatrix s = materialize(OperatorSpec::shift(), static_cast<std::size_t>(n));
  const ComplexMatrix factors[] = {s, s.adjoint()};
  return averaged_tensor(factors);
}

}  // namespace

ComplexMatrix degree_block_full(int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  const int n = k + 2;
  const ComplexMatrix t = pair_average_of_shifts(n);
  // Basis e_{k-i} (x) e_i for i = 0..k.
  ComplexMatrix e(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) e(pair_index(k - i, i, n), static_cast<std::size_t>(i)) = 1.0;
  return e.adjoint() * t * e;
}

ComplexMatrix degree_block_dense(int k, Flavor flavor) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (flavor == Flavor::antisymmetric && k < 1) {
    throw std::invalid_argument("the antisymmetric part of degree 0 is trivial");
  }
  const int n = k + 2;
  const ComplexMatrix t = pair_average_of_shifts(n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  ComplexMatrix e;
  if (flavor == Flavor::symmetric) {
    if (k == 0) {
      e = ComplexMatrix(static_cast<std::size_t>(n) * n, 1);
      e(pair_index(0, 0, n), 0) = 1.0;
    } else if (k % 2 == 1) {
      const int m = (k + 1) / 2;
      e = ComplexMatrix(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        e(pair_index(k - i, i, n), static_cast<std::size_t>(i)) = inv_sqrt2;
        e(pair_index(i, k - i, n), static_cast<std::size_t>(i)) = inv_sqrt2;
      }
    } else {
      const int m = k / 2 + 1;
      e = ComplexMatrix(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(m));
      for (int i = 0; i < m - 1; ++i) {
        e(pair_index(k - i, i, n), static_cast<std::size_t>(i)) = inv_sqrt2;
        e(pair_index(i, k - i, n), static_cast<std::size_t>(i)) = inv_sqrt2;
      }
      e(pair_index(k / 2, k / 2, n), static_cast<std::size_t>(m) - 1) = 1.0;
    }
  } else {
    const int m = (k + 1) / 2;
    e = ComplexMatrix(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      e(pair_index(i, k - i, n), static_cast<std::size_t>(i)) = inv_sqrt2;
      e(pair_index(k - i, i, n), static_cast<std::size_t>(i)) = -inv_sqrt2;
    }
  }
  return e.adjoint() * t * e;
}

std::pair<SpectrumReport, SpectrumReport> shift_block_spectra(int max_degree,
                                                              int dense_check_degree) {
  if (max_degree < 1 || max_degree > 200) {
    throw std::invalid_argument("degree cutoff must lie in [1, 200]");
  }

  SpectrumReport sym;
  sym.method = "closed-form";
  sym.tolerance = 1e-10;
  SpectrumReport asym = sym;

  double worst = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    const auto closed_b = spec_Bk(k);
    for (double v : closed_b) sym.eigenvalues.push_back(Complex(v));
    const auto eig_b = hermitian_eigen(build_Bk(k), 1e-12);
    for (std::size_t i = 0; i < closed_b.size(); ++i) {
      worst = std::max(worst, std::abs(eig_b.eigenvalues[i].real() - closed_b[i]));
    }
    if (k >= 1) {
      const auto closed_c = spec_Ck(k);
      for (double v : closed_c) asym.eigenvalues.push_back(Complex(v));
      const auto eig_c = hermitian_eigen(build_Ck(k), 1e-12);
      for (std::size_t i = 0; i < closed_c.size(); ++i) {
        worst = std::max(worst, std::abs(eig_c.eigenvalues[i].real() - closed_c[i]));
      }
    }
    if (k <= dense_check_degree) {
      worst = std::max(worst, max_abs_diff(degree_block_dense(k, Flavor::symmetric), build_Bk(k)));
      if (k >= 1) {
        worst =
            std::max(worst, max_abs_diff(degree_block_dense(k, Flavor::antisymmetric), build_Ck(k)));
      }
    }
  }
  sym.eigenvalues = sorted_by_parts(std::move(sym.eigenvalues));
  asym.eigenvalues = sorted_by_parts(std::move(asym.eigenvalues));
  sym.max_residual = worst;
  asym.max_residual = worst;
  return {sym, asym};
}

}  // namespace symtensor
