#include <cmath>
#include <stdexcept>

#include "symtensor/operator_model.hpp"
#include "symtensor/theorems.hpp"

namespace symtensor {

std::size_t KernelCoefficients::tri_index(int k, int l) const {
  // Row-major over the triangle 0 <= k <= l <= K.
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t big_k = static_cast<std::size_t>(truncation);
  return kk * (big_k + 1) - kk * (kk - 1) / 2 + static_cast<std::size_t>(l - k);
}

Complex KernelCoefficients::a(int k, int l) const {
  if (k < 0 || l < k || l > truncation) throw std::out_of_range("kernel coefficient index");
  return coefficients[tri_index(k, l)];
}

KernelCoefficients kernel_vector_SM(std::span<const Complex> mu, int truncation, double c) {
  if (truncation < 2) throw std::invalid_argument("kernel construction needs truncation >= 2");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("scale must lie in (0, 1)");
  const std::size_t needed = static_cast<std::size_t>(truncation) + 2;
  if (mu.size() < needed) {
    throw std::invalid_argument("diagonal prefix shorter than truncation + 2");
  }

  KernelCoefficients kc;
  kc.truncation = truncation;
  kc.scale_c = c;
  kc.mu.assign(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(needed));
  const std::size_t rows = static_cast<std::size_t>(truncation) + 1;
  kc.coefficients.assign(rows * (rows + 1) / 2, Complex(0.0));

  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  int zero_index = -1;
  for (std::size_t i = 0; i < kc.mu.size(); ++i) {
    const double m = std::abs(kc.mu[i]);
    if (m == 0.0 && zero_index < 0) zero_index = static_cast<int>(i);
    min_abs = std::min(min_abs, m);
    max_abs = std::max(max_abs, m);
  }

  if (zero_index >= 0) {
    if (zero_index > truncation) {
      throw std::invalid_argument("vanishing diagonal entry lies beyond the truncation");
    }
    kc.trivial = true;
    kc.trivial_index = zero_index;
    kc.floor_delta = 0.0;
    kc.bound_constant = 0.0;
    kc.coefficients[kc.tri_index(zero_index, zero_index)] = 1.0;
    return kc;
  }

  kc.floor_delta = min_abs;
  kc.bound_constant = std::sqrt(max_abs / min_abs);

  auto at = [&kc](int k, int l) -> Complex& { return kc.coefficients[kc.tri_index(k, l)]; };

  // Diagonal / second-superdiagonal pairs: (2 a_kk, a_{k-1,k+1}) is the
  // multiple of (-mu_{k+1}, mu_k) of length c/(k+1)^{3/2}, which is Hermitian
  // orthogonal to (conj mu_k, conj mu_{k+1}).
  for (int k = 2; k <= truncation; ++k) {
    const Complex mk = kc.mu[static_cast<std::size_t>(k)];
    const Complex mk1 = kc.mu[static_cast<std::size_t>(k) + 1];
    const double pair_norm = std::sqrt(std::norm(mk) + std::norm(mk1));
    const double t = c / std::pow(static_cast<double>(k) + 1.0, 1.5);
    at(k, k) = -t * mk1 / (2.0 * pair_norm);
    if (k + 1 <= truncation) at(k - 1, k + 1) = t * mk / pair_norm;
  }

  // Remaining even offsets by the ratio recursion, filled by increasing
  // offset so every dependency is already in place.
  for (int offset = 4; offset <= truncation - 1; offset += 2) {
    for (int row = 1; row + offset <= truncation; ++row) {
      const int col = row + offset;
      at(row, col) = -at(row + 1, col - 1) * kc.mu[static_cast<std::size_t>(row) + 1] /
                     kc.mu[static_cast<std::size_t>(col)];
    }
  }
  return kc;
}

KernelEquationReport check_kernel_equations(const KernelCoefficients& kc) {
  KernelEquationReport report;
  const int big_k = kc.truncation;
  const auto mu = [&kc](int i) { return kc.mu[static_cast<std::size_t>(i)]; };

  auto record = [&report](bool gap, double value) {
    ++report.equations_checked;
    if (gap) {
      report.max_gap_residual = std::max(report.max_gap_residual, value);
    } else {
      report.max_residual = std::max(report.max_residual, value);
    }
  };

  // Coefficient of e_0 (.) e_1.
  record(false, std::abs(2.0 * mu(0) * kc.a(0, 0)));
  // Coefficients of e_0 (.) e_l.
  for (int l = 2; l <= big_k + 1; ++l) record(false, std::abs(mu(0) * kc.a(0, l - 1)));
  // Coefficients of e_k (.) e_k.
  for (int k = 1; k <= big_k; ++k) record(false, std::abs(mu(k) * kc.a(k - 1, k)));
  // Coefficients of e_k (.) e_{k+1}; the k = K equation reaches past the
  // stored triangle and is left to the truncation boundary.
  for (int k = 1; k + 1 <= big_k; ++k) {
    record(false, std::abs(2.0 * mu(k) * kc.a(k, k) + mu(k + 1) * kc.a(k - 1, k + 1)));
  }
  // Coefficients of e_k (.) e_l for l >= k + 2.  The row-one equations at
  // even columns couple a nonzero entry into the vanishing row zero; they
  // cannot be zeroed when every mu_i is nonzero and are tracked separately.
  for (int k = 1; k <= big_k; ++k) {
    for (int l = k + 2; l <= big_k; ++l) {
      const bool gap = !kc.trivial && k == 1 && l % 2 == 0;
      record(gap, std::abs(mu(k) * kc.a(k, l - 1) + mu(l) * kc.a(k - 1, l)));
    }
  }

  if (kc.trivial) {
    report.decay_bound_ok = true;
    report.worst_decay_ratio = 0.0;
    return report;
  }

  const double c_squared = kc.bound_constant * kc.bound_constant;
  for (int k = 1; k <= big_k; ++k) {
    for (int r = 0; k + 2 * r <= big_k; ++r) {
      const double value = std::norm(kc.a(k, k + 2 * r));
      const double denom = std::pow(static_cast<double>(k + r), 3.0);
      const double ratio = value * denom / c_squared;
      report.worst_decay_ratio = std::max(report.worst_decay_ratio, ratio);
      if (!(value < c_squared / denom)) report.decay_bound_ok = false;
    }
  }
  return report;
}

PointSpectrumReport verify_point_spectrum_SM(std::span<const Complex> mu, Complex lambda,
                                             int truncation) {
  if (lambda == Complex(0.0)) {
    throw std::invalid_argument("point-spectrum forcing is for nonzero eigenvalue candidates");
  }
  if (truncation < 2) throw std::invalid_argument("truncation must be at least 2");
  if (mu.size() < static_cast<std::size_t>(truncation) + 1) {
    throw std::invalid_argument("diagonal prefix shorter than truncation + 1");
  }

  // Forward substitution of the eigenvalue equations: each coefficient is a
  // multiple of earlier ones, starting from a_00 = 0.
  const int big_k = truncation;
  std::vector<std::vector<Complex>> a(static_cast<std::size_t>(big_k) + 1);
  for (int k = 0; k <= big_k; ++k) a[static_cast<std::size_t>(k)].assign(big_k + 1, Complex(0.0));

  PointSpectrumReport report;
  a[0][0] = Complex(0.0);
  a[0][1] = 2.0 * mu[0] * a[0][0] / lambda;
  for (int l = 2; l <= big_k; ++l) a[0][l] = mu[0] * a[0][l - 1] / lambda;
  for (int k = 1; k <= big_k; ++k) {
    a[k][k] = mu[static_cast<std::size_t>(k)] * a[k - 1][k] / lambda;
    if (k + 1 <= big_k) {
      a[k][k + 1] = (2.0 * mu[static_cast<std::size_t>(k)] * a[k][k] +
                     mu[static_cast<std::size_t>(k) + 1] * a[k - 1][k + 1]) /
                    lambda;
    }
    for (int l = k + 2; l <= big_k; ++l) {
      a[k][l] = (mu[static_cast<std::size_t>(k)] * a[k][l - 1] +
                 mu[static_cast<std::size_t>(l)] * a[k - 1][l]) /
                lambda;
    }
  }

  double worst = 0.0;
  for (int k = 0; k <= big_k; ++k) {
    for (int l = k; l <= big_k; ++l) {
      worst = std::max(worst, std::abs(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]));
      ++report.coefficients_checked;
    }
  }
  report.max_coefficient = worst;
  report.all_forced_zero = worst == 0.0;
  return report;
}

BackshiftEigenvector backshift_eigenvector(std::span<const Complex> mu, Complex lambda,
                                           int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be at least 1");
  if (mu.size() < static_cast<std::size_t>(truncation) + 1) {
    throw std::invalid_argument("diagonal prefix shorter than truncation + 1");
  }
  const std::size_t d = static_cast<std::size_t>(truncation) + 1;
  const Complex mu0 = mu[0];

  BackshiftEigenvector out;
  out.lambda = lambda;
  out.coefficients.assign(d, Complex(0.0));

  if (lambda == Complex(0.0)) {
    out.coefficients[0] = 1.0;  // e_0 (.) e_0, annihilated exactly
  } else {
    if (mu0 == Complex(0.0)) {
      throw std::domain_error("nonzero eigenvalue requires mu_0 != 0");
    }
    const Complex q = 2.0 * lambda / mu0;
    if (!(std::abs(q) < 1.0)) {
      throw std::domain_error("|lambda| must be smaller than |mu_0| / 2");
    }
    Complex power(1.0);
    for (std::size_t j = 0; j < d; ++j) {
      out.coefficients[j] = power;
      power *= q;
    }
  }

  // Coordinates in the orthonormal basis of embed_sym(d, 2): the (0, j)
  // pairs are the first d entries, scaled by the basis normalization.
  const std::size_t sym_size = d * (d + 1) / 2;
  std::vector<Complex> coords(sym_size, Complex(0.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  coords[0] = out.coefficients[0];
  for (std::size_t j = 1; j < d; ++j) coords[j] = out.coefficients[j] * inv_sqrt2;

  const ComplexMatrix back = materialize(OperatorSpec::back_shift(), d);
  const ComplexMatrix diag = materialize(
      OperatorSpec::diagonal(std::vector<Complex>(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(d))), d);
  const std::vector<Complex> image = apply_sym_pair(back, diag, coords);

  double res2 = 0.0;
  for (std::size_t i = 0; i < sym_size; ++i) res2 += std::norm(image[i] - lambda * coords[i]);
  const double vnorm = norm2(coords);
  out.residual = std::sqrt(res2) / vnorm;

  double mu_max = 0.0;
  for (std::size_t i = 0; i < d; ++i) mu_max = std::max(mu_max, std::abs(mu[i]));
  if (lambda == Complex(0.0)) {
    out.tail_bound = 0.0;
  } else {
    out.tail_bound =
        2.0 * mu_max * std::pow(std::abs(2.0 * lambda / mu0), static_cast<double>(truncation));
  }
  return out;
}

}  // namespace symtensor
