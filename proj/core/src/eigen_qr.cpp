#include <algorithm>
#include <cmath>
#include <limits>

#include "symtensor/spectral.hpp"

namespace symtensor {
namespace {

// Householder reduction to upper Hessenberg form, in place.
void hessenberg_reduce(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double column_scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) column_scale += std::norm(h(i, k));
    column_scale = std::sqrt(column_scale);
    if (column_scale == 0.0) continue;

    // Reflector v maps the subcolumn onto a multiple of e_{k+1}.
    const Complex pivot = h(k + 1, k);
    const Complex phase = std::abs(pivot) > 0.0 ? pivot / std::abs(pivot) : Complex(1.0);
    const Complex alpha = -phase * column_scale;
    std::vector<Complex> v(n, Complex(0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;

    // H <- (I - 2 v v* / |v|^2) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
    }
    // H <- H (I - 2 v v* / |v|^2)
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Wilkinson shift: the eigenvalue of the trailing 2x2 block nearer to the
// bottom corner entry.
Complex wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex tr_half = (a + d) * 0.5;
  const Complex disc = std::sqrt(tr_half * tr_half - (a * d - b * c));
  const Complex l1 = tr_half + disc;
  const Complex l2 = tr_half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

// One explicit shifted QR step on the active block [lo, hi]:
// Q R = H - shift I, then H <- R Q + shift I, realized with Givens rotations.
void qr_sweep(ComplexMatrix& h, std::size_t lo, std::size_t hi, Complex shift) {
  const std::size_t n = h.rows();
  std::vector<Complex> cs(hi - lo), sn(hi - lo);

  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= shift;

  for (std::size_t k = lo; k < hi; ++k) {
    const Complex x = h(k, k);
    const Complex y = h(k + 1, k);
    const double r = std::sqrt(std::norm(x) + std::norm(y));
    Complex c(1.0), s(0.0);
    if (r > 0.0) {
      c = x / r;
      s = y / r;
    }
    cs[k - lo] = c;
    sn[k - lo] = s;
    for (std::size_t j = k; j < n; ++j) {
      const Complex t1 = h(k, j), t2 = h(k + 1, j);
      h(k, j) = std::conj(c) * t1 + std::conj(s) * t2;
      h(k + 1, j) = -s * t1 + c * t2;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Complex c = cs[k - lo], s = sn[k - lo];
    for (std::size_t i = 0; i <= k + 1; ++i) {
      const Complex t1 = h(i, k), t2 = h(i, k + 1);
      h(i, k) = t1 * c + t2 * s;
      h(i, k + 1) = -t1 * std::conj(s) + t2 * std::conj(c);
    }
  }

  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += shift;
}

// log |det(M - lambda I)| via LU with partial pivoting; -inf for singular.
double log_abs_det_shifted(const ComplexMatrix& m, Complex lambda) {
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= lambda;
  double log_det = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) return -std::numeric_limits<double>::infinity();
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
    }
    log_det += std::log(best);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return log_det;
}

}  // namespace

SpectrumReport general_eigen(const ComplexMatrix& input, double tol) {
  if (!input.is_square()) throw std::invalid_argument("general_eigen requires a square matrix");
  const std::size_t n = input.rows();
  if (n > 500) throw std::invalid_argument("general_eigen supports dimensions up to 500");

  SpectrumReport report;
  report.method = "general-qr";
  report.tolerance = tol;
  if (n == 0) return report;

  const double scale = input.max_abs();
  if (scale == 0.0) {
    report.eigenvalues.assign(n, Complex(0.0));
    return report;
  }

  ComplexMatrix h = input;
  hessenberg_reduce(h);

  const double eps = 2.0 * std::numeric_limits<double>::epsilon();
  const std::size_t sweep_cap = 100 * n;
  std::size_t sweeps = 0;
  std::size_t hi = n - 1;
  std::size_t stalled = 0;

  while (hi > 0) {
    // Deflate converged subdiagonal entries from the bottom up.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      const double local = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (sub <= eps * std::max(local, scale)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      stalled = 0;
      continue;
    }

    if (sweeps >= sweep_cap) {
      report.converged = false;
      report.note = "qr sweep cap reached before deflation completed";
      break;
    }

    Complex shift = wilkinson_shift(h, hi);
    ++stalled;
    if (stalled % 12 == 0) {
      // Exceptional shift to break symmetric stalls.
      shift = Complex(std::abs(h(hi, hi - 1)) + 0.75 * std::abs(h(hi, hi)), 0.0);
    }
    qr_sweep(h, lo, hi, shift);
    ++sweeps;
  }

  report.eigenvalues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) report.eigenvalues.push_back(h(i, i));
  report.eigenvalues = sorted_by_parts(std::move(report.eigenvalues));

  // Certify each eigenvalue through the characteristic polynomial.  The
  // determinant of M - lambda I scales like ||M||^n, so the meaningful bound
  // is |det(M - lambda I)| <= tol * ||M||^n; max_residual reports the scaled
  // dim-th root |det|^(1/n) / ||M||, whose n-th power is compared to tol.
  const double norm_scale = std::max(input.frobenius_norm(), 1e-300);
  const double log_norm = std::log(norm_scale);
  double worst_log = -std::numeric_limits<double>::infinity();
  for (const Complex& lambda : report.eigenvalues) {
    const double log_det = log_abs_det_shifted(input, lambda);
    if (std::isfinite(log_det)) {
      worst_log = std::max(worst_log, log_det / static_cast<double>(n) - log_norm);
    }
  }
  report.max_residual = std::isfinite(worst_log) ? std::exp(worst_log) : 0.0;
  if (report.converged && std::isfinite(worst_log) &&
      static_cast<double>(n) * worst_log > std::log(tol)) {
    report.converged = false;
    report.note = "characteristic polynomial certificate above tolerance";
  }
  return report;
}

}  // namespace symtensor
