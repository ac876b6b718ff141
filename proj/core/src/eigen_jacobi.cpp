#include <algorithm>
#include <cmath>

#include "symtensor/spectral.hpp"

namespace symtensor {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

SpectrumReport hermitian_eigen(const ComplexMatrix& input, double tol) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eigen requires a square matrix");
  const std::size_t n = input.rows();
  const double scale = input.frobenius_norm();
  if ((input - input.adjoint()).frobenius_norm() > tol * scale + 1e-300) {
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian at the given tolerance");
  }

  // Work on the Hermitian average so roundoff asymmetry cannot leak into the
  // rotations.
  ComplexMatrix a = input + input.adjoint();
  a *= Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = std::max(tol, 1e-15) * std::max(scale, 1e-300);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Factor out the phase so the pivot reduces to a real rotation:
        // with u = apq/|apq| the unitary J = [[u c, u s], [-s, c]] zeroes the
        // (p, q) entry when cot(2 theta) = (a_qq - a_pp) / (2 |a_pq|).
        const Complex u = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(tau * tau + 1.0));
        } else {
          t = -1.0 / (-tau + std::sqrt(tau * tau + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex j00 = u * c, j01 = u * s;
        const Complex j10 = Complex(-s), j11 = Complex(c);

        for (std::size_t r = 0; r < n; ++r) {  // A <- A J
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = arp * j00 + arq * j10;
          a(r, q) = arp * j01 + arq * j11;
        }
        for (std::size_t cidx = 0; cidx < n; ++cidx) {  // A <- J* A
          const Complex apc = a(p, cidx), aqc = a(q, cidx);
          a(p, cidx) = std::conj(j00) * apc + std::conj(j10) * aqc;
          a(q, cidx) = std::conj(j01) * apc + std::conj(j11) * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real());
        a(q, q) = Complex(a(q, q).real());
        for (std::size_t r = 0; r < n; ++r) {  // V <- V J
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp * j00 + vrq * j10;
          v(r, q) = vrp * j01 + vrq * j11;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  SpectrumReport report;
  report.method = "hermitian-jacobi";
  report.tolerance = tol;
  report.eigenvalues.reserve(n);
  double worst = 0.0;
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t i = order[rank];
    const double lambda = a(i, i).real();
    report.eigenvalues.push_back(Complex(lambda));
    std::vector<Complex> vec = v.column(i);
    std::vector<Complex> image = input.apply(vec);
    double res = 0.0;
    for (std::size_t r = 0; r < n; ++r) res += std::norm(image[r] - lambda * vec[r]);
    const double vnorm = norm2(vec);
    if (vnorm > 0.0) worst = std::max(worst, std::sqrt(res) / vnorm);
  }
  report.max_residual = worst;
  report.converged = off_diagonal_norm(a) <= target;
  if (!report.converged) report.note = "jacobi sweep limit reached";
  return report;
}

}  // namespace symtensor
