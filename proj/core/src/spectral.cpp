#include "symtensor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symtensor {

NormReport operator_norm(const ComplexMatrix& m, double tol, NormMethod method) {
  if (!m.is_square()) throw std::invalid_argument("operator_norm requires a square matrix");
  NormReport report;
  report.tolerance = tol;
  if (m.rows() == 0 || m.max_abs() == 0.0) {
    report.method = method == NormMethod::power_iteration ? "power-iteration" : "svd-via-hermitian";
    return report;
  }
  const ComplexMatrix gram = m.adjoint() * m;

  if (method == NormMethod::svd_via_hermitian) {
    report.method = "svd-via-hermitian";
    const SpectrumReport eig = hermitian_eigen(gram, std::max(tol, 1e-14));
    const double top = std::max(0.0, eig.eigenvalues.back().real());
    report.value = std::sqrt(top);
    return report;
  }

  report.method = "power-iteration";
  const std::size_t n = m.rows();
  std::vector<Complex> v(n, Complex(0.0));
  // A fixed, mildly irregular start vector avoids accidental orthogonality to
  // the dominant singular direction while keeping runs reproducible.
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.25 * std::sin(1.0 + 2.0 * i), 0.125 * std::cos(3.0 * i));
  double nv = norm2(v);
  for (auto& x : v) x /= nv;

  double lambda = 0.0;
  const int cap = 20000;
  int it = 0;
  for (; it < cap; ++it) {
    std::vector<Complex> w = gram.apply(v);
    const double wn = norm2(w);
    if (wn == 0.0) break;
    for (auto& x : w) x /= wn;
    const double next = wn;  // Rayleigh quotient of the unit iterate
    v = std::move(w);
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(next, 1e-300)) {
      lambda = next;
      ++it;
      break;
    }
    lambda = next;
  }
  report.iterations = it;
  report.value = std::sqrt(std::max(0.0, lambda));
  return report;
}

double spectral_radius(const ComplexMatrix& m) {
  const SpectrumReport report = general_eigen(m);
  if (!report.converged) {
    throw std::runtime_error("spectral_radius: eigensolver did not certify (" + report.note + ")");
  }
  double rho = 0.0;
  for (const auto& ev : report.eigenvalues) rho = std::max(rho, std::abs(ev));
  return rho;
}

double gelfand_estimate(const ComplexMatrix& m, int k) {
  if (k < 1) throw std::invalid_argument("gelfand_estimate needs k >= 1");
  ComplexMatrix power = m;
  for (int i = 1; i < k; ++i) power = power * m;
  const double norm = operator_norm(power).value;
  return std::pow(norm, 1.0 / static_cast<double>(k));
}

ComplexMatrix build_Ak(int k) {
  if (k < 0) throw std::invalid_argument("build_Ak needs k >= 0");
  const std::size_t m = static_cast<std::size_t>(k) + 1;
  ComplexMatrix a(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    a(i, i + 1) = 0.5;
    a(i + 1, i) = 0.5;
  }
  return a;
}

ComplexMatrix build_Bk(int k) {
  if (k < 0) throw std::invalid_argument("build_Bk needs k >= 0");
  if (k == 0) return ComplexMatrix(1, 1);
  const std::size_t m = static_cast<std::size_t>((k + 2) / 2);
  ComplexMatrix b(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    b(i, i + 1) = 0.5;
    b(i + 1, i) = 0.5;
  }
  if (k % 2 == 1) {
    b(m - 1, m - 1) = 0.5;
  } else {
    // The repeated-exponent basis vector carries weight 1/sqrt(2) instead of
    // 1/2 on the final coupling.
    const double corner = 1.0 / std::sqrt(2.0);
    b(m - 2, m - 1) = corner;
    b(m - 1, m - 2) = corner;
  }
  return b;
}

ComplexMatrix build_Ck(int k) {
  if (k < 1) throw std::invalid_argument("build_Ck needs k >= 1");
  const std::size_t m = static_cast<std::size_t>((k + 1) / 2);
  ComplexMatrix c(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    c(i, i + 1) = 0.5;
    c(i + 1, i) = 0.5;
  }
  c(m - 1, m - 1) = (k % 2 == 0) ? 0.0 : -0.5;
  return c;
}

namespace {

std::vector<double> cosine_values(int count, double numerator_step, double offset, int k) {
  std::vector<double> values;
  values.reserve(count);
  for (int j = 1; j <= count; ++j) {
    values.push_back(std::cos((numerator_step * j + offset) * std::numbers::pi /
                              static_cast<double>(k + 2)));
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

std::vector<double> spec_Ak(int k) {
  if (k < 0) throw std::invalid_argument("spec_Ak needs k >= 0");
  return cosine_values(k + 1, 1.0, 0.0, k);
}

std::vector<double> spec_Bk(int k) {
  if (k < 0) throw std::invalid_argument("spec_Bk needs k >= 0");
  return cosine_values((k + 2) / 2, 2.0, -1.0, k);
}

std::vector<double> spec_Ck(int k) {
  if (k < 1) throw std::invalid_argument("spec_Ck needs k >= 1");
  return cosine_values((k + 1) / 2, 2.0, 0.0, k);
}

std::vector<Complex> diag_sym_spectrum(std::span<const Complex> lambdas,
                                       std::span<const Complex> mus, int n) {
  if (n < 1) throw std::invalid_argument("diag_sym_spectrum needs n >= 1");
  if (lambdas.size() < static_cast<std::size_t>(n) || mus.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("diagonal sequences shorter than requested size");
  }
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      values.push_back(0.5 * (lambdas[i] * mus[j] + lambdas[j] * mus[i]));
  return sorted_by_parts(std::move(values));
}

std::vector<Complex> multi_diag_sym_spectrum(const std::vector<std::vector<Complex>>& sequences,
                                             int n) {
  const int factors = static_cast<int>(sequences.size());
  if (factors < 2) throw std::invalid_argument("multi_diag_sym_spectrum needs at least 2 factors");
  if (factors > 4 || n > 12) throw SizeGuardError("multi_diag_sym_spectrum guard: n <= 4 factors, N <= 12");
  for (const auto& seq : sequences) {
    if (seq.size() < static_cast<std::size_t>(n)) {
      throw std::invalid_argument("diagonal sequences shorter than requested size");
    }
  }

  const auto tuples = enumerate_sym_indices(n, factors);
  Permutation p0 = identity_permutation(factors);
  std::vector<Complex> values;
  values.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    Complex sum = 0.0;
    std::uint64_t terms = 0;
    Permutation p = p0;
    do {
      Complex prod = 1.0;
      for (int slot = 0; slot < factors; ++slot) prod *= sequences[p[slot]][tuple.entries[slot]];
      sum += prod;
      ++terms;
    } while (std::next_permutation(p.begin(), p.end()));
    values.push_back(sum / static_cast<double>(terms));
  }
  return sorted_by_parts(std::move(values));
}

std::vector<Complex> sorted_by_parts(std::vector<Complex> values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

MultisetMatch match_multisets(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  MultisetMatch result;
  if (a.size() != b.size()) return result;
  a = sorted_by_parts(std::move(a));
  b = sorted_by_parts(std::move(b));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  result.max_deviation = worst;
  result.matched = worst <= tol;
  return result;
}

MultisetMatch multiset_contained(std::vector<Complex> part, std::vector<Complex> whole,
                                 double tol) {
  MultisetMatch result;
  part = sorted_by_parts(std::move(part));
  whole = sorted_by_parts(std::move(whole));
  std::vector<bool> used(whole.size(), false);
  double worst = 0.0;
  for (const Complex& value : part) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = whole.size();
    for (std::size_t j = 0; j < whole.size(); ++j) {
      if (used[j]) continue;
      const double dev = std::abs(value - whole[j]);
      if (dev < best) {
        best = dev;
        best_idx = j;
      }
    }
    if (best_idx == whole.size()) {
      result.max_deviation = std::numeric_limits<double>::infinity();
      return result;
    }
    used[best_idx] = true;
    worst = std::max(worst, best);
  }
  result.max_deviation = worst;
  result.matched = worst <= tol;
  return result;
}

}  // namespace symtensor
