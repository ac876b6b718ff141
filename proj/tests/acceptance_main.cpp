// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion.  Exits nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symtensor/operator_model.hpp"
#include "symtensor/rng.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"
#include "symtensor/theorems.hpp"

using namespace symtensor;

namespace {

int g_failures = 0;

void report_line(const char* name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), pattern, a, b);
  return buffer;
}

// 1. The projected product reproduces the 2x2 -> 3x3 closed form.
void criterion_closed_form() {
  Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(2, 2);
    const ComplexMatrix b = rng.gaussian_matrix(2, 2);
    worst = std::max(worst, max_abs_diff(sym_product(a, b),
                                         oracles::sym_product_2x2_closed_form(a, b)));
  }
  const double elapsed = seconds_since(start);
  report_line("criterion-1 closed-form-2x2", worst <= 1e-12 && elapsed < 5.0,
              fmt("max entry deviation %.3e over 10^4 pairs in %.2f s", worst, elapsed));
}

// 2. Sharp witness constants.
void criterion_witnesses() {
  const ComplexMatrix wa{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix wb{{0.0, 0.0}, {1.0, 0.0}};
  const double half_sqrt2 = operator_norm(sym_product(wa, wb)).value;
  const double dev1 = std::abs(half_sqrt2 - 1.0 / std::sqrt(2.0));

  const Complex lw[] = {Complex(1.0), Complex(std::sqrt(2.0) - 1.0)};
  const Complex mw[] = {Complex(1.0 - std::sqrt(2.0)), Complex(1.0)};
  const double diag_norm =
      operator_norm(sym_product(ComplexMatrix::diagonal(lw), ComplexMatrix::diagonal(mw))).value;
  const double dev2 = std::abs(diag_norm - (std::sqrt(2.0) - 1.0));

  const ComplexMatrix pa{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix pb{{0.0, 0.0}, {0.0, 1.0}};
  const double split_norm = operator_norm(sym_product(pa, pb)).value;
  const double dev3 = std::abs(split_norm - 0.5);

  ComplexMatrix projector = sym_product(pa, pb);
  projector *= Complex(2.0);
  const double dev4 = max_abs_diff(projector * projector, projector);

  const double worst = std::max({dev1, dev2, dev3, dev4});
  report_line("criterion-2 witness-constants", worst <= 1e-12,
              fmt("max deviation %.3e across the four witnesses", worst));
}

// 3. Spectral radius power law with the Gelfand upper bound as cross-check.
void criterion_radius_law() {
  Rng rng(1003);
  double worst_rel = 0.0;
  double worst_gelfand = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(4));
    const int n = 2 + static_cast<int>(rng.integer(2));
    const ComplexMatrix a = rng.gaussian_matrix(d, d);
    const double rho = spectral_radius(a);
    std::vector<ComplexMatrix> copies(static_cast<std::size_t>(n), a);
    const ComplexMatrix power = sym_product(copies);
    const double rho_n = spectral_radius(power);
    const double expect = std::pow(rho, n);
    worst_rel = std::max(worst_rel, std::abs(rho_n - expect) / std::max(1e-12, expect));
    const double gelfand = gelfand_estimate(power, 4);
    worst_gelfand = std::max(worst_gelfand, (rho_n - gelfand) / std::max(1.0, gelfand));
  }
  report_line("criterion-3 radius-power-law", worst_rel <= 1e-6 && worst_gelfand <= 1e-8,
              fmt("max relative deviation %.3e, max bound excess %.3e", worst_rel, worst_gelfand));
}

// 4. Cosine closed forms for the tridiagonal blocks, and the union law.
void criterion_tridiagonal() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  double worst_union = 0.0;
  for (int k = 0; k <= 60; ++k) {
    const auto ea = hermitian_eigen(build_Ak(k), 1e-12).eigenvalues;
    const auto ca = spec_Ak(k);
    for (std::size_t i = 0; i < ca.size(); ++i)
      worst = std::max(worst, std::abs(ea[i].real() - ca[i]));
    const auto eb = hermitian_eigen(build_Bk(k), 1e-12).eigenvalues;
    const auto cb = spec_Bk(k);
    for (std::size_t i = 0; i < cb.size(); ++i)
      worst = std::max(worst, std::abs(eb[i].real() - cb[i]));
    std::vector<Complex> lhs, rhs;
    for (double v : ca) lhs.push_back(Complex(v));
    for (double v : cb) rhs.push_back(Complex(v));
    if (k >= 1) {
      const auto ec = hermitian_eigen(build_Ck(k), 1e-12).eigenvalues;
      const auto cc = spec_Ck(k);
      for (std::size_t i = 0; i < cc.size(); ++i)
        worst = std::max(worst, std::abs(ec[i].real() - cc[i]));
      for (double v : cc) rhs.push_back(Complex(v));
    }
    worst_union = std::max(worst_union, match_multisets(lhs, rhs, 1e-10).max_deviation);
  }
  const double elapsed = seconds_since(start);
  report_line("criterion-4 tridiagonal-closed-forms",
              worst <= 1e-10 && worst_union <= 1e-10 && elapsed < 30.0,
              fmt("max eigenvalue deviation %.3e, union deviation %.3e", worst, worst_union) +
                  fmt(", %.2f s", elapsed));
}

// 5. Dense restriction of the shift pair average reproduces the blocks.
void criterion_dense_blocks() {
  double worst = 0.0;
  for (int k = 0; k <= 25; ++k) {
    worst = std::max(worst, max_abs_diff(degree_block_dense(k, Flavor::symmetric), build_Bk(k)));
    if (k >= 1) {
      worst =
          std::max(worst, max_abs_diff(degree_block_dense(k, Flavor::antisymmetric), build_Ck(k)));
    }
  }
  report_line("criterion-5 dense-block-restriction", worst <= 1e-12,
              fmt("max entry deviation %.3e for degrees <= 25", worst));
}

// 6. Diagonal spectra against the dense eigensolver.
void criterion_diagonal_spectra() {
  Rng rng(1006);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(7));
    const bool three = t % 2 == 1;
    std::vector<std::vector<Complex>> seqs;
    std::vector<ComplexMatrix> mats;
    const int factors = three ? 3 : 2;
    for (int i = 0; i < factors; ++i) {
      seqs.push_back(rng.complex_normal_vector(static_cast<std::size_t>(n)));
      mats.push_back(ComplexMatrix::diagonal(seqs.back()));
    }
    const auto closed =
        three ? multi_diag_sym_spectrum(seqs, n) : diag_sym_spectrum(seqs[0], seqs[1], n);
    const auto dense = general_eigen(sym_product(mats)).eigenvalues;
    double scale = 1.0;
    for (const auto& v : closed) scale = std::max(scale, std::abs(v));
    worst = std::max(worst, match_multisets(closed, dense, 1e-9 * scale).max_deviation / scale);
  }
  report_line("criterion-6 diagonal-spectra", worst <= 1e-9,
              fmt("max scaled multiset deviation %.3e over 100 draws", worst));
}

// 7. Kernel construction: interior equations, the strict decay bound, and
// point-spectrum forcing.
void criterion_kernel() {
  Rng rng(1007);
  const int truncation = 60;
  double worst_interior = 0.0;
  double worst_gap = 0.0;
  bool decay_ok = true;
  double worst_decay = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2);
    for (auto& v : mu) v = rng.uniform(0.1, 1.0) * rng.unit_phase();
    const KernelCoefficients kc = kernel_vector_SM(mu, truncation, 0.5);
    const KernelEquationReport eq = check_kernel_equations(kc);
    worst_interior = std::max(worst_interior, eq.max_residual);
    worst_gap = std::max(worst_gap, eq.max_gap_residual);
    decay_ok = decay_ok && eq.decay_bound_ok;
    worst_decay = std::max(worst_decay, eq.worst_decay_ratio);
  }
  report_line("criterion-7a kernel-interior-equations", worst_interior <= 1e-13,
              fmt("max interior residual %.3e (row-one coupling gap %.3e, "
                  "unresolvable when every mu is nonzero)",
                  worst_interior, worst_gap));
  report_line("criterion-7b kernel-decay-bound", decay_ok,
              std::string("strict bound |a|^2 < C^2/(k+r)^3 ") +
                  (decay_ok ? "held everywhere" : "violated") +
                  fmt("; worst ratio %.3e", worst_decay));

  bool forced = true;
  double worst_coeff = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2);
    for (auto& v : mu) v = rng.uniform(0.1, 1.0) * rng.unit_phase();
    const Complex lambda = rng.uniform(0.05, 2.0) * rng.unit_phase();
    const auto ps = verify_point_spectrum_SM(mu, lambda, 40);
    forced = forced && ps.all_forced_zero;
    worst_coeff = std::max(worst_coeff, ps.max_coefficient);
  }
  report_line("criterion-7c kernel-point-spectrum", forced,
              fmt("largest surviving coefficient %.3e over 100 draws", worst_coeff));
}

// 8. Backshift eigenvector residuals stay below the geometric tail.
void criterion_backshift() {
  Rng rng(1008);
  double worst_excess = -1e300;
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> mu(61);
    for (auto& v : mu) v = rng.uniform(0.2, 1.0) * rng.unit_phase();
    const Complex lambda = mu[0] * rng.uniform(0.0, 0.45) * rng.unit_phase();
    const auto ev = backshift_eigenvector(mu, lambda, 60);
    ok = ok && ev.residual <= ev.tail_bound + 1e-13;
    worst_excess = std::max(worst_excess, ev.residual - ev.tail_bound);
  }
  report_line("criterion-8 backshift-eigenvectors", ok,
              fmt("max (residual - tail bound) = %.3e over 100 draws", worst_excess));
}

// 9. Property suites for the vector bounds, product rule, adjoints, closure
// and the counterexample gallery.
void criterion_property_suites() {
  SuiteOptions options;
  options.seed = 1009;

  options.trials = 10000;
  const VerifyReport vec2 = run_suite("lemma-2.10", options);
  const VerifyReport vec3 = run_suite("lemma-10.1", options);
  options.trials = 400;
  const VerifyReport rule = run_suite("lemma-4.1", options);
  const VerifyReport adjoint = run_suite("prop-4.4", options);
  options.trials = 100;
  const VerifyReport closure = run_suite("thm-4.6", options);

  const bool ok = vec2.passed() && vec3.passed() && rule.passed() && adjoint.passed() &&
                  closure.passed();
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "failures: 2-vector %d, 3-vector %d, product rule %d, adjoint %d, closure %d",
                vec2.failures, vec3.failures, rule.failures, adjoint.failures, closure.failures);
  report_line("criterion-9 property-suites", ok, buffer);
}

// 10. Finite-dimensional spectral containment, equality for normal inputs.
void criterion_spectrum_containment() {
  Rng rng(1010);
  double worst = 0.0;
  bool ok = true;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(3));
    const bool normal_case = t % 2 == 0;
    ComplexMatrix a = rng.gaussian_matrix(d, d);
    if (normal_case) {
      const ComplexMatrix u = rng.unitary(d);
      a = u * ComplexMatrix::diagonal(rng.complex_normal_vector(d)) * u.adjoint();
    }
    const auto eigs = general_eigen(a).eigenvalues;
    double scale = 1.0;
    for (const auto& v : eigs) scale = std::max(scale, std::abs(v));

    std::vector<Complex> half_sums, products;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      for (std::size_t j = i; j < eigs.size(); ++j) {
        half_sums.push_back(0.5 * (eigs[i] + eigs[j]));
        products.push_back(eigs[i] * eigs[j]);
      }
    }
    const auto eig_sum = general_eigen(sym_product(a, ComplexMatrix::identity(d))).eigenvalues;
    const auto m1 = multiset_contained(eig_sum, half_sums, 1e-7 * scale);
    const auto eig_prod = general_eigen(sym_product(a, a)).eigenvalues;
    const auto m2 = multiset_contained(eig_prod, products, 1e-7 * scale * scale);
    ok = ok && m1.matched && m2.matched;
    worst = std::max(worst, std::max(m1.max_deviation / scale,
                                     m2.max_deviation / std::max(scale * scale, 1.0)));
  }
  report_line("criterion-10 spectrum-containment", ok,
              fmt("max scaled matching deviation %.3e over 200 draws", worst));
}

struct Criterion {
  const char* id;
  void (*run)();
};

constexpr Criterion kCriteria[] = {
    {"criterion-1", criterion_closed_form},
    {"criterion-2", criterion_witnesses},
    {"criterion-3", criterion_radius_law},
    {"criterion-4", criterion_tridiagonal},
    {"criterion-5", criterion_dense_blocks},
    {"criterion-6", criterion_diagonal_spectra},
    {"criterion-7", criterion_kernel},
    {"criterion-8", criterion_backshift},
    {"criterion-9", criterion_property_suites},
    {"criterion-10", criterion_spectrum_containment},
};

}  // namespace

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  bool matched = false;
  for (const auto& criterion : kCriteria) {
    if (!filter.empty() && filter != criterion.id) continue;
    matched = true;
    criterion.run();
  }
  if (!matched) {
    std::printf("unknown criterion id: %s\n", filter.c_str());
    return 2;
  }
  if (g_failures == 0) {
    std::printf("acceptance%s%s: all lines passed\n", filter.empty() ? "" : " ",
                filter.c_str());
  } else {
    std::printf("acceptance: %d line(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
