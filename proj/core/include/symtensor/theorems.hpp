#ifndef SYMTENSOR_THEOREMS_HPP
#define SYMTENSOR_THEOREMS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtensor/complex_matrix.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"

namespace symtensor {

/// Outcome of one verification suite.  `worst_margin` is the smallest slack
/// observed across trials (tolerance minus deviation for equality checks,
/// bound minus value for inequalities); it goes negative exactly when a trial
/// fails.  The seed is always recorded so failures can be replayed.
struct VerifyReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> witnesses;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> observations;

  bool passed() const { return failures == 0; }
  void record(bool ok, double margin, const std::string& witness);
  void observe(std::string name, double value);
};

// ---------------------------------------------------------------------------
// Norm bounds and sharp constants
// ---------------------------------------------------------------------------

/// Lower bound sup_x ||Ax|| ||Bx|| / sqrt(2) <= ||A (.) B|| over random unit
/// vectors, plus the rank-one witness pair where equality holds at 1/sqrt(2).
VerifyReport verify_norm_lower_2(const ComplexMatrix& a, const ComplexMatrix& b, int trials,
                                 std::uint64_t seed);

/// Nonvanishing of the symmetric product of nonzero operators, including the
/// adversarial split where one factor annihilates everything the other moves.
VerifyReport verify_nonzero_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Operators with orthogonal ranges: ||prod (.)|| <= prod ||A_i|| / sqrt(n!),
/// and for the kernel/range-split hypotheses the two-sided bound
/// [1/2, 1/sqrt(2)] * ||A|| ||B||, with both sharpness witnesses.
VerifyReport verify_orthogonal_ranges(int n, int trials, std::uint64_t seed);

/// Diagonal pairs: (sqrt(2)-1) ||L|| ||M|| <= ||L (.) M|| <= ||L|| ||M||,
/// sharp at the recorded witness pairs.
VerifyReport verify_diag_norm_bound(int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Shift (.) diagonal kernel machinery
// ---------------------------------------------------------------------------

/// Coefficients a(k, l), 0 <= k <= l <= K, of a candidate kernel vector
/// 2 sum a_kl e_k (.) e_l for S (.) M with M = diag(mu).  Built by the
/// four-step scheme: row zero vanishes, odd column offsets vanish, the
/// (diagonal, second-superdiagonal) pairs are chosen orthogonal to
/// (conj mu_k, conj mu_{k+1}) with magnitude c/(k+1)^{3/2}, and the remaining
/// even offsets follow the alternating ratio recursion.
///
/// When some mu_i vanishes the exact kernel vector e_i (.) e_i is returned
/// instead (trivial = true).  When every mu_i is nonzero no square-summable
/// kernel vector exists at all -- the coefficient equations force every entry
/// to zero row by row -- so the scheme necessarily leaves the equations
/// coupling row one into the zero row unsatisfied; those residuals are
/// reported separately by check_kernel_equations.
struct KernelCoefficients {
  int truncation = 0;                 // K
  std::vector<Complex> mu;            // mu_0 .. mu_{K+1}
  double bound_constant = 0.0;        // sqrt(max |mu| / min |mu|) on the used prefix
  double floor_delta = 0.0;           // min |mu|
  double scale_c = 0.5;
  bool trivial = false;
  int trivial_index = -1;
  std::vector<Complex> coefficients;  // triangular, row-major

  Complex a(int k, int l) const;
  std::size_t tri_index(int k, int l) const;
};

KernelCoefficients kernel_vector_SM(std::span<const Complex> mu, int truncation, double c = 0.5);

/// Residuals of the coefficient equations of (S (.) M) v = 0 over the stored
/// triangle, split into the equations the construction controls and the
/// row-one coupling equations it provably cannot satisfy, plus the cube-decay
/// inequality |a(k, k+2r)|^2 < C^2 / (k+r)^3 checked strictly entrywise.
struct KernelEquationReport {
  double max_residual = 0.0;       // controlled equations
  double max_gap_residual = 0.0;   // row-one couplings at even columns
  int equations_checked = 0;
  bool decay_bound_ok = true;
  double worst_decay_ratio = 0.0;  // max |a|^2 (k+r)^3 / C^2
};

KernelEquationReport check_kernel_equations(const KernelCoefficients& kc);

/// Forward-substitutes the eigenvalue equations of (S (.) M) v = lambda v for
/// lambda != 0 and confirms every coefficient is forced to zero.
struct PointSpectrumReport {
  bool all_forced_zero = false;
  double max_coefficient = 0.0;
  int coefficients_checked = 0;
};

PointSpectrumReport verify_point_spectrum_SM(std::span<const Complex> mu, Complex lambda,
                                             int truncation);

/// Truncated geometric eigenvector of S* (.) M at lambda with |lambda| <
/// |mu_0| / 2 (or the exact kernel vector at lambda = 0).  The residual is
/// measured by applying the dense pair average and must stay below the
/// reported geometric tail bound.
struct BackshiftEigenvector {
  std::vector<Complex> coefficients;  // over e_0 (.) e_j, j = 0..K
  Complex lambda;
  double residual = 0.0;
  double tail_bound = 0.0;
};

BackshiftEigenvector backshift_eigenvector(std::span<const Complex> mu, Complex lambda,
                                           int truncation);

// ---------------------------------------------------------------------------
// Degree-graded blocks of (S (x) S* + S* (x) S) / 2
// ---------------------------------------------------------------------------

/// Dense compression of the pair average of the shift and its adjoint to the
/// degree-k monomial subspace (flavor selects the symmetric or antisymmetric
/// part), in the same basis order as the closed-form blocks.
ComplexMatrix degree_block_dense(int k, Flavor flavor);

/// Same restriction on the full degree-k subspace, reproducing build_Ak.
ComplexMatrix degree_block_full(int k);

/// Eigenvalue multisets of the symmetric and antisymmetric products of the
/// shift with its adjoint, assembled blockwise up to degree K from the cosine
/// closed forms and cross-checked against hermitian_eigen of the builders.
std::pair<SpectrumReport, SpectrumReport> shift_block_spectra(int max_degree,
                                                              int dense_check_degree = 25);

// ---------------------------------------------------------------------------
// Conjecture exploration
// ---------------------------------------------------------------------------

enum class ConjectureKind { vector_lower_bound, operator_lower_bound };

/// Samples the n-factor lower-bound ratios.  The proven cases n = 2 and n = 3
/// are asserted; for n >= 4 the minimum observed ratio is recorded and any
/// draw below 1/sqrt(n!) is flagged as a counterexample candidate without
/// failing the report.
VerifyReport conjecture_sampler(ConjectureKind kind, int n, int d, int trials,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------
// Suite registry
// ---------------------------------------------------------------------------

struct SuiteOptions {
  int trials = -1;  // -1 selects the per-suite default
  std::uint64_t seed = 1;
  int truncation = -1;
  double tol = -1.0;
};

std::vector<std::string> registered_suites();
bool is_registered_suite(const std::string& id);

/// Runs one registered suite; throws std::out_of_range for unknown ids.
VerifyReport run_suite(const std::string& id, const SuiteOptions& options = {});

}  // namespace symtensor

#endif  // SYMTENSOR_THEOREMS_HPP
