#include <cmath>
#include <sstream>

#include "symtensor/rng.hpp"
#include "symtensor/theorems.hpp"

namespace symtensor {

void VerifyReport::record(bool ok, double margin, const std::string& witness) {
  ++trials;
  worst_margin = std::min(worst_margin, margin);
  if (!ok) {
    ++failures;
    if (witnesses.size() < 32) witnesses.push_back(witness);
  }
}

void VerifyReport::observe(std::string name, double value) {
  observations.emplace_back(std::move(name), value);
}

namespace {

std::string describe(const char* what, int trial, double margin) {
  std::ostringstream os;
  os << what << " trial=" << trial << " margin=" << margin;
  return os.str();
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

VerifyReport verify_norm_lower_2(const ComplexMatrix& a, const ComplexMatrix& b, int trials,
                                 std::uint64_t seed) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("verify_norm_lower_2 needs equal square factors");
  }
  VerifyReport report;
  report.suite = "norm-lower-2";
  report.seed = seed;
  report.tolerance = 1e-10;
  Rng rng(seed);

  const double product_norm = operator_norm(sym_product(a, b)).value;
  const double tol = report.tolerance * std::max(1.0, product_norm);
  const std::size_t d = a.rows();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (int t = 0; t < trials; ++t) {
    const std::vector<Complex> x = rng.unit_vector(d);
    const double lhs = norm2(a.apply(x)) * norm2(b.apply(x)) * inv_sqrt2;
    const double margin = product_norm + tol - lhs;
    report.record(margin >= 0.0, margin, describe("unit-vector bound", t, margin));
  }

  // Sharpness witness: rank-one pair whose product has the single entry
  // 1/sqrt(2), attained by the first coordinate vector.
  const ComplexMatrix wa{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix wb{{0.0, 0.0}, {1.0, 0.0}};
  const double witness_norm = operator_norm(sym_product(wa, wb)).value;
  const double dev = std::abs(witness_norm - inv_sqrt2);
  report.record(dev <= 1e-12, 1e-12 - dev, "witness pair norm != 1/sqrt(2)");
  report.observe("witness_norm", witness_norm);
  report.observe("product_norm", product_norm);
  return report;
}

VerifyReport verify_nonzero_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.max_abs() == 0.0 || b.max_abs() == 0.0) {
    throw std::invalid_argument("verify_nonzero_product needs nonzero factors");
  }
  VerifyReport report;
  report.suite = "nonzero-product";
  report.tolerance = 1e-12;

  const double norm_ab = operator_norm(sym_product(a, b)).value;
  report.record(norm_ab > 0.0, norm_ab, "product of nonzero factors vanished");
  report.observe("norm", norm_ab);

  // Adversarial split: each factor annihilates everything the other moves.
  const ComplexMatrix p{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix q{{0.0, 0.0}, {0.0, 1.0}};
  const double disjoint_norm = operator_norm(sym_product(p, q)).value;
  report.record(std::abs(disjoint_norm - 0.5) <= 1e-12, 1e-12 - std::abs(disjoint_norm - 0.5),
                "disjoint rank-one pair norm != 1/2");

  // Rank-one square: ||A (.) A|| = ||A||^2, against the wedge contrast
  // P /\ P = 0.
  const double sq = operator_norm(sym_product(p, p)).value;
  report.record(std::abs(sq - 1.0) <= 1e-12, 1e-12 - std::abs(sq - 1.0),
                "rank-one projection square norm != 1");
  const double wedge = operator_norm(asym_product(p, p)).value;
  report.record(wedge <= 1e-13, 1e-13 - wedge, "rank-one wedge square did not vanish");
  return report;
}

VerifyReport verify_orthogonal_ranges(int n, int trials, std::uint64_t seed) {
  if (n < 2 || n > 3) throw std::invalid_argument("orthogonal-range sampling supports n in {2, 3}");
  VerifyReport report;
  report.suite = "orthogonal-ranges";
  report.seed = seed;
  report.tolerance = 1e-10;
  Rng rng(seed);

  const int d = 6;
  const int block = d / n;
  const double bound_factor = 1.0 / std::sqrt(factorial_d(n));

  for (int t = 0; t < trials; ++t) {
    std::vector<ComplexMatrix> factors;
    double norm_product = 1.0;
    for (int i = 0; i < n; ++i) {
      ComplexMatrix g = rng.gaussian_matrix(d, d);
      ComplexMatrix masked(d, d);
      for (int r = i * block; r < (i + 1) * block; ++r)
        for (int c = 0; c < d; ++c) masked(r, c) = g(r, c);
      norm_product *= operator_norm(masked).value;
      factors.push_back(std::move(masked));
    }
    const double lhs = operator_norm(sym_product(factors)).value;
    const double tol = report.tolerance * std::max(1.0, norm_product);
    const double margin = norm_product * bound_factor + tol - lhs;
    report.record(margin >= 0.0, margin, describe("range-orthogonal bound", t, margin));
  }

  if (n == 2) {
    // Kernel/range split hypotheses: two-sided bound.
    for (int t = 0; t < trials; ++t) {
      ComplexMatrix a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      ComplexMatrix b(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      const ComplexMatrix ga = rng.gaussian_matrix(d, d);
      const ComplexMatrix gb = rng.gaussian_matrix(d, d);
      for (int r = 0; r < block; ++r)
        for (int c = 0; c < block; ++c) {
          a(r, c) = ga(r, c);
          b(r + block, c + block) = gb(r, c);
        }
      const double na = operator_norm(a).value;
      const double nb = operator_norm(b).value;
      const double lhs = operator_norm(sym_product(a, b)).value;
      const double tol = report.tolerance * std::max(1.0, na * nb);
      const double lower = 0.5 * na * nb - tol;
      const double upper = na * nb / std::sqrt(2.0) + tol;
      const double margin = std::min(lhs - lower, upper - lhs);
      report.record(margin >= 0.0, margin, describe("split two-sided bound", t, margin));
    }

    const ComplexMatrix wa{{1.0, 0.0}, {0.0, 0.0}};
    const ComplexMatrix wb{{0.0, 0.0}, {0.0, 1.0}};
    const double half = operator_norm(sym_product(wa, wb)).value;
    report.record(std::abs(half - 0.5) <= 1e-12, 1e-12 - std::abs(half - 0.5),
                  "split witness norm != 1/2");
    const ComplexMatrix ua{{1.0, 0.0}, {0.0, 0.0}};
    const ComplexMatrix ub{{0.0, 0.0}, {1.0, 0.0}};
    const double sharp = operator_norm(sym_product(ua, ub)).value;
    report.record(std::abs(sharp - 1.0 / std::sqrt(2.0)) <= 1e-12,
                  1e-12 - std::abs(sharp - 1.0 / std::sqrt(2.0)),
                  "upper-bound witness norm != 1/sqrt(2)");
  }
  return report;
}

VerifyReport verify_diag_norm_bound(int trials, std::uint64_t seed) {
  VerifyReport report;
  report.suite = "diag-norm-bound";
  report.seed = seed;
  report.tolerance = 1e-10;
  Rng rng(seed);
  const double sqrt2m1 = std::sqrt(2.0) - 1.0;

  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(15));  // N <= 16
    std::vector<Complex> l(n), m(n);
    double nl = 0.0, nm = 0.0;
    for (int i = 0; i < n; ++i) {
      l[i] = rng.uniform(0.0, 1.0) * rng.unit_phase();
      m[i] = rng.uniform(0.0, 1.0) * rng.unit_phase();
      nl = std::max(nl, std::abs(l[i]));
      nm = std::max(nm, std::abs(m[i]));
    }
    if (nl == 0.0 || nm == 0.0) continue;
    double product_norm = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        product_norm = std::max(product_norm, 0.5 * std::abs(l[i] * m[j] + l[j] * m[i]));

    const double tol = report.tolerance * std::max(1.0, nl * nm);
    const double margin = std::min(product_norm - (sqrt2m1 * nl * nm - tol),
                                   nl * nm + tol - product_norm);
    report.record(margin >= 0.0, margin, describe("diagonal two-sided bound", t, margin));

    if (t % 64 == 0 && n <= 8) {
      // Dense cross-check of the diagonal norm formula.
      const ComplexMatrix lm = ComplexMatrix::diagonal(l);
      const ComplexMatrix mm = ComplexMatrix::diagonal(m);
      const double dense = operator_norm(sym_product(lm, mm)).value;
      const double dev = std::abs(dense - product_norm);
      report.record(dev <= 1e-11, 1e-11 - dev, describe("dense diagonal norm", t, dev));
    }
  }

  const Complex lw[] = {Complex(1.0), Complex(std::sqrt(2.0) - 1.0)};
  const Complex mw[] = {Complex(1.0 - std::sqrt(2.0)), Complex(1.0)};
  const double witness =
      operator_norm(sym_product(ComplexMatrix::diagonal(lw), ComplexMatrix::diagonal(mw))).value;
  report.record(std::abs(witness - sqrt2m1) <= 1e-12, 1e-12 - std::abs(witness - sqrt2m1),
                "lower-bound witness pair norm != sqrt(2)-1");
  report.observe("witness_lower", witness);

  const ComplexMatrix id = ComplexMatrix::identity(2);
  const double witness_upper = operator_norm(sym_product(id, id)).value;
  report.record(std::abs(witness_upper - 1.0) <= 1e-12, 1e-12 - std::abs(witness_upper - 1.0),
                "upper-bound witness norm != 1");
  return report;
}

VerifyReport conjecture_sampler(ConjectureKind kind, int n, int d, int trials,
                                std::uint64_t seed) {
  if (n < 2 || n > 5) throw std::invalid_argument("conjecture sampling supports 2 <= n <= 5");
  if (d < 2) throw std::invalid_argument("conjecture sampling needs dimension >= 2");
  tensor_power_dim(d, n);

  VerifyReport report;
  report.suite = kind == ConjectureKind::vector_lower_bound ? "vector-lower-bound"
                                                            : "operator-lower-bound";
  report.seed = seed;
  report.tolerance = 1e-10;
  Rng rng(seed);

  const double conjectured = 1.0 / std::sqrt(factorial_d(n));
  const bool proven = n <= 3;
  double min_ratio = std::numeric_limits<double>::infinity();

  if (kind == ConjectureKind::vector_lower_bound) {
    for (int t = 0; t < trials; ++t) {
      std::vector<std::vector<Complex>> xs;
      double norm_product = 1.0;
      for (int i = 0; i < n; ++i) {
        xs.push_back(rng.complex_normal_vector(static_cast<std::size_t>(d)));
        norm_product *= norm2(xs.back());
      }
      if (norm_product == 0.0) continue;
      const double ratio = norm2(sym_tensor_of_vectors(xs)) / norm_product;
      min_ratio = std::min(min_ratio, ratio);
      if (proven) {
        const double margin = ratio - conjectured + report.tolerance;
        report.record(margin >= 0.0, margin, describe("vector lower bound", t, margin));
      } else {
        report.record(true, ratio - conjectured, "");
        if (ratio < conjectured - report.tolerance) {
          report.witnesses.push_back(describe("counterexample candidate", t, ratio - conjectured));
        }
      }
    }
    if (d >= n) {
      // Sharpness: pairwise orthonormal factors realize 1/sqrt(n!) exactly,
      // equal unit factors realize 1.
      std::vector<std::vector<Complex>> basis;
      for (int i = 0; i < n; ++i) {
        std::vector<Complex> e(static_cast<std::size_t>(d), Complex(0.0));
        e[static_cast<std::size_t>(i)] = 1.0;
        basis.push_back(std::move(e));
      }
      const double sharp = norm2(sym_tensor_of_vectors(basis));
      report.record(std::abs(sharp - conjectured) <= 1e-12, 1e-12 - std::abs(sharp - conjectured),
                    "orthonormal witness ratio != 1/sqrt(n!)");
      std::vector<std::vector<Complex>> equal(static_cast<std::size_t>(n), basis.front());
      const double top = norm2(sym_tensor_of_vectors(equal));
      report.record(std::abs(top - 1.0) <= 1e-12, 1e-12 - std::abs(top - 1.0),
                    "equal-vector witness ratio != 1");
    }
  } else {
    const int probes = 24;
    for (int t = 0; t < trials; ++t) {
      std::vector<ComplexMatrix> as;
      for (int i = 0; i < n; ++i) as.push_back(rng.gaussian_matrix(d, d));
      const double rhs = operator_norm(sym_product(as)).value;
      double lhs = 0.0;
      for (int p = 0; p < probes; ++p) {
        const std::vector<Complex> x = rng.unit_vector(static_cast<std::size_t>(d));
        double prod = 1.0;
        for (const auto& a : as) prod *= norm2(a.apply(x));
        lhs = std::max(lhs, prod * conjectured);
      }
      if (rhs > 0.0) min_ratio = std::min(min_ratio, lhs / rhs);
      const double tol = report.tolerance * std::max(1.0, rhs);
      const double margin = rhs + tol - lhs;
      if (proven) {
        report.record(margin >= 0.0, margin, describe("operator lower bound", t, margin));
      } else {
        report.record(true, margin, "");
        if (margin < 0.0) {
          report.witnesses.push_back(describe("counterexample candidate", t, margin));
        }
      }
    }
  }

  if (trials > 0 && std::isfinite(min_ratio)) report.observe("min_ratio", min_ratio);
  report.observe("conjectured_bound", conjectured);
  report.observe("asserted", proven ? 1.0 : 0.0);
  return report;
}

}  // namespace symtensor
