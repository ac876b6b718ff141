#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "symtensor/operator_model.hpp"
#include "symtensor/rng.hpp"
#include "symtensor/theorems.hpp"

namespace symtensor {
namespace {

struct SuiteContext {
  int trials;
  std::uint64_t seed;
  int truncation;
  double tol;
};

std::string fmt(const char* what, int trial, double value) {
  std::ostringstream os;
  os << what << " trial=" << trial << " value=" << value;
  return os.str();
}

ComplexMatrix random_upper_triangular(Rng& rng, int d) {
  ComplexMatrix t(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) t(i, j) = rng.complex_normal();
  return t;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  ComplexMatrix h = a + a.adjoint();
  h *= Complex(0.5);
  return h;
}

double normality_defect(const ComplexMatrix& t) {
  return max_abs_diff(t * t.adjoint(), t.adjoint() * t);
}

std::vector<Complex> pair_half_sums(const std::vector<Complex>& eigs) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < eigs.size(); ++i)
    for (std::size_t j = i; j < eigs.size(); ++j) out.push_back(0.5 * (eigs[i] + eigs[j]));
  return out;
}

std::vector<Complex> pair_products(const std::vector<Complex>& eigs) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < eigs.size(); ++i)
    for (std::size_t j = i; j < eigs.size(); ++j) out.push_back(eigs[i] * eigs[j]);
  return out;
}

// Set-style comparison (multiplicities ignored) within tol, both directions.
double set_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const auto& x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : b) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  for (const auto& y : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& x : a) best = std::min(best, std::abs(y - x));
    worst = std::max(worst, best);
  }
  return worst;
}

// ---------------------------------------------------------------------------

VerifyReport suite_perm_algebra(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-2.2";
  report.seed = ctx.seed;
  report.tolerance = 1e-14;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(3));
    const int d = 2;
    const Permutation p = rng.permutation(n);
    const Permutation q = rng.permutation(n);
    const ComplexMatrix mp = permutation_matrix(p, d);
    const ComplexMatrix mq = permutation_matrix(q, d);
    const double hom = max_abs_diff(permutation_matrix(compose(p, q), d), mp * mq);
    report.record(hom <= report.tolerance, report.tolerance - hom, fmt("composition", t, hom));
    const double adj = max_abs_diff(mp.adjoint(), permutation_matrix(inverse(p), d));
    report.record(adj <= report.tolerance, report.tolerance - adj, fmt("adjoint-inverse", t, adj));
    const double uni = max_abs_diff(mp.adjoint() * mp, ComplexMatrix::identity(mp.rows()));
    report.record(uni <= report.tolerance, report.tolerance - uni, fmt("unitarity", t, uni));
  }
  return report;
}

VerifyReport suite_projections(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-2.4";
  report.seed = ctx.seed;
  report.tolerance = 1e-13;
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 3; ++n) {
      const ComplexMatrix s = symmetrizer(d, n);
      const ComplexMatrix a = antisymmetrizer(d, n);
      const double si = max_abs_diff(s * s, s);
      const double sh = max_abs_diff(s, s.adjoint());
      const double ai = max_abs_diff(a * a, a);
      const double ah = max_abs_diff(a, a.adjoint());
      const double worst = std::max({si, sh, ai, ah});
      report.record(worst <= report.tolerance, report.tolerance - worst,
                    fmt("idempotent-hermitian", d * 10 + n, worst));

      const double rank_s = s.trace().real();
      const double rank_a = a.trace().real();
      const double expect_s = static_cast<double>(binomial(d + n - 1, n));
      const double expect_a = static_cast<double>(binomial(d, n));
      const double rank_dev = std::max(std::abs(rank_s - expect_s), std::abs(rank_a - expect_a));
      report.record(rank_dev <= 1e-10, 1e-10 - rank_dev, fmt("projector rank", d * 10 + n, rank_dev));
    }
  }
  const double cross = (symmetrizer(3, 3) * antisymmetrizer(3, 3)).max_abs();
  report.record(cross <= report.tolerance, report.tolerance - cross, fmt("S3*A3", 0, cross));
  return report;
}

VerifyReport suite_embeddings(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-2.5";
  report.seed = ctx.seed;
  report.tolerance = 1e-14;
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 3; ++n) {
      const ComplexMatrix qs = embed_sym(d, n);
      const ComplexMatrix qa = embed_asym(d, n);
      const double iso_s = max_abs_diff(qs.adjoint() * qs, ComplexMatrix::identity(qs.cols()));
      const double proj_s = max_abs_diff(qs * qs.adjoint(), symmetrizer(d, n));
      report.record(std::max(iso_s, proj_s) <= report.tolerance,
                    report.tolerance - std::max(iso_s, proj_s),
                    fmt("sym embed", d * 10 + n, std::max(iso_s, proj_s)));
      if (qa.cols() > 0) {
        const double iso_a = max_abs_diff(qa.adjoint() * qa, ComplexMatrix::identity(qa.cols()));
        const double proj_a = max_abs_diff(qa * qa.adjoint(), antisymmetrizer(d, n));
        report.record(std::max(iso_a, proj_a) <= report.tolerance,
                      report.tolerance - std::max(iso_a, proj_a),
                      fmt("asym embed", d * 10 + n, std::max(iso_a, proj_a)));
      }
    }
  }
  return report;
}

VerifyReport suite_two_sum(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-2.6";
  report.seed = ctx.seed;
  report.tolerance = 1e-14;
  for (int d = 2; d <= 5; ++d) {
    const double dev =
        max_abs_diff(symmetrizer(d, 2) + antisymmetrizer(d, 2), ComplexMatrix::identity(d * d));
    report.record(dev <= report.tolerance, report.tolerance - dev, fmt("S2+A2=I", d, dev));
  }
  return report;
}

VerifyReport suite_square_sum(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "lemma-2.9";
  report.seed = ctx.seed;
  report.tolerance = 1e-12;
  Rng rng(ctx.seed);
  const int d = 8;
  const ComplexMatrix s2 = symmetrizer(d, 2);
  for (int t = 0; t < ctx.trials; ++t) {
    std::vector<Complex> x(static_cast<std::size_t>(d) * d, Complex(0.0));
    double coeff_sq = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        const Complex c = rng.complex_normal();
        coeff_sq += std::norm(c);
        // a_ij e_i (.) e_j placed in product coordinates.
        x[static_cast<std::size_t>(i) * d + j] += 0.5 * c;
        x[static_cast<std::size_t>(j) * d + i] += 0.5 * c;
        if (i == j) {
          x[static_cast<std::size_t>(i) * d + j] = c;
        }
      }
    }
    const double lhs = norm2(s2.apply(x));
    const double margin = std::sqrt(coeff_sq) + report.tolerance - lhs;
    report.record(margin >= 0.0, margin, fmt("coefficient norm bound", t, margin));
  }
  return report;
}

VerifyReport suite_vector_bounds(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "lemma-2.10";
  report.seed = ctx.seed;
  report.tolerance = 1e-13;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(7));
    const std::vector<Complex> u = rng.complex_normal_vector(static_cast<std::size_t>(d));
    const std::vector<Complex> v = rng.complex_normal_vector(static_cast<std::size_t>(d));
    const double nu = norm2(u), nv = norm2(v);
    if (nu == 0.0 || nv == 0.0) continue;
    const double product = norm2(sym_tensor_of_vectors({u, v}));
    const double scale = std::max(1.0, nu * nv);
    const double tol = report.tolerance * scale;
    const double margin =
        std::min(product - (nu * nv / std::sqrt(2.0) - tol), nu * nv + tol - product);
    report.record(margin >= 0.0, margin, fmt("two-sided bound", t, margin));

    const double identity_dev = std::abs(
        product * product - 0.5 * (nu * nu * nv * nv + std::norm(inner(u, v))));
    report.record(identity_dev <= report.tolerance * scale * scale,
                  report.tolerance * scale * scale - identity_dev,
                  fmt("norm-squared identity", t, identity_dev));
  }
  // Sharpness at orthogonal and at equal factors.
  const std::vector<Complex> e0 = {1.0, 0.0};
  const std::vector<Complex> e1 = {0.0, 1.0};
  const double ortho = norm2(sym_tensor_of_vectors({e0, e1}));
  report.record(std::abs(ortho - 1.0 / std::sqrt(2.0)) <= 1e-14,
                1e-14 - std::abs(ortho - 1.0 / std::sqrt(2.0)), "orthogonal sharpness");
  const double equal = norm2(sym_tensor_of_vectors({e0, e0}));
  report.record(std::abs(equal - 1.0) <= 1e-14, 1e-14 - std::abs(equal - 1.0), "equal sharpness");
  return report;
}

VerifyReport suite_invariance(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-3.1";
  report.seed = ctx.seed;
  report.tolerance = 1e-12;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(2));
    const int d = 3;
    std::vector<ComplexMatrix> as;
    for (int i = 0; i < n; ++i) as.push_back(rng.gaussian_matrix(d, d));
    const ComplexMatrix avg = averaged_tensor(as);
    const ComplexMatrix s = symmetrizer(d, n);
    const double scale = std::max(1.0, avg.max_abs());
    const double commute = max_abs_diff(s * avg, avg * s);
    report.record(commute <= report.tolerance * scale, report.tolerance * scale - commute,
                  fmt("projector commutes", t, commute));
    const ComplexMatrix qs = embed_sym(d, n);
    const ComplexMatrix qa = embed_asym(d, n);
    if (qa.cols() > 0) {
      const double cross = (qs.adjoint() * avg * qa).max_abs();
      report.record(cross <= report.tolerance * scale, report.tolerance * scale - cross,
                    fmt("cross block", t, cross));
    }
  }
  return report;
}

VerifyReport suite_norm_submult(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-3.3";
  report.seed = ctx.seed;
  report.tolerance = 1e-9;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(2));
    const int d = 2 + static_cast<int>(rng.integer(3));
    std::vector<ComplexMatrix> as;
    double bound = 1.0;
    for (int i = 0; i < n; ++i) {
      as.push_back(rng.gaussian_matrix(d, d));
      bound *= operator_norm(as.back()).value;
    }
    const double lhs = operator_norm(sym_product(as)).value;
    const double tol = 1e-10 * std::max(1.0, bound);
    report.record(lhs <= bound + tol, bound + tol - lhs, fmt("submultiplicative", t, lhs - bound));

    // Power law on the first factor.
    std::vector<ComplexMatrix> powers(static_cast<std::size_t>(n), as.front());
    const double power_norm = operator_norm(sym_product(powers)).value;
    const double base = operator_norm(as.front()).value;
    const double expect = std::pow(base, n);
    const double dev = std::abs(power_norm - expect) / std::max(1.0, expect);
    report.record(dev <= report.tolerance, report.tolerance - dev, fmt("power law", t, dev));
  }
  return report;
}

VerifyReport suite_product_rule(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "lemma-4.1";
  report.seed = ctx.seed;
  report.tolerance = 1e-12;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 3;
    const ComplexMatrix a = rng.gaussian_matrix(d, d);
    const ComplexMatrix b = rng.gaussian_matrix(d, d);
    const ComplexMatrix c = rng.gaussian_matrix(d, d);
    const ComplexMatrix e = rng.gaussian_matrix(d, d);
    const ComplexMatrix lhs = sym_product(a, b) * sym_product(c, e);
    ComplexMatrix rhs = sym_product(a * c, b * e) + sym_product(a * e, b * c);
    rhs *= Complex(0.5);
    const double scale = std::max(1.0, rhs.max_abs());
    const double dev = max_abs_diff(lhs, rhs);
    report.record(dev <= report.tolerance * scale, report.tolerance * scale - dev,
                  fmt("product rule", t, dev));
  }
  return report;
}

VerifyReport suite_common_invariant(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-4.3";
  report.seed = ctx.seed;
  report.tolerance = 1e-11;
  Rng rng(ctx.seed);
  const int d = 4;
  const int m = 2;
  for (int t = 0; t < ctx.trials; ++t) {
    const ComplexMatrix u = rng.unitary(d);
    const ComplexMatrix a = u * random_upper_triangular(rng, d) * u.adjoint();
    const ComplexMatrix b = u * random_upper_triangular(rng, d) * u.adjoint();
    // V = span of the first m columns of u is invariant for both factors.
    std::vector<std::vector<Complex>> vs;
    for (int i = 0; i < m; ++i) vs.push_back(u.column(static_cast<std::size_t>(i)));

    const std::size_t sym_dim = static_cast<std::size_t>(binomial(d + 1, 2));
    std::vector<std::vector<Complex>> span;
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        std::vector<Complex> col = sym_tensor_of_vectors({vs[static_cast<std::size_t>(i)],
                                                          vs[static_cast<std::size_t>(j)]});
        for (const auto& prev : span) {
          const Complex overlap = inner(col, prev);
          for (std::size_t r = 0; r < col.size(); ++r) col[r] -= overlap * prev[r];
        }
        const double nc = norm2(col);
        if (nc > 1e-12) {
          for (auto& x : col) x /= nc;
          span.push_back(std::move(col));
        }
      }
    }
    const ComplexMatrix product = sym_product(a, b);
    // Residual of mapping the embedded subspace outside itself.
    double worst = 0.0;
    for (const auto& basis_vec : span) {
      std::vector<Complex> image = product.apply(basis_vec);
      for (const auto& prev : span) {
        const Complex overlap = inner(image, prev);
        for (std::size_t r = 0; r < image.size(); ++r) image[r] -= overlap * prev[r];
      }
      worst = std::max(worst, norm2(image));
    }
    const double scale = std::max(1.0, product.max_abs());
    report.record(worst <= report.tolerance * scale, report.tolerance * scale - worst,
                  fmt("invariant subspace", t, worst));
    (void)sym_dim;
  }
  return report;
}

VerifyReport suite_adjoint(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-4.4";
  report.seed = ctx.seed;
  report.tolerance = 1e-13;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(2));
    const int d = 3;
    std::vector<ComplexMatrix> as, adjoints;
    for (int i = 0; i < n; ++i) {
      as.push_back(rng.gaussian_matrix(d, d));
      adjoints.push_back(as.back().adjoint());
    }
    const double scale = std::max(1.0, sym_product(as).max_abs());
    const double dev_sym = max_abs_diff(sym_product(as).adjoint(), sym_product(adjoints));
    report.record(dev_sym <= report.tolerance * scale, report.tolerance * scale - dev_sym,
                  fmt("sym adjoint", t, dev_sym));
    if (n <= 3) {
      const double dev_asym = max_abs_diff(asym_product(as).adjoint(), asym_product(adjoints));
      report.record(dev_asym <= report.tolerance * scale, report.tolerance * scale - dev_asym,
                    fmt("wedge adjoint", t, dev_asym));
    }
  }
  return report;
}

VerifyReport suite_closure(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-4.6";
  report.seed = ctx.seed;
  report.tolerance = 1e-11;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 3;
    // (a) selfadjoint factors give a selfadjoint product.
    const ComplexMatrix ha = hermitian_part(rng.gaussian_matrix(d, d));
    const ComplexMatrix hb = hermitian_part(rng.gaussian_matrix(d, d));
    const ComplexMatrix sp = sym_product(ha, hb);
    const double sa_dev = max_abs_diff(sp, sp.adjoint());
    report.record(sa_dev <= 1e-13 * std::max(1.0, sp.max_abs()),
                  1e-13 * std::max(1.0, sp.max_abs()) - sa_dev, fmt("selfadjoint", t, sa_dev));

    // (b) commuting normal factors give a normal product.
    const ComplexMatrix u = rng.unitary(d);
    const ComplexMatrix na =
        u * ComplexMatrix::diagonal(rng.complex_normal_vector(d)) * u.adjoint();
    const ComplexMatrix nb =
        u * ComplexMatrix::diagonal(rng.complex_normal_vector(d)) * u.adjoint();
    const ComplexMatrix np = sym_product(na, nb);
    const double defect = normality_defect(np);
    const double scale = std::max(1.0, np.max_abs() * np.max_abs());
    report.record(defect <= report.tolerance * scale, report.tolerance * scale - defect,
                  fmt("commuting normal", t, defect));

    // (c) unitary powers stay unitary.
    const ComplexMatrix uu = sym_product(u, u);
    const double unit_dev = max_abs_diff(uu.adjoint() * uu, ComplexMatrix::identity(uu.rows()));
    report.record(unit_dev <= 1e-12, 1e-12 - unit_dev, fmt("unitary power", t, unit_dev));
  }

  // Commutativity is necessary: this normal, noncommuting pair produces a
  // product with a visible normality defect and the recorded matrix.
  const Complex i(0.0, 1.0);
  const ComplexMatrix ga{{1.0, i}, {i, 1.0}};
  const ComplexMatrix gb{{1.0, -1.0}, {1.0, 1.0}};
  const ComplexMatrix gp = sym_product(ga, gb);
  const double gallery_defect = normality_defect(gp);
  report.record(gallery_defect > 0.1, gallery_defect - 0.1, "normal noncommuting witness");
  report.observe("noncommuting_defect", gallery_defect);
  const Complex s2 = 1.0 / std::sqrt(2.0);
  const ComplexMatrix gp_expected{{1.0, -(1.0 - i) * s2, -i},
                                  {(1.0 + i) * s2, 1.0, -(1.0 - i) * s2},
                                  {i, (1.0 + i) * s2, 1.0}};
  const double gp_dev = max_abs_diff(gp, gp_expected);
  report.record(gp_dev <= 1e-12, 1e-12 - gp_dev, "noncommuting witness matrix");

  // Unitarity needs equal factors: this unitary pair has a singular product.
  const ComplexMatrix ua = ComplexMatrix::identity(2);
  const ComplexMatrix ub{{0.0, -1.0}, {1.0, 0.0}};
  const ComplexMatrix up = sym_product(ua, ub);
  const ComplexMatrix up_expected{{0.0, -s2, 0.0}, {s2, 0.0, -s2}, {0.0, s2, 0.0}};
  const double up_dev = max_abs_diff(up, up_expected);
  report.record(up_dev <= 1e-12, 1e-12 - up_dev, "unitary pair witness matrix");
  const double nonunitary = max_abs_diff(up.adjoint() * up, ComplexMatrix::identity(3));
  report.record(nonunitary > 0.1, nonunitary - 0.1, "unitary pair stays unitary unexpectedly");
  report.observe("unitary_pair_defect", nonunitary);
  return report;
}

VerifyReport suite_projection_product(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-4.9";
  report.seed = ctx.seed;
  report.tolerance = 1e-12;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 4;
    const ComplexMatrix w = rng.unitary(d);
    ComplexMatrix p(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    ComplexMatrix q(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    p(0, 0) = 1.0;
    p(1, 1) = 1.0;
    q(2, 2) = 1.0;
    q(3, 3) = 1.0;
    const ComplexMatrix pw = w * p * w.adjoint();
    const ComplexMatrix qw = w * q * w.adjoint();
    ComplexMatrix r = sym_product(pw, qw);
    r *= Complex(2.0);
    const double idem = max_abs_diff(r * r, r);
    report.record(idem <= report.tolerance, report.tolerance - idem, fmt("idempotent", t, idem));
    const double herm = max_abs_diff(r, r.adjoint());
    report.record(herm <= report.tolerance, report.tolerance - herm, fmt("selfadjoint", t, herm));
    const double nr = operator_norm(r).value;
    const double id_gap = max_abs_diff(r, ComplexMatrix::identity(r.rows()));
    report.record(nr > 0.5 && id_gap > 0.5, std::min(nr, id_gap) - 0.5,
                  fmt("proper projection", t, nr));
  }
  const ComplexMatrix p{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix q{{0.0, 0.0}, {0.0, 1.0}};
  ComplexMatrix r = sym_product(p, q);
  r *= Complex(2.0);
  const ComplexMatrix expected{{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}};
  const double dev = max_abs_diff(r, expected);
  report.record(dev <= 1e-14, 1e-14 - dev, "coordinate witness");
  return report;
}

VerifyReport suite_c_symmetry(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-4.10";
  report.seed = ctx.seed;
  report.tolerance = 1e-13;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 3;
    ComplexMatrix a = rng.gaussian_matrix(d, d);
    a += a.transpose();
    ComplexMatrix b = rng.gaussian_matrix(d, d);
    b += b.transpose();
    const ComplexMatrix product = sym_product(a, b);
    const double scale = std::max(1.0, product.max_abs());
    // C-symmetry under the componentwise conjugation is entrywise symmetry.
    const double dev = max_abs_diff(conjugate_operator(product), product);
    report.record(dev <= report.tolerance * scale, report.tolerance * scale - dev,
                  fmt("transpose symmetry", t, dev));
  }
  return report;
}

VerifyReport suite_norm_theorem(const SuiteContext& ctx) {
  Rng rng(ctx.seed);
  VerifyReport report = verify_norm_lower_2(rng.gaussian_matrix(4, 4), rng.gaussian_matrix(4, 4),
                                            ctx.trials / 3 + 1, ctx.seed + 1);
  report.suite = "thm-5.1";
  report.seed = ctx.seed;

  // (b) nonvanishing.
  const VerifyReport nz = verify_nonzero_product(rng.gaussian_matrix(3, 3), rng.gaussian_matrix(3, 3));
  report.trials += nz.trials;
  report.failures += nz.failures;
  report.worst_margin = std::min(report.worst_margin, nz.worst_margin);
  for (const auto& w : nz.witnesses) report.witnesses.push_back(w);

  // (c) spectral radius law with the Gelfand cross-check.
  for (int t = 0; t < ctx.trials / 4 + 4; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(3));
    const int n = 2 + static_cast<int>(rng.integer(2));
    const ComplexMatrix a = rng.gaussian_matrix(d, d);
    const double rho = spectral_radius(a);
    std::vector<ComplexMatrix> powers(static_cast<std::size_t>(n), a);
    const ComplexMatrix power_product = sym_product(powers);
    const double rho_power = spectral_radius(power_product);
    const double expect = std::pow(rho, n);
    const double rel = std::abs(rho_power - expect) / std::max(1e-12, expect);
    report.record(rel <= 1e-6, 1e-6 - rel, fmt("radius power law", t, rel));
    const double gelfand = gelfand_estimate(power_product, 4);
    report.record(rho_power <= gelfand + 1e-8 * std::max(1.0, gelfand),
                  gelfand + 1e-8 * std::max(1.0, gelfand) - rho_power,
                  fmt("gelfand upper bound", t, gelfand - rho_power));
  }
  return report;
}

VerifyReport suite_orthogonal_ranges(const SuiteContext& ctx) {
  VerifyReport two = verify_orthogonal_ranges(2, ctx.trials, ctx.seed);
  const VerifyReport three = verify_orthogonal_ranges(3, ctx.trials / 2 + 1, ctx.seed + 1);
  two.suite = "thm-5.2";
  two.trials += three.trials;
  two.failures += three.failures;
  two.worst_margin = std::min(two.worst_margin, three.worst_margin);
  for (const auto& w : three.witnesses) two.witnesses.push_back(w);
  return two;
}

VerifyReport suite_kron_spectrum(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-6.1";
  report.seed = ctx.seed;
  report.tolerance = 1e-7;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int da = 2 + static_cast<int>(rng.integer(4));
    const int db = 2 + static_cast<int>(rng.integer(4));
    const ComplexMatrix a = rng.gaussian_matrix(da, da);
    const ComplexMatrix b = rng.gaussian_matrix(db, db);
    const auto ea = general_eigen(a).eigenvalues;
    const auto eb = general_eigen(b).eigenvalues;
    std::vector<Complex> expected;
    for (const auto& x : ea)
      for (const auto& y : eb) expected.push_back(x * y);
    const auto actual = general_eigen(kron(a, b)).eigenvalues;
    double scale = 1.0;
    for (const auto& v : expected) scale = std::max(scale, std::abs(v));
    const MultisetMatch match = match_multisets(actual, expected, report.tolerance * scale);
    report.record(match.matched, report.tolerance * scale - match.max_deviation,
                  fmt("kron spectrum", t, match.max_deviation));
  }
  return report;
}

VerifyReport suite_spectrum_union(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-6.2";
  report.seed = ctx.seed;
  report.tolerance = 1e-8;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(3));
    const ComplexMatrix a = rng.gaussian_matrix(d, d);
    const ComplexMatrix b = rng.gaussian_matrix(d, d);
    const ComplexMatrix factors[] = {a, b};
    const auto whole = general_eigen(averaged_tensor(factors)).eigenvalues;
    const BlockDecomposition blocks = block_decompose(a, b);
    auto combined = general_eigen(blocks.sym).eigenvalues;
    for (const auto& v : general_eigen(blocks.asym).eigenvalues) combined.push_back(v);
    double scale = 1.0;
    for (const auto& v : whole) scale = std::max(scale, std::abs(v));
    const MultisetMatch match = match_multisets(whole, combined, report.tolerance * scale);
    report.record(match.matched, report.tolerance * scale - match.max_deviation,
                  fmt("union law", t, match.max_deviation));
    report.record(blocks.cross_residual <= 1e-12 * std::max(1.0, scale),
                  1e-12 * std::max(1.0, scale) - blocks.cross_residual,
                  fmt("cross residual", t, blocks.cross_residual));
  }
  return report;
}

VerifyReport suite_spectrum_same(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-6.3";
  report.seed = ctx.seed;
  report.tolerance = 1e-7;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
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
    const double tol_sum = report.tolerance * scale;
    const double tol_prod = report.tolerance * scale * scale;

    const ComplexMatrix id = ComplexMatrix::identity(d);
    const auto eigs_sum = general_eigen(sym_product(a, id)).eigenvalues;
    const MultisetMatch sum_match = multiset_contained(eigs_sum, pair_half_sums(eigs), tol_sum);
    report.record(sum_match.matched, tol_sum - sum_match.max_deviation,
                  fmt("half-sum containment", t, sum_match.max_deviation));

    const auto eigs_prod = general_eigen(sym_product(a, a)).eigenvalues;
    const MultisetMatch prod_match = multiset_contained(eigs_prod, pair_products(eigs), tol_prod);
    report.record(prod_match.matched, tol_prod - prod_match.max_deviation,
                  fmt("pair-product containment", t, prod_match.max_deviation));

    if (normal_case) {
      // Equality as sets for normal factors.
      const double h1 = set_hausdorff(eigs_sum, pair_half_sums(eigs));
      report.record(h1 <= tol_sum, tol_sum - h1, fmt("half-sum equality", t, h1));
      const double h2 = set_hausdorff(eigs_prod, pair_products(eigs));
      report.record(h2 <= tol_prod, tol_prod - h2, fmt("pair-product equality", t, h2));
    }
  }
  return report;
}

VerifyReport suite_diag_spectrum(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "eq-7.2";
  report.seed = ctx.seed;
  report.tolerance = 1e-10;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(7));
    const std::vector<Complex> l = rng.complex_normal_vector(static_cast<std::size_t>(n));
    const std::vector<Complex> m = rng.complex_normal_vector(static_cast<std::size_t>(n));
    const auto closed = diag_sym_spectrum(l, m, n);
    const auto dense = general_eigen(
        sym_product(ComplexMatrix::diagonal(l), ComplexMatrix::diagonal(m))).eigenvalues;
    double scale = 1.0;
    for (const auto& v : closed) scale = std::max(scale, std::abs(v));
    const MultisetMatch match = match_multisets(closed, dense, report.tolerance * scale);
    report.record(match.matched, report.tolerance * scale - match.max_deviation,
                  fmt("diagonal spectrum", t, match.max_deviation));
  }
  const Complex l2[] = {Complex(1.0), Complex(2.0)};
  const Complex m2[] = {Complex(3.0), Complex(4.0)};
  const auto fixed = diag_sym_spectrum(l2, m2, 2);
  const std::vector<Complex> expected = {Complex(3.0), Complex(5.0), Complex(8.0)};
  const MultisetMatch match = match_multisets(fixed, expected, 1e-14);
  report.record(match.matched, 1e-14 - match.max_deviation, "fixed diagonal example");
  return report;
}

VerifyReport suite_diag_bounds(const SuiteContext& ctx) {
  VerifyReport report = verify_diag_norm_bound(ctx.trials, ctx.seed);
  report.suite = "prop-7.1";
  return report;
}

VerifyReport suite_multi_diag(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "prop-7.3";
  report.seed = ctx.seed;
  report.tolerance = 1e-9;
  Rng rng(ctx.seed);
  for (int t = 0; t < ctx.trials; ++t) {
    const int n = 4;
    std::vector<std::vector<Complex>> seqs;
    std::vector<ComplexMatrix> mats;
    for (int i = 0; i < 3; ++i) {
      seqs.push_back(rng.complex_normal_vector(static_cast<std::size_t>(n)));
      mats.push_back(ComplexMatrix::diagonal(seqs.back()));
    }
    const auto closed = multi_diag_sym_spectrum(seqs, n);
    const auto dense = general_eigen(sym_product(mats)).eigenvalues;
    double scale = 1.0;
    for (const auto& v : closed) scale = std::max(scale, std::abs(v));
    const MultisetMatch match = match_multisets(closed, dense, report.tolerance * scale);
    report.record(match.matched, report.tolerance * scale - match.max_deviation,
                  fmt("three-diagonal spectrum", t, match.max_deviation));

    // Two factors reduce to the pairwise formula exactly.
    const auto two = multi_diag_sym_spectrum({seqs[0], seqs[1]}, n);
    const auto pairwise = diag_sym_spectrum(seqs[0], seqs[1], n);
    const MultisetMatch reduce = match_multisets(two, pairwise, 1e-13 * scale);
    report.record(reduce.matched, 1e-13 * scale - reduce.max_deviation,
                  fmt("two-factor reduction", t, reduce.max_deviation));
  }
  return report;
}

VerifyReport suite_shift_blocks(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-8.1";
  report.seed = ctx.seed;
  report.tolerance = 1e-10;
  const int max_degree = ctx.truncation > 0 ? ctx.truncation : 40;
  const int dense_degree = std::min(max_degree, 40);

  for (int k = 0; k <= max_degree; ++k) {
    const auto eig_a = hermitian_eigen(build_Ak(k), 1e-12).eigenvalues;
    const auto closed_a = spec_Ak(k);
    double dev_a = 0.0;
    for (std::size_t i = 0; i < closed_a.size(); ++i) {
      dev_a = std::max(dev_a, std::abs(eig_a[i].real() - closed_a[i]));
    }
    report.record(dev_a <= report.tolerance, report.tolerance - dev_a, fmt("A_k", k, dev_a));

    const auto eig_b = hermitian_eigen(build_Bk(k), 1e-12).eigenvalues;
    const auto closed_b = spec_Bk(k);
    double dev_b = 0.0;
    for (std::size_t i = 0; i < closed_b.size(); ++i) {
      dev_b = std::max(dev_b, std::abs(eig_b[i].real() - closed_b[i]));
    }
    report.record(dev_b <= report.tolerance, report.tolerance - dev_b, fmt("B_k", k, dev_b));

    std::vector<Complex> union_closed;
    for (double v : closed_b) union_closed.push_back(Complex(v));
    if (k >= 1) {
      const auto eig_c = hermitian_eigen(build_Ck(k), 1e-12).eigenvalues;
      const auto closed_c = spec_Ck(k);
      double dev_c = 0.0;
      for (std::size_t i = 0; i < closed_c.size(); ++i) {
        dev_c = std::max(dev_c, std::abs(eig_c[i].real() - closed_c[i]));
      }
      report.record(dev_c <= report.tolerance, report.tolerance - dev_c, fmt("C_k", k, dev_c));
      for (double v : closed_c) union_closed.push_back(Complex(v));
    }
    std::vector<Complex> closed_a_complex;
    for (double v : closed_a) closed_a_complex.push_back(Complex(v));
    const MultisetMatch union_match =
        match_multisets(closed_a_complex, union_closed, report.tolerance);
    report.record(union_match.matched, report.tolerance - union_match.max_deviation,
                  fmt("spectrum union", k, union_match.max_deviation));

    double max_eig = 0.0;
    for (double v : closed_a) max_eig = std::max(max_eig, std::abs(v));
    report.record(max_eig <= 1.0 + 1e-12, 1.0 + 1e-12 - max_eig, fmt("norm cap", k, max_eig));

    if (k <= dense_degree) {
      const double dense_b = max_abs_diff(degree_block_dense(k, Flavor::symmetric), build_Bk(k));
      report.record(dense_b <= 1e-12, 1e-12 - dense_b, fmt("dense B_k", k, dense_b));
      const double dense_a = max_abs_diff(degree_block_full(k), build_Ak(k));
      report.record(dense_a <= 1e-12, 1e-12 - dense_a, fmt("dense A_k", k, dense_a));
      if (k >= 1) {
        const double dense_c =
            max_abs_diff(degree_block_dense(k, Flavor::antisymmetric), build_Ck(k));
        report.record(dense_c <= 1e-12, 1e-12 - dense_c, fmt("dense C_k", k, dense_c));
      }
    }
  }

  // The union of the cosine meshes fills out [-1, 1]: no gap above 0.1 by
  // degree 100.
  std::vector<double> mesh = {-1.0, 1.0};
  for (int k = 0; k <= 100; ++k) {
    for (double v : spec_Bk(k)) mesh.push_back(v);
    if (k >= 1)
      for (double v : spec_Ck(k)) mesh.push_back(v);
  }
  std::sort(mesh.begin(), mesh.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < mesh.size(); ++i) gap = std::max(gap, mesh[i] - mesh[i - 1]);
  report.record(gap < 0.1, 0.1 - gap, fmt("mesh gap", 100, gap));
  report.observe("mesh_gap", gap);
  return report;
}

VerifyReport suite_kernel(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-9.1";
  report.seed = ctx.seed;
  report.tolerance = 1e-13;
  Rng rng(ctx.seed);
  const int truncation = ctx.truncation > 0 ? ctx.truncation : 40;

  double worst_gap = 0.0;
  double worst_decay = 0.0;
  int decay_violations = 0;
  for (int t = 0; t < ctx.trials; ++t) {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2);
    for (auto& v : mu) v = rng.uniform(0.1, 1.0) * rng.unit_phase();
    const KernelCoefficients kc = kernel_vector_SM(mu, truncation, 0.5);
    const KernelEquationReport eq = check_kernel_equations(kc);
    report.record(eq.max_residual <= report.tolerance, report.tolerance - eq.max_residual,
                  fmt("controlled equations", t, eq.max_residual));
    worst_gap = std::max(worst_gap, eq.max_gap_residual);
    worst_decay = std::max(worst_decay, eq.worst_decay_ratio);
    if (!eq.decay_bound_ok) ++decay_violations;
  }
  report.observe("row_one_gap_residual", worst_gap);
  report.observe("worst_decay_ratio", worst_decay);
  report.observe("decay_violations", static_cast<double>(decay_violations));

  // Vanishing diagonal entry: the coordinate square is an exact kernel
  // vector.
  {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2, Complex(0.7));
    mu[3] = 0.0;
    const KernelCoefficients kc = kernel_vector_SM(mu, truncation, 0.5);
    const KernelEquationReport eq = check_kernel_equations(kc);
    const double worst = std::max(eq.max_residual, eq.max_gap_residual);
    report.record(kc.trivial && worst == 0.0, 0.0 - worst, "vanishing-entry kernel vector");
  }

  // Point-spectrum forcing for nonzero eigenvalue candidates.
  const int forcing_draws = std::max(10, ctx.trials);
  for (int t = 0; t < forcing_draws; ++t) {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2);
    for (auto& v : mu) v = rng.uniform(0.1, 1.0) * rng.unit_phase();
    const Complex lambda = rng.uniform(0.05, 2.0) * rng.unit_phase();
    const PointSpectrumReport ps = verify_point_spectrum_SM(mu, lambda, std::min(truncation, 30));
    report.record(ps.all_forced_zero, 0.0 - ps.max_coefficient,
                  fmt("forced zero", t, ps.max_coefficient));
  }
  return report;
}

VerifyReport suite_backshift(const SuiteContext& ctx) {
  VerifyReport report;
  report.suite = "thm-9.2";
  report.seed = ctx.seed;
  report.tolerance = 1e-12;
  Rng rng(ctx.seed);
  const int truncation = ctx.truncation > 0 ? ctx.truncation : 60;

  for (int t = 0; t < ctx.trials; ++t) {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 1);
    for (auto& v : mu) v = rng.uniform(0.2, 1.0) * rng.unit_phase();
    const Complex lambda = 0.5 * mu[0] * rng.uniform(0.0, 0.9) * rng.unit_phase();
    const BackshiftEigenvector ev = backshift_eigenvector(mu, lambda, truncation);
    report.record(ev.residual <= ev.tail_bound + 1e-13, ev.tail_bound + 1e-13 - ev.residual,
                  fmt("geometric eigenvector", t, ev.residual));
  }

  // lambda = 0 is exact.
  {
    std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 1, Complex(0.8));
    const BackshiftEigenvector ev = backshift_eigenvector(mu, Complex(0.0), truncation);
    report.record(ev.residual == 0.0, 0.0 - ev.residual, "zero eigenvalue witness");
  }

  // Norm lower bound: the diagonal squares certify ||S* (.) M|| >= |mu_i| /
  // sqrt(2).
  for (int t = 0; t < 8; ++t) {
    const int n = 10;
    std::vector<Complex> mu(n);
    double mu_max = 0.0;
    for (auto& v : mu) {
      v = rng.uniform(0.1, 1.0) * rng.unit_phase();
      mu_max = std::max(mu_max, std::abs(v));
    }
    const ComplexMatrix back = materialize(OperatorSpec::back_shift(), n);
    const ComplexMatrix diag = ComplexMatrix::diagonal(mu);
    const double dense = operator_norm(sym_product(back, diag)).value;
    const double lower = mu_max / std::sqrt(2.0);
    report.record(dense >= lower - 1e-11, dense - lower + 1e-11,
                  fmt("norm lower bound", t, dense - lower));
  }
  return report;
}

VerifyReport suite_vector_three(const SuiteContext& ctx) {
  VerifyReport report = conjecture_sampler(ConjectureKind::vector_lower_bound, 3, 4, ctx.trials,
                                           ctx.seed);
  report.suite = "lemma-10.1";
  return report;
}

VerifyReport suite_operator_three(const SuiteContext& ctx) {
  VerifyReport report = conjecture_sampler(ConjectureKind::operator_lower_bound, 3, 3,
                                           std::max(10, ctx.trials / 4), ctx.seed);
  report.suite = "thm-10.3";
  return report;
}

using SuiteFn = std::function<VerifyReport(const SuiteContext&)>;

struct SuiteEntry {
  SuiteFn run;
  int default_trials;
};

const std::map<std::string, SuiteEntry>& suite_table() {
  static const std::map<std::string, SuiteEntry> table = {
      {"prop-2.2", {suite_perm_algebra, 40}},
      {"prop-2.4", {suite_projections, 1}},
      {"prop-2.5", {suite_embeddings, 1}},
      {"prop-2.6", {suite_two_sum, 1}},
      {"lemma-2.9", {suite_square_sum, 200}},
      {"lemma-2.10", {suite_vector_bounds, 1000}},
      {"prop-3.1", {suite_invariance, 50}},
      {"prop-3.3", {suite_norm_submult, 100}},
      {"lemma-4.1", {suite_product_rule, 200}},
      {"prop-4.3", {suite_common_invariant, 50}},
      {"prop-4.4", {suite_adjoint, 100}},
      {"thm-4.6", {suite_closure, 60}},
      {"prop-4.9", {suite_projection_product, 50}},
      {"prop-4.10", {suite_c_symmetry, 100}},
      {"thm-5.1", {suite_norm_theorem, 300}},
      {"thm-5.2", {suite_orthogonal_ranges, 200}},
      {"thm-6.1", {suite_kron_spectrum, 100}},
      {"prop-6.2", {suite_spectrum_union, 100}},
      {"thm-6.3", {suite_spectrum_same, 100}},
      {"eq-7.2", {suite_diag_spectrum, 100}},
      {"prop-7.1", {suite_diag_bounds, 1000}},
      {"prop-7.3", {suite_multi_diag, 50}},
      {"thm-8.1", {suite_shift_blocks, 1}},
      {"thm-9.1", {suite_kernel, 20}},
      {"thm-9.2", {suite_backshift, 100}},
      {"lemma-10.1", {suite_vector_three, 2000}},
      {"thm-10.3", {suite_operator_three, 40}},
  };
  return table;
}

}  // namespace

std::vector<std::string> registered_suites() {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : suite_table()) ids.push_back(id);
  return ids;
}

bool is_registered_suite(const std::string& id) { return suite_table().count(id) > 0; }

VerifyReport run_suite(const std::string& id, const SuiteOptions& options) {
  const auto it = suite_table().find(id);
  if (it == suite_table().end()) throw std::out_of_range("unknown suite id: " + id);
  SuiteContext ctx;
  ctx.trials = options.trials > 0 ? options.trials : it->second.default_trials;
  ctx.seed = options.seed;
  ctx.truncation = options.truncation;
  ctx.tol = options.tol;
  VerifyReport report = it->second.run(ctx);
  return report;
}

}  // namespace symtensor
