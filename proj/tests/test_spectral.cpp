#include <doctest.h>

#include <numbers>

#include "symtensor/rng.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"

using namespace symtensor;

TEST_CASE("hermitian eigensolver") {
  const Complex d3[] = {Complex(3.0), Complex(1.0), Complex(2.0)};
  const auto report = hermitian_eigen(ComplexMatrix::diagonal(d3));
  REQUIRE(report.eigenvalues.size() == 3);
  CHECK(report.eigenvalues[0].real() == doctest::Approx(1.0));
  CHECK(report.eigenvalues[1].real() == doctest::Approx(2.0));
  CHECK(report.eigenvalues[2].real() == doctest::Approx(3.0));

  const ComplexMatrix a1{{0.0, 0.5}, {0.5, 0.0}};
  const auto pair = hermitian_eigen(a1);
  CHECK(pair.eigenvalues[0].real() == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(pair.eigenvalues[1].real() == doctest::Approx(0.5).epsilon(1e-13));

  Rng rng(31);
  ComplexMatrix h = rng.gaussian_matrix(50, 50);
  h += h.adjoint();
  const auto big = hermitian_eigen(h, 1e-12);
  Complex sum = 0.0;
  for (const auto& ev : big.eigenvalues) sum += ev;
  CHECK(std::abs(sum - h.trace()) <= 1e-9 * std::max(1.0, std::abs(h.trace())));
  CHECK(big.max_residual <= 1e-10 * h.frobenius_norm());

  CHECK_THROWS_AS(hermitian_eigen(rng.gaussian_matrix(4, 4), 1e-12), std::invalid_argument);
}

TEST_CASE("general eigensolver") {
  const ComplexMatrix nilpotent{{0.0, 1.0}, {0.0, 0.0}};
  const auto n = general_eigen(nilpotent);
  CHECK(std::abs(n.eigenvalues[0]) <= 1e-12);
  CHECK(std::abs(n.eigenvalues[1]) <= 1e-12);

  const ComplexMatrix companion{{0.0, 1.0}, {1.0, 0.0}};
  const auto c = general_eigen(companion);
  CHECK(c.eigenvalues[0].real() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(c.eigenvalues[1].real() == doctest::Approx(1.0).epsilon(1e-10));

  Rng rng(32);
  const ComplexMatrix m = rng.gaussian_matrix(20, 20);
  const auto report = general_eigen(m, 1e-8);
  REQUIRE(report.eigenvalues.size() == 20);
  CHECK(report.converged);
  Complex product = 1.0;
  for (const auto& ev : report.eigenvalues) product *= ev;
  // Multiset product equals the determinant; compare through the LU route.
  Complex det = 1.0;
  {
    ComplexMatrix lu = m;
    for (std::size_t k = 0; k < lu.rows(); ++k) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < lu.rows(); ++i)
        if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
      if (pivot != k) {
        for (std::size_t j = 0; j < lu.cols(); ++j) std::swap(lu(pivot, j), lu(k, j));
        det = -det;
      }
      det *= lu(k, k);
      for (std::size_t i = k + 1; i < lu.rows(); ++i) {
        const Complex f = lu(i, k) / lu(k, k);
        for (std::size_t j = k; j < lu.cols(); ++j) lu(i, j) -= f * lu(k, j);
      }
    }
  }
  CHECK(std::abs(product - det) <= 1e-8 * std::abs(det));

  // Hermitian cross-check between the two solvers.
  ComplexMatrix h = rng.gaussian_matrix(12, 12);
  h += h.adjoint();
  const auto via_qr = general_eigen(h, 1e-9).eigenvalues;
  const auto via_jacobi = hermitian_eigen(h).eigenvalues;
  const MultisetMatch match = match_multisets(via_qr, via_jacobi, 1e-9 * h.frobenius_norm());
  CHECK(match.matched);
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(ComplexMatrix::identity(4)).value == doctest::Approx(1.0));

  const ComplexMatrix wa{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix wb{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(operator_norm(sym_product(wa, wb)).value ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix m = rng.gaussian_matrix(6, 6);
    const double norm = operator_norm(m).value;
    double max_col = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) max_col = std::max(max_col, norm2(m.column(j)));
    CHECK(norm >= max_col - 1e-10);
    const double power = operator_norm(m, 1e-12, NormMethod::power_iteration).value;
    CHECK(power == doctest::Approx(norm).epsilon(1e-6));
  }
}

TEST_CASE("spectral radius and the gelfand estimate") {
  ComplexMatrix jordan(2, 2);
  jordan(0, 1) = 1.0;
  CHECK(spectral_radius(jordan) <= 1e-10);
  CHECK(gelfand_estimate(jordan, 2) == doctest::Approx(0.0));

  const Complex d2[] = {Complex(2.0), Complex(3.0)};
  const ComplexMatrix diag = ComplexMatrix::diagonal(d2);
  CHECK(spectral_radius(sym_product(diag, diag)) == doctest::Approx(9.0).epsilon(1e-10));

  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(4, 4);
    const double rho = spectral_radius(a);
    std::vector<ComplexMatrix> squared(2, a);
    const double rho2 = spectral_radius(sym_product(squared));
    CHECK(rho2 == doctest::Approx(rho * rho).epsilon(1e-6));
    CHECK(rho <= gelfand_estimate(a, 6) + 1e-9);
  }
}

TEST_CASE("tridiagonal blocks and closed-form spectra") {
  CHECK(build_Ck(1)(0, 0).real() == doctest::Approx(-0.5));
  CHECK(build_Ck(2)(0, 0).real() == doctest::Approx(0.0));
  CHECK(build_Bk(0)(0, 0).real() == doctest::Approx(0.0));
  // The k = 1 symmetric block was settled by the dense restriction: a single
  // basis vector carried to half of itself.
  REQUIRE(build_Bk(1).rows() == 1);
  CHECK(build_Bk(1)(0, 0).real() == doctest::Approx(0.5));

  const auto a1 = spec_Ak(1);
  CHECK(a1[0] == doctest::Approx(-0.5));
  CHECK(a1[1] == doctest::Approx(0.5));
  CHECK(spec_Ck(1)[0] == doctest::Approx(-0.5));
  CHECK(spec_Bk(1)[0] == doctest::Approx(0.5));

  for (int k = 0; k <= 60; ++k) {
    const auto eig = hermitian_eigen(build_Ak(k), 1e-12).eigenvalues;
    const auto closed = spec_Ak(k);
    REQUIRE(eig.size() == closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      CHECK(std::abs(eig[i].real() - closed[i]) <= 1e-10);
    }
    // Union law as multisets.
    std::vector<Complex> lhs, rhs;
    for (double v : closed) lhs.push_back(Complex(v));
    for (double v : spec_Bk(k)) rhs.push_back(Complex(v));
    if (k >= 1)
      for (double v : spec_Ck(k)) rhs.push_back(Complex(v));
    CHECK(match_multisets(lhs, rhs, 1e-12).matched);
  }
}

TEST_CASE("diagonal spectra") {
  const Complex l[] = {Complex(1.0), Complex(2.0)};
  const Complex m[] = {Complex(3.0), Complex(4.0)};
  const auto values = diag_sym_spectrum(l, m, 2);
  REQUIRE(values.size() == 3);
  CHECK(values[0].real() == doctest::Approx(3.0));
  CHECK(values[1].real() == doctest::Approx(5.0));
  CHECK(values[2].real() == doctest::Approx(8.0));

  const std::vector<Complex> ones(6, Complex(1.0));
  for (const auto& v : diag_sym_spectrum(ones, ones, 6)) {
    CHECK(v.real() == doctest::Approx(1.0));
  }

  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.integer(7));
    std::vector<Complex> lr(n), mr(n);
    for (auto& x : lr) x = Complex(rng.uniform(-1.0, 1.0));
    for (auto& x : mr) x = Complex(rng.uniform(-1.0, 1.0));
    const auto closed = diag_sym_spectrum(lr, mr, n);
    const auto dense =
        general_eigen(sym_product(ComplexMatrix::diagonal(lr), ComplexMatrix::diagonal(mr)))
            .eigenvalues;
    CHECK(match_multisets(closed, dense, 1e-10).matched);
  }

  // The n-factor form specializes to the pairwise one and collapses for
  // equal sequences.
  std::vector<std::vector<Complex>> seqs = {{Complex(1.0), Complex(2.0), Complex(0.5)},
                                            {Complex(-1.0), Complex(0.25), Complex(3.0)}};
  CHECK(match_multisets(multi_diag_sym_spectrum(seqs, 3), diag_sym_spectrum(seqs[0], seqs[1], 3),
                        1e-14)
            .matched);
  std::vector<std::vector<Complex>> equal(3, seqs[0]);
  const auto cubes = multi_diag_sym_spectrum(equal, 3);
  std::vector<Complex> expected;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) expected.push_back(seqs[0][i] * seqs[0][j] * seqs[0][k]);
  CHECK(match_multisets(cubes, expected, 1e-13).matched);

  CHECK_THROWS_AS(multi_diag_sym_spectrum({seqs[0], seqs[0], seqs[0], seqs[0], seqs[0]}, 3),
                  SizeGuardError);
}

TEST_CASE("multiset matching") {
  const std::vector<Complex> a = {Complex(1.0), Complex(0.0, 1.0), Complex(1.0)};
  const std::vector<Complex> b = {Complex(1.0 + 1e-12), Complex(1.0), Complex(1e-12, 1.0)};
  CHECK(match_multisets(a, b, 1e-10).matched);
  CHECK_FALSE(match_multisets(a, b, 1e-14).matched);
  CHECK_FALSE(match_multisets(a, {Complex(1.0)}, 1.0).matched);

  CHECK(multiset_contained({Complex(1.0)}, a, 1e-12).matched);
  CHECK_FALSE(multiset_contained({Complex(2.0)}, a, 1e-3).matched);
  // Multiplicity is respected: two copies cannot match one target.
  CHECK_FALSE(multiset_contained({Complex(0.0, 1.0), Complex(0.0, 1.0)}, a, 1e-6).matched);
}
