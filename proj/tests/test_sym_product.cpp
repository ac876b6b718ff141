#include <doctest.h>

#include "oracles.hpp"
#include "symtensor/rng.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"

using namespace symtensor;

TEST_CASE("averaged tensor basics") {
  Rng rng(21);
  const ComplexMatrix a = rng.gaussian_matrix(2, 2);
  const ComplexMatrix same[] = {a, a};
  CHECK(max_abs_diff(averaged_tensor(same), kron(a, a)) <= 1e-15);

  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix x = rng.gaussian_matrix(2, 2);
    const ComplexMatrix y = rng.gaussian_matrix(2, 2);
    const ComplexMatrix pair[] = {x, y};
    const ComplexMatrix closed = oracles::pair_average_2x2_closed_form(x, y);
    CHECK(max_abs_diff(averaged_tensor(pair), closed) <= 1e-14 * std::max(1.0, closed.max_abs()));
  }

  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix x = rng.gaussian_matrix(3, 3);
    const ComplexMatrix y = rng.gaussian_matrix(3, 3);
    const ComplexMatrix pair[] = {x, y};
    const ComplexMatrix avg = averaged_tensor(pair);
    const ComplexMatrix s2 = symmetrizer(3, 2);
    CHECK(max_abs_diff(s2 * avg, avg * s2) <= 1e-12 * std::max(1.0, avg.max_abs()));
  }
}

TEST_CASE("symmetric product matches the 2x2 closed form") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(2, 2);
    const ComplexMatrix b = rng.gaussian_matrix(2, 2);
    const ComplexMatrix via_projection = sym_product(a, b);
    const ComplexMatrix closed = oracles::sym_product_2x2_closed_form(a, b);
    CHECK(max_abs_diff(via_projection, closed) <= 1e-13 * std::max(1.0, closed.max_abs()));
  }

  // Recorded witnesses.
  const ComplexMatrix wa{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix wb{{0.0, 0.0}, {1.0, 0.0}};
  const ComplexMatrix w = sym_product(wa, wb);
  CHECK(std::abs(w(1, 0) - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);
  CHECK(w.max_abs() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(sym_product(id2, id2), ComplexMatrix::identity(3)) <= 1e-15);

  const Complex i(0.0, 1.0);
  const ComplexMatrix ga{{1.0, i}, {i, 1.0}};
  const ComplexMatrix gb{{1.0, -1.0}, {1.0, 1.0}};
  const ComplexMatrix gp = sym_product(ga, gb);
  CHECK(std::abs(gp(0, 0) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(gp(0, 1) - (-(1.0 - i) / std::sqrt(2.0))) <= 1e-14);
  CHECK(std::abs(gp(0, 2) - (-i)) <= 1e-14);
}

TEST_CASE("product with the adjoint is selfadjoint") {
  Rng rng(26);
  for (int t = 0; t < 40; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(2, 2);
    const ComplexMatrix product = sym_product(a, a.adjoint());
    CHECK(max_abs_diff(product, product.adjoint()) <= 1e-14 * std::max(1.0, product.max_abs()));

    // Entry check against the recorded 3x3 form.
    const double s = std::sqrt(2.0);
    CHECK(std::abs(product(0, 0) - Complex(std::norm(a(0, 0)))) <= 1e-14);
    CHECK(std::abs(product(0, 1) -
                   (a(0, 0) * std::conj(a(1, 0)) + std::conj(a(0, 0)) * a(0, 1)) / s) <= 1e-14);
    CHECK(std::abs(product(0, 2) - a(0, 1) * std::conj(a(1, 0))) <= 1e-14);
    const Complex middle = (a(0, 0) * std::conj(a(1, 1)) + std::conj(a(0, 0)) * a(1, 1) +
                            Complex(std::norm(a(0, 1))) + Complex(std::norm(a(1, 0)))) /
                           2.0;
    CHECK(std::abs(product(1, 1) - middle) <= 1e-14);
  }
}

TEST_CASE("permutation invariance and the flat factor list") {
  Rng rng(23);
  const ComplexMatrix a = rng.gaussian_matrix(3, 3);
  const ComplexMatrix b = rng.gaussian_matrix(3, 3);
  CHECK(max_abs_diff(sym_product(a, b), sym_product(b, a)) == 0.0);

  ProductRequest request;
  request.operators = {OperatorSpec::dense(a)};
  request.trunc = 3;
  CHECK_THROWS_AS(request.validate(), std::invalid_argument);
}

TEST_CASE("block decomposition") {
  Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(3, 3);
    const ComplexMatrix b = rng.gaussian_matrix(3, 3);
    const BlockDecomposition blocks = block_decompose(a, b);
    const double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
    CHECK(blocks.cross_residual <= 1e-13 * scale * scale);
  }

  const ComplexMatrix id3 = ComplexMatrix::identity(3);
  const BlockDecomposition blocks = block_decompose(id3, id3);
  CHECK(max_abs_diff(blocks.sym, ComplexMatrix::identity(6)) <= 1e-15);
  CHECK(max_abs_diff(blocks.asym, ComplexMatrix::identity(3)) <= 1e-15);
}

TEST_CASE("apply_sym_pair agrees with the projected product") {
  Rng rng(25);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + static_cast<int>(rng.integer(4));
    const ComplexMatrix a = rng.gaussian_matrix(d, d);
    const ComplexMatrix b = rng.gaussian_matrix(d, d);
    const ComplexMatrix product = sym_product(a, b);
    const std::vector<Complex> x = rng.complex_normal_vector(product.cols());
    const auto direct = product.apply(x);
    const auto fast = apply_sym_pair(a, b, x);
    REQUIRE(direct.size() == fast.size());
    double dev = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i) dev = std::max(dev, std::abs(direct[i] - fast[i]));
    CHECK(dev <= 1e-12 * std::max(1.0, norm2(direct)));
  }
}

TEST_CASE("wedge of a rank-one projection vanishes") {
  ComplexMatrix p(2, 2);
  p(0, 0) = 1.0;
  CHECK(asym_product(p, p).max_abs() <= 1e-15);
}
