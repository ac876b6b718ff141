#include <doctest.h>

#include <sstream>

#include "symtensor/operator_io.hpp"
#include "symtensor/operator_model.hpp"
#include "symtensor/rng.hpp"
#include "symtensor/spectral.hpp"

using namespace symtensor;

TEST_CASE("shift compressions") {
  const ComplexMatrix s2 = materialize(OperatorSpec::shift(), 2);
  CHECK(s2(0, 0) == Complex(0.0));
  CHECK(s2(1, 0) == Complex(1.0));
  CHECK(s2(0, 1) == Complex(0.0));
  CHECK(s2(1, 1) == Complex(0.0));

  const ComplexMatrix s5 = materialize(OperatorSpec::shift(), 5);
  CHECK(max_abs_diff(materialize(OperatorSpec::back_shift(), 5), s5.adjoint()) == 0.0);

  // Partial isometry: S*S = I minus the last diagonal unit.
  ComplexMatrix expected = ComplexMatrix::identity(5);
  expected(4, 4) = 0.0;
  CHECK(max_abs_diff(s5.adjoint() * s5, expected) == 0.0);
}

TEST_CASE("diagonal and weighted compressions") {
  const std::vector<Complex> values = {Complex(1.0), Complex(std::sqrt(2.0) - 1.0)};
  const ComplexMatrix d = materialize(OperatorSpec::diagonal(values), 2);
  CHECK(d(0, 0) == Complex(1.0));
  CHECK(d(1, 1).real() == doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK(d(0, 1) == Complex(0.0));

  CHECK_THROWS_AS(materialize(OperatorSpec::diagonal(values), 3), std::invalid_argument);

  const std::vector<Complex> weights = {Complex(2.0), Complex(3.0)};
  const ComplexMatrix w = materialize(OperatorSpec::weighted_shift(weights), 3);
  CHECK(w(1, 0) == Complex(2.0));
  CHECK(w(2, 1) == Complex(3.0));
  CHECK_THROWS_AS(materialize(OperatorSpec::weighted_shift(weights), 5), std::invalid_argument);
}

TEST_CASE("compression consistency") {
  Rng rng(3);
  std::vector<OperatorSpec> specs;
  specs.push_back(OperatorSpec::shift());
  specs.push_back(OperatorSpec::back_shift());
  specs.push_back(OperatorSpec::diagonal(rng.complex_normal_vector(9)));
  specs.push_back(OperatorSpec::weighted_shift(rng.complex_normal_vector(9)));
  for (const auto& spec : specs) {
    const ComplexMatrix bigger = materialize(spec, 8);
    CHECK(max_abs_diff(materialize(spec, 7), bigger.leading_block(7)) == 0.0);
  }
}

TEST_CASE("kronecker products") {
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)) == 0.0);

  Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(3, 3);
    const ComplexMatrix b = rng.gaussian_matrix(3, 3);
    const ComplexMatrix c = rng.gaussian_matrix(3, 3);
    const ComplexMatrix d = rng.gaussian_matrix(3, 3);

    // Mixed-product identity.
    const double dev = max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d));
    CHECK(dev <= 1e-12 * std::max(1.0, kron(a * c, b * d).max_abs()));

    // Associativity is exact.
    const ComplexMatrix trio[] = {a, b, c};
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(trio)) == 0.0);
  }
}

TEST_CASE("kron norm multiplies") {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rng.gaussian_matrix(4, 4);
    const ComplexMatrix b = rng.gaussian_matrix(3, 3);
    const double product = operator_norm(kron(a, b)).value;
    const double separate = operator_norm(a).value * operator_norm(b).value;
    CHECK(std::abs(product - separate) <= 1e-10 * std::max(1.0, separate));
  }
}

TEST_CASE("componentwise conjugation") {
  Rng rng(9);
  const auto v = rng.complex_normal_vector(6);
  const auto cv = apply_conjugation(v);
  CHECK(norm2(cv) == doctest::Approx(norm2(v)));
  const auto ccv = apply_conjugation(cv);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(ccv[i] - v[i]) == 0.0);

  for (int t = 0; t < 10; ++t) {
    ComplexMatrix a = rng.gaussian_matrix(4, 4);
    a += a.transpose();  // complex symmetric
    CHECK(max_abs_diff(conjugate_operator(a), a) == 0.0);
  }
}

TEST_CASE("operator file formats") {
  const auto j = nlohmann::json::parse(R"({"kind":"diagonal","values":[[1,0],[0.5,-0.25]]})");
  const OperatorSpec spec = operator_from_json(j);
  CHECK(spec.kind == OperatorSpec::Kind::diagonal);
  CHECK(spec.values[1] == Complex(0.5, -0.25));

  const auto m = nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[[1,0],[0,1],[0,-1],[1,0]]})");
  const ComplexMatrix parsed = matrix_from_json(m);
  CHECK(parsed(0, 1) == Complex(0.0, 1.0));
  CHECK(parsed(1, 0) == Complex(0.0, -1.0));

  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[[1,0]]})")),
                  InputFormatError);

  std::istringstream csv("1+2j,0\n-1.5,0-1j\n");
  const ComplexMatrix from_csv = matrix_from_csv(csv);
  CHECK(from_csv(0, 0) == Complex(1.0, 2.0));
  CHECK(from_csv(1, 1) == Complex(0.0, -1.0));

  CHECK(parse_complex("3.5") == Complex(3.5, 0.0));
  CHECK(parse_complex("-j") == Complex(0.0, -1.0));
  CHECK(parse_complex("2e-3+1.5j") == Complex(0.002, 1.5));
  CHECK_THROWS_AS(parse_complex("abc"), InputFormatError);

  // Round trip through the json writer.
  Rng rng(13);
  const ComplexMatrix original = rng.gaussian_matrix(3, 3);
  const ComplexMatrix round = matrix_from_json(matrix_to_json(original));
  CHECK(max_abs_diff(original, round) == 0.0);
}
