#include <doctest.h>

#include <sstream>

#include "symtensor/operator_io.hpp"
#include "symtensor/theorems.hpp"
#include "symtensor/version.hpp"

using namespace symtensor;

TEST_CASE("report json embeds version, seed, tolerance and statement") {
  SuiteOptions options;
  options.trials = 5;
  options.seed = 1234;
  const VerifyReport report = run_suite("lemma-2.10", options);
  const auto j = verify_report_to_json(report, "lemma-2.10");
  CHECK(j["version"] == kVersion);
  CHECK(j["statement"] == "lemma-2.10");
  CHECK(j["seed"] == 1234);
  CHECK(j.contains("tolerance"));
  CHECK(j.contains("worst_margin"));
  CHECK(j["failures"] == 0);
}

TEST_CASE("identical seeds give byte-identical reports") {
  SuiteOptions options;
  options.trials = 25;
  options.seed = 777;
  const std::string once = verify_report_to_json(run_suite("lemma-4.1", options), "lemma-4.1").dump(2);
  const std::string twice = verify_report_to_json(run_suite("lemma-4.1", options), "lemma-4.1").dump(2);
  CHECK(once == twice);

  options.seed = 778;
  const std::string other = verify_report_to_json(run_suite("lemma-4.1", options), "lemma-4.1").dump(2);
  CHECK(once != other);
}

TEST_CASE("spectrum report serialization") {
  SpectrumReport report;
  report.method = "closed-form";
  report.tolerance = 1e-10;
  report.eigenvalues = {Complex(0.5, 0.0), Complex(-0.5, 0.0)};
  const auto j = spectrum_report_to_json(report, "thm-8.1", 42);
  CHECK(j["method"] == "closed-form");
  CHECK(j["eigenvalues"].size() == 2);
  CHECK(j["statement"] == "thm-8.1");
  CHECK(j["seed"] == 42);

  std::ostringstream csv;
  write_spectrum_csv(csv, report);
  CHECK(csv.str() == "re,im\n0.5,0\n-0.5,0\n");
}
