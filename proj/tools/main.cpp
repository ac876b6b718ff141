#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symtensor/operator_io.hpp"
#include "symtensor/operator_model.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"
#include "symtensor/theorems.hpp"
#include "symtensor/version.hpp"

namespace {

using namespace symtensor;

constexpr int kExitSuccess = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw InputFormatError("cannot open output path " + path);
    out << text;
  }
};

std::string pretty_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << "  ";
      os << format_complex(m(i, j));
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Complex> parse_diag_list(const std::string& text) {
  std::vector<Complex> values;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) values.push_back(parse_complex(cell));
  if (values.empty()) throw InputFormatError("empty diagonal list");
  return values;
}

ProductFlavor flavor_from_name(const std::string& name) {
  if (name == "sym" || name == "symmetric") return ProductFlavor::symmetric;
  if (name == "asym" || name == "antisymmetric" || name == "wedge") {
    return ProductFlavor::antisymmetric;
  }
  if (name == "full" || name == "full-averaged") return ProductFlavor::full_averaged;
  throw InputFormatError("unknown flavor: " + name);
}

std::size_t resolve_truncation(const std::vector<OperatorSpec>& specs, int dim_flag) {
  if (dim_flag > 0) return static_cast<std::size_t>(dim_flag);
  std::size_t size = 0;
  for (const auto& spec : specs) {
    if (spec.kind == OperatorSpec::Kind::dense) {
      if (size == 0) size = spec.matrix.rows();
      if (spec.matrix.rows() != size) {
        throw InputFormatError("dense inputs disagree on size; pass --dim");
      }
    }
  }
  if (size == 0) {
    throw InputFormatError("sequence-backed operators need an explicit --dim");
  }
  return size;
}

int run_product(const std::vector<std::string>& files, const std::string& flavor_name,
                int dim_flag, const std::string& format, const OutputTarget& target) {
  if (files.size() < 2) throw InputFormatError("product needs at least two operator files");
  std::vector<OperatorSpec> specs;
  for (const auto& f : files) specs.push_back(read_operator_file(f));

  ProductRequest request;
  request.operators = std::move(specs);
  request.flavor = flavor_from_name(flavor_name);
  request.trunc = resolve_truncation(request.operators, dim_flag);
  const ComplexMatrix result = product_of(request);

  if (format == "csv") {
    std::ostringstream os;
    write_matrix_csv(os, result);
    target.write(os.str());
  } else if (format == "pretty") {
    target.write(pretty_matrix(result));
  } else {
    target.write(matrix_to_json(result).dump(2) + "\n");
  }
  return kExitSuccess;
}

int run_spectrum(const std::vector<std::string>& files, const std::string& op_name,
                 const std::vector<std::string>& diag_lists, const std::string& flavor_name,
                 int dim_flag, int degree_cap, double tol, std::uint64_t seed,
                 const std::string& format, const OutputTarget& target) {
  SpectrumReport report;
  std::string statement = "spectrum";

  if (!op_name.empty()) {
    const int cap = degree_cap > 0 ? degree_cap : 20;
    const auto [sym, asym] = shift_block_spectra(cap);
    statement = "thm-8.1";
    if (op_name == "shift-sym-adjoint") {
      report = sym;
    } else if (op_name == "shift-wedge-adjoint") {
      report = asym;
    } else {
      throw InputFormatError("unknown named operator: " + op_name);
    }
  } else if (!diag_lists.empty()) {
    if (diag_lists.size() < 2) throw InputFormatError("need at least two --diag lists");
    std::vector<std::vector<Complex>> seqs;
    std::size_t min_len = SIZE_MAX;
    for (const auto& text : diag_lists) {
      seqs.push_back(parse_diag_list(text));
      min_len = std::min(min_len, seqs.back().size());
    }
    const int n = dim_flag > 0 ? dim_flag : static_cast<int>(min_len);
    statement = seqs.size() == 2 ? "eq-7.2" : "prop-7.3";
    report.method = "closed-form";
    report.tolerance = tol;
    report.eigenvalues = seqs.size() == 2 ? diag_sym_spectrum(seqs[0], seqs[1], n)
                                          : multi_diag_sym_spectrum(seqs, n);
  } else {
    if (files.size() < 2) throw InputFormatError("spectrum needs operator files, --diag or --op");
    std::vector<OperatorSpec> specs;
    for (const auto& f : files) specs.push_back(read_operator_file(f));
    ProductRequest request;
    request.operators = std::move(specs);
    request.flavor = flavor_from_name(flavor_name);
    request.trunc = resolve_truncation(request.operators, dim_flag);
    const ComplexMatrix product = product_of(request);
    const double hermitian_gap = (product - product.adjoint()).frobenius_norm();
    if (hermitian_gap <= 1e-12 * std::max(1.0, product.frobenius_norm())) {
      report = hermitian_eigen(product, std::max(tol, 1e-13));
    } else {
      report = general_eigen(product, std::max(tol, 1e-10));
    }
  }

  if (format == "csv") {
    std::ostringstream os;
    write_spectrum_csv(os, report);
    target.write(os.str());
  } else if (format == "pretty") {
    std::ostringstream os;
    os.precision(12);
    os << "method: " << report.method << "  residual: " << report.max_residual << "\n";
    for (const auto& v : report.eigenvalues) os << format_complex(v) << "\n";
    target.write(os.str());
  } else {
    target.write(spectrum_report_to_json(report, statement, seed).dump(2) + "\n");
  }
  return report.converged ? kExitSuccess : kExitSuiteFailure;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, int degree_cap,
               double tol, const std::string& format, const OutputTarget& target) {
  SuiteOptions options;
  options.trials = trials;
  options.seed = seed;
  options.truncation = degree_cap;
  options.tol = tol;

  std::vector<std::string> ids;
  if (suite == "all") {
    ids = registered_suites();
  } else {
    if (!is_registered_suite(suite)) {
      std::cerr << "unknown suite id: " << suite << "\n";
      return kExitUsage;
    }
    ids.push_back(suite);
  }

  bool all_passed = true;
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  std::ostringstream pretty;
  for (const auto& id : ids) {
    const VerifyReport report = run_suite(id, options);
    all_passed = all_passed && report.passed();
    array.push_back(verify_report_to_json(report, id));
    pretty << (report.passed() ? "PASS" : "FAIL") << " " << id << " trials=" << report.trials
           << " failures=" << report.failures << " worst_margin=" << report.worst_margin << "\n";
  }

  if (format == "pretty") {
    target.write(pretty.str());
  } else {
    target.write((ids.size() == 1 ? array.front() : array).dump(2) + "\n");
  }
  return all_passed ? kExitSuccess : kExitSuiteFailure;
}

int run_explore(const std::string& conjecture, int n, int d, int trials, std::uint64_t seed,
                const std::string& format, const OutputTarget& target) {
  ConjectureKind kind;
  if (conjecture == "vector-lower-bound") {
    kind = ConjectureKind::vector_lower_bound;
  } else if (conjecture == "operator-lower-bound") {
    kind = ConjectureKind::operator_lower_bound;
  } else {
    std::cerr << "unknown conjecture id: " << conjecture << "\n";
    return kExitUsage;
  }
  const VerifyReport report = conjecture_sampler(kind, n, d, trials, seed);
  if (format == "pretty") {
    std::ostringstream os;
    os << (report.passed() ? "PASS" : "FAIL") << " " << report.suite
       << " trials=" << report.trials << " failures=" << report.failures << "\n";
    for (const auto& [name, value] : report.observations) os << name << " = " << value << "\n";
    for (const auto& w : report.witnesses) os << "witness: " << w << "\n";
    target.write(os.str());
  } else {
    target.write(verify_report_to_json(report, report.suite).dump(2) + "\n");
  }
  return report.passed() ? kExitSuccess : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric and antisymmetric tensor products of operators"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string flavor = "sym";
  std::string format = "json";
  std::string output;
  std::string suite;
  std::string op_name;
  std::string conjecture;
  std::vector<std::string> files;
  std::vector<std::string> diag_lists;
  int dim = 0;
  int degree_cap = 0;
  int trials = -1;
  int explore_n = 4;
  std::uint64_t seed = 1;
  double tol = 1e-10;

  CLI::App* product = app.add_subcommand("product", "materialize a tensor product in ONB coordinates");
  product->add_option("files", files, "operator description files")->expected(-2);
  product->add_option("--flavor", flavor, "sym | asym | full");
  product->add_option("--dim", dim, "ambient dimension per factor");
  product->add_option("--format", format, "json | csv | pretty");
  product->add_option("--output", output, "output path (default stdout)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue multiset of a product");
  spectrum->add_option("files", files, "operator description files");
  spectrum->add_option("--op", op_name, "named operator family: shift-sym-adjoint | shift-wedge-adjoint");
  spectrum->add_option("--diag", diag_lists, "comma-separated diagonal; repeat per factor");
  spectrum->add_option("--flavor", flavor, "sym | asym | full");
  spectrum->add_option("--dim", dim, "truncation size");
  spectrum->add_option("--K", degree_cap, "degree cutoff for named operators");
  spectrum->add_option("--tol", tol, "residual tolerance");
  spectrum->add_option("--seed", seed, "seed recorded in the report");
  spectrum->add_option("--format", format, "json | csv | pretty");
  spectrum->add_option("--output", output, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite id, or 'all'")->required();
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--K", degree_cap, "degree/truncation cutoff");
  verify->add_option("--tol", tol, "tolerance override");
  verify->add_option("--format", format, "json | pretty");
  verify->add_option("--output", output, "output path (default stdout)");

  CLI::App* explore = app.add_subcommand("explore", "sample an open lower-bound conjecture");
  explore->add_option("--conjecture", conjecture, "vector-lower-bound | operator-lower-bound")
      ->required();
  explore->add_option("--n", explore_n, "number of factors");
  explore->add_option("--dim", dim, "ambient dimension");
  explore->add_option("--trials", trials, "number of random draws");
  explore->add_option("--seed", seed, "random seed");
  explore->add_option("--format", format, "json | pretty");
  explore->add_option("--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  const OutputTarget target{output};
  try {
    if (product->parsed()) return run_product(files, flavor, dim, format, target);
    if (spectrum->parsed()) {
      return run_spectrum(files, op_name, diag_lists, flavor, dim, degree_cap, tol, seed, format,
                          target);
    }
    if (verify->parsed()) return run_verify(suite, trials, seed, degree_cap, tol, format, target);
    if (explore->parsed()) {
      const int n_trials = trials > 0 ? trials : 2000;
      return run_explore(conjecture, explore_n, dim > 0 ? dim : explore_n + 1, n_trials, seed,
                         format, target);
    }
  } catch (const SizeGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
