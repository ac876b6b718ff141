#include "symtensor/operator_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "symtensor/version.hpp"

namespace symtensor {
namespace {

std::vector<Complex> complex_list_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputFormatError(std::string(what) + " must be an array");
  std::vector<Complex> values;
  values.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_number()) {
      values.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
      values.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else if (item.is_string()) {
      values.push_back(parse_complex(item.get<std::string>()));
    } else {
      throw InputFormatError(std::string(what) + " entries must be numbers or [re, im] pairs");
    }
  }
  return values;
}

nlohmann::ordered_json complex_list_to_json(std::span<const Complex> values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputFormatError("empty complex literal");

  // Pure imaginary or real fast paths, then the a+bj form.
  const bool ends_j = s.back() == 'j' || s.back() == 'i';
  if (!ends_j) {
    try {
      std::size_t used = 0;
      const double re = std::stod(s, &used);
      if (used != s.size()) throw InputFormatError("bad complex literal: " + text);
      return Complex(re, 0.0);
    } catch (const InputFormatError&) {
      throw;
    } catch (const std::exception&) {
      throw InputFormatError("bad complex literal: " + text);
    }
  }

  s.pop_back();  // drop the unit
  if (s.empty() || s == "+") return Complex(0.0, 1.0);
  if (s == "-") return Complex(0.0, -1.0);

  // Split at the sign that separates real and imaginary parts (skipping a
  // leading sign and exponent signs).
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    const char c = s[i];
    if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  try {
    if (split == std::string::npos) {
      return Complex(0.0, std::stod(s));
    }
    const double re = std::stod(s.substr(0, split));
    const std::string im_text = s.substr(split);
    const double im = (im_text == "+") ? 1.0 : (im_text == "-") ? -1.0 : std::stod(im_text);
    return Complex(re, im);
  } catch (const std::exception&) {
    throw InputFormatError("bad complex literal: " + text);
  }
}

std::string format_complex(Complex value) {
  std::ostringstream os;
  os.precision(17);
  os << value.real();
  if (value.imag() >= 0.0 || std::isnan(value.imag())) {
    os << "+" << value.imag();
  } else {
    os << value.imag();
  }
  os << "j";
  return os.str();
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw InputFormatError("matrix json needs rows, cols and entries");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const std::vector<Complex> entries = complex_list_from_json(j["entries"], "entries");
  if (entries.size() != rows * cols) {
    throw InputFormatError("entry count does not match rows * cols");
  }
  try {
    return ComplexMatrix(rows, cols, entries);
  } catch (const std::invalid_argument& e) {
    throw InputFormatError(e.what());
  }
}

ComplexMatrix matrix_from_csv(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Complex> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_complex(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputFormatError("ragged csv matrix");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputFormatError("empty csv matrix");
  ComplexMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  m.require_finite();
  return m;
}

OperatorSpec operator_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputFormatError("operator json must be an object");
  if (!j.contains("kind")) return OperatorSpec::dense(matrix_from_json(j));

  const std::string kind = j["kind"].get<std::string>();
  const std::string label = j.value("label", kind);
  if (kind == "dense") {
    try {
      return OperatorSpec::dense(matrix_from_json(j), label);
    } catch (const std::invalid_argument& e) {
      throw InputFormatError(e.what());
    }
  }
  if (kind == "diagonal") {
    if (!j.contains("values")) throw InputFormatError("diagonal operator needs values");
    return OperatorSpec::diagonal(complex_list_from_json(j["values"], "values"), label);
  }
  if (kind == "shift") return OperatorSpec::shift();
  if (kind == "back-shift" || kind == "backshift") return OperatorSpec::back_shift();
  if (kind == "weighted-shift") {
    if (!j.contains("weights")) throw InputFormatError("weighted shift needs weights");
    return OperatorSpec::weighted_shift(complex_list_from_json(j["weights"], "weights"), label);
  }
  throw InputFormatError("unknown operator kind: " + kind);
}

OperatorSpec read_operator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open " + path.string());
  if (path.extension() == ".csv") {
    OperatorSpec spec = OperatorSpec::dense(matrix_from_csv(in), path.stem().string());
    return spec;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputFormatError("invalid json in " + path.string() + ": " + e.what());
  }
  return operator_from_json(j);
}

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = complex_list_to_json(m.data());
  return j;
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ",";
      out << format_complex(m(i, j));
    }
    out << "\n";
  }
}

nlohmann::ordered_json spectrum_report_to_json(const SpectrumReport& report,
                                               const std::string& statement,
                                               std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["statement"] = statement;
  j["seed"] = seed;
  j["tolerance"] = report.tolerance;
  j["method"] = report.method;
  j["eigenvalues"] = complex_list_to_json(report.eigenvalues);
  j["max_residual"] = report.max_residual;
  j["converged"] = report.converged;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::ordered_json verify_report_to_json(const VerifyReport& report,
                                             const std::string& statement) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["statement"] = statement;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  if (std::isfinite(report.worst_margin)) {
    j["worst_margin"] = report.worst_margin;
  } else {
    j["worst_margin"] = nullptr;
  }
  j["witnesses"] = report.witnesses;
  if (!report.observations.empty()) {
    nlohmann::ordered_json obs;
    for (const auto& [name, value] : report.observations) obs[name] = value;
    j["observations"] = obs;
  }
  return j;
}

nlohmann::ordered_json norm_report_to_json(const NormReport& report) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["value"] = report.value;
  j["method"] = report.method;
  j["iterations"] = report.iterations;
  j["tolerance"] = report.tolerance;
  return j;
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report) {
  out << "re,im\n";
  for (const auto& v : report.eigenvalues) {
    std::ostringstream cell;
    cell.precision(17);
    cell << v.real() << "," << v.imag();
    out << cell.str() << "\n";
  }
}

}  // namespace symtensor
