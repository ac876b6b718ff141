#ifndef SYMTENSOR_OPERATOR_IO_HPP
#define SYMTENSOR_OPERATOR_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "symtensor/operator_model.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/theorems.hpp"

namespace symtensor {

/// Thrown for malformed input files; the CLI maps it to the usage exit code.
class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a+bj" / "a-bj" / plain real cells.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex value);

/// Matrix files: JSON {"rows":N,"cols":N,"entries":[[re,im],...]} row-major,
/// or CSV with complex cells.  Operator files additionally accept
/// {"kind":"diagonal","values":[[re,im],...]}, {"kind":"shift"},
/// {"kind":"back-shift"}, {"kind":"weighted-shift","weights":[...]} and
/// {"kind":"dense","rows":...,"cols":...,"entries":[...]}.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix matrix_from_csv(std::istream& in);
OperatorSpec operator_from_json(const nlohmann::json& j);
OperatorSpec read_operator_file(const std::filesystem::path& path);

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);

// Report serialization.  Key order is fixed and doubles use the shortest
// round-trip form, so identical inputs and seeds give byte-identical output.
nlohmann::ordered_json spectrum_report_to_json(const SpectrumReport& report,
                                               const std::string& statement,
                                               std::uint64_t seed);
nlohmann::ordered_json verify_report_to_json(const VerifyReport& report,
                                             const std::string& statement);
nlohmann::ordered_json norm_report_to_json(const NormReport& report);

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report);

}  // namespace symtensor

#endif  // SYMTENSOR_OPERATOR_IO_HPP
