#ifndef DGAP_RUNCONFIG_HPP
#define DGAP_RUNCONFIG_HPP

#include <array>
#include <string>

#include "dgap/potential.hpp"
#include "dgap/precision.hpp"

namespace dgap {

// Complex CLI literal "re+imi" / "re-imi" with no spaces, e.g. "1.5-0.5i",
// "4i", "-3", "i". Stored as the two normalized decimal texts so parsing
// round-trips and the full precision of the input survives to any
// precision_bits.
struct ComplexLiteral {
  std::string re;  // empty if the literal had no real part
  std::string im;  // empty if the literal had no imaginary part
};

ComplexLiteral parse_complex_literal(const std::string& s);
std::string render_complex_literal(const ComplexLiteral& lit);
Complex literal_to_complex(const ComplexLiteral& lit, int prec_bits);

enum class MethodChoice { series, matrix, both, asym };
enum class OutputFormat { csv, json };

MethodChoice parse_method(const std::string& s);
OutputFormat parse_format(const std::string& s);
const char* method_choice_name(MethodChoice m);
const char* format_name(OutputFormat f);

// Everything a gaps run needs; defaults match the library defaults.
struct RunConfig {
  std::array<ComplexLiteral, 4> potential{};  // a, A, b, B
  long n_start = 3;
  long n_end = 21;
  MethodChoice method = MethodChoice::both;
  int precision_bits = 256;
  double rel_tol = 1e-30;
  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  int sig_digits = 30;

  TrigPotential potential_value() const;
  PrecisionConfig precision() const;
  // canonical "a,A,b,B" form
  std::string render_potential() const;
};

// "a,A,b,B" (four complex literals) and "start:end".
void parse_potential_list(const std::string& s, RunConfig& cfg);
void parse_n_range(const std::string& s, RunConfig& cfg);

// Optional JSON config file mirroring RunConfig; fields present in the file
// replace the current values. Keys: pot, n, method, precision_bits, rel_tol,
// out, format, digits.
void apply_json_config(const std::string& path, RunConfig& cfg);

}  // namespace dgap

#endif  // DGAP_RUNCONFIG_HPP
