#include "dgap/runconfig.hpp"

#include <cctype>
#include <vector>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace dgap {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// End of a signed decimal number starting at pos, or pos if none.
size_t scan_number(const std::string& s, size_t pos) {
  size_t i = pos;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool any = false;
  while (i < s.size() && is_digit(s[i])) { ++i; any = true; }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) { ++i; any = true; }
  }
  if (!any) return pos;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    size_t k = j;
    while (k < s.size() && is_digit(s[k])) ++k;
    if (k > j) i = k;
  }
  return i;
}

std::string normalize(std::string t) {
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return t;
}

[[noreturn]] void bad_literal(const std::string& s) {
  throw std::invalid_argument("cannot parse complex literal \"" + s + "\"");
}

}  // namespace

ComplexLiteral parse_complex_literal(const std::string& s) {
  if (s.empty()) bad_literal(s);
  // bare imaginary unit forms
  if (s == "i" || s == "+i") return {"", "1"};
  if (s == "-i") return {"", "-1"};

  const size_t first_end = scan_number(s, 0);
  if (first_end == 0) bad_literal(s);

  if (first_end < s.size() && s[first_end] == 'i') {
    if (first_end + 1 != s.size()) bad_literal(s);
    return {"", normalize(s.substr(0, first_end))};
  }
  std::string re = normalize(s.substr(0, first_end));
  if (first_end == s.size()) return {re, ""};

  // signed imaginary tail: number+'i' or bare '+i'/'-i'
  if (s[first_end] != '+' && s[first_end] != '-') bad_literal(s);
  if (s.compare(first_end, std::string::npos, "+i") == 0) return {re, "1"};
  if (s.compare(first_end, std::string::npos, "-i") == 0) return {re, "-1"};
  const size_t second_end = scan_number(s, first_end);
  if (second_end == first_end || second_end + 1 != s.size() || s[second_end] != 'i')
    bad_literal(s);
  return {re, normalize(s.substr(first_end, second_end - first_end))};
}

std::string render_complex_literal(const ComplexLiteral& lit) {
  if (lit.im.empty()) return lit.re.empty() ? "0" : lit.re;
  std::string out = lit.re;
  if (!out.empty() && lit.im[0] != '-') out += "+";
  return out + lit.im + "i";
}

Complex literal_to_complex(const ComplexLiteral& lit, int prec_bits) {
  Real re = lit.re.empty() ? Real(prec_bits) : Real(lit.re, prec_bits);
  Real im = lit.im.empty() ? Real(prec_bits) : Real(lit.im, prec_bits);
  return Complex(std::move(re), std::move(im));
}

MethodChoice parse_method(const std::string& s) {
  if (s == "series") return MethodChoice::series;
  if (s == "matrix") return MethodChoice::matrix;
  if (s == "both") return MethodChoice::both;
  if (s == "asym") return MethodChoice::asym;
  throw std::invalid_argument("unknown method \"" + s + "\" (series|matrix|both|asym)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format \"" + s + "\" (csv|json)");
}

const char* method_choice_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::series: return "series";
    case MethodChoice::matrix: return "matrix";
    case MethodChoice::both: return "both";
    case MethodChoice::asym: return "asym";
  }
  return "?";
}

const char* format_name(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

TrigPotential RunConfig::potential_value() const {
  return TrigPotential(literal_to_complex(potential[0], precision_bits),
                       literal_to_complex(potential[1], precision_bits),
                       literal_to_complex(potential[2], precision_bits),
                       literal_to_complex(potential[3], precision_bits));
}

PrecisionConfig RunConfig::precision() const {
  PrecisionConfig cfg;
  cfg.precision_bits = precision_bits;
  cfg.rel_tol = rel_tol;
  cfg.validate();
  return cfg;
}

std::string RunConfig::render_potential() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += render_complex_literal(potential[static_cast<size_t>(i)]);
  }
  return out;
}

void parse_potential_list(const std::string& s, RunConfig& cfg) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (parts.size() != 4)
    throw std::invalid_argument("potential needs exactly four values a,A,b,B");
  for (size_t i = 0; i < 4; ++i)
    cfg.potential[i] = parse_complex_literal(parts[i]);
}

void parse_n_range(const std::string& s, RunConfig& cfg) {
  size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("n range must be start:end");
  try {
    cfg.n_start = std::stol(s.substr(0, colon));
    cfg.n_end = std::stol(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("n range must be two integers start:end");
  }
  if (cfg.n_start > cfg.n_end)
    throw std::invalid_argument("n range start must be <= end");
}

void apply_json_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("pot")) parse_potential_list(j["pot"].get<std::string>(), cfg);
  if (j.contains("n")) parse_n_range(j["n"].get<std::string>(), cfg);
  if (j.contains("method")) cfg.method = parse_method(j["method"].get<std::string>());
  if (j.contains("precision_bits")) cfg.precision_bits = j["precision_bits"].get<int>();
  if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
  if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
  if (j.contains("digits")) cfg.sig_digits = j["digits"].get<int>();
}

}  // namespace dgap
