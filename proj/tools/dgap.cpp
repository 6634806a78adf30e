// dgap: periodic/antiperiodic eigenvalue pairs and spectral gaps of the 1D
// Dirac operator with the two-mode trigonometric potential, computed by the
// walk-sum series solver, a truncated-matrix oracle, and closed-form
// asymptotics.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "dgap/asymptotics.hpp"
#include "dgap/errors.hpp"
#include "dgap/gap_table.hpp"
#include "dgap/matrix_oracle.hpp"
#include "dgap/runconfig.hpp"
#include "dgap/verify.hpp"
#include "dgap/walks.hpp"

namespace {

int run_gaps(dgap::RunConfig cfg) {
  using namespace dgap;
  if (cfg.method == MethodChoice::asym && !cfg.potential_value().nonzero()) {
    std::cerr << "dgap gaps: the asymptotic predictors require all four potential "
                 "coefficients nonzero\n";
    return 2;
  }
  std::vector<GapRow> rows = compute_gap_rows(cfg);
  std::string payload = cfg.format == OutputFormat::csv
                            ? rows_to_csv(rows, cfg.sig_digits)
                            : rows_to_json(rows, cfg.sig_digits);
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "dgap gaps: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    out << payload;
  }
  return rows_exit_code(rows);
}

int run_walks(const std::string& pot, long n, const std::string& kind_name, long index,
              int bits) {
  using namespace dgap;
  RunConfig rc;
  parse_potential_list(pot, rc);
  rc.precision_bits = bits;
  TrigPotential v = rc.potential_value();

  WalkKind kind;
  if (kind_name == "X") kind = WalkKind::X;
  else if (kind_name == "Y") kind = WalkKind::Y;
  else if (kind_name == "W") kind = WalkKind::W;
  else {
    std::cerr << "dgap walks: kind must be X, Y or W\n";
    return 2;
  }

  std::vector<Walk> walks = enumerate_walks(kind, n, index);
  const Complex z(bits);
  Complex sum(bits);
  std::cout << walks.size() << " walks\n";
  for (const Walk& w : walks) {
    std::cout << "steps:";
    for (int s : w.steps) std::cout << " " << (s > 0 ? "+2" : "-2");
    std::cout << "  vertices:";
    for (long j : w.vertices()) std::cout << " " << j;
    Complex weight = walk_weight(w, z, v);
    sum += weight;
    std::cout << "  weight: " << weight.to_string(20) << "\n";
  }
  if (!walks.empty())
    std::cout << (kind == WalkKind::W ? "tau" : "sigma") << " = " << sum.to_string(30)
              << "\n";
  return 0;
}

// Deviation report: computed pairs against the closed-form predictors.
int run_deviations(const dgap::RunConfig& cfg) {
  using namespace dgap;
  if (!cfg.potential_value().nonzero()) {
    std::cerr << "dgap deviations: predictors require all four coefficients nonzero\n";
    return 2;
  }
  PrecisionConfig pc = cfg.precision();
  TrigPotential v = cfg.potential_value();
  std::vector<SpectralPair> pairs;
  std::vector<long> failed;
  for (long n = cfg.n_start; n <= cfg.n_end; ++n) {
    if (std::labs(n) < 3) continue;
    try {
      pairs.push_back(cfg.method == MethodChoice::matrix ? spectral_pair_matrix(n, v, pc)
                                                         : spectral_pair_series(n, v, pc));
    } catch (const std::exception&) {
      failed.push_back(n);
    }
  }
  DeviationReport rep = deviation_report(pairs, v, pc);
  std::ostringstream out;
  out << "n,m,gap_zero,gamma_abs,pred_gamma_abs,ratio_sq_re,ratio_sq_im,e_gap,e_lambda,"
         "phi_check\n";
  const int d = cfg.sig_digits;
  for (const DeviationRow& r : rep.rows) {
    out << r.n << "," << r.m << "," << (r.gap_zero ? 1 : 0) << ","
        << r.gamma_abs.to_scientific(d) << "," << r.pred_gamma_abs.to_scientific(d) << ","
        << r.ratio_sq.re().to_scientific(d) << "," << r.ratio_sq.im().to_scientific(d) << ","
        << r.e_gap.to_scientific(d) << "," << r.e_lambda.to_scientific(d) << ","
        << r.phi_check.to_scientific(d) << "\n";
  }
  out << "# max_e_gap," << rep.max_e_gap.to_scientific(d) << ",max_e_lambda,"
      << rep.max_e_lambda.to_scientific(d) << ",unbounded_flag,"
      << (rep.unbounded_flag ? 1 : 0) << "\n";
  for (long n : failed) out << "# no pair at n=" << n << "\n";
  if (cfg.out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "dgap deviations: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    f << out.str();
  }
  return failed.empty() ? 0 : 3;
}

int run_verify(bool quick, int precision_bits) {
  dgap::verify::Options opt;
  opt.quick = quick;
  opt.precision_bits = precision_bits;
  opt.on_result = [](const dgap::verify::CheckResult& r) {
    std::cout << dgap::verify::format_result(r) << std::endl;
  };
  auto results = dgap::verify::run_all(opt);
  bool ok = dgap::verify::all_passed(results);
  std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << std::endl;
  return ok ? 0 : 1;
}

// The optional JSON config file provides defaults; explicit flags win.
std::string find_config_arg(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral gaps of the two-mode trigonometric Dirac operator"};
  app.require_subcommand(1);

  dgap::RunConfig cfg;
  std::string config_path = find_config_arg(argc, argv);
  if (!config_path.empty()) {
    try {
      dgap::apply_json_config(config_path, cfg);
    } catch (const std::exception& e) {
      std::cerr << "dgap: " << e.what() << "\n";
      return 2;
    }
  }

  // ---- gaps ----
  auto* gaps = app.add_subcommand("gaps", "eigenvalue pairs and gaps over an n range");
  std::string pot_arg = cfg.potential[0].re.empty() && cfg.potential[0].im.empty()
                            ? std::string()
                            : cfg.render_potential();
  std::string n_arg = std::to_string(cfg.n_start) + ":" + std::to_string(cfg.n_end);
  std::string method_arg = dgap::method_choice_name(cfg.method);
  std::string format_arg = dgap::format_name(cfg.format);
  std::string config_dummy;
  gaps->add_option("--config", config_dummy, "JSON config file mirroring the run options");
  auto* pot_opt = gaps->add_option("--pot", pot_arg, "potential a,A,b,B (complex, re+imi)");
  if (pot_arg.empty()) pot_opt->required();
  gaps->add_option("--n", n_arg, "inclusive n range start:end");
  gaps->add_option("--method", method_arg, "series|matrix|both|asym");
  gaps->add_option("--precision-bits", cfg.precision_bits, "significand width in bits")
      ->envname("DGAP_PRECISION_BITS");
  gaps->add_option("--rel-tol", cfg.rel_tol, "relative series/iteration tolerance")
      ->envname("DGAP_REL_TOL");
  gaps->add_option("--out", cfg.out_path, "output file (default stdout)");
  gaps->add_option("--format", format_arg, "csv|json");
  gaps->add_option("--digits", cfg.sig_digits, "significant digits in numeric output");

  // ---- walks ----
  auto* walks = app.add_subcommand("walks", "list admissible walks and their weights");
  long wn = 3, wr = 0, wnu = 0;
  std::string wkind = "X";
  std::string wpot = "1,1,1,1";
  walks->add_option("--n", wn, "walk endpoint n")->required();
  walks->add_option("--kind", wkind, "X|Y|W");
  walks->add_option("--r", wr, "wrong-direction step count (X/Y)");
  walks->add_option("--nu", wnu, "half-length nu (W)");
  walks->add_option("--pot", wpot, "potential a,A,b,B for the weights");
  int wbits = 256;
  walks->add_option("--precision-bits", wbits, "significand width in bits")
      ->envname("DGAP_PRECISION_BITS");

  // ---- deviations ----
  auto* devs = app.add_subcommand("deviations",
                                  "computed pairs against the closed-form predictors");
  std::string dpot, dn = "7:31", dmethod = "series";
  int dbits = 256;
  double drel = 1e-46;
  std::string dout;
  int ddigits = 20;
  devs->add_option("--pot", dpot, "potential a,A,b,B (all nonzero)")->required();
  devs->add_option("--n", dn, "inclusive n range start:end");
  devs->add_option("--method", dmethod, "series|matrix");
  devs->add_option("--precision-bits", dbits, "significand width in bits")
      ->envname("DGAP_PRECISION_BITS");
  devs->add_option("--rel-tol", drel, "relative series tolerance")
      ->envname("DGAP_REL_TOL");
  devs->add_option("--out", dout, "output file (default stdout)");
  devs->add_option("--digits", ddigits, "significant digits");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  bool quick = false;
  int vbits = 0;
  verify->add_flag("--quick", quick, "reduced subset (walk sums, even-n, free operator)");
  verify->add_option("--precision", vbits,
                     "override working precision (relaxes tolerances per the precision model)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : 2;
  }

  try {
    if (gaps->parsed()) {
      dgap::parse_potential_list(pot_arg, cfg);
      dgap::parse_n_range(n_arg, cfg);
      cfg.method = dgap::parse_method(method_arg);
      cfg.format = dgap::parse_format(format_arg);
      cfg.precision().validate();
      return run_gaps(cfg);
    }
    if (walks->parsed()) {
      long index = (wkind == "W") ? wnu : wr;
      return run_walks(wpot, wn, wkind, index, wbits);
    }
    if (devs->parsed()) {
      dgap::RunConfig dcfg;
      dgap::parse_potential_list(dpot, dcfg);
      dgap::parse_n_range(dn, dcfg);
      dcfg.method = dgap::parse_method(dmethod);
      if (dcfg.method != dgap::MethodChoice::series &&
          dcfg.method != dgap::MethodChoice::matrix) {
        std::cerr << "dgap deviations: method must be series or matrix\n";
        return 2;
      }
      dcfg.precision_bits = dbits;
      dcfg.rel_tol = drel;
      dcfg.out_path = dout;
      dcfg.sig_digits = ddigits;
      dcfg.precision().validate();
      return run_deviations(dcfg);
    }
    if (verify->parsed()) return run_verify(quick, vbits);
  } catch (const dgap::EnumerationCapError& e) {
    std::cerr << "dgap: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dgap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dgap: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
