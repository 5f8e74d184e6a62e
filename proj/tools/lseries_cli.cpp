// lseries: evaluate special functions, export coefficients, compute L-values
// and run the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lseries/contour.hpp>
#include <lseries/ltest.hpp>
#include <lseries/specfun.hpp>
#include <lseries/verify.hpp>

using namespace lseries;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "x" or "re,im".
Complex parse_complex(const std::string& text) {
  try {
    std::size_t used = 0;
    auto comma = text.find(',');
    if (comma == std::string::npos) {
      double re = std::stod(text, &used);
      if (used != text.size()) throw UsageError("");
      return {re, 0.0};
    }
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    double re = std::stod(a, &used);
    if (used != a.size()) throw UsageError("");
    double im = std::stod(b, &used);
    if (used != b.size()) throw UsageError("");
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "' (expected X or RE,IM)");
  }
}

int parse_int(const std::string& text) {
  Complex z = parse_complex(text);
  if (!is_integer(z)) throw UsageError("expected an integer, got '" + text + "'");
  return static_cast<int>(z.real());
}

void print_value(Complex z) { std::printf("%.17g %.17g\n", z.real(), z.imag()); }

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: specfun " + usage);
}

Complex run_specfun(const std::string& fn, const std::vector<std::string>& args) {
  if (fn == "E") {
    need(args, 2, "E S Z");
    return exp_int_E(parse_complex(args[0]), parse_complex(args[1])).value;
  }
  if (fn == "Gamma") {
    need(args, 2, "Gamma R Z");
    return inc_gamma_upper(parse_complex(args[0]), parse_complex(args[1])).value;
  }
  if (fn == "gamma") {
    need(args, 1, "gamma Z");
    return gamma(parse_complex(args[0]));
  }
  if (fn == "EI") {
    need(args, 1, "EI W");
    return cal_EI(parse_complex(args[0]).real()).value;
  }
  if (fn == "hurwitz") {
    need(args, 2, "hurwitz S Z");
    return hurwitz_zeta(parse_complex(args[0]), parse_complex(args[1])).value;
  }
  if (fn == "zeta_star") {
    need(args, 2, "zeta_star A Z");
    return hurwitz_zeta_star(parse_complex(args[0]).real(), parse_complex(args[1])).value;
  }
  if (fn == "lerch") {
    need(args, 3, "lerch S A Z");
    return lerch_zeta(parse_complex(args[0]), parse_complex(args[1]), parse_complex(args[2])).value;
  }
  if (fn == "polygamma") {
    need(args, 2, "polygamma M Z");
    return polygamma(parse_int(args[0]), parse_complex(args[1])).value;
  }
  if (fn == "bernoulli") {
    need(args, 2, "bernoulli N Z");
    return bernoulli_poly(parse_int(args[0]), parse_complex(args[1]));
  }
  throw UsageError("unknown function '" + fn + "' (E, Gamma, gamma, EI, hurwitz, zeta_star, lerch, polygamma, bernoulli)");
}

std::string form_with_precision(const std::string& form, int prec) {
  if (form == "J" || form == "Jsq") return form + ":" + std::to_string(std::max(prec, form == "J" ? 2 : 3));
  return form;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-series of weakly holomorphic and harmonic Maass forms"};
  app.require_subcommand(1);

  std::string fn;
  std::vector<std::string> fn_args;
  auto* specfun = app.add_subcommand("specfun", "Evaluate a special function; prints 're im'");
  specfun->add_option("fn", fn, "E, Gamma, gamma, EI, hurwitz, zeta_star, lerch, polygamma, bernoulli")->required();
  specfun->add_option("args", fn_args, "Arguments, each X or RE,IM (use -- before negative values)");
  specfun->allow_extras();

  std::string coeff_form;
  int prec = 10;
  std::string format = "csv";
  auto* coeffs = app.add_subcommand("coeffs", "Print Fourier coefficients for exponents below --prec");
  coeffs->add_option("form", coeff_form, "J, Jsq or synth:<json>")->required();
  coeffs->add_option("--prec", prec, "Exponent bound")->check(CLI::PositiveNumber);
  coeffs->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string lv_form;
  double lv_s = 0.0;
  std::string lv_w = "0";
  bool star = false;
  auto* lvalue = app.add_subcommand("lvalue", "Series side L_f(phi_s^w), or L*(f, s) with --star");
  lvalue->add_option("form", lv_form, "J, Jsq or synth:<json>")->required();
  lvalue->add_option("--s", lv_s, "Real s")->required();
  lvalue->add_option("--w", lv_w, "w as RE,IM");
  lvalue->add_flag("--star", star, "Compute L*(f, s)");

  std::string config;
  std::string filter;
  std::string report;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the verification suite; exit 0 iff no check fails");
  verify->add_option("--config", config, "JSON suite with a top-level \"checks\" array")->check(CLI::ExistingFile);
  verify->add_option("--filter", filter, "Glob on check ids");
  verify->add_option("--report", report, "Write the JSON report here");
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  // "specfun ... -- -x" hands everything after "--" to the top level. Set
  // after the subcommands exist so they do not inherit it.
  app.allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  std::vector<std::string> extras = app.remaining();
  for (const auto& e : specfun->remaining()) extras.push_back(e);
  std::erase(extras, std::string("--"));
  if (!extras.empty() && !*specfun) {
    std::cerr << "The following argument was not expected: " << extras.front() << "\nRun with --help for more information.\n";
    return kUsageError;
  }

  try {
    if (*specfun) {
      fn_args.insert(fn_args.end(), extras.begin(), extras.end());
      print_value(run_specfun(fn, fn_args));
      return 0;
    }
    if (*coeffs) {
      FourierExpansion f = resolve_form(form_with_precision(coeff_form, prec));
      std::cout << (format == "csv" ? coefficients_csv(f, prec) : coefficients_json(f, prec) + "\n");
      return 0;
    }
    if (*lvalue) {
      FourierExpansion f = resolve_form(lv_form);
      if (star) {
        print_value(l_star(f, lv_s).value);
      } else {
        print_value(l_value(f, TestFunction::phi_sw(lv_s, parse_complex(lv_w))).value);
      }
      return 0;
    }
    if (*verify) {
      std::vector<CheckSpec> specs = config.empty() ? default_suite() : load_suite(config);
      if (!filter.empty()) specs = filter_suite(specs, filter);
      SuiteResult result = run_suite(specs, threads);
      std::cout << report_text(result);
      if (!report.empty()) {
        std::ofstream out(report);
        if (!out) throw ConfigError("cannot write report '" + report + "'");
        out << report_json(result);
      }
      return result.failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
