#pragma once

// Batch verification: each check evaluates both sides of one identity through
// independent pipelines and compares them.

#include <optional>
#include <string>
#include <vector>

#include <lseries/contour.hpp>
#include <lseries/ltest.hpp>
#include <lseries/modforms.hpp>

namespace lseries {

enum class Theorem {
  thm_maincor,
  thm_main,
  prop_zag,
  cor_bernWHF,
  thm_bern,
  cor_polyl,
  cor_hurw,
  prop_fe,
  lemma_bend,
  lemma_integral_form,
  sect6_compact,
  r_form_equality,
  bfi_consistency,
};

std::string to_string(Theorem t);
/// Throws ConfigError on an unknown name.
Theorem parse_theorem(const std::string& name);

struct CheckParams {
  double s = 0.0;
  Complex w{0.0, 1.0};
  int m = 1;
  /// Heights for sect6_compact, exponent for lemma_bend (a only).
  double a = 1.0;
  double b = 2.0;
  double T = 200.0;
  AnalyticSeed seed{{{1.0, 2.0}}};
  /// Empty, "printed", "polygamma", "polygamma_printed", "one_dim", "compact".
  std::string variant;
};

struct CheckSpec {
  std::string id;
  Theorem theorem = Theorem::thm_maincor;
  /// "J", "Jsq", "J:<prec>", "Jsq:<prec>" or "synth:<json>".
  std::string form = "J";
  CheckParams params;
  double tolerance = 1e-6;
  /// When set, the relative error must also be within this bound.
  std::optional<double> rel_tolerance;

  void validate() const;
};

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string id;
  Complex lhs{};
  Complex rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double lhs_err_est = 0.0;
  double rhs_err_est = 0.0;
  CheckStatus status = CheckStatus::skipped;
  long runtime_ms = 0;
  std::string message;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Tolerance used when a check does not give one: LSERIES_DEFAULT_TOL if set,
/// otherwise 1e-6.
double default_tolerance();

/// Builds the expansion named by a form descriptor.
FourierExpansion resolve_form(const std::string& descriptor);

/// Parses a JSON document with a top-level "checks" array. Syntax errors are
/// reported with line and column.
std::vector<CheckSpec> parse_suite(const std::string& text);
std::vector<CheckSpec> load_suite(const std::string& path);

/// The bundled suite covering every identity family.
std::vector<CheckSpec> default_suite();

/// Shell-style glob on check ids.
std::vector<CheckSpec> filter_suite(const std::vector<CheckSpec>& specs, const std::string& glob);

/// Never throws for evaluator failures: those become status fail with the
/// error text; violated preconditions become skipped.
CheckReport run_check(const CheckSpec& spec);

/// Runs checks concurrently; reports keep the order of `specs`.
SuiteResult run_suite(const std::vector<CheckSpec>& specs, int threads = 0);

/// {"summary": {...}, "checks": [...]}; runtimes are omitted when
/// `with_runtime` is false so two runs compare byte for byte.
std::string report_json(const SuiteResult& result, bool with_runtime = true);

/// One line per check plus a summary line.
std::string report_text(const SuiteResult& result);

}  // namespace lseries
