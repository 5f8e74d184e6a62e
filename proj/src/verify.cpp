#include <lseries/verify.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lseries {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Thrown by the dispatcher when a check's parameters fall outside the regime
// of its identity; reported as skipped.
struct Skip {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw Skip{reason};
}

constexpr std::pair<Theorem, const char*> kTheoremNames[] = {
    {Theorem::thm_maincor, "thm_maincor"},
    {Theorem::thm_main, "thm_main"},
    {Theorem::prop_zag, "prop_zag"},
    {Theorem::cor_bernWHF, "cor_bernWHF"},
    {Theorem::thm_bern, "thm_bern"},
    {Theorem::cor_polyl, "cor_polyl"},
    {Theorem::cor_hurw, "cor_hurw"},
    {Theorem::prop_fe, "prop_fe"},
    {Theorem::lemma_bend, "lemma_bend"},
    {Theorem::lemma_integral_form, "lemma_integral_form"},
    {Theorem::sect6_compact, "sect6_compact"},
    {Theorem::r_form_equality, "r_form_equality"},
    {Theorem::bfi_consistency, "bfi_consistency"},
};

Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError(what + ": expected a number or an [re, im] pair");
}

ordered_json complex_to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

CoefficientMap coefficient_map(const json& j, const std::string& what) {
  CoefficientMap out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw ConfigError(what + ": expected an object keyed by exponent");
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw ConfigError(what + ": key '" + key + "' is not an integer");
    out[n] = complex_from_json(value, what + "[" + key + "]");
  }
  return out;
}

FourierExpansion synth_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("synth form: expected a JSON object");
  int k = j.value("k", j.value("weight", 0));
  return synth_harmonic(k, coefficient_map(j.value("holo", json()), "synth holo"),
                        coefficient_map(j.value("nonholo", json()), "synth nonholo"));
}

AnalyticSeed seed_from_json(const json& j) {
  AnalyticSeed seed;
  if (j.is_string()) {
    // "z^-P"
    const std::string s = j.get<std::string>();
    if (s.rfind("z^-", 0) != 0) throw ConfigError("phi: expected 'z^-P', got '" + s + "'");
    try {
      seed.terms.push_back({1.0, std::stod(s.substr(3))});
    } catch (const std::exception&) {
      throw ConfigError("phi: bad exponent in '" + s + "'");
    }
    return seed;
  }
  if (!j.is_array()) throw ConfigError("phi: expected 'z^-P' or a list of [re, im, P] terms");
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ConfigError("phi: each term is [re, im, P]");
    seed.terms.push_back({{t[0].get<double>(), t[1].get<double>()}, t[2].get<double>()});
  }
  return seed;
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string::npos) line_end = text.size();
  std::ostringstream os;
  os << "line " << line << ", column " << (byte >= line_start ? byte - line_start : 0) << ": "
     << text.substr(line_start, line_end - line_start);
  return os.str();
}

CheckSpec spec_from_json(const json& j, std::size_t index) {
  const std::string where = "checks[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  CheckSpec spec;
  try {
    spec.id = j.at("id").get<std::string>();
    spec.theorem = parse_theorem(j.at("theorem").get<std::string>());
    if (j.contains("form")) {
      const json& form = j["form"];
      spec.form = form.is_string() ? form.get<std::string>() : "synth:" + form.dump();
    }
    CheckParams& p = spec.params;
    p.s = j.value("s", p.s);
    if (j.contains("w")) p.w = complex_from_json(j["w"], where + ".w");
    p.m = j.value("m", p.m);
    p.a = j.value("a", p.a);
    p.b = j.value("b", p.b);
    p.T = j.value("T", p.T);
    if (j.contains("phi")) p.seed = seed_from_json(j["phi"]);
    p.variant = j.value("variant", p.variant);
    spec.tolerance = j.contains("tolerance") ? j["tolerance"].get<double>() : default_tolerance();
    if (j.contains("rel_tolerance")) spec.rel_tolerance = j["rel_tolerance"].get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  spec.validate();
  return spec;
}

double combined_error(const CheckReport& r) { return r.lhs_err_est + r.rhs_err_est; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fmt(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

void set_sides(CheckReport& r, const Estimate& lhs, const Estimate& rhs) {
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.lhs_err_est = lhs.error;
  r.rhs_err_est = rhs.error;
}

Estimate series_side(const FourierExpansion& f, const TestFunction& phi) {
  LValue v = l_value(f, phi);
  return {v.value, v.error_estimate};
}

// Deviation of a printed closed form from the adjudicated value, for the
// diagnostic message.
std::string printed_note(const char* name, const Estimate& printed, Complex reference) {
  return std::string(name) + " = " + fmt(printed.value) + " (deviation " +
         fmt(std::abs(printed.value - reference)) + ")";
}

void evaluate(const CheckSpec& spec, CheckReport& r) {
  const CheckParams& p = spec.params;
  if (spec.theorem == Theorem::lemma_bend) {
    const bool upper = p.w.imag() > 0.0;
    require(upper || (p.w.imag() == 0.0 && p.w.real() > 0.0 && p.a < 0.0),
            "needs Im(w) > 0, or real w > 0 with a < 0");
    set_sides(r, ray_integral_bend(p.a, p.w, p.T), ipow(p.a) * exp_int_E(1.0 - p.a, p.w));
    return;
  }

  const FourierExpansion f = resolve_form(spec.form);
  const bool whf = f.is_weakly_holomorphic();
  switch (spec.theorem) {
    case Theorem::thm_maincor:
      require(whf, "needs a weakly holomorphic form");
      require(p.w.imag() > 0.0, "needs Im(w) > 0");
      set_sides(r, series_side(f, TestFunction::phi_sw(p.s, p.w)), rhs_main_theorem(f, p.s, p.w));
      return;
    case Theorem::thm_main: {
      require(f.weight <= 0, "needs weight k <= 0");
      require(p.w.imag() > 0.0 && p.w.real() >= 0.0, "needs Im(w) > 0 and Re(w) >= 0");
      const RForm form = p.variant == "one_dim" ? RForm::one_dim : RForm::double_integral;
      set_sides(r, series_side(f, TestFunction::phi_sw(p.s, p.w)), rhs_main_theorem(f, p.s, p.w, {}, form));
      return;
    }
    case Theorem::prop_zag:
      require(whf, "needs a weakly holomorphic form");
      set_sides(r, l_star(f, 0.0), rhs_integer_value(f, 0));
      return;
    case Theorem::cor_bernWHF:
      require(whf, "needs a weakly holomorphic form");
      require(p.m >= 1, "needs m >= 1");
      set_sides(r, l_star(f, 1.0 + p.m), rhs_bern_whf(f, p.m));
      return;
    case Theorem::thm_bern: {
      require(f.weight <= 0, "needs weight k <= 0");
      require(p.m >= 1, "needs m >= 1");
      const double s = 1.0 + p.m;
      const Estimate lhs = series_side(f, TestFunction::phi_sw(s, 0.0));
      const Estimate printed = rhs_bern(f, p.m);
      if (p.variant == "printed") {
        set_sides(r, lhs, printed);
        return;
      }
      set_sides(r, lhs, rhs_limit_oracle(f, s));
      r.message = printed_note("printed formula", printed, lhs.value);
      return;
    }
    case Theorem::cor_polyl: {
      require(f.weight <= 0, "needs weight k <= 0");
      const Estimate lhs = series_side(f, TestFunction::phi_sw(1.0, 0.0));
      const Estimate printed = rhs_polyl(f);
      if (whf || p.variant == "printed") {
        set_sides(r, lhs, printed);
        return;
      }
      set_sides(r, lhs, rhs_limit_oracle(f, 1.0));
      r.message = printed_note("printed formula", printed, lhs.value);
      return;
    }
    case Theorem::cor_hurw: {
      require(whf, "needs a weakly holomorphic form");
      require(p.s < 0.0, "needs s < 0");
      const Estimate lhs = l_star(f, p.s);
      if (p.variant == "polygamma" || p.variant == "polygamma_printed") {
        require(p.s == std::round(p.s), "the polygamma form needs integer s");
        set_sides(r, lhs,
                  rhs_negative_s_polygamma(f, static_cast<int>(p.s), {}, p.variant == "polygamma_printed"));
        return;
      }
      set_sides(r, lhs, rhs_negative_s(f, p.s));
      return;
    }
    case Theorem::prop_fe: {
      require(f.modular, "needs a modular form");
      require(f.level == 1, "needs level 1, where f|W_N = f");
      const int k = f.weight;
      const int N = f.level;
      try {
        require_fricke_admissible(f, p.w, N);
      } catch (const AdmissibilityError& e) {
        throw Skip{e.what()};
      }
      const TestFunction phi = TestFunction::phi_sw(p.s, p.w);
      const Complex factor = ipow(static_cast<double>(k)) * std::pow(static_cast<double>(N), 1.0 - k / 2.0);
      set_sides(r, series_side(f, phi), factor * series_side(f, fricke_transform_testfn(phi, 2 - k, N)));
      return;
    }
    case Theorem::lemma_integral_form: {
      TestFunction phi;
      if (p.variant == "compact") {
        require(p.a > 0.0 && p.b > p.a, "needs 0 < a < b");
        phi = TestFunction::compact(p.seed, p.a, p.b);
      } else {
        require(p.w.real() > kTwoPi * f.n0, "needs Re(w) > 2 pi n0 for the vertical integral");
        phi = TestFunction::phi_sw(p.s, p.w);
      }
      set_sides(r, series_side(f, phi), l_value_by_vertical_integral(f, phi));
      return;
    }
    case Theorem::sect6_compact:
      require(whf, "needs a weakly holomorphic form");
      require(p.a > 0.0 && p.b > p.a, "needs 0 < a < b");
      set_sides(r, compact_support_value(f, p.seed, p.a, p.b),
                l_value_by_vertical_integral(f, TestFunction::compact(p.seed, p.a, p.b)));
      return;
    case Theorem::r_form_equality:
      require(f.weight <= 0, "needs weight k <= 0");
      require(p.w.imag() > 0.0, "needs Im(w) > 0");
      set_sides(r, r_remainder(f, p.s, p.w, RForm::one_dim), r_remainder(f, p.s, p.w, RForm::double_integral));
      return;
    case Theorem::bfi_consistency: {
      require(whf, "needs a weakly holomorphic form");
      // Real parts: 2 sum a(n) EI(2 pi n) against 2 Re of -int f psi.
      const Estimate bfi = bfi_quantity(f);
      const Estimate zag = rhs_integer_value(f, 0);
      set_sides(r, {bfi.value.real(), bfi.error}, {2.0 * zag.value.real(), 2.0 * zag.error});
      return;
    }
    case Theorem::lemma_bend:
      break;
  }
}

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& [value, name] : kTheoremNames) {
    if (value == t) return name;
  }
  return "unknown";
}

Theorem parse_theorem(const std::string& name) {
  for (const auto& [value, n] : kTheoremNames) {
    if (name == n) return value;
  }
  throw ConfigError("unknown theorem '" + name + "'");
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

void CheckSpec::validate() const {
  if (id.empty()) throw ConfigError("check id must be non-empty");
  if (!(tolerance > 0.0)) throw ConfigError("check '" + id + "': tolerance must be positive");
  if (rel_tolerance && !(*rel_tolerance > 0.0)) {
    throw ConfigError("check '" + id + "': rel_tolerance must be positive");
  }
  if (theorem == Theorem::lemma_bend && !(params.T > 0.0)) {
    throw ConfigError("check '" + id + "': T must be positive");
  }
}

double default_tolerance() {
  if (const char* env = std::getenv("LSERIES_DEFAULT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw ConfigError(std::string("LSERIES_DEFAULT_TOL: not a positive number: '") + env + "'");
  }
  return 1e-6;
}

FourierExpansion resolve_form(const std::string& descriptor) {
  if (descriptor.rfind("synth:", 0) == 0) {
    json j;
    try {
      j = json::parse(descriptor.substr(6));
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("synth form: ") + e.what());
    }
    return synth_from_json(j);
  }
  std::string name = descriptor;
  int prec = 40;
  if (auto colon = descriptor.find(':'); colon != std::string::npos) {
    name = descriptor.substr(0, colon);
    try {
      prec = std::stoi(descriptor.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("form '" + descriptor + "': bad precision");
    }
  }
  if (name == "J") return build_J(prec);
  if (name == "Jsq") return build_J_squared(prec);
  throw ConfigError("unknown form '" + descriptor + "' (expected J, Jsq or synth:<json>)");
}

std::vector<CheckSpec> parse_suite(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at " + line_context(text, e.byte == 0 ? 0 : e.byte - 1) + "\n" +
                      e.what());
  }
  if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array()) {
    throw ConfigError("config: expected a top-level object with a \"checks\" array");
  }
  std::vector<CheckSpec> out;
  for (std::size_t i = 0; i < doc["checks"].size(); ++i) out.push_back(spec_from_json(doc["checks"][i], i));
  return out;
}

std::vector<CheckSpec> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_suite(ss.str());
}

std::vector<CheckSpec> default_suite() {
  const double tol = default_tolerance();
  std::vector<CheckSpec> out;
  auto add = [&](std::string id, Theorem t, std::string form, CheckParams p, double tolerance,
                 std::optional<double> rel = std::nullopt) {
    out.push_back({std::move(id), t, std::move(form), std::move(p), tolerance, rel});
  };
  auto sw = [](double s, Complex w) {
    CheckParams p;
    p.s = s;
    p.w = w;
    return p;
  };
  auto with_m = [](int m) {
    CheckParams p;
    p.m = m;
    return p;
  };
  const std::string synth_whf = R"(synth:{"k":0,"holo":{"-1":1,"1":2,"3":-1}})";
  const std::string synth_k0 = R"(synth:{"k":0,"holo":{"1":1},"nonholo":{"-1":1}})";
  const std::string synth_k2 =
      R"(synth:{"k":-2,"holo":{"-1":1,"1":0.5},"nonholo":{"-1":[2,-1],"-2":[0.3,0.2]}})";

  // Ray integral against the generalized exponential integral.
  for (double a : {-1.0, 0.5, 2.0}) {
    for (Complex w : {Complex{0, 1}, Complex{0, 2}, Complex{1, 1}}) {
      CheckParams p;
      p.a = a;
      p.w = w;
      add("bend/a=" + fmt(a) + "/w=" + fmt(w), Theorem::lemma_bend, "J", p, tol);
    }
  }
  {
    CheckParams p;
    p.a = -1.0;
    p.w = 1.0;
    add("bend/a=-1/w=1", Theorem::lemma_bend, "J", p, tol);
  }

  // Weakly holomorphic contour identity.
  for (const auto& [name, form] :
       std::vector<std::pair<std::string, std::string>>{{"J", "J"}, {"Jsq", "Jsq"}, {"synth", synth_whf}}) {
    for (double s : {-1.5, 0.0, 0.5, 2.0}) {
      for (Complex w : {Complex{0, 1}, Complex{0.3, 0.7}}) {
        if (name != "J" && s != 0.5 && s != -1.5) continue;
        add("maincor/" + name + "/s=" + fmt(s) + "/w=" + fmt(w), Theorem::thm_maincor, form, sw(s, w),
            std::min(tol, 1e-7));
      }
    }
  }

  // Harmonic contour identity and the two forms of R.
  for (const auto& [name, form] : std::vector<std::pair<std::string, std::string>>{{"k0", synth_k0}, {"k-2", synth_k2}}) {
    for (double s : {0.5, 1.0, 2.0}) {
      add("main/" + name + "/s=" + fmt(s), Theorem::thm_main, form, sw(s, {0.5, 1.0}), tol);
    }
    add("rform/" + name + "/s=1", Theorem::r_form_equality, form, sw(1.0, {0.5, 1.0}), tol);
  }

  // Integer values for J: m < 0, m = 0, m = 1, m >= 2.
  for (int m = -3; m <= -1; ++m) {
    add("hurw/J/s=" + std::to_string(m), Theorem::cor_hurw, "J", sw(m, 0.0), std::min(tol, 1e-7));
  }
  {
    CheckParams p = sw(-1.0, 0.0);
    p.variant = "polygamma";
    add("hurw/J/s=-1/polygamma", Theorem::cor_hurw, "J", p, std::min(tol, 1e-7));
  }
  add("zag/J", Theorem::prop_zag, "J", {}, std::min(tol, 1e-7));
  add("polyl/J", Theorem::cor_polyl, "J", {}, std::min(tol, 1e-7));
  add("bernwhf/J/m=1", Theorem::cor_bernWHF, "J", with_m(1), std::min(tol, 1e-7));
  add("bernwhf/J/m=2", Theorem::cor_bernWHF, "J", with_m(2), std::min(tol, 1e-7));
  add("bfi/J", Theorem::bfi_consistency, "J", {}, std::min(tol, 1e-7));

  // Harmonic integer values, adjudicated by the x -> 0+ limit.
  for (const auto& [name, form] : std::vector<std::pair<std::string, std::string>>{{"k0", synth_k0}, {"k-2", synth_k2}}) {
    add("polyl/" + name, Theorem::cor_polyl, form, {}, std::max(tol, 1e-5));
    for (int m : {1, 2}) {
      add("bern/" + name + "/m=" + std::to_string(m), Theorem::thm_bern, form, with_m(m), std::max(tol, 1e-5));
    }
  }

  // Functional equation; both sides are ~1e-12 here, so a relative bound is
  // what makes the comparison meaningful.
  for (double s : {0.0, 1.0, -0.5}) {
    add("fe/J/s=" + fmt(s), Theorem::prop_fe, "J", sw(s, {30.0, 5.0}), tol, 1e-9);
  }

  // Compactly supported test functions.
  for (const auto& [phi, b] : std::vector<std::pair<double, double>>{{2.0, 2.0}, {3.0, 1.5}, {3.0, 2.0}}) {
    CheckParams p;
    p.seed = AnalyticSeed{{{1.0, phi}}};
    p.a = 1.0;
    p.b = b;
    add("compact/J/z^-" + fmt(phi) + "/[1," + fmt(b) + "]", Theorem::sect6_compact, "J", p, std::min(tol, 1e-8));
  }

  // Series side against direct integration on the imaginary axis.
  add("integral/J/s=0.5/w=7+i", Theorem::lemma_integral_form, "J", sw(0.5, {7.0, 1.0}), tol);
  add("integral/J/s=0/w=30+5i", Theorem::lemma_integral_form, "J", sw(0.0, {30.0, 5.0}), tol, 1e-9);
  add("integral/Jsq/s=2/w=13+0.5i", Theorem::lemma_integral_form, "Jsq", sw(2.0, {13.0, 0.5}), tol);
  add("integral/synth/s=0.5/w=7", Theorem::lemma_integral_form, synth_whf, sw(0.5, 7.0), tol);
  add("integral/k-2/s=1/w=7+i", Theorem::lemma_integral_form, synth_k2, sw(1.0, {7.0, 1.0}), tol);
  {
    CheckParams p;
    p.variant = "compact";
    p.seed = AnalyticSeed{{{1.0, 2.0}}};
    p.a = 1.0;
    p.b = 2.0;
    add("integral/J/compact", Theorem::lemma_integral_form, "J", p, tol);
  }
  return out;
}

std::vector<CheckSpec> filter_suite(const std::vector<CheckSpec>& specs, const std::string& glob) {
  std::vector<CheckSpec> out;
  for (const auto& s : specs) {
    if (fnmatch(glob.c_str(), s.id.c_str(), 0) == 0) out.push_back(s);
  }
  return out;
}

CheckReport run_check(const CheckSpec& spec) {
  CheckReport r;
  r.id = spec.id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    spec.validate();
    evaluate(spec, r);
    r.abs_err = std::abs(r.lhs - r.rhs);
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    bool ok = std::isfinite(r.abs_err) && r.abs_err <= std::max(spec.tolerance, combined_error(r));
    if (ok && spec.rel_tolerance) ok = r.rel_err <= *spec.rel_tolerance;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) {
      std::string why = "abs_err " + fmt(r.abs_err) + " > tolerance " + fmt(spec.tolerance);
      if (spec.rel_tolerance && r.abs_err <= std::max(spec.tolerance, combined_error(r))) {
        why = "rel_err " + fmt(r.rel_err) + " > rel_tolerance " + fmt(*spec.rel_tolerance);
      }
      r.message = r.message.empty() ? why : why + "; " + r.message;
    }
  } catch (const Skip& s) {
    r.status = CheckStatus::skipped;
    r.message = s.reason;
  } catch (const RegimeError& e) {
    r.status = CheckStatus::skipped;
    r.message = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.message = e.what();
  }
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteResult run_suite(const std::vector<CheckSpec>& specs, int threads) {
  SuiteResult out;
  out.reports.resize(specs.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(1, specs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) out.reports[i] = run_check(specs[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : out.reports) {
    switch (r.status) {
      case CheckStatus::pass: ++out.passed; break;
      case CheckStatus::fail: ++out.failed; break;
      case CheckStatus::skipped: ++out.skipped; break;
    }
  }
  return out;
}

std::string report_json(const SuiteResult& result, bool with_runtime) {
  ordered_json doc;
  doc["summary"] = {{"pass", result.passed}, {"fail", result.failed}, {"skipped", result.skipped}};
  auto checks = ordered_json::array();
  for (const auto& r : result.reports) {
    ordered_json c;
    c["id"] = r.id;
    c["lhs"] = complex_to_json(r.lhs);
    c["rhs"] = complex_to_json(r.rhs);
    c["abs_err"] = r.abs_err;
    c["rel_err"] = r.rel_err;
    c["lhs_err_est"] = r.lhs_err_est;
    c["rhs_err_est"] = r.rhs_err_est;
    c["status"] = to_string(r.status);
    c["runtime_ms"] = with_runtime ? r.runtime_ms : 0;
    c["message"] = r.message;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string report_text(const SuiteResult& result) {
  std::ostringstream os;
  for (const auto& r : result.reports) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-7s %-40s abs_err=%-10s %6ld ms", to_string(r.status).c_str(), r.id.c_str(),
                  fmt(r.abs_err).c_str(), r.runtime_ms);
    os << buf;
    if (!r.message.empty()) os << "  " << r.message;
    os << '\n';
  }
  os << "summary: " << result.passed << " pass, " << result.failed << " fail, " << result.skipped << " skipped\n";
  return os.str();
}

}  // namespace lseries
