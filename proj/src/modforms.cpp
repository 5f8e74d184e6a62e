#include <lseries/modforms.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace lseries {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int principal_depth(const CoefficientMap& holo) {
  if (holo.empty()) return 0;
  return std::max(0, -holo.begin()->first);
}

}  // namespace

Complex FourierExpansion::a(int n) const {
  auto it = holo.find(n);
  return it == holo.end() ? Complex{} : it->second;
}

Complex FourierExpansion::b(int n) const {
  auto it = nonholo.find(n);
  return it == nonholo.end() ? Complex{} : it->second;
}

void FourierExpansion::validate() const {
  if (auto it = holo.find(0); it != holo.end() && it->second != Complex{}) {
    throw DomainError("expansion '" + name + "': constant term a(0) must vanish (cusp form)");
  }
  for (const auto& [n, c] : nonholo) {
    if (n >= 0) throw DomainError("expansion '" + name + "': non-holomorphic keys must be negative");
  }
  if (level < 1) throw DomainError("expansion '" + name + "': level must be positive");
  if (!(growth_const > 0.0)) throw DomainError("expansion '" + name + "': growth constant must be positive");
}

FourierExpansion expansion_from_qseries(const QSeries& series, int weight, double growth_const, std::string name) {
  FourierExpansion f;
  f.name = std::move(name);
  f.weight = weight;
  f.growth_const = growth_const;
  f.finite_support = false;
  f.known_through = series.precision() - 1;
  for (int n = series.min_exponent(); n < series.precision(); ++n) {
    if (n == 0) continue;
    Rational c = series.coefficient(n);
    if (c != 0) f.holo[n] = Complex{c.get_d(), 0.0};
  }
  f.n0 = principal_depth(f.holo);
  f.exact = series - QSeries::constant(series.coefficient(0), series.precision());
  return f;
}

FourierExpansion build_J(int prec) {
  if (prec < 2) throw DomainError("build_J: prec must be >= 2");
  FourierExpansion f = expansion_from_qseries(build_j_series(prec), 0, 4.0 * kPi, "J");
  f.modular = true;
  return f;
}

FourierExpansion build_J_squared(int prec) {
  if (prec < 3) throw DomainError("build_J_squared: prec must be >= 3");
  QSeries j = build_j_series(prec);
  QSeries J = j - QSeries::constant(j.coefficient(0), j.precision());
  // J^2 has coefficients ~ e^{4 pi sqrt(2n)}.
  FourierExpansion f = expansion_from_qseries(J.pow(2), 0, 4.0 * kPi * std::sqrt(2.0), "Jsq");
  f.modular = true;
  return f;
}

FourierExpansion synth_harmonic(int k, CoefficientMap holo, CoefficientMap nonholo) {
  FourierExpansion f;
  f.name = "synth";
  f.weight = k;
  f.holo = std::move(holo);
  f.nonholo = std::move(nonholo);
  if (auto it = f.holo.find(0); it != f.holo.end()) {
    if (it->second != Complex{}) throw DomainError("synth_harmonic: constant term a(0) must vanish");
    f.holo.erase(it);
  }
  std::erase_if(f.holo, [](const auto& kv) { return kv.second == Complex{}; });
  std::erase_if(f.nonholo, [](const auto& kv) { return kv.second == Complex{}; });
  for (const auto& [n, c] : f.nonholo) {
    if (n >= 0) throw DomainError("synth_harmonic: non-holomorphic keys must be negative");
  }
  if (!f.nonholo.empty() && k > 0) {
    throw DomainError("synth_harmonic: a non-holomorphic part requires weight k <= 0");
  }
  f.n0 = principal_depth(f.holo);
  f.growth_const = 1.0;
  f.finite_support = true;
  f.modular = false;
  return f;
}

FourierExpansion linear_combination(Complex alpha, const FourierExpansion& f, Complex beta,
                                    const FourierExpansion& g) {
  if (f.weight != g.weight || f.level != g.level) {
    throw DomainError("linear_combination: weight and level must agree");
  }
  FourierExpansion out;
  out.name = "(" + f.name + "+" + g.name + ")";
  out.weight = f.weight;
  out.level = f.level;
  for (const auto& [n, c] : f.holo) out.holo[n] += alpha * c;
  for (const auto& [n, c] : g.holo) out.holo[n] += beta * c;
  for (const auto& [n, c] : f.nonholo) out.nonholo[n] += alpha * c;
  for (const auto& [n, c] : g.nonholo) out.nonholo[n] += beta * c;
  out.n0 = principal_depth(out.holo);
  out.growth_const = std::max(f.growth_const, g.growth_const);
  out.finite_support = f.finite_support && g.finite_support;
  out.known_through = std::min(f.finite_support ? g.known_through : f.known_through,
                               g.finite_support ? f.known_through : g.known_through);
  out.modular = f.modular && g.modular;
  return out;
}

FourierExpansion xi_image(const FourierExpansion& f, bool conjugate_first) {
  FourierExpansion g;
  g.name = std::string("xi(") + f.name + (conjugate_first ? "^c)" : ")");
  g.weight = 2 - f.weight;
  g.level = f.level;
  for (const auto& [n, b] : f.nonholo) {
    Complex coeff = conjugate_first ? b : std::conj(b);
    double scale = std::pow(-4.0 * kPi * n, 1 - f.weight);
    g.holo[-n] = -scale * coeff;
  }
  g.n0 = 0;
  g.growth_const = f.growth_const;
  g.finite_support = true;
  g.modular = f.modular;
  return g;
}

double truncation_bound(const FourierExpansion& f, double y) {
  if (f.finite_support) return 0.0;
  const double c = f.growth_const;
  double k_const = 0.0;
  for (const auto& [n, a] : f.holo) {
    if (n >= 1) k_const = std::max(k_const, std::abs(a) * std::exp(-c * std::sqrt(static_cast<double>(n))));
  }
  double total = 0.0;
  double first = 0.0;
  for (int n = f.known_through + 1; n < f.known_through + 100000; ++n) {
    double e = c * std::sqrt(static_cast<double>(n)) - kTwoPi * n * y;
    double term = k_const * std::exp(e);
    if (first == 0.0) first = term;
    total += term;
    // Terms are eventually decreasing; stop once they are negligible.
    if (n > f.known_through + 5 && term <= 1e-20 * total) break;
    if (total == 0.0 && e < -745.0 && n > f.known_through + 5) break;
  }
  return total;
}

Complex eval_value(const FourierExpansion& f, Complex z) {
  const double y = z.imag();
  Complex acc = 0.0;
  for (const auto& [n, a] : f.holo) acc += a * std::exp(kI * (kTwoPi * n) * z);
  if (!f.nonholo.empty()) {
    const double r = 1.0 - f.weight;
    for (const auto& [n, b] : f.nonholo) {
      Complex g = inc_gamma_upper(r, -4.0 * kPi * n * y).value;
      acc += b * g * std::exp(kI * (kTwoPi * n) * z);
    }
  }
  return acc;
}

PointValue eval_expansion(const FourierExpansion& f, Complex z, double tolerance) {
  if (!(z.imag() > 0.0)) throw DomainError("eval_expansion: requires Im(z) > 0");
  PointValue out;
  out.z = z;
  out.truncation_error = truncation_bound(f, z.imag());
  if (out.truncation_error > tolerance) {
    throw PrecisionError("eval_expansion: tail bound " + fmt_double(out.truncation_error) + " exceeds tolerance at Im z = " +
                         fmt_double(z.imag()));
  }
  out.value = eval_value(f, z);
  return out;
}

std::string coefficients_csv(const FourierExpansion& f, int upto) {
  if (!f.finite_support && upto > f.known_through + 1) {
    throw PrecisionError("coefficients_csv: only exponents below " + std::to_string(f.known_through + 1) +
                         " are known");
  }
  std::ostringstream os;
  os << "n,re,im\n";
  for (int n = -f.n0; n < upto; ++n) {
    if (f.exact) {
      os << n << ',' << f.exact->coefficient(n).get_str() << ",0\n";
    } else {
      Complex c = f.a(n);
      os << n << ',' << fmt_double(c.real()) << ',' << fmt_double(c.imag()) << '\n';
    }
  }
  return os.str();
}

std::string coefficients_json(const FourierExpansion& f, int upto) {
  if (!f.finite_support && upto > f.known_through + 1) {
    throw PrecisionError("coefficients_json: only exponents below " + std::to_string(f.known_through + 1) +
                         " are known");
  }
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["weight"] = f.weight;
  j["level"] = f.level;
  j["n0"] = f.n0;
  auto holo = nlohmann::ordered_json::array();
  for (int n = -f.n0; n < upto; ++n) {
    Complex c = f.a(n);
    nlohmann::ordered_json row = {{"n", n}, {"re", c.real()}, {"im", c.imag()}};
    if (f.exact) row["exact"] = f.exact->coefficient(n).get_str();
    holo.push_back(row);
  }
  j["holo"] = holo;
  auto nonholo = nlohmann::ordered_json::array();
  for (const auto& [n, c] : f.nonholo) nonholo.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  j["nonholo"] = nonholo;
  return j.dump(2);
}

}  // namespace lseries
