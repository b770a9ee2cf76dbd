#include "weinstein/multiplier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

double radius(std::span<const double> xi) {
  double r2 = 0.0;
  for (double c : xi) r2 += c * c;
  return std::sqrt(r2);
}

void require_sigma(double sigma, const char* where) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError(std::string(where) + ": sigma must be positive");
  }
}

}  // namespace

MultiplierSymbol::MultiplierSymbol(std::string name, std::map<std::string, double> params, Rule rule,
                                   double sup_norm, std::vector<double> radial_breaks)
    : name_(std::move(name)),
      params_(std::move(params)),
      rule_(std::move(rule)),
      sup_norm_(sup_norm),
      breaks_(std::move(radial_breaks)) {
  std::sort(breaks_.begin(), breaks_.end());
}

Complex MultiplierSymbol::dilated(double sigma, std::span<const double> xi) const {
  require_sigma(sigma, "MultiplierSymbol::dilated");
  std::array<double, 8> buffer{};
  if (xi.size() > buffer.size()) throw DomainError("MultiplierSymbol: point dimension too large");
  for (std::size_t j = 0; j < xi.size(); ++j) buffer[j] = sigma * xi[j];
  return rule_(std::span<const double>(buffer.data(), xi.size()));
}

namespace symbols {

MultiplierSymbol gaussian_admissible() {
  return MultiplierSymbol(
      "gaussian_admissible", {},
      [](std::span<const double> xi) {
        const double r = radius(xi);
        return Complex(std::numbers::sqrt2 * r * std::exp(-0.5 * r * r), 0.0);
      },
      std::numbers::sqrt2 * std::exp(-0.5));
}

MultiplierSymbol annulus(double c) {
  if (!(c >= 0.0)) throw ConfigError("annulus: c must be non-negative");
  const double height = std::sqrt(c);
  return MultiplierSymbol(
      "annulus", {{"c", c}},
      [height](std::span<const double> xi) {
        const double r = radius(xi);
        return Complex(r >= 1.0 && r <= std::numbers::e ? height : 0.0, 0.0);
      },
      height, {1.0, std::numbers::e});
}

MultiplierSymbol low_pass(double omega) {
  if (!(omega > 0.0)) throw ConfigError("low_pass: omega must be positive");
  return MultiplierSymbol(
      "low_pass", {{"omega", omega}},
      [omega](std::span<const double> xi) { return Complex(radius(xi) <= omega ? 1.0 : 0.0, 0.0); }, 1.0,
      {omega});
}

MultiplierSymbol heat(double t) {
  if (!(t >= 0.0)) throw ConfigError("heat: t must be non-negative");
  return MultiplierSymbol(
      "heat", {{"t", t}},
      [t](std::span<const double> xi) {
        const double r = radius(xi);
        return Complex(std::exp(-t * r * r), 0.0);
      },
      1.0);
}

MultiplierSymbol constant(double c) {
  return MultiplierSymbol(
      "constant", {{"c", c}}, [c](std::span<const double>) { return Complex(c, 0.0); }, std::abs(c));
}

}  // namespace symbols

MultiplierSymbol make_symbol(const std::string& name, const std::map<std::string, double>& params) {
  auto take = [&](const std::vector<std::string>& allowed) {
    for (const auto& [key, value] : params) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ConfigError("symbol '" + name + "' has no parameter '" + key + "'");
      }
    }
  };
  auto get = [&](const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "gaussian_admissible") {
    take({});
    return symbols::gaussian_admissible();
  }
  if (name == "annulus") {
    take({"c"});
    return symbols::annulus(get("c", 1.0));
  }
  if (name == "low_pass") {
    take({"omega"});
    return symbols::low_pass(get("omega", 1.0));
  }
  if (name == "heat") {
    take({"t"});
    return symbols::heat(get("t", 1.0));
  }
  if (name == "constant") {
    take({"c"});
    return symbols::constant(get("c", 1.0));
  }
  throw ConfigError("unknown symbol '" + name + "'");
}

void SigmaQuadrature::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("sigma quadrature: gamma must be positive");
  if (!(delta >= gamma) || !std::isfinite(delta)) throw DomainError("sigma quadrature: need delta >= gamma");
  if (points == 0) throw DomainError("sigma quadrature: need at least one point");
}

QuadratureRule SigmaQuadrature::nodes() const {
  validate();
  const double a = std::log(gamma);
  const double b = std::log(delta);
  QuadratureRule t = rule == SigmaRule::gauss_legendre ? gauss_legendre(points, a, b) : midpoint_rule(points, a, b);
  for (auto& node : t.nodes) node = std::exp(node);
  return t;
}

Field symbol_on_frequency_grid(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma) {
  require_sigma(sigma, "symbol_on_frequency_grid");
  return sample(plan, Side::frequency, [&](const Point& xi) { return m.dilated(sigma, xi); });
}

double symbol_l2_norm(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma) {
  return norm(plan, symbol_on_frequency_grid(plan, m, sigma), NormKind::l2);
}

Field apply_multiplier(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma, const Field& phi) {
  require_sigma(sigma, "apply_multiplier");
  Field spectrum = plan.forward(phi);
  const Field symbol = symbol_on_frequency_grid(plan, m, sigma);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= symbol[i];
  return plan.inverse(spectrum);
}

Field inverse_symbol_field(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma) {
  require_sigma(sigma, "inverse_symbol_field");
  return plan.inverse(symbol_on_frequency_grid(plan, m, sigma));
}

double phi_window(const MultiplierSymbol& m, const SigmaQuadrature& quad, std::span<const double> xi) {
  quad.validate();
  const double r = radius(xi);
  if (!(r > 0.0)) throw DomainError("phi_window: the window is undefined at xi = 0");
  const double a = std::log(quad.gamma);
  const double b = std::log(quad.delta);
  if (!(b > a)) return 0.0;

  // m(sigma xi) jumps where sigma |xi| hits a break radius.
  std::vector<double> cuts{a};
  for (double radius_break : m.radial_breaks()) {
    const double t = std::log(radius_break / r);
    if (t > a && t < b) cuts.push_back(t);
  }
  cuts.push_back(b);

  double total = 0.0;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double len = cuts[p + 1] - cuts[p];
    const auto share = static_cast<std::size_t>(std::ceil(static_cast<double>(quad.points) * len / (b - a)));
    const std::size_t n = std::max<std::size_t>(share, cuts.size() > 2 ? 8 : 1);
    const QuadratureRule rule = quad.rule == SigmaRule::gauss_legendre ? gauss_legendre(n, cuts[p], cuts[p + 1])
                                                                       : midpoint_rule(n, cuts[p], cuts[p + 1]);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      total += rule.weights[k] * std::norm(m.dilated(std::exp(rule.nodes[k]), xi));
    }
  }
  return total;
}

double admissibility_defect(const MultiplierSymbol& m, const std::vector<Point>& test_points,
                            const SigmaQuadrature& quad) {
  double worst = 0.0;
  for (const auto& xi : test_points) {
    if (!(radius(xi) > 0.0)) throw DomainError("admissibility_defect: test points must be nonzero");
    worst = std::max(worst, std::abs(phi_window(m, quad, xi) - 1.0));
  }
  return worst;
}

}  // namespace weinstein
