#include "weinstein/rkhs.hpp"

#include <cmath>
#include <string>

#include "weinstein/errors.hpp"
#include "weinstein/parallel.hpp"

namespace weinstein {

namespace {

// eta zeta + |m_sigma|^2 at every frequency node; never below eta.
std::vector<double> denominators(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                                 const Field& symbol) {
  std::vector<double> out = zeta_on_frequency_grid(plan, zeta);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reg.eta * out[i] + std::norm(symbol[i]);
  return out;
}

struct KernelPieces {
  Field symbol;
  std::vector<double> denom;
};

KernelPieces kernel_pieces(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                           const MultiplierSymbol& m) {
  reg.validate();
  Field symbol = symbol_on_frequency_grid(plan, m, reg.sigma);
  auto denom = denominators(plan, zeta, reg, symbol);
  return {std::move(symbol), std::move(denom)};
}

// sum_p weight_p Lambda(-x, xi_p) Lambda(y, xi_p) / D_p, with weight_p = 1 or m_sigma(xi_p).
Complex kernel_sum(const SpectralPlan& plan, const KernelPieces& pieces, bool with_symbol,
                   std::span<const double> x, std::span<const double> y) {
  const Field kx = kernel_on_frequency_grid(plan, x);
  const Field ky = kernel_on_frequency_grid(plan, y);
  const auto w = plan.quad_weights(Side::frequency);
  Complex acc{};
  for (std::size_t p = 0; p < kx.size(); ++p) {
    Complex term = std::conj(kx[p]) * ky[p] * (w[p] / pieces.denom[p]);
    if (with_symbol) term *= pieces.symbol[p];
    acc += term;
  }
  return acc;
}

Field kernel_field(const SpectralPlan& plan, const KernelPieces& pieces, bool with_symbol,
                   std::span<const double> y) {
  Field spectrum = kernel_on_frequency_grid(plan, y);
  for (std::size_t p = 0; p < spectrum.size(); ++p) {
    spectrum[p] /= pieces.denom[p];
    if (with_symbol) spectrum[p] *= pieces.symbol[p];
  }
  return plan.inverse(spectrum);
}

}  // namespace

ZetaWeight ZetaWeight::power(double s, const Grid& grid) {
  const double gate = grid.alpha.value() + 1.0 + 0.5 * grid.d;
  if (!std::isfinite(s) || !(s > gate)) {
    throw ConfigError("zeta: exponent s = " + std::to_string(s) + " must exceed alpha + 1 + d/2 = " +
                      std::to_string(gate));
  }
  return {ZetaFamily::power, s, false};
}

ZetaWeight ZetaWeight::power_unchecked(double s) {
  if (!std::isfinite(s)) throw ConfigError("zeta: exponent must be finite");
  return {ZetaFamily::power, s, true};
}

double ZetaWeight::operator()(std::span<const double> xi) const {
  double r2 = 0.0;
  for (double v : xi) r2 += v * v;
  return std::pow(1.0 + r2, s);
}

void RegParams::validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta must be positive");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
}

std::vector<double> zeta_on_frequency_grid(const SpectralPlan& plan, const ZetaWeight& zeta) {
  const Grid& g = plan.freq_grid();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = zeta(g.node(i));
  return out;
}

double inverse_zeta_l1(const SpectralPlan& plan, const ZetaWeight& zeta) {
  const auto z = zeta_on_frequency_grid(plan, zeta);
  const auto w = plan.quad_weights(Side::frequency);
  double acc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) acc += w[i] / z[i];
  return acc;
}

Complex inner_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, const Field& phi, const Field& psi) {
  plan.require_on(phi, Side::space, "inner_zeta");
  plan.require_on(psi, Side::space, "inner_zeta");
  const Field a = plan.forward(phi);
  const Field b = plan.forward(psi);
  const auto z = zeta_on_frequency_grid(plan, zeta);
  const auto w = plan.quad_weights(Side::frequency);
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += z[i] * a[i] * std::conj(b[i]) * w[i];
  return acc;
}

double norm_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, const Field& phi) {
  return std::sqrt(std::max(0.0, inner_zeta(plan, zeta, phi, phi).real()));
}

Complex inner_zeta_eta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                       const MultiplierSymbol& m, const Field& phi, const Field& psi) {
  plan.require_on(phi, Side::space, "inner_zeta_eta");
  plan.require_on(psi, Side::space, "inner_zeta_eta");
  const KernelPieces pieces = kernel_pieces(plan, zeta, reg, m);
  const Field a = plan.forward(phi);
  const Field b = plan.forward(psi);
  const auto w = plan.quad_weights(Side::frequency);
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += pieces.denom[i] * a[i] * std::conj(b[i]) * w[i];
  return acc;
}

double norm_zeta_eta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                     const MultiplierSymbol& m, const Field& phi) {
  return std::sqrt(std::max(0.0, inner_zeta_eta(plan, zeta, reg, m, phi, phi).real()));
}

Complex kernel_psi(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
                   std::span<const double> x, std::span<const double> y) {
  return kernel_sum(plan, kernel_pieces(plan, zeta, reg, m), false, x, y);
}

Field kernel_psi_field(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                       const MultiplierSymbol& m, std::span<const double> y) {
  return kernel_field(plan, kernel_pieces(plan, zeta, reg, m), false, y);
}

Complex kernel_psi_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, std::span<const double> x,
                        std::span<const double> y) {
  const Grid& g = plan.freq_grid();
  if (x.size() != static_cast<std::size_t>(g.d) + 1 || y.size() != x.size()) {
    throw DomainError("kernel_psi_zeta: point dimension does not match the grid");
  }
  const Point minus_x = reflect(x);
  const auto w = plan.quad_weights(Side::frequency);
  Complex acc{};
  for (std::size_t p = 0; p < g.size(); ++p) {
    const Point xi = g.node(p);
    acc += weinstein_kernel(g.alpha, minus_x, xi) * weinstein_kernel(g.alpha, y, xi) * (w[p] / zeta(xi));
  }
  return acc;
}

Complex kernel_theta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                     const MultiplierSymbol& m, std::span<const double> x, std::span<const double> y) {
  return kernel_sum(plan, kernel_pieces(plan, zeta, reg, m), true, x, y);
}

Field kernel_theta_field(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                         const MultiplierSymbol& m, std::span<const double> y) {
  return kernel_field(plan, kernel_pieces(plan, zeta, reg, m), true, y);
}

Field extremal(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
               const Field& h) {
  plan.require_on(h, Side::space, "extremal");
  const KernelPieces pieces = kernel_pieces(plan, zeta, reg, m);
  Field spectrum = plan.forward(h);
  for (std::size_t p = 0; p < spectrum.size(); ++p) {
    spectrum[p] *= std::conj(pieces.symbol[p]) / pieces.denom[p];
  }
  return plan.inverse(spectrum);
}

Field extremal_kernel_form(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                           const MultiplierSymbol& m, const Field& h) {
  plan.require_on(h, Side::space, "extremal_kernel_form");
  const KernelPieces pieces = kernel_pieces(plan, zeta, reg, m);
  const Grid& g = plan.space_grid();
  const auto w = plan.quad_weights(Side::space);
  Field out(g);
  parallel_for(g.size(), [&](std::size_t j) {
    const Field theta = kernel_field(plan, pieces, true, g.node(j));
    Complex acc{};
    for (std::size_t i = 0; i < h.size(); ++i) acc += h[i] * std::conj(theta[i]) * w[i];
    out[j] = acc;
  });
  return out;
}

double objective(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
                 const Field& h, const Field& phi) {
  plan.require_on(h, Side::space, "objective");
  plan.require_on(phi, Side::space, "objective");
  reg.validate();
  const double n_zeta = norm_zeta(plan, zeta, phi);
  const double residual = norm(plan, h - apply_multiplier(plan, m, reg.sigma, phi));
  return reg.eta * n_zeta * n_zeta + residual * residual;
}

std::vector<ThirdCalderonStep> third_calderon(const SpectralPlan& plan, const ZetaWeight& zeta,
                                              const MultiplierSymbol& m, double sigma, const Field& phi,
                                              const std::vector<double>& etas) {
  if (etas.empty()) throw DomainError("third_calderon: empty eta sequence");
  plan.require_on(phi, Side::space, "third_calderon");
  const Field h = apply_multiplier(plan, m, sigma, phi);
  const Field spectrum = plan.forward(phi);
  const auto z = zeta_on_frequency_grid(plan, zeta);
  const auto w = plan.quad_weights(Side::frequency);

  std::vector<ThirdCalderonStep> steps;
  for (double eta : etas) {
    const RegParams reg{eta, sigma};
    const Field gap = extremal(plan, zeta, reg, m, h) - phi;
    const KernelPieces pieces = kernel_pieces(plan, zeta, reg, m);
    double predicted = 0.0;
    for (std::size_t p = 0; p < spectrum.size(); ++p) {
      const double ratio = eta * z[p] / pieces.denom[p];
      predicted += z[p] * ratio * ratio * std::norm(spectrum[p]) * w[p];
    }
    steps.push_back({eta, norm_zeta(plan, zeta, gap), norm(plan, gap, NormKind::sup), std::sqrt(predicted)});
  }
  return steps;
}

}  // namespace weinstein
