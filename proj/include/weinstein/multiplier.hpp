#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weinstein/quadrature.hpp"
#include "weinstein/spectral.hpp"

namespace weinstein {

/// A frequency-side symbol m together with enough metadata for the scale
/// integrals: its sup norm and the radii |xi| where it jumps.
class MultiplierSymbol {
 public:
  using Rule = std::function<Complex(std::span<const double> xi)>;

  MultiplierSymbol(std::string name, std::map<std::string, double> params, Rule rule, double sup_norm,
                   std::vector<double> radial_breaks = {});

  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  double sup_norm() const noexcept { return sup_norm_; }
  const std::vector<double>& radial_breaks() const noexcept { return breaks_; }

  Complex operator()(std::span<const double> xi) const { return rule_(xi); }
  /// m_sigma(xi) = m(sigma xi).
  Complex dilated(double sigma, std::span<const double> xi) const;

 private:
  std::string name_;
  std::map<std::string, double> params_;
  Rule rule_;
  double sup_norm_;
  std::vector<double> breaks_;
};

namespace symbols {
/// sqrt(2) |xi| exp(-|xi|^2 / 2); integral of |m(s xi)|^2 ds/s over (0, inf) is 1.
MultiplierSymbol gaussian_admissible();
/// sqrt(c) on 1 <= |xi| <= e, zero elsewhere.
MultiplierSymbol annulus(double c = 1.0);
/// Indicator of |xi| <= omega.
MultiplierSymbol low_pass(double omega = 1.0);
/// exp(-t |xi|^2).
MultiplierSymbol heat(double t = 1.0);
MultiplierSymbol constant(double c = 1.0);
}  // namespace symbols

/// Preset lookup by name ("gaussian_admissible", "annulus", "low_pass", "heat",
/// "constant") with named parameters (c, omega, t). Throws ConfigError on
/// unknown names or parameters.
MultiplierSymbol make_symbol(const std::string& name, const std::map<std::string, double>& params = {});

enum class SigmaRule { gauss_legendre, midpoint };

/// Discretisation of the scale measure d sigma / sigma on [gamma, delta]:
/// a rule in t = ln sigma with `points` nodes.
struct SigmaQuadrature {
  double gamma = 1e-3;
  double delta = 1e3;
  std::size_t points = 256;
  SigmaRule rule = SigmaRule::gauss_legendre;

  void validate() const;
  /// Nodes sigma_k and weights w_k with sum_k w_k g(sigma_k) ~ int g(sigma) d sigma / sigma.
  QuadratureRule nodes() const;
};

/// m_sigma sampled on the plan's frequency grid.
Field symbol_on_frequency_grid(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma);

/// L^2(mu_alpha) norm of m_sigma over the frequency box.
double symbol_l2_norm(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma = 1.0);

/// T_{m,sigma} phi = F^{-1}(m_sigma F phi).
Field apply_multiplier(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma, const Field& phi);

/// F^{-1}(m_sigma) on the space grid, the convolution kernel of T_{m,sigma}.
Field inverse_symbol_field(const SpectralPlan& plan, const MultiplierSymbol& m, double sigma);

/// Phi_{gamma,delta}(xi) = int_gamma^delta |m(sigma xi)|^2 d sigma / sigma. The
/// log-scale interval is split at the symbol's jump radii, with the node
/// budget shared in proportion to piece length.
double phi_window(const MultiplierSymbol& m, const SigmaQuadrature& quad, std::span<const double> xi);

/// max over the test points of |Phi_{gamma,delta}(xi) - 1|.
double admissibility_defect(const MultiplierSymbol& m, const std::vector<Point>& test_points,
                            const SigmaQuadrature& quad = {1e-4, 1e4, 256, SigmaRule::gauss_legendre});

inline bool is_admissible(double defect, double tol = 1e-6) { return defect <= tol; }

}  // namespace weinstein
