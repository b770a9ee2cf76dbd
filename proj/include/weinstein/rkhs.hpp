#pragma once

#include <span>
#include <vector>

#include "weinstein/multiplier.hpp"

namespace weinstein {

enum class ZetaFamily { power };

/// zeta_s(xi) = (1 + |xi|^2)^s, the weight defining H_zeta.
struct ZetaWeight {
  ZetaFamily family = ZetaFamily::power;
  double s = 0.0;
  /// Set when the integrability gate was bypassed on purpose (zeta = 1 and
  /// other grid-truncated checks).
  bool gate_waived = false;

  /// Throws ConfigError unless s > alpha + 1 + d/2, the condition for 1/zeta
  /// to be integrable against mu_alpha.
  static ZetaWeight power(double s, const Grid& grid);
  static ZetaWeight power_unchecked(double s);

  double operator()(std::span<const double> xi) const;
};

struct RegParams {
  double eta = 1.0;
  double sigma = 1.0;

  /// Throws DomainError unless eta > 0 and sigma > 0.
  void validate() const;
};

/// zeta sampled on the frequency grid.
std::vector<double> zeta_on_frequency_grid(const SpectralPlan& plan, const ZetaWeight& zeta);

/// ||1/zeta||_{alpha,1} over the frequency box.
double inverse_zeta_l1(const SpectralPlan& plan, const ZetaWeight& zeta);

Complex inner_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, const Field& phi, const Field& psi);
double norm_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, const Field& phi);

/// int (eta zeta + |m_sigma|^2) F phi conj(F psi) d mu_alpha.
Complex inner_zeta_eta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                       const MultiplierSymbol& m, const Field& phi, const Field& psi);
double norm_zeta_eta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                     const MultiplierSymbol& m, const Field& phi);

/// Psi_{zeta,eta}(x, y) = int Lambda(-x, xi) Lambda(y, xi) / (eta zeta + |m_sigma|^2) d mu_alpha(xi)
/// by quadrature over the frequency grid.
Complex kernel_psi(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
                   std::span<const double> x, std::span<const double> y);

/// x -> Psi_{zeta,eta}(x, y) on the space grid.
Field kernel_psi_field(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                       const MultiplierSymbol& m, std::span<const double> y);

/// Psi_zeta(x, y) = int Lambda(-x, xi) Lambda(y, xi) / zeta(xi) d mu_alpha(xi), evaluated
/// node by node from the kernel itself.
Complex kernel_psi_zeta(const SpectralPlan& plan, const ZetaWeight& zeta, std::span<const double> x,
                        std::span<const double> y);

/// Theta_{zeta,eta}(x, y), the kernel above with an extra factor m_sigma(xi).
Complex kernel_theta(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                     const MultiplierSymbol& m, std::span<const double> x, std::span<const double> y);

Field kernel_theta_field(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                         const MultiplierSymbol& m, std::span<const double> y);

/// Minimiser of eta ||phi||_zeta^2 + ||h - T_{m,sigma} phi||_2^2, computed as
/// F^{-1}(conj(m_sigma) F h / (eta zeta + |m_sigma|^2)).
Field extremal(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
               const Field& h);

/// The same minimiser assembled from the kernel, phi*(y) = int h(x) conj(Theta(x, y)) d mu_alpha(x).
/// One inverse transform per output node, so only for coarse grids.
Field extremal_kernel_form(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg,
                           const MultiplierSymbol& m, const Field& h);

/// eta ||phi||_zeta^2 + ||h - T_{m,sigma} phi||_2^2.
double objective(const SpectralPlan& plan, const ZetaWeight& zeta, const RegParams& reg, const MultiplierSymbol& m,
                 const Field& h, const Field& phi);

struct ThirdCalderonStep {
  double eta = 0.0;
  double zeta_error = 0.0;  ///< ||phi* - phi||_zeta
  double sup_error = 0.0;   ///< max node |phi* - phi|
  double predicted = 0.0;   ///< (int eta^2 zeta^3 |F phi|^2 / (eta zeta + |m_sigma|^2)^2)^{1/2}
};

/// Recover phi from h = T_{m,sigma} phi by the extremal function at each eta.
/// Throws DomainError on an empty eta list.
std::vector<ThirdCalderonStep> third_calderon(const SpectralPlan& plan, const ZetaWeight& zeta,
                                              const MultiplierSymbol& m, double sigma, const Field& phi,
                                              const std::vector<double>& etas);

}  // namespace weinstein
