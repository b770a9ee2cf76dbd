#pragma once

#include "weinstein/multiplier.hpp"
#include "weinstein/translation.hpp"

namespace weinstein {

/// Phi_{gamma,delta} sampled on the plan's frequency grid.
Field window_on_frequency_grid(const SpectralPlan& plan, const MultiplierSymbol& m, const SigmaQuadrature& quad);

struct CalderonPlancherel {
  double lhs = 0.0;  ///< ||phi||_2^2
  double rhs = 0.0;  ///< sum_k w_k ||T_{m,sigma_k} phi||_2^2
};

/// Scale-integrated energy of the multiplier family against the energy of phi.
CalderonPlancherel calderon_plancherel(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                                       const SigmaQuadrature& quad);

/// sum_k w_k (T_{m,sigma_k} phi *_W F^{-1}(conj m_{sigma_k})), the scale
/// quadrature of the pointwise reproducing formula.
Field calderon_first(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                     const SigmaQuadrature& quad, ConvolutionMethod method = ConvolutionMethod::spectral);

/// phi_{gamma,delta} = F^{-1}(Phi_{gamma,delta} F phi). Throws DomainError
/// unless 0 < gamma < delta.
Field calderon_second(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi, double gamma,
                      double delta, std::size_t points = 256, SigmaRule rule = SigmaRule::gauss_legendre);

/// int |F phi|^2 (1 - Phi_{gamma,delta})^2 d mu_alpha on the frequency grid;
/// equals ||phi_{gamma,delta} - phi||_2^2.
double window_error_prediction(const SpectralPlan& plan, const MultiplierSymbol& m, const Field& phi,
                               const SigmaQuadrature& quad);

}  // namespace weinstein
