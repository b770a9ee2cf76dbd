#pragma once

#include <span>

#include "weinstein/spectral.hpp"

namespace weinstein {

/// Separable Catmull-Rom interpolation of a space-side field at an arbitrary
/// point. The field is extended evenly across the radial origin and by zero
/// outside the box.
Complex interpolate(const Field& f, std::span<const double> point);

/// Generalised translation tau_x f(y) = C_alpha int_0^pi f(x' + y', rho(theta))
/// sin^{2 alpha}(theta) d theta, with rho^2 = x_r^2 + y_r^2 + 2 x_r y_r cos(theta),
/// evaluated at every space node y by Gauss-Legendre quadrature in theta and
/// Catmull-Rom interpolation of f.
Field translate_theta(const SpectralPlan& plan, const Field& f, std::span<const double> x,
                      std::size_t theta_nodes = 64);

/// The same translation realised on the frequency side,
/// F^{-1}(Lambda(-x, .) F f), which reproduces the angular formula above.
Field translate_spectral(const SpectralPlan& plan, const Field& f, std::span<const double> x);

enum class ConvolutionMethod { direct, spectral };

/// Weinstein convolution. The spectral path computes F^{-1}(Ff Fg); the
/// direct path sums tau_x f(-y) g(y) w(y) over the grid for every output node
/// and costs O(N^2) transforms' worth of work, so keep it to coarse grids.
Field convolve(const SpectralPlan& plan, const Field& f, const Field& g,
               ConvolutionMethod method = ConvolutionMethod::spectral);

}  // namespace weinstein
