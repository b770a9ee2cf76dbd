#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "weinstein/grid.hpp"

namespace weinstein {

/// Weinstein kernel exp(-i<x', lambda'>) j_alpha(x_{d+1} lambda_{d+1}).
/// Both arguments carry d Cartesian coordinates followed by the radial one.
Complex weinstein_kernel(BesselIndex alpha, std::span<const double> lambda, std::span<const double> x);

/// C_{alpha,d} = (2 pi)^{d/2} 2^alpha Gamma(alpha + 1), the normalisation of
/// d mu_alpha(x) = x_{d+1}^{2 alpha + 1} dx / C_{alpha,d}. This is the
/// constant under which the transform is an isometry of L^2(mu_alpha).
double measure_normalization(BesselIndex alpha, int d);

/// Precomputed quadrature weights and axis-factorised kernel matrices for the
/// discrete Weinstein transform between a space grid and a frequency grid.
/// Immutable after construction; safe to share across threads.
class SpectralPlan {
 public:
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  SpectralPlan(Grid space, std::optional<std::vector<double>> freq_extents = std::nullopt);

  const Grid& space_grid() const noexcept { return space_; }
  const Grid& freq_grid() const noexcept { return freq_; }
  const Grid& grid(Side side) const noexcept { return side == Side::space ? space_ : freq_; }

  /// Quadrature weight of every node of the given side, d mu_alpha included.
  std::span<const double> quad_weights(Side side) const noexcept {
    return side == Side::space ? space_weights_ : freq_weights_;
  }

  /// Forward kernel of axis a (Cartesian axes first, radial last): entry
  /// (p, i) is the axis factor of the kernel at frequency node p and space
  /// node i.
  const Matrix& axis_kernel(int axis) const { return forward_[axis]; }

  /// Throws DomainError unless f lives on this plan's grid of the given side.
  void require_on(const Field& f, Side side, const char* where) const;

  Field forward(const Field& f) const;
  Field inverse(const Field& F) const;

  /// Pointwise evaluation of the quadrature sums at an arbitrary point, for
  /// off-grid sampling of transforms.
  Complex forward_at(const Field& f, std::span<const double> lambda) const;
  Complex inverse_at(const Field& F, std::span<const double> x) const;

 private:
  std::vector<Complex> apply(std::vector<Complex> values, const std::vector<Matrix>& mats) const;

  Grid space_;
  Grid freq_;
  std::vector<double> space_weights_;
  std::vector<double> freq_weights_;
  std::vector<Matrix> forward_;
  std::vector<Matrix> inverse_;
};

/// Frequency extents default to the Nyquist values pi n / (2 L) per Cartesian
/// axis and pi n_r / R radially (order: Cartesian axes, radial). With these
/// extents and alpha = 1/2 the discrete transform is exactly unitary.
SpectralPlan build_plan(const Grid& space, std::optional<std::vector<double>> freq_extents = std::nullopt);

Field forward_transform(const SpectralPlan& plan, const Field& f);
Field inverse_transform(const SpectralPlan& plan, const Field& F);

/// Field of a function sampled on one side of the plan.
template <class Fn>
Field sample(const SpectralPlan& plan, Side side, Fn&& fn) {
  const Grid& g = plan.grid(side);
  Field out(g);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(g.node(i));
  return out;
}

/// xi -> Lambda(x, xi) sampled on the frequency grid, built axis by axis.
Field kernel_on_frequency_grid(const SpectralPlan& plan, std::span<const double> x);

/// mu_alpha-weighted inner product <f, g> = sum f conj(g) w.
Complex inner_product(const SpectralPlan& plan, const Field& f, const Field& g);

enum class NormKind { l1, l2, sup };

double norm(const SpectralPlan& plan, const Field& f, NormKind kind = NormKind::l2);

/// Total mu_alpha mass of the box covered by one side of the plan.
double total_mass(const SpectralPlan& plan, Side side);

}  // namespace weinstein
