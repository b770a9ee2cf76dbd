#pragma once

namespace weinstein {

/// Index of the normalized Bessel function. The whole library assumes
/// alpha > -1/2; construction enforces it.
class BesselIndex {
 public:
  explicit BesselIndex(double alpha);

  double value() const noexcept { return alpha_; }
  friend bool operator==(const BesselIndex&, const BesselIndex&) = default;

 private:
  double alpha_;
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Normalized Bessel function j_alpha(x) = Gamma(alpha+1) (2/x)^alpha J_alpha(x),
/// the even solution of L_alpha u = -u with u(0) = 1.
///
/// Power series summed in double-double arithmetic below
/// bessel_series_switch(alpha), Hankel's large-argument expansion truncated
/// at its smallest term above it. Absolute error is below 1e-9 for
/// alpha in (-1/2, 10] and x in [0, 1e3].
double bessel_j_normalized(BesselIndex idx, double x);

/// Smallest abscissa where bessel_j_normalized switches from the series to
/// the asymptotic expansion.
inline constexpr double kBesselSeriesSwitch = 20.0;

/// Switch-over abscissa for index alpha. Hankel's expansion only reaches
/// full accuracy once x exceeds about alpha^2 / 2, so large indices stay on
/// the series longer.
inline double bessel_series_switch(double alpha) {
  return alpha * alpha / 2.0 + 2.0 > kBesselSeriesSwitch ? alpha * alpha / 2.0 + 2.0 : kBesselSeriesSwitch;
}

/// Plain power-series evaluation of j_alpha with Neumaier-compensated
/// accumulation, stopping once the next term drops below tol*|partial sum|.
/// Kept as an independent reference; restricted to x <= 40.
double bessel_series_reference(BesselIndex idx, double x, double tol);

}  // namespace weinstein
