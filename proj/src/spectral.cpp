#include "weinstein/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

using RowMap = Eigen::Map<SpectralPlan::Matrix>;
using ConstRowMap = Eigen::Map<const SpectralPlan::Matrix>;

double cart_phase(double lambda, double x) { return -(x * lambda); }

// Per-axis factors of the kernel between a point and every node of a grid,
// in storage order (Cartesian axes, radial).
std::vector<std::vector<Complex>> axis_factors(const Grid& g, std::span<const double> p, bool inverse) {
  std::vector<std::vector<Complex>> out(g.d + 1);
  for (int a = 0; a < g.d; ++a) {
    out[a].resize(g.cart_counts[a]);
    for (std::size_t i = 0; i < g.cart_counts[a]; ++i) {
      const double phase = cart_phase(p[a], g.cart_node(a, i));
      out[a][i] = std::polar(1.0, inverse ? -phase : phase);
    }
  }
  out[g.d].resize(g.radial_count);
  for (std::size_t i = 0; i < g.radial_count; ++i) {
    out[g.d][i] = bessel_j_normalized(g.alpha, std::abs(p[g.d] * g.radial_node(i)));
  }
  return out;
}

Complex separable_sum(const Grid& g, std::span<const Complex> values, std::span<const double> weights,
                      const std::vector<std::vector<Complex>>& factors) {
  const auto shape = g.shape();
  std::vector<std::size_t> multi(shape.size(), 0);
  Complex acc{};
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    Complex k = values[flat] * weights[flat];
    for (std::size_t a = 0; a < shape.size(); ++a) k *= factors[a][multi[a]];
    acc += k;
    for (std::size_t a = shape.size(); a-- > 0;) {
      if (++multi[a] < shape[a]) break;
      multi[a] = 0;
    }
  }
  return acc;
}

void require_point(const Grid& g, std::span<const double> p, const char* where) {
  if (p.size() != static_cast<std::size_t>(g.d + 1)) {
    throw DomainError(std::string(where) + ": point dimension does not match the grid");
  }
}

}  // namespace

Complex weinstein_kernel(BesselIndex alpha, std::span<const double> lambda, std::span<const double> x) {
  if (lambda.size() != x.size() || x.empty()) throw DomainError("weinstein_kernel: dimension mismatch");
  const std::size_t d = x.size() - 1;
  double dot = 0.0;
  for (std::size_t j = 0; j < d; ++j) dot += x[j] * lambda[j];
  // j_alpha is even, so the sign of the radial product is immaterial.
  return std::polar(1.0, -dot) * bessel_j_normalized(alpha, std::abs(x[d] * lambda[d]));
}

double measure_normalization(BesselIndex alpha, int d) {
  const double a = alpha.value();
  return std::pow(2.0 * std::numbers::pi, 0.5 * d) * std::exp(a * std::numbers::ln2 + ln_gamma(a + 1.0));
}

SpectralPlan::SpectralPlan(Grid space, std::optional<std::vector<double>> freq_extents)
    : space_(std::move(space)) {
  space_.validate();
  if (space_.side != Side::space) throw ConfigError("build_plan: the input grid must be a space grid");
  const int d = space_.d;

  freq_ = space_;
  freq_.side = Side::frequency;
  if (freq_extents) {
    if (freq_extents->size() != static_cast<std::size_t>(d + 1)) {
      throw ConfigError("build_plan: need d + 1 frequency extents (Cartesian axes, then radial)");
    }
    for (int j = 0; j < d; ++j) freq_.cart_extents[j] = (*freq_extents)[j];
    freq_.radial_extent = (*freq_extents)[d];
  } else {
    for (int j = 0; j < d; ++j) {
      freq_.cart_extents[j] = std::numbers::pi * static_cast<double>(space_.cart_counts[j]) /
                              (2.0 * space_.cart_extents[j]);
    }
    // The radial nodes are half of an even grid on [-R, R] with spacing R / n_r.
    freq_.radial_extent = std::numbers::pi * static_cast<double>(space_.radial_count) / space_.radial_extent;
  }
  freq_.validate();

  const double alpha = space_.alpha.value();
  const double radial_norm = std::exp(alpha * std::numbers::ln2 + ln_gamma(alpha + 1.0));
  const double cart_norm = std::sqrt(2.0 * std::numbers::pi);

  auto node_weights = [&](const Grid& g) {
    std::vector<std::vector<double>> per_axis(d + 1);
    for (int j = 0; j < d; ++j) per_axis[j].assign(g.cart_counts[j], g.cart_step(j) / cart_norm);
    per_axis[d].resize(g.radial_count);
    for (std::size_t i = 0; i < g.radial_count; ++i) {
      per_axis[d][i] = g.radial_step() * std::pow(g.radial_node(i), 2.0 * alpha + 1.0) / radial_norm;
    }
    std::vector<double> w(g.size());
    const auto shape = g.shape();
    std::vector<std::size_t> multi(shape.size(), 0);
    for (std::size_t flat = 0; flat < w.size(); ++flat) {
      double v = 1.0;
      for (std::size_t a = 0; a < shape.size(); ++a) v *= per_axis[a][multi[a]];
      w[flat] = v;
      for (std::size_t a = shape.size(); a-- > 0;) {
        if (++multi[a] < shape[a]) break;
        multi[a] = 0;
      }
    }
    return w;
  };
  space_weights_ = node_weights(space_);
  freq_weights_ = node_weights(freq_);

  forward_.resize(d + 1);
  inverse_.resize(d + 1);
  for (int j = 0; j < d; ++j) {
    const std::size_t n = space_.cart_counts[j];
    forward_[j].resize(n, n);
    inverse_[j].resize(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < n; ++i) {
        const double phase = cart_phase(freq_.cart_node(j, p), space_.cart_node(j, i));
        forward_[j](p, i) = std::polar(1.0, phase);
        inverse_[j](i, p) = std::polar(1.0, -phase);
      }
    }
  }
  const std::size_t nr = space_.radial_count;
  forward_[d].resize(nr, nr);
  inverse_[d].resize(nr, nr);
  for (std::size_t p = 0; p < nr; ++p) {
    for (std::size_t i = 0; i < nr; ++i) {
      const double v = bessel_j_normalized(space_.alpha, freq_.radial_node(p) * space_.radial_node(i));
      forward_[d](p, i) = v;
      inverse_[d](i, p) = v;
    }
  }
}

void SpectralPlan::require_on(const Field& f, Side side, const char* where) const {
  if (!(f.grid() == grid(side))) {
    std::ostringstream msg;
    msg << where << ": field does not live on the plan's " << to_string(side) << " grid";
    throw DomainError(msg.str());
  }
}

std::vector<Complex> SpectralPlan::apply(std::vector<Complex> values, const std::vector<Matrix>& mats) const {
  const auto shape = space_.shape();
  std::vector<Complex> out(values.size());
  for (std::size_t a = 0; a < shape.size(); ++a) {
    const auto n = static_cast<Eigen::Index>(shape[a]);
    Eigen::Index pre = 1;
    Eigen::Index post = 1;
    for (std::size_t b = 0; b < a; ++b) pre *= static_cast<Eigen::Index>(shape[b]);
    for (std::size_t b = a + 1; b < shape.size(); ++b) post *= static_cast<Eigen::Index>(shape[b]);
    if (post == 1) {
      ConstRowMap in(values.data(), pre, n);
      RowMap res(out.data(), pre, n);
      res.noalias() = in * mats[a].transpose();
    } else {
      for (Eigen::Index p = 0; p < pre; ++p) {
        ConstRowMap in(values.data() + p * n * post, n, post);
        RowMap res(out.data() + p * n * post, n, post);
        res.noalias() = mats[a] * in;
      }
    }
    values.swap(out);
  }
  return values;
}

Field SpectralPlan::forward(const Field& f) const {
  require_on(f, Side::space, "forward_transform");
  std::vector<Complex> v(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= space_weights_[i];
  return Field(freq_, apply(std::move(v), forward_));
}

Field SpectralPlan::inverse(const Field& F) const {
  require_on(F, Side::frequency, "inverse_transform");
  std::vector<Complex> v(F.values().begin(), F.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= freq_weights_[i];
  return Field(space_, apply(std::move(v), inverse_));
}

Complex SpectralPlan::forward_at(const Field& f, std::span<const double> lambda) const {
  require_on(f, Side::space, "forward_at");
  require_point(space_, lambda, "forward_at");
  return separable_sum(space_, f.values(), space_weights_, axis_factors(space_, lambda, false));
}

Complex SpectralPlan::inverse_at(const Field& F, std::span<const double> x) const {
  require_on(F, Side::frequency, "inverse_at");
  require_point(freq_, x, "inverse_at");
  return separable_sum(freq_, F.values(), freq_weights_, axis_factors(freq_, x, true));
}

SpectralPlan build_plan(const Grid& space, std::optional<std::vector<double>> freq_extents) {
  return SpectralPlan(space, std::move(freq_extents));
}

Field forward_transform(const SpectralPlan& plan, const Field& f) { return plan.forward(f); }

Field inverse_transform(const SpectralPlan& plan, const Field& F) { return plan.inverse(F); }

Field kernel_on_frequency_grid(const SpectralPlan& plan, std::span<const double> x) {
  const Grid& g = plan.freq_grid();
  require_point(g, x, "kernel_on_frequency_grid");
  const auto factors = axis_factors(g, x, false);
  const auto shape = g.shape();
  Field out(g);
  std::vector<std::size_t> multi(shape.size(), 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    Complex k{1.0, 0.0};
    for (std::size_t a = 0; a < shape.size(); ++a) k *= factors[a][multi[a]];
    out[flat] = k;
    for (std::size_t a = shape.size(); a-- > 0;) {
      if (++multi[a] < shape[a]) break;
      multi[a] = 0;
    }
  }
  return out;
}

Complex inner_product(const SpectralPlan& plan, const Field& f, const Field& g) {
  require_same_grid(f, g, "inner_product");
  const Side side = f.grid().side;
  plan.require_on(f, side, "inner_product");
  const auto w = plan.quad_weights(side);
  Complex acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]) * w[i];
  return acc;
}

double norm(const SpectralPlan& plan, const Field& f, NormKind kind) {
  const Side side = f.grid().side;
  plan.require_on(f, side, "norm");
  const auto w = plan.quad_weights(side);
  double acc = 0.0;
  switch (kind) {
    case NormKind::l1:
      for (std::size_t i = 0; i < f.size(); ++i) acc += std::abs(f[i]) * w[i];
      return acc;
    case NormKind::l2:
      for (std::size_t i = 0; i < f.size(); ++i) acc += std::norm(f[i]) * w[i];
      return std::sqrt(acc);
    case NormKind::sup:
      for (std::size_t i = 0; i < f.size(); ++i) acc = std::max(acc, std::abs(f[i]));
      return acc;
  }
  return acc;
}

double total_mass(const SpectralPlan& plan, Side side) {
  double acc = 0.0;
  for (double w : plan.quad_weights(side)) acc += w;
  return acc;
}

}  // namespace weinstein
