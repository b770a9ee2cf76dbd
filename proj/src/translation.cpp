#include "weinstein/translation.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "weinstein/errors.hpp"
#include "weinstein/parallel.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {

namespace {

struct Stencil {
  std::array<std::ptrdiff_t, 4> index{};
  std::array<double, 4> weight{};
};

std::array<double, 4> catmull_rom(double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return {0.5 * (-t3 + 2.0 * t2 - t), 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0),
          0.5 * (-3.0 * t3 + 4.0 * t2 + t), 0.5 * (t3 - t2)};
}

// Index -1 marks a sample outside the box (treated as zero).
Stencil cart_stencil(const Grid& g, int axis, double c) {
  const double u = (c + g.cart_extents[axis]) / g.cart_step(axis) - 0.5;
  const double base = std::floor(u);
  Stencil s;
  s.weight = catmull_rom(u - base);
  const auto n = static_cast<std::ptrdiff_t>(g.cart_counts[axis]);
  for (int k = 0; k < 4; ++k) {
    const auto i = static_cast<std::ptrdiff_t>(base) - 1 + k;
    s.index[k] = (i >= 0 && i < n) ? i : -1;
  }
  return s;
}

Stencil radial_stencil(const Grid& g, double rho) {
  const double u = std::abs(rho) / g.radial_step() - 0.5;
  const double base = std::floor(u);
  Stencil s;
  s.weight = catmull_rom(u - base);
  const auto n = static_cast<std::ptrdiff_t>(g.radial_count);
  for (int k = 0; k < 4; ++k) {
    auto i = static_cast<std::ptrdiff_t>(base) - 1 + k;
    if (i < 0) i = -1 - i;  // even extension across rho = 0
    s.index[k] = i < n ? i : -1;
  }
  return s;
}

Complex interpolate_with(const Field& f, const std::vector<Stencil>& stencils) {
  const Grid& g = f.grid();
  const int axes = g.d + 1;
  Complex acc{};
  std::array<int, 4> k{};
  const int total = 1 << (2 * axes);
  for (int combo = 0; combo < total; ++combo) {
    int rest = combo;
    double w = 1.0;
    std::size_t flat = 0;
    bool inside = true;
    for (int a = 0; a < axes; ++a) {
      k[a] = rest & 3;
      rest >>= 2;
      const auto idx = stencils[a].index[k[a]];
      if (idx < 0) {
        inside = false;
        break;
      }
      w *= stencils[a].weight[k[a]];
      const std::size_t count = a < g.d ? g.cart_counts[a] : g.radial_count;
      flat = flat * count + static_cast<std::size_t>(idx);
    }
    if (inside) acc += w * f[flat];
  }
  return acc;
}

void require_half_space_point(const Grid& g, std::span<const double> x, const char* where) {
  if (x.size() != static_cast<std::size_t>(g.d + 1)) {
    throw DomainError(std::string(where) + ": point dimension does not match the grid");
  }
  if (!(x[g.d] >= 0.0)) throw DomainError(std::string(where) + ": point outside the half-space");
}

Field translate_from_spectrum(const SpectralPlan& plan, const Field& spectrum, std::span<const double> x) {
  Field shifted = kernel_on_frequency_grid(plan, reflect(x));
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] *= spectrum[i];
  return plan.inverse(shifted);
}

}  // namespace

Complex interpolate(const Field& f, std::span<const double> point) {
  const Grid& g = f.grid();
  if (point.size() != static_cast<std::size_t>(g.d + 1)) {
    throw DomainError("interpolate: point dimension does not match the grid");
  }
  std::vector<Stencil> stencils;
  stencils.reserve(g.d + 1);
  for (int a = 0; a < g.d; ++a) stencils.push_back(cart_stencil(g, a, point[a]));
  stencils.push_back(radial_stencil(g, point[g.d]));
  return interpolate_with(f, stencils);
}

Field translate_theta(const SpectralPlan& plan, const Field& f, std::span<const double> x,
                      std::size_t theta_nodes) {
  plan.require_on(f, Side::space, "translate_theta");
  const Grid& g = f.grid();
  require_half_space_point(g, x, "translate_theta");
  const double alpha = g.alpha.value();
  const double c_alpha =
      std::exp(ln_gamma(alpha + 1.0) - ln_gamma(alpha + 0.5)) / std::sqrt(std::numbers::pi);

  const QuadratureRule rule = gauss_legendre(theta_nodes, 0.0, std::numbers::pi);
  std::vector<double> weight(rule.size());
  std::vector<double> cosine(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    weight[k] = c_alpha * rule.weights[k] * std::pow(std::sin(rule.nodes[k]), 2.0 * alpha);
    cosine[k] = std::cos(rule.nodes[k]);
  }

  const double xr = x[g.d];
  Field out(g);
  parallel_for(out.size(), [&](std::size_t node) {
    const Point y = g.node(node);
    std::vector<Stencil> stencils;
    stencils.reserve(g.d + 1);
    for (int a = 0; a < g.d; ++a) stencils.push_back(cart_stencil(g, a, x[a] + y[a]));
    stencils.emplace_back();
    const double yr = y[g.d];
    Complex acc{};
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double rho2 = xr * xr + yr * yr + 2.0 * xr * yr * cosine[k];
      stencils.back() = radial_stencil(g, std::sqrt(std::max(rho2, 0.0)));
      acc += weight[k] * interpolate_with(f, stencils);
    }
    out[node] = acc;
  });
  return out;
}

Field translate_spectral(const SpectralPlan& plan, const Field& f, std::span<const double> x) {
  plan.require_on(f, Side::space, "translate_spectral");
  require_half_space_point(f.grid(), x, "translate_spectral");
  return translate_from_spectrum(plan, plan.forward(f), x);
}

Field convolve(const SpectralPlan& plan, const Field& f, const Field& g, ConvolutionMethod method) {
  plan.require_on(f, Side::space, "convolve");
  plan.require_on(g, Side::space, "convolve");
  const Field Ff = plan.forward(f);
  if (method == ConvolutionMethod::spectral) {
    Field product = plan.forward(g);
    for (std::size_t i = 0; i < product.size(); ++i) product[i] *= Ff[i];
    return plan.inverse(product);
  }

  const Grid& grid = plan.space_grid();
  const auto shape = grid.shape();
  const auto w = plan.quad_weights(Side::space);
  // reflected[i] is the flat index of -y for the node y with flat index i.
  std::vector<std::size_t> reflected(grid.size());
  {
    std::vector<std::size_t> multi(shape.size(), 0);
    std::vector<std::size_t> mirror(shape.size());
    for (std::size_t flat = 0; flat < reflected.size(); ++flat) {
      for (int a = 0; a < grid.d; ++a) mirror[a] = shape[a] - 1 - multi[a];
      mirror[grid.d] = multi[grid.d];
      reflected[flat] = grid.flat_index(mirror);
      for (std::size_t a = shape.size(); a-- > 0;) {
        if (++multi[a] < shape[a]) break;
        multi[a] = 0;
      }
    }
  }
  Field out(grid);
  parallel_for(out.size(), [&](std::size_t node) {
    const Field shifted = translate_from_spectrum(plan, Ff, grid.node(node));
    Complex acc{};
    for (std::size_t i = 0; i < grid.size(); ++i) acc += shifted[reflected[i]] * g[i] * w[i];
    out[node] = acc;
  });
  return out;
}

}  // namespace weinstein
