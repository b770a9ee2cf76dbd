#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weinstein/errors.hpp"
#include "weinstein/sampling.hpp"
#include "weinstein/spectral.hpp"
#include "weinstein/translation.hpp"

using namespace weinstein;

namespace {

double relative(const SpectralPlan& plan, const Field& a, const Field& b) { return norm(plan, a - b) / norm(plan, b); }

Field times(const Field& a, const Field& b) {
  Field out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

const SpectralPlan& desk() {
  static const SpectralPlan plan = build_plan(make_grid(1, 0.5, 96, 10.0, 96, 10.0));
  return plan;
}

}  // namespace

TEST_CASE("interpolation reproduces nodes and smooth functions") {
  const SpectralPlan& plan = desk();
  const Field g = gaussian_field(plan.space_grid());
  for (std::size_t i : {0u, 100u, 4657u}) {
    const Point x = plan.space_grid().node(i);
    CHECK(std::abs(interpolate(g, x) - g[i]) <= 1e-14);
  }
  double worst = 0.0;
  for (double a = -3.0; a <= 3.0; a += 0.37)
    for (double r = 0.0; r <= 3.0; r += 0.29) {
      const Point p{a, r};
      worst = std::max(worst, std::abs(interpolate(g, p) - std::exp(-(a * a + r * r) / 2.0)));
    }
  CHECK(worst <= 1e-3);
  const Point outside{11.0, 0.5};
  CHECK(std::abs(interpolate(g, outside)) == 0.0);
}

TEST_CASE("translation by the origin is the identity") {
  const SpectralPlan& plan = desk();
  std::mt19937_64 rng(1);
  const Field f = random_enveloped_field(plan.space_grid(), rng);
  const Point zero{0.0, 0.0};
  CHECK(relative(plan, translate_theta(plan, f, zero), f) <= 1e-12);
  CHECK(relative(plan, translate_spectral(plan, f, zero), f) <= 1e-12);
}

TEST_CASE("a pure Cartesian shift moves the function") {
  const SpectralPlan& plan = desk();
  const Field g = gaussian_field(plan.space_grid());
  const Point x{1.25, 0.0};
  const Field expected = sample(plan, Side::space, [](const Point& y) {
    const double a = y[0] + 1.25;
    return Complex(std::exp(-(a * a + y[1] * y[1]) / 2.0), 0.0);
  });
  CHECK(relative(plan, translate_spectral(plan, g, x), expected) <= 1e-8);
  CHECK(relative(plan, translate_theta(plan, g, x), expected) <= 1e-3);
}

TEST_CASE("angular and spectral translations agree") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> cart(-2.0, 2.0);
  std::uniform_real_distribution<double> rad(0.0, 2.0);
  const SpectralPlan coarse = build_plan(make_grid(1, 0.5, 64, 10.0, 64, 10.0));
  const SpectralPlan fine = build_plan(make_grid(1, 0.5, 128, 10.0, 128, 10.0));
  for (int k = 0; k < 3; ++k) {
    const Point x{cart(rng), rad(rng)};
    const Field fc = gaussian_field(coarse.space_grid(), 1.3);
    const Field ff = gaussian_field(fine.space_grid(), 1.3);
    const double ec = relative(coarse, translate_theta(coarse, fc, x), translate_spectral(coarse, fc, x));
    const double ef = relative(fine, translate_theta(fine, ff, x), translate_spectral(fine, ff, x));
    INFO("x = (" << x[0] << ", " << x[1] << "), n=64 " << ec << ", n=128 " << ef);
    CHECK(ef <= 1e-4);
    CHECK(ef < ec);
  }
}

TEST_CASE("translation is symmetric in x and y") {
  const SpectralPlan& plan = desk();
  const Grid& g = plan.space_grid();
  std::mt19937_64 rng(3);
  const Field f = random_enveloped_field(g, rng);
  const Field F = plan.forward(f);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  double spectral = 0.0;
  double angular = 0.0;
  for (int k = 0; k < 6; ++k) {
    Point x = g.node(pick(rng));
    Point y = g.node(pick(rng));
    x[0] *= 0.2, x[1] *= 0.2, y[0] *= 0.2, y[1] *= 0.2;
    auto tau_at = [&](const Point& by, const Point& at) {
      return plan.inverse_at(times(kernel_on_frequency_grid(plan, reflect(by)), F), at);
    };
    spectral = std::max(spectral, std::abs(tau_at(x, y) - tau_at(y, x)));
    // Both points on nodes for the angular form.
    const std::size_t i = pick(rng) % 40 + g.flat_index(std::vector<std::size_t>{48, 0});
    const std::size_t j = pick(rng) % 40 + g.flat_index(std::vector<std::size_t>{44, 0});
    const Field ti = translate_theta(plan, f, g.node(i));
    const Field tj = translate_theta(plan, f, g.node(j));
    angular = std::max(angular, std::abs(ti[j] - tj[i]));
  }
  CHECK(spectral <= 1e-12);
  CHECK(angular <= 1e-4);
}

TEST_CASE("translation argument checks") {
  const SpectralPlan& plan = desk();
  const Field g = gaussian_field(plan.space_grid());
  const Point negative{0.0, -0.1};
  const Point short_point{0.5};
  CHECK_THROWS_AS(translate_theta(plan, g, negative), DomainError);
  CHECK_THROWS_AS(translate_spectral(plan, g, negative), DomainError);
  CHECK_THROWS_AS(translate_spectral(plan, g, short_point), DomainError);
  CHECK_THROWS_AS(translate_theta(plan, plan.forward(g), Point{0.0, 0.0}), DomainError);
}

TEST_CASE("translation norm bounds") {
  const SpectralPlan& plan = desk();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> cart(-2.0, 2.0);
  std::uniform_real_distribution<double> rad(0.0, 2.0);
  double l2 = 0.0;
  double l1 = 0.0;
  double sup = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Field f = random_enveloped_field(plan.space_grid(), rng);
    const Point x{cart(rng), rad(rng)};
    l2 = std::max(l2, norm(plan, translate_spectral(plan, f, x)) / norm(plan, f));
    const Field t = translate_theta(plan, f, x);
    l1 = std::max(l1, norm(plan, t, NormKind::l1) / norm(plan, f, NormKind::l1));
    sup = std::max(sup, norm(plan, t, NormKind::sup) / norm(plan, f, NormKind::sup));
  }
  CHECK(l2 <= 1.0 + 1e-12);
  // The angular form interpolates, so the sup and L^1 bounds carry its error.
  CHECK(l1 <= 1.0 + 1e-3);
  CHECK(sup <= 1.0 + 1e-3);
}

TEST_CASE("Gaussian convolved with itself") {
  // F(g * g) = exp(-|xi|^2), whose inverse is 2^{-(d + 2 alpha + 2)/2} exp(-|x|^2 / 4).
  const SpectralPlan& plan = desk();
  const Field g = gaussian_field(plan.space_grid());
  const Field expected = sample(plan, Side::space, [](const Point& x) {
    return Complex(0.25 * std::exp(-(x[0] * x[0] + x[1] * x[1]) / 4.0), 0.0);
  });
  const Field gg = convolve(plan, g, g);
  CHECK(norm(plan, gg - expected, NormKind::sup) <= 1e-5);
}

TEST_CASE("convolution algebra") {
  const SpectralPlan& plan = desk();
  std::mt19937_64 rng(5);
  const Field f = random_enveloped_field(plan.space_grid(), rng);
  const Field g = random_enveloped_field(plan.space_grid(), rng);
  const Field h = random_enveloped_field(plan.space_grid(), rng);
  const Field fg = convolve(plan, f, g);

  CHECK(relative(plan, fg, convolve(plan, g, f)) <= 1e-13);
  CHECK(relative(plan, convolve(plan, fg, h), convolve(plan, f, convolve(plan, g, h))) <= 1e-12);
  CHECK(relative(plan, plan.forward(fg), times(plan.forward(f), plan.forward(g))) <= 1e-12);
  CHECK(norm(plan, fg) <= norm(plan, f, NormKind::l1) * norm(plan, g));
  const Field linear = convolve(plan, f, Complex(2.0, -1.0) * g + h);
  CHECK(relative(plan, linear, Complex(2.0, -1.0) * fg + convolve(plan, f, h)) <= 1e-12);
}

TEST_CASE("direct and spectral convolution agree on a coarse grid") {
  const SpectralPlan plan = build_plan(make_grid(1, 0.5, 32, 8.0, 32, 8.0));
  std::mt19937_64 rng(6);
  const Field f = random_enveloped_field(plan.space_grid(), rng);
  const Field g = random_enveloped_field(plan.space_grid(), rng);
  CHECK(relative(plan, convolve(plan, f, g, ConvolutionMethod::direct), convolve(plan, f, g)) <= 1e-6);
}

TEST_CASE("convolution rejects mismatched grids") {
  const SpectralPlan& plan = desk();
  const SpectralPlan other = build_plan(make_grid(1, 0.5, 32, 8.0, 32, 8.0));
  const Field f = gaussian_field(plan.space_grid());
  const Field g = gaussian_field(other.space_grid());
  CHECK_THROWS_AS(convolve(plan, f, g), DomainError);
}
