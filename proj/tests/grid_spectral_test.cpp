#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "weinstein/errors.hpp"
#include "weinstein/parallel.hpp"
#include "weinstein/sampling.hpp"
#include "weinstein/spectral.hpp"

using namespace weinstein;

namespace {

double relative(const SpectralPlan& plan, const Field& a, const Field& b) { return norm(plan, a - b) / norm(plan, b); }

// Same samples, reinterpreted on another grid of identical shape.
Field relabel(const Field& f, const Grid& grid) { return Field(grid, {f.values().begin(), f.values().end()}); }

}  // namespace

TEST_CASE("grid validation and nodes") {
  CHECK_THROWS_AS(make_grid(0, 0.5, 8, 1.0, 8, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(4, 0.5, 8, 1.0, 8, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1, 0.5, 1, 1.0, 8, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1, 0.5, 8, 1.0, 8, -1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1, -0.6, 8, 1.0, 8, 1.0), DomainError);

  const Grid g = make_grid(1, 0.5, 4, 2.0, 5, 1.0);
  CHECK(g.size() == 20);
  CHECK(g.cart_node(0, 0) == doctest::Approx(-1.5));
  CHECK(g.cart_node(0, 3) == doctest::Approx(1.5));
  CHECK(g.radial_node(0) == doctest::Approx(0.1));
  CHECK(g.radial_node(4) == doctest::Approx(0.9));
  // Radial index runs fastest.
  const Point p = g.node(6);
  CHECK(p[0] == doctest::Approx(-0.5));
  CHECK(p[1] == doctest::Approx(0.3));
  const std::size_t multi[] = {1, 1};
  CHECK(g.flat_index(multi) == 6);
  CHECK_THROWS_AS(Field(g, std::vector<Complex>(19)), DomainError);
}

TEST_CASE("plan construction") {
  const SpectralPlan plan = build_plan(make_grid(1, 0.5, 64, 2.0, 64, 2.0));
  CHECK(plan.axis_kernel(0).rows() == 64);
  CHECK(plan.axis_kernel(0).cols() == 64);
  CHECK(plan.axis_kernel(1).rows() == 64);
  CHECK(plan.freq_grid().cart_extents[0] == doctest::Approx(16.0 * std::numbers::pi));
  CHECK(plan.freq_grid().radial_extent == doctest::Approx(32.0 * std::numbers::pi));
  CHECK(plan.freq_grid().side == Side::frequency);

  const SpectralPlan custom = build_plan(make_grid(1, 0.5, 16, 2.0, 16, 2.0), std::vector<double>{3.0, 4.0});
  CHECK(custom.freq_grid().cart_extents[0] == 3.0);
  CHECK(custom.freq_grid().radial_extent == 4.0);
  CHECK_THROWS_AS(build_plan(make_grid(1, 0.5, 16, 2.0, 16, 2.0), std::vector<double>{3.0}), ConfigError);

  SUBCASE("weights embed the measure") {
    const Grid& g = plan.space_grid();
    const double c = measure_normalization(BesselIndex(0.5), 1);
    CHECK(c == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    const auto w = plan.quad_weights(Side::space);
    for (std::size_t i : {0u, 17u, 4095u}) {
      const Point x = g.node(i);
      CHECK(w[i] == doctest::Approx(g.cart_step(0) * g.radial_step() * x[1] * x[1] / c).epsilon(1e-14));
    }
  }
  SUBCASE("Cartesian kernels are unimodular") {
    double worst = 0.0;
    const auto& k = plan.axis_kernel(0);
    for (Eigen::Index r = 0; r < k.rows(); ++r)
      for (Eigen::Index c = 0; c < k.cols(); ++c) worst = std::max(worst, std::abs(std::abs(k(r, c)) - 1.0));
    CHECK(worst <= 1e-14);
  }
}

TEST_CASE("mu_alpha mass of [-1,1] x (0,1] converges to 2/(3 pi)") {
  const double exact = 2.0 / (3.0 * std::numbers::pi);
  double previous = 1.0;
  for (std::size_t n : {16u, 32u, 64u, 128u, 256u}) {
    const SpectralPlan plan = build_plan(make_grid(1, 0.5, n, 1.0, n, 1.0));
    const double error = std::abs(total_mass(plan, Side::space) - exact);
    CHECK(error < previous / 3.5);
    previous = error;
  }
  CHECK(previous <= 1e-5 * exact);
}

TEST_CASE("Weinstein kernel") {
  const BesselIndex half(0.5);
  CHECK(weinstein_kernel(half, Point{0.3, 2.0}, Point{0.0, 0.0}) == Complex(1.0, 0.0));
  CHECK(std::abs(weinstein_kernel(half, Point{1.0, std::numbers::pi}, Point{std::numbers::pi, 1.0})) <= 1e-12);
  CHECK_THROWS_AS(weinstein_kernel(half, Point{1.0, 1.0}, Point{1.0, 1.0, 1.0}), DomainError);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> a(-0.49, 8.0);
  double largest = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const BesselIndex idx(a(rng));
    const Point lambda{u(rng), u(rng), std::abs(u(rng))};
    const Point x{u(rng), u(rng), std::abs(u(rng))};
    const Complex value = weinstein_kernel(idx, lambda, x);
    largest = std::max(largest, std::abs(value));
    CHECK(value == weinstein_kernel(idx, x, lambda));
    CHECK(weinstein_kernel(idx, lambda, reflect(x)) == weinstein_kernel(idx, reflect(lambda), x));
  }
  CHECK(largest <= 1.0 + 1e-12);
}

TEST_CASE("forward transform") {
  const SpectralPlan plan = build_plan(make_grid(1, 0.5, 128, 10.0, 128, 10.0));
  const Field g = gaussian_field(plan.space_grid());

  SUBCASE("Gaussian fixed point") {
    CHECK(norm(plan, plan.forward(g) - gaussian_field(plan.freq_grid()), NormKind::sup) <= 1e-6);
  }
  SUBCASE("off-centre field against a dense quadrature oracle") {
    auto f = [](double a, double b) { return std::exp(-0.5 * (a - 0.7) * (a - 0.7) - 0.8 * b * b); };
    const Field sampled = sample(plan, Side::space, [&](const Point& x) { return Complex(f(x[0], x[1])); });
    const Field spectrum = plan.forward(sampled);
    for (std::size_t p : {0u, 1000u, 8260u, 9000u}) {
      const Point lambda = plan.freq_grid().node(p);
      INFO("lambda = (" << lambda[0] << ", " << lambda[1] << ")");
      CHECK(std::abs(spectrum[p] - oracle::transform_half(f, lambda[0], lambda[1], 10.0, 10.0, 1200)) <= 1e-6);
    }
    const Point off{0.37, 1.11};
    CHECK(std::abs(plan.forward_at(sampled, off) - oracle::transform_half(f, off[0], off[1], 10.0, 10.0, 1200)) <=
          1e-6);
  }
  SUBCASE("linearity") {
    std::mt19937_64 rng(8);
    const Field f = random_enveloped_field(plan.space_grid(), rng);
    const Complex a{0.3, -1.7};
    CHECK(norm(plan, plan.forward(a * f) - a * plan.forward(f)) <= 1e-14 * norm(plan, plan.forward(f)));
    CHECK(norm(plan, plan.forward(Field(plan.space_grid()))) == 0.0);
  }
  SUBCASE("grid mismatch") {
    CHECK_THROWS_AS(plan.forward(gaussian_field(make_grid(1, 0.5, 64, 10.0, 64, 10.0))), DomainError);
    CHECK_THROWS_AS(plan.forward(gaussian_field(plan.freq_grid())), DomainError);
  }
}

TEST_CASE("inverse transform") {
  for (double alpha : {0.5, 1.5}) {
    const SpectralPlan plan = build_plan(make_grid(1, alpha, 128, 10.0, 128, 10.0));
    const Field g = gaussian_field(plan.space_grid());
    INFO("alpha = " << alpha);
    CHECK(relative(plan, plan.inverse(plan.forward(g)), g) <= 1e-6);
    CHECK(norm(plan, plan.inverse(Field(plan.freq_grid()))) == 0.0);
  }

  SUBCASE("F^{-1} phi(lambda) = F phi(-lambda)") {
    // Extents chosen so that the space and frequency grids coincide.
    const std::size_t n = 48;
    const double L = std::sqrt(std::numbers::pi * n / 2.0);
    const double R = std::sqrt(std::numbers::pi * n);
    const SpectralPlan plan = build_plan(make_grid(1, 0.5, n, L, n, R));
    REQUIRE(plan.freq_grid().cart_extents[0] == doctest::Approx(L));
    REQUIRE(plan.freq_grid().radial_extent == doctest::Approx(R));
    std::mt19937_64 rng(4);
    const Field F = random_enveloped_field(plan.freq_grid(), rng);
    const Field as_space = relabel(F, plan.space_grid());
    const Field inv = plan.inverse(F);
    const Field fwd = plan.forward(as_space);
    const Grid& g = plan.space_grid();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t here[] = {i, j};
        const std::size_t mirror[] = {n - 1 - i, j};
        worst = std::max(worst, std::abs(inv[g.flat_index(here)] - fwd[g.flat_index(mirror)]));
      }
    }
    CHECK(worst <= 1e-13);

    // Real, Cartesian-constant spectrum: the reflection is invisible.
    const Field radial = sample(plan, Side::frequency, [](const Point& xi) { return Complex(std::exp(-xi[1] * xi[1])); });
    const Field radial_space = relabel(radial, plan.space_grid());
    CHECK(norm(plan, plan.inverse(radial) - relabel(plan.forward(radial_space), plan.space_grid()), NormKind::sup) <=
          1e-13);
  }
}

TEST_CASE("Parseval, Plancherel and Hausdorff-Young") {
  const SpectralPlan plan = build_plan(make_grid(1, 0.5, 96, 10.0, 96, 10.0));
  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    const Field f = random_enveloped_field(plan.space_grid(), rng);
    const Field g = random_enveloped_field(plan.space_grid(), rng);
    const Field Ff = plan.forward(f);
    const Field Fg = plan.forward(g);
    CHECK(std::abs(inner_product(plan, f, f) - norm(plan, f) * norm(plan, f)) <= 1e-13 * norm(plan, f) * norm(plan, f));
    const Complex lhs = inner_product(plan, f, g);
    CHECK(std::abs(lhs - inner_product(plan, Ff, Fg)) <= 1e-6 * norm(plan, f) * norm(plan, g));
    CHECK(std::abs(norm(plan, Ff) / norm(plan, f) - 1.0) <= 1e-4);
    CHECK(norm(plan, Ff, NormKind::sup) <= norm(plan, f, NormKind::l1));
  }
  CHECK_THROWS_AS(inner_product(plan, gaussian_field(plan.space_grid()), gaussian_field(plan.freq_grid())),
                  DomainError);
}

TEST_CASE("higher dimensions") {
  SUBCASE("d = 2 Gaussian fixed point and round trip") {
    const SpectralPlan plan = build_plan(make_grid(2, 0.5, 40, 8.0, 40, 8.0));
    const Field g = gaussian_field(plan.space_grid());
    CHECK(norm(plan, plan.forward(g) - gaussian_field(plan.freq_grid()), NormKind::sup) <= 1e-6);
    CHECK(relative(plan, plan.inverse(plan.forward(g)), g) <= 1e-6);
  }
  SUBCASE("d = 3, alpha = 1.5 Plancherel") {
    const SpectralPlan plan = build_plan(make_grid(3, 1.5, 20, 6.0, 20, 6.0));
    const Field g = gaussian_field(plan.space_grid());
    CHECK(std::abs(norm(plan, plan.forward(g)) / norm(plan, g) - 1.0) <= 1e-6);
  }
}

TEST_CASE("transforms are independent of the thread count") {
  const SpectralPlan plan = build_plan(make_grid(1, 1.5, 64, 8.0, 64, 8.0));
  std::mt19937_64 rng(9);
  const Field f = random_enveloped_field(plan.space_grid(), rng);
  set_thread_count(1);
  const Field one = plan.forward(f);
  set_thread_count(4);
  const Field four = plan.forward(f);
  set_thread_count(1);
  CHECK(one.values().size() == four.values().size());
  bool identical = true;
  for (std::size_t i = 0; i < one.size(); ++i) identical = identical && one[i] == four[i];
  CHECK(identical);
}
