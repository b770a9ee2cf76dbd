#include "weinstein/sampling.hpp"

#include <cmath>

namespace weinstein {

Field gaussian_field(const Grid& grid, double width) {
  Field out(grid);
  const double scale = 1.0 / (2.0 * width * width);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Point x = grid.node(i);
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    out[i] = std::exp(-r2 * scale);
  }
  return out;
}

Field random_enveloped_field(const Grid& grid, std::mt19937_64& rng, int bumps) {
  std::uniform_real_distribution<double> centre(-2.0, 2.0);
  std::uniform_real_distribution<double> width(0.8, 1.5);
  std::normal_distribution<double> amp(0.0, 1.0);
  struct Bump {
    Point centre;
    double cart_width;
    double radial_width;
    Complex amplitude;
  };
  std::vector<Bump> spec;
  for (int k = 0; k < bumps; ++k) {
    Bump b;
    b.centre.resize(grid.d);
    for (auto& c : b.centre) c = centre(rng);
    b.cart_width = width(rng);
    b.radial_width = width(rng);
    const double re = amp(rng);
    const double im = amp(rng);
    b.amplitude = {re, im};
    spec.push_back(std::move(b));
  }
  Field out(grid);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Point x = grid.node(i);
    Complex v{};
    for (const auto& b : spec) {
      double c2 = 0.0;
      for (int j = 0; j < grid.d; ++j) c2 += (x[j] - b.centre[j]) * (x[j] - b.centre[j]);
      const double r2 = x[grid.d] * x[grid.d];
      v += b.amplitude * std::exp(-c2 / (2.0 * b.cart_width * b.cart_width) -
                                  r2 / (2.0 * b.radial_width * b.radial_width));
    }
    out[i] = v;
  }
  return out;
}

}  // namespace weinstein
