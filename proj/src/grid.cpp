#include "weinstein/grid.hpp"

#include <cmath>
#include <sstream>

#include "weinstein/errors.hpp"

namespace weinstein {

Point reflect(std::span<const double> x) {
  Point out(x.begin(), x.end());
  for (std::size_t j = 0; j + 1 < out.size(); ++j) out[j] = -out[j];
  return out;
}

std::string to_string(Side side) { return side == Side::space ? "space" : "frequency"; }

Side side_from_string(const std::string& text) {
  if (text == "space") return Side::space;
  if (text == "frequency") return Side::frequency;
  throw ConfigError("unknown grid side '" + text + "'");
}

void Grid::validate() const {
  if (d < 1 || d > 3) throw ConfigError("grid dimension d must be 1, 2 or 3");
  if (cart_counts.size() != static_cast<std::size_t>(d) ||
      cart_extents.size() != static_cast<std::size_t>(d)) {
    throw ConfigError("grid needs exactly d Cartesian counts and extents");
  }
  for (int j = 0; j < d; ++j) {
    if (cart_counts[j] < 2) throw ConfigError("Cartesian counts must be >= 2");
    if (!(cart_extents[j] > 0.0) || !std::isfinite(cart_extents[j])) {
      throw ConfigError("Cartesian extents must be positive");
    }
  }
  if (radial_count < 2) throw ConfigError("radial count must be >= 2");
  if (!(radial_extent > 0.0) || !std::isfinite(radial_extent)) {
    throw ConfigError("radial extent must be positive");
  }
}

std::size_t Grid::size() const noexcept {
  std::size_t n = radial_count;
  for (auto c : cart_counts) n *= c;
  return n;
}

std::vector<std::size_t> Grid::shape() const {
  std::vector<std::size_t> s(cart_counts);
  s.push_back(radial_count);
  return s;
}

double Grid::cart_step(int axis) const {
  return 2.0 * cart_extents[axis] / static_cast<double>(cart_counts[axis]);
}

double Grid::radial_step() const { return radial_extent / static_cast<double>(radial_count); }

double Grid::cart_node(int axis, std::size_t i) const {
  return -cart_extents[axis] + (static_cast<double>(i) + 0.5) * cart_step(axis);
}

double Grid::radial_node(std::size_t i) const {
  return (static_cast<double>(i) + 0.5) * radial_step();
}

Point Grid::node(std::size_t flat) const {
  Point p(d + 1);
  p[d] = radial_node(flat % radial_count);
  flat /= radial_count;
  for (int j = d - 1; j >= 0; --j) {
    p[j] = cart_node(j, flat % cart_counts[j]);
    flat /= cart_counts[j];
  }
  return p;
}

std::size_t Grid::flat_index(std::span<const std::size_t> multi) const {
  std::size_t flat = 0;
  for (int j = 0; j < d; ++j) flat = flat * cart_counts[j] + multi[j];
  return flat * radial_count + multi[d];
}

Grid make_grid(int d, double alpha, std::size_t n_cart, double cart_extent, std::size_t n_radial,
               double radial_extent, Side side) {
  Grid g;
  g.d = d;
  g.alpha = BesselIndex(alpha);
  g.cart_counts.assign(d, n_cart);
  g.cart_extents.assign(d, cart_extent);
  g.radial_count = n_radial;
  g.radial_extent = radial_extent;
  g.side = side;
  g.validate();
  return g;
}

Field::Field(Grid grid) : grid_(std::move(grid)) {
  grid_.validate();
  values_.assign(grid_.size(), Complex{});
}

Field::Field(Grid grid, std::vector<Complex> values) : grid_(std::move(grid)), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    std::ostringstream msg;
    msg << "field has " << values_.size() << " samples but its grid has " << grid_.size() << " nodes";
    throw DomainError(msg.str());
  }
}

bool Field::all_finite() const {
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(*this, other, "Field::operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(*this, other, "Field::operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(Complex a) {
  for (auto& v : values_) v *= a;
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(Complex a, Field f) { return f *= a; }

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (!(a.grid() == b.grid())) throw DomainError(std::string(where) + ": fields live on different grids");
}

}  // namespace weinstein
