#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "weinstein/special_functions.hpp"

namespace weinstein {

using Complex = std::complex<double>;

/// A point of R^d x [0, inf): d Cartesian coordinates followed by the radial
/// coordinate.
using Point = std::vector<double>;

/// Reflection of the Cartesian part, (-x', x_{d+1}).
Point reflect(std::span<const double> x);

enum class Side { space, frequency };

std::string to_string(Side side);
Side side_from_string(const std::string& text);

/// Midpoint discretisation of R^d x (0, inf). Cartesian axis j covers
/// [-L_j, L_j] with n_j cells, the radial axis covers (0, R] with n_r cells.
/// Nodes sit at cell centres, so the radial coordinate is never 0.
struct Grid {
  int d = 1;
  BesselIndex alpha{0.0};
  std::vector<std::size_t> cart_counts;
  std::vector<double> cart_extents;
  std::size_t radial_count = 2;
  double radial_extent = 1.0;
  Side side = Side::space;

  /// Throws ConfigError when counts/extents are inconsistent.
  void validate() const;

  std::size_t size() const noexcept;
  /// Axis counts in storage order (Cartesian axes, then radial).
  std::vector<std::size_t> shape() const;

  double cart_step(int axis) const;
  double radial_step() const;
  double cart_node(int axis, std::size_t i) const;
  double radial_node(std::size_t i) const;

  /// Coordinates of the node with flat (row-major, radial fastest) index.
  Point node(std::size_t flat) const;
  /// Flat index of a multi-index given in storage order.
  std::size_t flat_index(std::span<const std::size_t> multi) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Convenience constructor for the common uniform case.
Grid make_grid(int d, double alpha, std::size_t n_cart, double cart_extent, std::size_t n_radial,
               double radial_extent, Side side = Side::space);

/// Complex samples of a function on a Grid.
class Field {
 public:
  Field() = default;
  explicit Field(Grid grid);
  Field(Grid grid, std::vector<Complex> values);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  bool all_finite() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(Complex a);

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(Complex a, Field f);

/// Throws DomainError unless both fields live on the same grid.
void require_same_grid(const Field& a, const Field& b, const char* where);

}  // namespace weinstein
