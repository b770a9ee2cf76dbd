#pragma once

#include <cstddef>
#include <vector>

namespace weinstein {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// n-point composite midpoint rule on [a, b].
QuadratureRule midpoint_rule(std::size_t n, double a, double b);

}  // namespace weinstein
