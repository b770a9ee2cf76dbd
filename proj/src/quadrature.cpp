#include "weinstein/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

// Rule on [-1, 1], ascending nodes.
QuadratureRule compute_gauss_legendre(std::size_t n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const QuadratureRule& canonical_gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  const QuadratureRule& ref = canonical_gauss_legendre(n);
  const double mid = 0.5 * (b + a);
  const double half = 0.5 * (b - a);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.nodes[i];
    rule.weights[i] = half * ref.weights[i];
  }
  return rule;
}

QuadratureRule midpoint_rule(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("midpoint_rule: need at least one node");
  QuadratureRule rule;
  const double h = (b - a) / static_cast<double>(n);
  rule.nodes.reserve(n);
  rule.weights.assign(n, h);
  for (std::size_t i = 0; i < n; ++i) rule.nodes.push_back(a + (static_cast<double>(i) + 0.5) * h);
  return rule;
}

}  // namespace weinstein
