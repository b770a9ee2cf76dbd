#include "weinstein/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Enough precision that the
// alternating series stays exact to double rounding at x = 20, where the
// largest term exceeds the result by eight orders of magnitude.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble operator*(DoubleDouble a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + DoubleDouble{q3, 0.0};
}

double series_double_double(double alpha, double x) {
  const double half = 0.5 * x;
  const DoubleDouble q = -two_prod(half, half);
  DoubleDouble term{1.0, 0.0};
  DoubleDouble sum{1.0, 0.0};
  for (int k = 0; k < 1000; ++k) {
    const double kp1 = static_cast<double>(k + 1);
    const DoubleDouble denom = two_sum(alpha, kp1) * kp1;
    term = term * q / denom;
    sum = sum + term;
    const bool past_peak = half * half < kp1 * (alpha + kp1);
    if (past_peak && std::abs(term.hi) <= 1e-33 * std::abs(sum.hi)) break;
  }
  return sum.hi + sum.lo;
}

// Hankel expansion of J_alpha for large x, truncated before its smallest term.
double bessel_j_asymptotic(double alpha, double x) {
  const double mu = 4.0 * alpha * alpha;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = std::abs(term);
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (8.0 * k * x);
    if (next == 0.0 || std::abs(next) >= previous) break;
    term = next;
    previous = std::abs(term);
    // b_1 - b_3 + b_5 ... goes to Q, b_0 - b_2 + b_4 ... goes to P.
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
  }
  // cos(x - phase) expanded so that x itself is never rounded into a sum.
  const double phase = (0.5 * alpha + 0.25) * std::numbers::pi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cp = std::cos(phase);
  const double sp = std::sin(phase);
  const double cos_chi = cx * cp + sx * sp;
  const double sin_chi = sx * cp - cx * sp;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

BesselIndex::BesselIndex(double alpha) : alpha_(alpha) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw DomainError("Bessel index must satisfy alpha > -1/2, got " + std::to_string(alpha));
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma requires x > 0, got " + std::to_string(x));
  // Near the zero at 2, lgamma loses relative accuracy; shifting to the
  // neighbourhood of 1 keeps the two terms of like size (sum ~ 0.42 (x - 2)).
  if (x > 1.5 && x < 2.5) return std::log1p(x - 2.0) + std::lgamma(x - 1.0);
  return std::lgamma(x);
}

double bessel_j_normalized(BesselIndex idx, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j_normalized requires x >= 0");
  const double alpha = idx.value();
  if (x == 0.0) return 1.0;
  if (x < bessel_series_switch(alpha)) return series_double_double(alpha, x);
  const double scale = std::exp(ln_gamma(alpha + 1.0) + alpha * std::log(2.0 / x));
  return scale * bessel_j_asymptotic(alpha, x);
}

double bessel_series_reference(BesselIndex idx, double x, double tol) {
  if (!(x >= 0.0)) throw DomainError("bessel_series_reference requires x >= 0");
  if (!(tol > 0.0)) throw DomainError("bessel_series_reference requires tol > 0");
  if (x > 40.0) throw RangeError("bessel_series_reference: x beyond series regime (x <= 40)");
  const double alpha = idx.value();
  const double q = -0.25 * x * x;
  double sum = 1.0;
  double compensation = 0.0;
  double term = 1.0;
  for (int k = 0; k < 2000; ++k) {
    const double kp1 = k + 1.0;
    term *= q / (kp1 * (alpha + kp1));
    // Neumaier summation
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
    const bool past_peak = -q < kp1 * (alpha + kp1);
    if (past_peak && std::abs(term) < tol * std::abs(sum + compensation)) break;
  }
  return sum + compensation;
}

}  // namespace weinstein
