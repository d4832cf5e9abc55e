#include <cmath>
#include <limits>
#include <stdexcept>

#include "carand/numerics.hpp"

namespace carand::numerics {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 1'000'000;

// x^a e^{-x} / Γ(a), evaluated in log space.
double prefactor(double a, double x) { return std::exp(a * std::log(x) - x - std::lgamma(a)); }

// P(a, x) by the power series  e^{-x} x^a / Γ(a+1) * Σ x^n / ((a+1)...(a+n)).
double lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * prefactor(a, x);
}

// Q(a, x) by the continued fraction for Γ(a, x), modified Lentz.
double upper_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h * prefactor(a, x);
}

void check_domain(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("incomplete gamma requires a > 0");
  if (!(x >= 0.0)) throw std::domain_error("incomplete gamma requires x >= 0");
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

double erfc(double x) { return std::erfc(x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double igamc(double a, double x) {
  check_domain(a, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return clamp01(1.0 - lower_series(a, x));
  return clamp01(upper_continued_fraction(a, x));
}

double igam(double a, double x) {
  check_domain(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return clamp01(lower_series(a, x));
  return clamp01(1.0 - upper_continued_fraction(a, x));
}

}  // namespace carand::numerics
