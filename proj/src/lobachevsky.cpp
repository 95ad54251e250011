#include <array>
#include <cmath>

#include "cusp/geom.hpp"

namespace cusp {

namespace {

// Coefficients zeta(2k) / (k (2k+1)) of the Clausen series
//   Cl2(x) = x - x log x + sum_k c_k x (x / 2pi)^(2k),   0 < x < 2pi.
constexpr int kTerms = 40;

std::array<double, kTerms + 1> clausen_coefficients() {
  std::array<double, kTerms + 1> c{};
  const double pi2 = kPi * kPi;
  const double closed_form[] = {0.0, pi2 / 6, pi2 * pi2 / 90, pi2 * pi2 * pi2 / 945,
                                pi2 * pi2 * pi2 * pi2 / 9450,
                                pi2 * pi2 * pi2 * pi2 * pi2 / 93555};
  for (int k = 1; k <= kTerms; ++k) {
    double zeta;
    if (k <= 5) {
      zeta = closed_form[k];
    } else {
      zeta = 0.0;
      for (int n = 60; n >= 1; --n) zeta += std::pow(static_cast<double>(n), -2.0 * k);
    }
    c[k] = zeta / (k * (2.0 * k + 1.0));
  }
  return c;
}

// Cl2(x) for x in [0, pi].
double clausen(double x) {
  static const auto coeff = clausen_coefficients();
  if (x == 0.0) return 0.0;
  const double r2 = (x / (2 * kPi)) * (x / (2 * kPi));
  double power = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kTerms; ++k) {
    power *= r2;
    const double term = coeff[k] * power;
    sum += term;
    if (term < 1e-18 * (sum + 1e-300)) break;
  }
  return x - x * std::log(x) + x * sum;
}

}  // namespace

double lobachevsky(double theta) {
  // Reduce to [-pi/2, pi/2] by periodicity, then to [0, pi/2] by oddness.
  double t = theta - kPi * std::nearbyint(theta / kPi);
  const double sign = t < 0 ? -1.0 : 1.0;
  t = std::fabs(t);
  return sign * 0.5 * clausen(2.0 * t);
}

double lobachevsky_derivative(double theta) {
  return -std::log(std::fabs(2.0 * std::sin(theta)));
}

}  // namespace cusp
