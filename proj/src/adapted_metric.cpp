#include "traceval/adapted_metric.hpp"

#include <cmath>
#include <stdexcept>

namespace traceval {

namespace {

void require_interior(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error("residual evaluators need 0 < r < 1");
  }
}

void require_supercritical(double d) {
  if (!(d > 4.0)) throw std::domain_error("power-law factor needs d > 4");
}

}  // namespace

double rho(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("rho needs 0 <= r <= 1");
  return 0.5 * (1.0 - r * r);
}

double psi(double r, double d) {
  require_supercritical(d);
  return 1.0 + 0.5 * (d - 4.0) * rho(r);
}

double tau(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("tau needs 0 <= r < 1");
  double p = rho(r);
  return std::log(p) + p;
}

double AdaptedMetric::conformal_factor(double r) const {
  if (kind == Kind::Exponential) return std::exp(2.0 * rho(r));
  return std::pow(psi(r, d), 4.0 / (d - 4.0));
}

AdaptedMetric adapted_metric(double d) {
  if (d == 4.0) return AdaptedMetric{d, AdaptedMetric::Kind::Exponential};
  require_supercritical(d);
  return AdaptedMetric{d, AdaptedMetric::Kind::PowerLaw};
}

double psi_ode_residual(double r, double d) {
  require_interior(r);
  require_supercritical(d);
  long double R = r, D = d;
  long double p = 0.5L * (1.0L - R * R);
  long double p2 = p * p, p3 = p2 * p;
  long double kappa = 0.5L * (D - 4.0L);
  long double ps = 1.0L + kappa * p;
  long double dps = -kappa * R;
  long double d2ps = -kappa;
  long double res =
      -d2ps / p2 - (D - 5.0L) / R * dps / p2 - 2.0L / R * dps / p3 - (D - 4.0L) * ps / p3;
  return static_cast<double>(res);
}

double error_term_gap(double r, double d) {
  require_interior(r);
  require_supercritical(d);
  long double R = r, D = d;
  long double p = 0.5L * (1.0L - R * R);
  long double p2 = p * p, p3 = p2 * p;
  // Exact radial derivatives of rho^{-1}.
  long double first = R / p2;
  long double second = 1.0L / p2 + 2.0L * R * R / p3;
  long double lap = second + (D - 1.0L) / R * first;
  long double err = -lap / p + 2.0L / (p2 * p2);
  return static_cast<double>(std::fabs(static_cast<double>(err + (D - 4.0L) / p3)));
}

double tau_pde_residual(double r) {
  require_interior(r);
  long double R = r;
  long double p = 0.5L * (1.0L - R * R);
  long double p2 = p * p;
  long double taup = -R / p - R;
  long double taupp = -(1.0L + R * R) / (2.0L * p2) - 1.0L;
  long double lap_h = p2 * (taupp + 3.0L / R * taup) + 2.0L * p * R * taup;
  return static_cast<double>(std::fabs(static_cast<double>(-lap_h - 3.0L)));
}

double dimension_continuity_gap(double r, double eps) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("needs 0 <= r <= 1");
  if (!(eps > 0.0 && eps <= 0.1)) throw std::domain_error("needs 0 < eps <= 0.1");
  long double R = r, E = eps;
  long double p = 0.5L * (1.0L - R * R);
  long double power = std::exp((4.0L / E) * std::log1p(0.5L * E * p));
  long double target = std::exp(2.0L * p);
  return static_cast<double>(std::fabs(static_cast<double>(power - target)));
}

}  // namespace traceval
