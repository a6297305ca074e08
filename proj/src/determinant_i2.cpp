#include "traceval/determinant_i2.hpp"

#include <cmath>
#include <stdexcept>

namespace traceval {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_dimension_four(const ExtensionField& field) {
  if (field.d != 4.0) throw std::invalid_argument("determinant functionals need d = 4");
}

double sqrt_vol() { return std::sqrt(2.0 * kPi * kPi); }

double max_abs_neumann(const ExtensionField& field) {
  double m = 0.0;
  for (double n : field.neumann.coeffs) m = std::max(m, std::fabs(n));
  return m;
}

I2Report::BoundaryClass classify(const ExtensionField& field) {
  double tol = 1e-12;
  double head = field.neumann.coeffs.empty() ? 0.0 : field.neumann.coeffs[0];
  double tail = 0.0;
  for (size_t k = 1; k < field.neumann.coeffs.size(); ++k) {
    tail = std::max(tail, std::fabs(field.neumann.coeffs[k]));
  }
  if (std::fabs(head) <= tol && tail <= tol) return I2Report::BoundaryClass::NeumannZero;
  if (std::fabs(head + sqrt_vol()) <= tol * sqrt_vol() && tail <= tol) {
    return I2Report::BoundaryClass::NeumannMinusOne;
  }
  return I2Report::BoundaryClass::Unconstrained;
}

}  // namespace

ZonalSpectrum p3b_boundary(const ExtensionField& field) {
  require_dimension_four(field);
  BoundaryJet jet = boundary_jet(field);
  ZonalSpectrum out = zero_spectrum(field.d, field.degree_cap());
  for (int k = 0; k <= field.degree_cap(); ++k) {
    double shift = k * (k + 2.0);
    out.coeffs[k] = -0.5 * jet.ambient_laplace_normal.coeffs[k] +
                    shift * (jet.normal.coeffs[k] + jet.value.coeffs[k]);
  }
  return out;
}

double b2_flat(const ExtensionField& field) {
  require_dimension_four(field);
  // Bulk pairing: Delta^2 w has per-mode radial part u2 L2 L1 r^k.
  double bulk = 0.0;
  for (int k = 0; k <= field.degree_cap(); ++k) {
    double u2 = field.u[k][2];
    if (u2 == 0.0) continue;
    double factor = u2 * laplace_coefficient(4.0, k, 2) * laplace_coefficient(4.0, k, 1);
    for (int j = 0; j <= 2; ++j) {
      bulk += factor * field.u[k][j] / (2.0 * k + 2.0 * j + 4.0);
    }
  }
  BoundaryJet jet = boundary_jet(field);
  ZonalSpectrum p3b = p3b_boundary(field);
  double pairing = 0.0;
  for (int k = 0; k <= field.degree_cap(); ++k) {
    pairing += jet.value.coeffs[k] * p3b.coeffs[k];
  }
  double mean_term = jet.value.coeffs[0] * sqrt_vol();
  return 0.25 * bulk + 0.5 * pairing + 2.0 * mean_term;
}

double d_term_flat(const ExtensionField& field) {
  require_dimension_four(field);
  BoundaryJet jet = boundary_jet(field);
  return 3.0 * (jet.normal.coeffs[0] - jet.normal2.coeffs[0]) * sqrt_vol();
}

I2Report i2_functional(const ExtensionField& field, I2Report::Metric metric) {
  require_dimension_four(field);
  I2Report report;
  report.metric = metric;
  report.class_tag = classify(field);
  report.b2 = b2_flat(field);
  if (metric == I2Report::Metric::GStar) {
    if (max_abs_neumann(field) > 1e-12) {
      throw std::invalid_argument(
          "adapted-metric i2 is defined on fields with vanishing normal derivative");
    }
    report.d_term = 0.0;
    report.i2 = report.b2;
  } else {
    report.d_term = d_term_flat(field);
    report.i2 = report.b2 + report.d_term / 12.0;
  }
  return report;
}

std::pair<ZonalProfile, double> normalize_constraint(const ZonalProfile& phi, int angular_nodes) {
  ZonalProfile cubed{[phi](double t) { return std::exp(3.0 * phi.f(t)); }, 0.0};
  double integral = boundary_integral(cubed, 4.0, angular_nodes);
  if (!std::isfinite(integral) || integral <= 0.0) {
    throw std::runtime_error("volume constraint integral diverged");
  }
  double c = -std::log(integral / (2.0 * kPi * kPi)) / 3.0;
  ZonalProfile shifted{[phi, c](double t) { return phi.f(t) + c; }, phi.endpoint_exponent};
  return {shifted, c};
}

ExtensionField add_rho(const ExtensionField& field) {
  require_dimension_four(field);
  ExtensionField out = field;
  // rho = 1/2 - r^2/2 lives on the mean mode; Y_0 = 1/sqrt(vol).
  double half = 0.5 * sqrt_vol();
  out.u[0][0] += half;
  out.u[0][1] -= half;
  out.J = std::max(out.J, 1);
  out.neumann.coeffs[0] -= sqrt_vol();
  return out;
}

}  // namespace traceval
