#include "traceval/ball_extension.hpp"

#include <cmath>
#include <stdexcept>

namespace traceval {

namespace {

void require_same_shape(const ZonalSpectrum& a, const ZonalSpectrum& b) {
  if (a.d != b.d || a.coeffs.size() != b.coeffs.size()) {
    throw std::invalid_argument("boundary spectra must share dimension and degree cap");
  }
}

ZonalSpectrum like(const ExtensionField& field) { return zero_spectrum(field.d, field.degree_cap()); }

}  // namespace

double laplace_coefficient(double d, int k, int j) {
  return 2.0 * j * (2.0 * k + 2.0 * j + d - 2.0);
}

ExtensionField extend_biharmonic(const ZonalSpectrum& dirichlet, const ZonalSpectrum& neumann) {
  require_same_shape(dirichlet, neumann);
  ExtensionField field;
  field.d = dirichlet.d;
  field.J = 1;
  field.dirichlet = dirichlet;
  field.neumann = neumann;
  field.u.assign(dirichlet.coeffs.size(), {0.0, 0.0, 0.0});
  for (int k = 0; k <= dirichlet.degree_cap(); ++k) {
    // Solve a + b = c, k a + (k+2) b = n; always nonsingular.
    double c = dirichlet.coeffs[k];
    double n = neumann.coeffs[k];
    double b = 0.5 * (n - k * c);
    field.u[k][0] = c - b;
    field.u[k][1] = b;
  }
  return field;
}

ExtensionField extend_harmonic(const ZonalSpectrum& dirichlet) {
  ExtensionField field;
  field.d = dirichlet.d;
  field.J = 0;
  field.dirichlet = dirichlet;
  field.neumann = zero_spectrum(dirichlet.d, dirichlet.degree_cap());
  field.u.assign(dirichlet.coeffs.size(), {0.0, 0.0, 0.0});
  for (int k = 0; k <= dirichlet.degree_cap(); ++k) {
    field.u[k][0] = dirichlet.coeffs[k];
    field.neumann.coeffs[k] = k * dirichlet.coeffs[k];
  }
  return field;
}

ExtensionField add_perturbation(const ExtensionField& field, int k, double eps) {
  if (k < 0 || k > field.degree_cap()) {
    throw std::domain_error("perturbation degree outside the field's range");
  }
  ExtensionField out = field;
  // eps r^k (r^2-1)^2 = eps (r^{k+4} - 2 r^{k+2} + r^k); zero boundary jet
  // through first order, so the recorded boundary spectra stay valid.
  out.u[k][0] += eps;
  out.u[k][1] -= 2.0 * eps;
  out.u[k][2] += eps;
  out.J = 2;
  return out;
}

double bilaplacian_energy(const ExtensionField& field) {
  double d = field.d;
  double sum = 0.0;
  for (int k = 0; k <= field.degree_cap(); ++k) {
    for (int j = 1; j <= 2; ++j) {
      for (int jp = 1; jp <= 2; ++jp) {
        double num = field.u[k][j] * field.u[k][jp] * laplace_coefficient(d, k, j) *
                     laplace_coefficient(d, k, jp);
        if (num != 0.0) sum += num / (2.0 * k + 2.0 * j + 2.0 * jp + d - 4.0);
      }
    }
  }
  return sum;
}

double dirichlet_energy(const ExtensionField& field) {
  if (field.J != 0) {
    throw std::invalid_argument("dirichlet_energy supports harmonic fields only");
  }
  double sum = 0.0;
  for (int k = 0; k <= field.degree_cap(); ++k) {
    sum += k * field.u[k][0] * field.u[k][0];
  }
  return sum;
}

double field_value(const ExtensionField& field, double r, double t) {
  int K = field.degree_cap();
  std::vector<double> row(static_cast<size_t>(K) + 1);
  zonal_basis_row(field.d, K, t, row.data());
  double r2 = r * r;
  double rk = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    double radial = (field.u[k][0] + r2 * (field.u[k][1] + r2 * field.u[k][2])) * rk;
    sum += radial * row[k];
    rk *= r;
  }
  return sum;
}

double field_laplacian(const ExtensionField& field, double r, double t) {
  int K = field.degree_cap();
  std::vector<double> row(static_cast<size_t>(K) + 1);
  zonal_basis_row(field.d, K, t, row.data());
  double d = field.d;
  double r2 = r * r;
  double rk = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    double radial = (field.u[k][1] * laplace_coefficient(d, k, 1) +
                     field.u[k][2] * laplace_coefficient(d, k, 2) * r2) *
                    rk;
    sum += radial * row[k];
    rk *= r;
  }
  return sum;
}

namespace {

double energy_quadrature_pass(const ExtensionField& field, const QuadratureRule& radial,
                              const QuadratureRule& angular) {
  int K = field.degree_cap();
  double d = field.d;
  double ring = surface_area_real(d - 2.0);
  std::vector<std::vector<double>> rows(angular.size(), std::vector<double>(K + 1));
  for (int i = 0; i < angular.size(); ++i) {
    zonal_basis_row(d, K, angular.nodes[i], rows[i].data());
  }
  std::vector<double> radial_lap(static_cast<size_t>(K) + 1);
  double total = 0.0;
  for (int a = 0; a < radial.size(); ++a) {
    double r = radial.nodes[a];
    double r2 = r * r;
    double rk = 1.0;
    for (int k = 0; k <= K; ++k) {
      radial_lap[k] = (field.u[k][1] * laplace_coefficient(d, k, 1) +
                       field.u[k][2] * laplace_coefficient(d, k, 2) * r2) *
                      rk;
      rk *= r;
    }
    double shell = 0.0;
    for (int i = 0; i < angular.size(); ++i) {
      double lap = 0.0;
      for (int k = 0; k <= K; ++k) lap += radial_lap[k] * rows[i][k];
      shell += angular.weights[i] * lap * lap;
    }
    total += radial.weights[a] * std::pow(r, d - 1.0) * ring * shell;
  }
  return total;
}

}  // namespace

double energy_quadrature(const ExtensionField& field, const QuadratureRule& radial,
                         const QuadratureRule& angular) {
  if (radial.kind != QuadratureRule::Kind::RadialLegendre) {
    throw std::invalid_argument("energy_quadrature needs a radial rule");
  }
  if (angular.kind != QuadratureRule::Kind::AngularJacobi || angular.d != field.d) {
    throw std::invalid_argument("energy_quadrature needs an angular rule built for the field's d");
  }
  int K = field.degree_cap();
  // The integrand has angular degree 2K and radial degree 2(K+2J-2)+d-1.
  bool resolved = (2 * angular.size() - 1 >= 2 * K) &&
                  (2.0 * radial.size() - 1.0 >= 2.0 * (K + 2.0 * field.J - 2.0) + field.d - 1.0);
  double value = energy_quadrature_pass(field, radial, angular);
  if (!resolved) {
    QuadratureRule radial2 = gauss_radial_rule(2 * radial.size());
    QuadratureRule angular2 = gauss_angular_rule(2 * angular.size(), field.d);
    double refined = energy_quadrature_pass(field, radial2, angular2);
    if (std::fabs(refined - value) > 1e-9 * std::max(1.0, std::fabs(refined))) {
      throw std::runtime_error("energy_quadrature: rule under-resolves this field");
    }
    value = refined;
  }
  return value;
}

BoundaryJet boundary_jet(const ExtensionField& field) {
  BoundaryJet jet{like(field), like(field), like(field), like(field), like(field), like(field)};
  double d = field.d;
  for (int k = 0; k <= field.degree_cap(); ++k) {
    double value = 0.0, normal = 0.0, normal2 = 0.0, lap = 0.0, lap_normal = 0.0;
    for (int j = 0; j <= 2; ++j) {
      double uj = field.u[k][j];
      if (uj == 0.0) continue;
      double m = k + 2.0 * j;
      double lc = laplace_coefficient(d, k, j);
      value += uj;
      normal += m * uj;
      normal2 += m * (m - 1.0) * uj;
      lap += uj * lc;
      lap_normal += uj * lc * (m - 2.0);
    }
    jet.value.coeffs[k] = value;
    jet.normal.coeffs[k] = normal;
    jet.normal2.coeffs[k] = normal2;
    jet.tangential_laplace.coeffs[k] = -k * (k + d - 2.0) * value;
    jet.ambient_laplace.coeffs[k] = lap;
    jet.ambient_laplace_normal.coeffs[k] = lap_normal;
  }
  return jet;
}

}  // namespace traceval
