#include "traceval/sphere_spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace traceval {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Log of the ultraspherical norm: h_k = int_{-1}^{1} C_k^lambda(t)^2 (1-t^2)^{lambda-1/2} dt.
double log_gegenbauer_norm(double lambda, int k) {
  return std::log(kPi) + (1.0 - 2.0 * lambda) * std::log(2.0) + std::lgamma(k + 2.0 * lambda) -
         std::lgamma(k + 1.0) - std::log(k + lambda) - 2.0 * std::lgamma(lambda);
}

void require_integrable(const ZonalProfile& profile, double d) {
  // The zonal weight contributes (1-t)^{(d-3)/2} at the endpoints, so a declared
  // power (1 -+ t)^a is integrable iff a > -(d-1)/2.
  if (profile.endpoint_exponent <= -(d - 1.0) / 2.0) {
    throw std::domain_error("zonal profile endpoint exponent is not integrable");
  }
}

}  // namespace

double surface_area_real(double m) {
  return 2.0 * std::exp(0.5 * (m + 1.0) * std::log(kPi) - std::lgamma(0.5 * (m + 1.0)));
}

double surface_area(int m) {
  if (m < 1) throw std::domain_error("surface_area requires m >= 1");
  return surface_area_real(static_cast<double>(m));
}

QuadratureRule gauss_angular_rule(int n, double d) {
  if (n < 1) throw std::domain_error("gauss_angular_rule requires n >= 1");
  if (d < 3.0) throw std::domain_error("gauss_angular_rule requires d >= 3");

  // The eigensolve below is by far the most expensive step in the library, and
  // the same few rules are requested constantly; memoize them.
  static std::mutex cache_mutex;
  static std::map<std::pair<int, double>, QuadratureRule> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
  }

  // Golub-Welsch on the symmetric Jacobi matrix of the monic ultraspherical
  // recurrence: b_k = k(k+d-3) / ((2k+d-2)(2k+d-4)).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k * (k + d - 3.0) / ((2.0 * k + d - 2.0) * (2.0 * k + d - 4.0));
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) throw std::runtime_error("quadrature eigensolve failed");

  double mu0 = std::exp(0.5 * std::log(kPi) + std::lgamma(0.5 * (d - 1.0)) - std::lgamma(0.5 * d));
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::AngularJacobi;
  rule.d = d;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::pair<int, double>{n, d}, rule);
  }
  return rule;
}

QuadratureRule gauss_radial_rule(int n) {
  // d = 3 gives unit weight on [-1,1]; map to [0,1].
  QuadratureRule rule = gauss_angular_rule(n, 3.0);
  rule.kind = QuadratureRule::Kind::RadialLegendre;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
    rule.weights[i] *= 0.5;
  }
  return rule;
}

ZonalSpectrum zero_spectrum(double d, int K) {
  if (K < 0) throw std::domain_error("degree cap must be >= 0");
  ZonalSpectrum spec;
  spec.d = d;
  spec.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
  return spec;
}

double gegenbauer(double lambda, int k, double t) {
  if (k < 0) throw std::domain_error("gegenbauer requires k >= 0");
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * lambda * t;
  for (int j = 2; j <= k; ++j) {
    double next = (2.0 * t * (j + lambda - 1.0) * cur - (j + 2.0 * lambda - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

double zonal_basis_norm(double d, int k) {
  double lambda = 0.5 * (d - 2.0);
  double log_h = log_gegenbauer_norm(lambda, k);
  double log_area = std::log(surface_area_real(d - 2.0));
  return std::exp(-0.5 * (log_area + log_h));
}

double zonal_basis(double d, int k, double t) {
  return zonal_basis_norm(d, k) * gegenbauer(0.5 * (d - 2.0), k, t);
}

void zonal_basis_row(double d, int K, double t, double* out) {
  double lambda = 0.5 * (d - 2.0);
  // The norms follow the ratio h_{k-1}/h_k = k(k+lambda)/((k-1+2lambda)(k-1+lambda)),
  // so a single gamma-function evaluation seeds the whole row.
  double norm = zonal_basis_norm(d, 0);
  double prev = 1.0;
  out[0] = norm * prev;
  if (K == 0) return;
  double cur = 2.0 * lambda * t;
  norm *= std::sqrt((1.0 + lambda) / (2.0 * lambda * lambda));
  out[1] = norm * cur;
  for (int k = 2; k <= K; ++k) {
    double next = (2.0 * t * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
    norm *= std::sqrt(k * (k + lambda) /
                      ((k - 1.0 + 2.0 * lambda) * (k - 1.0 + lambda)));
    out[k] = norm * next;
  }
}

ZonalSpectrum analyze(const ZonalProfile& profile, double d, int K, const QuadratureRule& rule) {
  if (rule.kind != QuadratureRule::Kind::AngularJacobi || rule.d != d) {
    throw std::invalid_argument("analyze requires an angular rule built for the same d");
  }
  require_integrable(profile, d);
  ZonalSpectrum spec = zero_spectrum(d, K);
  double ring = surface_area_real(d - 2.0);
  std::vector<double> row(static_cast<size_t>(K) + 1);
  for (int i = 0; i < rule.size(); ++i) {
    double t = rule.nodes[i];
    double fw = ring * rule.weights[i] * profile.f(t);
    zonal_basis_row(d, K, t, row.data());
    for (int k = 0; k <= K; ++k) spec.coeffs[k] += fw * row[k];
  }
  return spec;
}

ZonalSpectrum analyze(const ZonalProfile& profile, double d, int K, int angular_nodes) {
  return analyze(profile, d, K, gauss_angular_rule(angular_nodes, d));
}

double synthesize(const ZonalSpectrum& spec, double t) {
  int K = spec.degree_cap();
  std::vector<double> row(static_cast<size_t>(K) + 1);
  zonal_basis_row(spec.d, K, t, row.data());
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) sum += spec.coeffs[k] * row[k];
  return sum;
}

double multiplier_eigenvalue(Multiplier kind, double d, int k) {
  double b = k + 0.5 * (d - 2.0);
  switch (kind) {
    case Multiplier::LaplaceBeltrami:
      return -static_cast<double>(k) * (k + d - 2.0);
    case Multiplier::B:
      return b;
    case Multiplier::P3:
      return (b - 1.0) * b * (b + 1.0);
  }
  throw std::logic_error("unreachable");
}

ZonalSpectrum apply_multiplier(const ZonalSpectrum& spec, Multiplier kind) {
  ZonalSpectrum out = spec;
  for (int k = 0; k <= spec.degree_cap(); ++k) {
    out.coeffs[k] *= multiplier_eigenvalue(kind, spec.d, k);
  }
  return out;
}

double quadratic_form(const ZonalSpectrum& spec, QuadraticForm kind) {
  double sum = 0.0;
  for (int k = 0; k <= spec.degree_cap(); ++k) {
    double lambda = 0.0;
    switch (kind) {
      case QuadraticForm::P3:
        lambda = multiplier_eigenvalue(Multiplier::P3, spec.d, k);
        break;
      case QuadraticForm::B:
        lambda = multiplier_eigenvalue(Multiplier::B, spec.d, k);
        break;
      case QuadraticForm::Gradient:
        lambda = static_cast<double>(k) * (k + spec.d - 2.0);
        break;
    }
    sum += lambda * spec.coeffs[k] * spec.coeffs[k];
  }
  return sum;
}

double boundary_integral(const ZonalProfile& profile, double d, const QuadratureRule& rule) {
  if (rule.kind != QuadratureRule::Kind::AngularJacobi || rule.d != d) {
    throw std::invalid_argument("boundary_integral requires an angular rule built for the same d");
  }
  require_integrable(profile, d);
  double ring = surface_area_real(d - 2.0);
  double sum = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    sum += rule.weights[i] * profile.f(rule.nodes[i]);
  }
  return ring * sum;
}

double boundary_integral(const ZonalProfile& profile, double d, int angular_nodes) {
  return boundary_integral(profile, d, gauss_angular_rule(angular_nodes, d));
}

}  // namespace traceval
