#pragma once

#include <functional>
#include <vector>

namespace traceval {

/** Surface measure of the unit m-sphere in R^{m+1}: 2 pi^{(m+1)/2} / Gamma((m+1)/2). */
double surface_area(int m);

/** Same formula with a real dimension parameter; used where d enters analytically. */
double surface_area_real(double m);

/**
 * Gauss rule. Angular rules integrate against the zonal weight
 * (1-t^2)^{(d-3)/2} on [-1,1]; radial rules against dr on [0,1].
 * An n-node rule is exact for polynomial integrands through degree 2n-1.
 */
struct QuadratureRule {
  enum class Kind { AngularJacobi, RadialLegendre };
  Kind kind = Kind::AngularJacobi;
  double d = 4.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_angular_rule(int n, double d);
QuadratureRule gauss_radial_rule(int n);

/**
 * Coefficients of a zonal function on S^{d-1} in the orthonormal ultraspherical
 * basis Y_0..Y_K, normalized against the unnormalized surface measure:
 * the surface integral of Y_j Y_k is delta_jk.
 */
struct ZonalSpectrum {
  double d = 4.0;
  std::vector<double> coeffs;
  int degree_cap() const { return static_cast<int>(coeffs.size()) - 1; }
};

ZonalSpectrum zero_spectrum(double d, int K);

/**
 * Zonal function given by its profile: f(xi) = F(<e,xi>) for a fixed pole e.
 * endpoint_exponent declares power behavior F(t) ~ (1 -+ t)^a near t = +-1 so
 * integration can refuse non-integrable data; 0 means bounded.
 */
struct ZonalProfile {
  std::function<double(double)> f;
  double endpoint_exponent = 0.0;
};

/** Gegenbauer polynomial C_k^lambda(t) by the three-term recurrence; lambda > 0. */
double gegenbauer(double lambda, int k, double t);

/** Normalization constant N_k with Y_k = N_k C_k^{(d-2)/2}; valid for real d > 2. */
double zonal_basis_norm(double d, int k);

/** Y_k(t) for a single degree. */
double zonal_basis(double d, int k, double t);

/** Fills out[0..K] with Y_0(t)..Y_K(t) in one recurrence sweep. */
void zonal_basis_row(double d, int K, double t, double* out);

/** Projects a profile onto Y_0..Y_K by angular quadrature. */
ZonalSpectrum analyze(const ZonalProfile& profile, double d, int K, const QuadratureRule& rule);
ZonalSpectrum analyze(const ZonalProfile& profile, double d, int K, int angular_nodes = 200);

/** Evaluates sum_k c_k Y_k(t). */
double synthesize(const ZonalSpectrum& spec, double t);

/**
 * Diagonal operators on zonal spectra.
 * LaplaceBeltrami: -k(k+d-2).  B: k+(d-2)/2.  P3: (B-1)B(B+1).
 */
enum class Multiplier { LaplaceBeltrami, B, P3 };

double multiplier_eigenvalue(Multiplier kind, double d, int k);
ZonalSpectrum apply_multiplier(const ZonalSpectrum& spec, Multiplier kind);

/**
 * Diagonal quadratic forms: sum_k lambda_k c_k^2 with lambda_k the P3 or B
 * eigenvalue, or k(k+d-2) for the tangential gradient form.
 */
enum class QuadraticForm { P3, B, Gradient };

double quadratic_form(const ZonalSpectrum& spec, QuadraticForm kind);

/** Surface integral of a zonal function over S^{d-1}. */
double boundary_integral(const ZonalProfile& profile, double d, const QuadratureRule& rule);
double boundary_integral(const ZonalProfile& profile, double d, int angular_nodes = 200);

}  // namespace traceval
