#pragma once

#include <array>
#include <vector>

#include "traceval/sphere_spectral.hpp"

namespace traceval {

/**
 * Zonal extension into the unit ball: w = sum_k w_k(r) Y_k with radial parts
 * w_k(r) = sum_{j=0..J} u[k][j] r^{k+2j}.  J=0 fields are harmonic, J=1 fields
 * biharmonic, J=2 adds the jet-preserving trial direction r^k (r^2-1)^2 Y_k.
 * The generating Dirichlet and Neumann boundary spectra are recorded for audit:
 * sum_j u[k][j] and sum_j (k+2j) u[k][j] reproduce them for every k.
 */
struct ExtensionField {
  double d = 4.0;
  int J = 0;
  std::vector<std::array<double, 3>> u;
  ZonalSpectrum dirichlet;
  ZonalSpectrum neumann;
  int degree_cap() const { return static_cast<int>(u.size()) - 1; }
};

/**
 * Boundary trace spectra at r=1: the value, first and second normal
 * derivatives, tangential Laplacian, ambient Laplacian, and the normal
 * derivative of the ambient Laplacian.  All entries are differentiated
 * symbolically on radial monomials, so jet identities hold to rounding.
 */
struct BoundaryJet {
  ZonalSpectrum value;
  ZonalSpectrum normal;
  ZonalSpectrum normal2;
  ZonalSpectrum tangential_laplace;
  ZonalSpectrum ambient_laplace;
  ZonalSpectrum ambient_laplace_normal;
};

/** Ladder coefficient: Delta(r^{k+2j} Y_k) = L_{d,k,j} r^{k+2j-2} Y_k. */
double laplace_coefficient(double d, int k, int j);

/**
 * Unique biharmonic field with the given boundary value and normal derivative;
 * per mode, a_k + b_k = c_k and k a_k + (k+2) b_k = n_k.
 */
ExtensionField extend_biharmonic(const ZonalSpectrum& dirichlet, const ZonalSpectrum& neumann);

/** Harmonic field u[k][0] = c_k. */
ExtensionField extend_harmonic(const ZonalSpectrum& dirichlet);

/**
 * Adds eps r^k (r^2-1)^2 Y_k, which vanishes to second order at the boundary:
 * the Dirichlet and Neumann traces are unchanged.
 */
ExtensionField add_perturbation(const ExtensionField& field, int k, double eps);

/** Integral over the ball of (Delta w)^2, from closed-form radial integrals. */
double bilaplacian_energy(const ExtensionField& field);

/** Integral over the ball of |grad w|^2 for harmonic fields: sum_k k c_k^2. */
double dirichlet_energy(const ExtensionField& field);

/**
 * Tensor-quadrature evaluation of the bilaplacian energy; the independent
 * oracle for bilaplacian_energy.  Rules that cannot resolve the integrand are
 * checked by node-doubling and rejected if the two estimates disagree.
 */
double energy_quadrature(const ExtensionField& field, const QuadratureRule& radial,
                         const QuadratureRule& angular);

BoundaryJet boundary_jet(const ExtensionField& field);

/** w(r, t) and (Delta w)(r, t); pointwise evaluation for quadrature oracles. */
double field_value(const ExtensionField& field, double r, double t);
double field_laplacian(const ExtensionField& field, double r, double t);

}  // namespace traceval
