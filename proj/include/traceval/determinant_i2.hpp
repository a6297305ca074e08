#pragma once

#include <utility>

#include "traceval/ball_extension.hpp"

namespace traceval {

/**
 * Main term of the dimension-4 log-determinant expansion, split into its
 * bulk-plus-boundary part b2 and the normal-derivative defect D:
 * i2 = b2 + d_term/12 under the flat metric, and i2 = b2 alone under the
 * adapted metric on fields with vanishing normal derivative.
 */
struct I2Report {
  double b2 = 0.0;
  double d_term = 0.0;
  double i2 = 0.0;
  enum class Metric { Flat, GStar } metric = Metric::Flat;
  // Detected from the field's recorded Neumann spectrum.
  enum class BoundaryClass { NeumannZero, NeumannMinusOne, Unconstrained } class_tag =
      BoundaryClass::Unconstrained;
};

/**
 * Third-order boundary operator of the flat ball applied to a dimension-4
 * field, assembled from its jet:
 *   P3b w = -1/2 d/dn (Delta w) - TangentialLaplacian(dw/dn) - TangentialLaplacian(w).
 * On biharmonic fields this equals the spectral P3 of the boundary value,
 * independently of the Neumann datum.
 */
ZonalSpectrum p3b_boundary(const ExtensionField& field);

/**
 * b2 = 1/4 int w Delta^2 w + 1/2 oint w P3b w + 2 oint w for the flat
 * dimension-4 ball (third-order boundary curvature 2, vanishing bulk
 * curvature term).
 */
double b2_flat(const ExtensionField& field);

/** D = 3 oint (dw/dn - d^2w/dn^2); only the mean mode contributes. */
double d_term_flat(const ExtensionField& field);

/**
 * The functional under either metric.  The adapted-metric branch requires a
 * vanishing Neumann spectrum and reduces to b2 of the flat field; the flat
 * branch adds d_term/12.
 */
I2Report i2_functional(const ExtensionField& field, I2Report::Metric metric);

/**
 * Shifts a boundary function by the constant that restores the volume
 * constraint: the surface integral of e^{3 phi} must equal |S^3|.
 * Returns the shifted profile and the constant.
 */
std::pair<ZonalProfile, double> normalize_constraint(const ZonalProfile& phi,
                                                     int angular_nodes = 200);

/**
 * Adds rho = (1-r^2)/2 to the mean mode.  rho has zero boundary value and
 * normal derivative -1, so this maps Neumann-zero fields to Neumann-minus-one
 * fields with the same boundary value.
 */
ExtensionField add_rho(const ExtensionField& field);

}  // namespace traceval
