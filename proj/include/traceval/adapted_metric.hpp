#pragma once

namespace traceval {

/**
 * Conformal factor of the adapted compactification of the hyperbolic ball:
 * psi(r)^{4/(d-4)} |dx|^2 above dimension 4 and e^{2 rho(r)} |dx|^2 at
 * dimension 4, with rho = (1-r^2)/2 and psi = 1 + ((d-4)/2) rho.
 */
struct AdaptedMetric {
  double d = 4.0;
  enum class Kind { PowerLaw, Exponential } kind = Kind::Exponential;
  double conformal_factor(double r) const;
};

AdaptedMetric adapted_metric(double d);

/** Half the defect of the squared radius: (1-r^2)/2 on [0,1]. */
double rho(double r);

/** Power-law factor 1 + ((d-4)/2) rho(r); requires d > 4. */
double psi(double r, double d);

/**
 * Exponential-case potential log(rho) + rho on [0,1); diverges at r=1.  The
 * boundary-regular combination e^{2 tau} rho^{-2} equals e^{2 rho} exactly.
 */
double tau(double r);

/**
 * Residual of the radial equation for psi,
 * -psi''/rho^2 - ((d-5)/r) psi'/rho^2 - (2/r) psi'/rho^3 - (d-4) psi/rho^3,
 * with exact derivatives; vanishes identically on (0,1) for d > 4.
 * Evaluated in extended precision so cancellation noise stays below 1e-11.
 */
double psi_ode_residual(double r, double d);

/**
 * | -rho^{-1} Delta(rho^{-1}) + 2 rho^{-4} + (d-4) rho^{-3} | with the flat
 * radial Laplacian of rho^{-1} built from its exact derivatives; zero to
 * rounding on (0,1) for d > 4.
 */
double error_term_gap(double r, double d);

/**
 * | -Delta_H tau - 3 | at dimension 4, where Delta_H is the Laplacian of the
 * hyperbolic metric rho^{-2} |dx|^2 written through the standard conformal
 * change: Delta_H u = rho^2 Delta u + (d-2) rho r u'.  Zero to rounding.
 */
double tau_pde_residual(double r);

/** | psi(r, 4+eps)^{4/eps} - e^{2 rho(r)} |; decays linearly in eps. */
double dimension_continuity_gap(double r, double eps);

}  // namespace traceval
