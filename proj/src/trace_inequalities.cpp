#include "traceval/trace_inequalities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "traceval/prng.hpp"

namespace traceval {

namespace {

constexpr double kPi = 3.14159265358979323846;

double coefficient_square_sum(const ZonalSpectrum& f) {
  double sum = 0.0;
  for (double c : f.coeffs) sum += c * c;
  return sum;
}

ZonalSpectrum scaled(const ZonalSpectrum& f, double s) {
  ZonalSpectrum out = f;
  for (double& c : out.coeffs) c *= s;
  return out;
}

double relative_gap(double lhs, double rhs) {
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), std::numeric_limits<double>::min()});
  return (rhs - lhs) / scale;
}

InequalityReport make_report(Inequality which, double d, int K, int nodes, double lhs, double rhs) {
  InequalityReport report;
  report.which = which;
  report.d = d;
  report.K = K;
  report.angular_nodes = nodes;
  report.lhs = lhs;
  report.rhs = rhs;
  report.gap = rhs - lhs;
  report.rel_gap = relative_gap(lhs, rhs);
  return report;
}

ZonalProfile power_of_abs(const ZonalProfile& profile, double q) {
  return ZonalProfile{[profile, q](double t) { return std::pow(std::fabs(profile.f(t)), q); },
                      profile.endpoint_exponent * q};
}

ZonalProfile exp_of(const ZonalProfile& profile, double s) {
  return ZonalProfile{[profile, s](double t) { return std::exp(s * profile.f(t)); }, 0.0};
}

// The nonlinear sides integrate the given profile; the quadratic sides use the
// projected spectrum.  Both paths of evaluate() land here.
InequalityReport evaluate_core(Inequality which, const ZonalSpectrum& f,
                               const ZonalProfile& profile, const EvalOptions& opts) {
  double d = f.d;
  int K = f.degree_cap();
  int nodes = opts.angular_nodes;
  double vol = surface_area_real(d - 1.0);

  switch (which) {
    case Inequality::ThmA: {
      if (!(d > 4.0)) throw std::invalid_argument("ThmA needs d > 4");
      double q = 2.0 * (d - 1.0) / (d - 4.0);
      double iq = boundary_integral(power_of_abs(profile, q), d, nodes);
      double cd = d * (d - 2.0) * (d - 4.0) / 4.0;
      double lhs = cd * std::pow(vol, 3.0 / (d - 1.0)) * std::pow(iq, (d - 4.0) / (d - 1.0));
      double s = opts.coupling == NeumannCoupling::Half ? -0.5 * (d - 4.0) : -0.25 * (d - 4.0);
      ExtensionField v = extend_biharmonic(f, scaled(f, s));
      double rhs = bilaplacian_energy(v) + 2.0 * quadratic_form(f, QuadraticForm::Gradient) +
                   0.5 * d * (d - 4.0) * coefficient_square_sum(f);
      return make_report(which, d, K, nodes, lhs, rhs);
    }
    case Inequality::ThmB: {
      if (d != 4.0) throw std::invalid_argument("ThmB needs d = 4");
      double mean = boundary_integral(profile, d, nodes) / vol;
      double i3 = boundary_integral(exp_of(profile, 3.0), d, nodes);
      double lhs = std::log(i3 / vol) - 3.0 * mean;
      ExtensionField w = extend_biharmonic(f, zero_spectrum(d, K));
      double rhs = 3.0 / (16.0 * kPi * kPi) * bilaplacian_energy(w) +
                   3.0 / (8.0 * kPi * kPi) * quadratic_form(f, QuadraticForm::Gradient);
      return make_report(which, d, K, nodes, lhs, rhs);
    }
    case Inequality::BecknerA: {
      if (d != 4.0) throw std::invalid_argument("BecknerA needs d = 4");
      double mean = boundary_integral(profile, d, nodes) / vol;
      double i1 = boundary_integral(exp_of(profile, 1.0), d, nodes);
      double lhs = std::log(i1 / vol) - mean;
      double rhs = quadratic_form(f, QuadraticForm::P3) / (12.0 * vol);
      return make_report(which, d, K, nodes, lhs, rhs);
    }
    case Inequality::BecknerB: {
      if (!(d > 4.0)) throw std::invalid_argument("BecknerB needs d > 4");
      double q = 2.0 * (d - 1.0) / (d - 4.0);
      double iq = boundary_integral(power_of_abs(profile, q), d, nodes) / vol;
      double ad = d * (d - 2.0) * (d - 4.0) / 8.0;
      // Outer exponent 2/q = (d-4)/(d-1), the choice that keeps both sides
      // quadratic under scaling of f.
      double lhs = ad * std::pow(iq, (d - 4.0) / (d - 1.0));
      double rhs = quadratic_form(f, QuadraticForm::P3) / vol;
      return make_report(which, d, K, nodes, lhs, rhs);
    }
    case Inequality::Escobar: {
      if (!(d >= 3.0)) throw std::invalid_argument("Escobar needs d >= 3");
      double q = 2.0 * (d - 1.0) / (d - 2.0);
      double iq = boundary_integral(power_of_abs(profile, q), d, nodes);
      double lhs = 0.5 * (d - 2.0) * std::pow(vol, 1.0 / (d - 1.0)) *
                   std::pow(iq, (d - 2.0) / (d - 1.0));
      ExtensionField v = extend_harmonic(f);
      double rhs = dirichlet_energy(v) + 0.5 * (d - 2.0) * coefficient_square_sum(f);
      return make_report(which, d, K, nodes, lhs, rhs);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

const char* inequality_name(Inequality which) {
  switch (which) {
    case Inequality::ThmA:
      return "thmA";
    case Inequality::ThmB:
      return "thmB";
    case Inequality::BecknerA:
      return "beckner_a";
    case Inequality::BecknerB:
      return "beckner_b";
    case Inequality::Escobar:
      return "escobar";
  }
  return "unknown";
}

ZonalProfile extremal_profile(const ExtremalFamily& family) {
  if (!(family.t >= 0.0 && family.t <= 0.9)) {
    throw std::domain_error("extremal pole distance must lie in [0, 0.9]");
  }
  if (family.kind == ExtremalFamily::Kind::LogD4) {
    double t = family.t, c = family.c;
    return ZonalProfile{[t, c](double u) { return -std::log(1.0 - t * u) + c; }, 0.0};
  }
  double t = family.t, alpha = family.alpha;
  return ZonalProfile{[t, alpha](double u) { return std::pow(1.0 - t * u, alpha); }, 0.0};
}

InequalityReport evaluate(Inequality which, const ZonalProfile& profile, double d, int K,
                          const EvalOptions& opts) {
  ZonalSpectrum f = analyze(profile, d, K, opts.angular_nodes);
  return evaluate_core(which, f, profile, opts);
}

InequalityReport evaluate(Inequality which, const ZonalSpectrum& f, const EvalOptions& opts) {
  ZonalProfile profile{[f](double t) { return synthesize(f, t); }, 0.0};
  return evaluate_core(which, f, profile, opts);
}

double energy_identity_gap(const ZonalSpectrum& f, double d) {
  if (!(d >= 4.0)) throw std::domain_error("energy identity needs d >= 4");
  double lhs = 0.0, rhs = 0.0;
  for (int k = 0; k <= f.degree_cap(); ++k) {
    double c2 = f.coeffs[k] * f.coeffs[k];
    double b = k + 0.5 * (d - 2.0);
    lhs += 2.0 * (b - 1.0) * b * (b + 1.0) * c2;
    double half = k + 0.5 * (d - 4.0);
    rhs += ((2.0 * k + d) * half * half + 2.0 * k * (k + d - 2.0) + 0.5 * d * (d - 4.0)) * c2;
  }
  return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), std::numeric_limits<double>::min());
}

std::vector<double> default_alpha_grid(double d) {
  return {0.25 * (4.0 - d), 0.5 * (4.0 - d), 4.0 - d};
}

ExponentScanResult exponent_scan(double d, double t, const std::vector<double>& alphas, int K,
                                 int angular_nodes) {
  if (!(d > 4.0)) throw std::domain_error("exponent scan needs d > 4");
  if (!(t >= 0.0 && t <= 0.9)) throw std::domain_error("exponent scan needs t in [0, 0.9]");
  if (alphas.empty()) throw std::invalid_argument("exponent scan needs candidates");
  ExponentScanResult result;
  EvalOptions opts;
  opts.angular_nodes = angular_nodes;
  for (double alpha : alphas) {
    ExtremalFamily family{ExtremalFamily::Kind::Power, t, alpha, 0.0};
    InequalityReport report = evaluate(Inequality::BecknerB, extremal_profile(family), d, K, opts);
    result.rows.push_back({alpha, report.lhs, report.rhs, report.gap, report.rel_gap});
  }
  size_t best = 0;
  for (size_t i = 1; i < result.rows.size(); ++i) {
    if (std::fabs(result.rows[i].rel_gap) < std::fabs(result.rows[best].rel_gap)) best = i;
  }
  result.best_alpha = result.rows[best].alpha;
  double best_gap = std::max(std::fabs(result.rows[best].rel_gap), 1e-300);
  double runner_up = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (i == best) continue;
    runner_up = std::min(runner_up, std::fabs(result.rows[i].rel_gap));
  }
  result.separation_orders =
      result.rows.size() > 1 ? std::log10(std::max(runner_up, 1e-300) / best_gap) : 0.0;
  return result;
}

ZonalSpectrum random_spectrum(std::uint64_t seed, double d, int K, double decay) {
  if (!(decay > 0.0)) throw std::domain_error("random_spectrum needs decay > 0");
  SplitMix64 rng(seed);
  ZonalSpectrum spec = zero_spectrum(d, K);
  for (int k = 0; k <= K; ++k) {
    spec.coeffs[k] = rng.uniform_pm1() * std::exp(-decay * k);
  }
  return spec;
}

}  // namespace traceval
