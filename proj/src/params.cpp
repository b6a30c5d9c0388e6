// Derived parameters and bath spectral functions.
#include "qho/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qho {

void validate(const SystemParams& p) {
  if (!(p.delta0 > 0.0)) throw std::invalid_argument("delta0 must be positive");
  if (!(p.g >= 0.0)) throw std::invalid_argument("g must be non-negative");
  if (!(p.omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (!(p.kappa >= 0.0)) throw std::invalid_argument("kappa must be non-negative");
  if (!(p.beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

DerivedParams derive(const SystemParams& p) {
  validate(p);
  DerivedParams d;
  d.delta_b = std::hypot(p.epsilon, p.delta0);
  // tan(theta) = -delta0 / epsilon. atan2 puts the raw angle in (-pi, 0];
  // angles left of -pi/2 fold forward by pi so the result stays in
  // [-pi/2, pi/2) with theta = -pi/2 exactly at epsilon = 0.
  double raw = std::atan2(-p.delta0, p.epsilon);
  d.theta = raw < -std::numbers::pi / 2.0 ? raw + std::numbers::pi : raw;
  d.cos_theta = p.epsilon / d.delta_b;
  d.sin_theta = -p.delta0 / d.delta_b;
  d.alpha = 8.0 * p.kappa * p.g * p.g / (p.omega * p.omega);
  d.perturbative = p.g < 0.5 * std::min(p.omega, d.delta_b);
  return d;
}

double ohmic_density(double omega_arg, double kappa) {
  return kappa * omega_arg;
}

double effective_density(double omega_arg, const SystemParams& p) {
  validate(p);
  double alpha = 8.0 * p.kappa * p.g * p.g / (p.omega * p.omega);
  double om_sq = p.omega * p.omega;
  double detune = om_sq - omega_arg * omega_arg;
  double damp = 2.0 * std::numbers::pi * p.kappa * omega_arg * p.omega;
  return 2.0 * alpha * omega_arg * om_sq * om_sq /
         (detune * detune + damp * damp);
}

double thermal_factor(double omega_arg, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (std::abs(omega_arg) < coincidence_eta)
    throw std::domain_error("thermal_factor diverges at omega = 0");
  // coth(x) - 1 = 2 / (e^{2x} - 1) keeps both tails accurate.
  if (omega_arg > 0.0) return 1.0 / std::expm1(beta * omega_arg);
  return -1.0 - 1.0 / std::expm1(-beta * omega_arg);
}

double thermal_rate(double omega_arg, double kappa, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (std::abs(omega_arg) < coincidence_eta) return kappa / beta;
  return ohmic_density(omega_arg, kappa) * thermal_factor(omega_arg, beta);
}

}  // namespace qho
