// params.hpp
// System parameters, derived constants and bath spectral functions shared by
// every other module. Units: hbar = 1, energies and frequencies in units of
// the tunneling amplitude delta0.
#pragma once

namespace qho {

// Physical inputs.
struct SystemParams {
  double epsilon = 0.0;   // qubit bias
  double delta0 = 1.0;    // tunneling amplitude, the energy unit
  double g = 0.18;        // qubit-oscillator coupling
  double omega = 1.0;     // oscillator frequency
  double kappa = 0.0154;  // dimensionless Ohmic damping
  double beta = 10.0;     // inverse temperature
};

// Constants computed once from SystemParams and reused everywhere.
struct DerivedParams {
  double delta_b = 0.0;     // qubit splitting sqrt(epsilon^2 + delta0^2)
  double theta = 0.0;       // mixing angle folded into [-pi/2, pi/2)
  double cos_theta = 0.0;   // epsilon / delta_b
  double sin_theta = 0.0;   // -delta0 / delta_b
  double alpha = 0.0;       // bath strength 8 kappa g^2 / omega^2
  bool perturbative = true; // false once g >= 0.5 min(omega, delta_b)
};

// Throws std::invalid_argument when a field is out of range.
void validate(const SystemParams& p);

// Validates and computes the derived constants. Pure and idempotent.
DerivedParams derive(const SystemParams& p);

// Ohmic spectral density kappa * omega, odd in omega.
double ohmic_density(double omega_arg, double kappa);

// Peaked effective spectral density seen by the qubit through the oscillator.
double effective_density(double omega_arg, const SystemParams& p);

// Bose factor N(omega) = (coth(beta omega / 2) - 1) / 2.
// Throws std::domain_error at the omega = 0 pole; use thermal_rate there.
double thermal_factor(double omega_arg, double beta);

// G(omega) N(omega) with the analytic limit kappa / beta near omega = 0.
double thermal_rate(double omega_arg, double kappa, double beta);

// Frequencies with |omega| below this threshold count as coincident.
inline constexpr double coincidence_eta = 1e-8;

}  // namespace qho
