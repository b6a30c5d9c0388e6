// coupling.hpp
// Analytic matrix elements of the oscillator displacement B + B^dagger in
// the dressed eigenbasis: the five transition amplitudes and the banded
// X table they generate.
#pragma once

#include <Eigen/Dense>

#include "qho/params.hpp"

namespace qho {

// Transition amplitudes between dressed product states, by channel.
struct CouplingFactors {
  double l0 = 0.0;            // qubit and oscillator both unchanged
  double losc = 0.0;          // single-quantum correction, same qubit state
  double lq = 0.0;            // qubit flip, oscillator unchanged
  double lq_osc_plus = 0.0;   // qubit flip with quantum emission
  double lq_osc_minus = 0.0;  // qubit flip with quantum absorption
};

// Throws std::runtime_error when |delta_b - 2 omega| < 1e-6 (the absorption
// channel denominator degenerates there).
CouplingFactors coupling_factors(const SystemParams& p);

// Symmetric n_levels x n_levels table of <n|(B + B^dagger)|m> built from the
// closed forms; entries outside the banded pattern are exactly zero.
Eigen::MatrixXd analytic_x(const SystemParams& p, int n_levels);

}  // namespace qho
