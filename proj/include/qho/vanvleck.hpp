// vanvleck.hpp
// Second-order block-diagonalizing transformation of the coupled
// qubit-oscillator Hamiltonian: effective coefficients, analytic
// eigenenergies, the generator S and the dressed eigenstates.
#pragma once

#include <Eigen/Dense>

#include "qho/dense.hpp"
#include "qho/params.hpp"

namespace qho {

// Perturbative coefficients entering the effective two-by-two blocks.
struct VanVleckCoefficients {
  double delta = 0.0;    // first-order doublet coupling -(g delta0)/delta_b
  double w0 = 0.0;       // second-order shift, oscillator-index part
  double w1 = 0.0;       // second-order shift, bias part
  double delta_b = 0.0;  // cached qubit splitting
  double omega = 0.0;    // cached oscillator frequency

  // Doublet detuning delta_b - omega - 2 (j+1) w0.
  double delta_j(int j) const;
  // Doublet mixing angle in [0, pi), from atan2(2 sqrt(j+1)|delta|, delta_j).
  double alpha_j(int j) const;
};

// Analytic energies E_0 .. E_{n_levels-1} and the transition-frequency table.
struct Spectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd omega;  // omega(n, m) = E_n - E_m

  int n_levels() const { return static_cast<int>(energies.size()); }
};

// Generator of the block diagonalization, stored order by order over the
// product basis. Both matrices hold iS entries and are real antisymmetric.
struct TransformationS {
  ProductBasis basis;
  Eigen::MatrixXd first_order;
  Eigen::MatrixXd second_order;
};

// Eigenstate coefficients <j g|n> and <j e|n>, one column per level.
struct EigenstateTable {
  ProductBasis basis;
  int n_levels = 0;
  Eigen::MatrixXd g_coeff;  // (j_max+1) rows, n_levels columns
  Eigen::MatrixXd e_coeff;
};

VanVleckCoefficients effective_coefficients(const SystemParams& p);

// E_0 = -delta_b/2 + w0 + w1 and the doublet pairs around (j+1/2) omega.
Spectrum eigenenergies(const SystemParams& p, int n_levels);

// All nonzero iS entries through second order, antisymmetrically completed.
// Throws std::runtime_error when |2 omega - delta_b| < 1e-6 (a second-order
// denominator degenerates there).
TransformationS build_s_matrix(const SystemParams& p, int j_max);

// e^{sign * iS} = 1 + sign iS1 + sign iS2 + iS1 iS1 / 2, sign = +1 or -1.
Eigen::MatrixXd transform_operator(const TransformationS& s, int sign);

// Dressed eigenstates e^{-iS} applied to the effective doublet states.
EigenstateTable eigenstates(const SystemParams& p, int n_levels, int j_max);

}  // namespace qho
