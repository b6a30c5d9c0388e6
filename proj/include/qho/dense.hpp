// dense.hpp
// Exact truncated qubit-oscillator Hamiltonian in the product basis
// {|j g>, |j e>} and its dense diagonalization. These results serve as the
// brute-force reference for the perturbative spectrum and matrix elements.
#pragma once

#include <Eigen/Dense>

#include "qho/params.hpp"

namespace qho {

// Enumeration of the product basis: index 2j is |j g>, index 2j+1 is |j e>.
struct ProductBasis {
  int j_max = 10;  // highest oscillator Fock index retained

  int dimension() const { return 2 * (j_max + 1); }
  int index_g(int j) const { return 2 * j; }
  int index_e(int j) const { return 2 * j + 1; }
};

struct DenseHamiltonian {
  ProductBasis basis;
  Eigen::MatrixXd elements;  // real symmetric, block tridiagonal in j
};

struct EigenDecomposition {
  ProductBasis basis;
  Eigen::VectorXd energies;  // ascending
  Eigen::MatrixXd vectors;   // orthonormal columns over the product basis
};

// Builds the truncated Hamiltonian. Throws std::invalid_argument for
// j_max < 1 (a single Fock level cannot represent the coupling).
DenseHamiltonian build_hamiltonian(const SystemParams& p, int j_max);

// Same truncation with the counter-rotating qubit-flip entries
// <j g|H|(j+1) e> removed; the excitation-conserving flips stay.
DenseHamiltonian build_rotating_wave_hamiltonian(const SystemParams& p,
                                                 int j_max);

// Full spectrum, ascending. Each eigenvector is normalized so its
// largest-magnitude component is positive (first such index on a tie).
EigenDecomposition diagonalize(const DenseHamiltonian& h);

// Matrix elements <n|(B + B^dagger)|m> in the numerical eigenbasis.
Eigen::MatrixXd numeric_position_elements(const EigenDecomposition& d,
                                          const ProductBasis& basis);

}  // namespace qho
