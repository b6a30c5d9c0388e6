// Truncated Hamiltonian assembly and dense reference diagonalization.
#include "qho/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace qho {

namespace {

// Shared assembly for the full and rotating-wave variants.
DenseHamiltonian assemble(const SystemParams& p, int j_max,
                          bool counter_rotating) {
  validate(p);
  if (j_max < 1) throw std::invalid_argument("j_max must be at least 1");
  DerivedParams d = derive(p);
  ProductBasis basis{j_max};
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(basis.dimension(), basis.dimension());

  double gz = p.g * p.epsilon / d.delta_b;   // sigma_z channel
  double gx = -p.g * p.delta0 / d.delta_b;   // sigma_x channel
  for (int j = 0; j <= j_max; ++j) {
    h(basis.index_g(j), basis.index_g(j)) = -d.delta_b / 2.0 + j * p.omega;
    h(basis.index_e(j), basis.index_e(j)) = d.delta_b / 2.0 + j * p.omega;
    if (j == j_max) break;
    double ladder = std::sqrt(j + 1.0);
    h(basis.index_g(j), basis.index_g(j + 1)) = gz * ladder;
    h(basis.index_e(j), basis.index_e(j + 1)) = -gz * ladder;
    h(basis.index_e(j), basis.index_g(j + 1)) = gx * ladder;
    if (counter_rotating) h(basis.index_g(j), basis.index_e(j + 1)) = gx * ladder;
  }
  Eigen::MatrixXd sym = h.selfadjointView<Eigen::Upper>();
  return DenseHamiltonian{basis, sym};
}

}  // namespace

DenseHamiltonian build_hamiltonian(const SystemParams& p, int j_max) {
  return assemble(p, j_max, true);
}

DenseHamiltonian build_rotating_wave_hamiltonian(const SystemParams& p,
                                                 int j_max) {
  return assemble(p, j_max, false);
}

EigenDecomposition diagonalize(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.elements);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed to converge");
  EigenDecomposition d{h.basis, solver.eigenvalues(), solver.eigenvectors()};
  for (int c = 0; c < d.vectors.cols(); ++c) {
    int lead = 0;
    double best = 0.0;
    for (int r = 0; r < d.vectors.rows(); ++r) {
      double mag = std::abs(d.vectors(r, c));
      if (mag > best) {
        best = mag;
        lead = r;
      }
    }
    if (d.vectors(lead, c) < 0.0) d.vectors.col(c) *= -1.0;
  }
  return d;
}

Eigen::MatrixXd numeric_position_elements(const EigenDecomposition& d,
                                          const ProductBasis& basis) {
  int dim = basis.dimension();
  if (d.vectors.rows() != dim)
    throw std::invalid_argument("basis does not match the decomposition");
  Eigen::MatrixXd ladder = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < basis.j_max; ++j) {
    double amp = std::sqrt(j + 1.0);
    ladder(basis.index_g(j), basis.index_g(j + 1)) = amp;
    ladder(basis.index_g(j + 1), basis.index_g(j)) = amp;
    ladder(basis.index_e(j), basis.index_e(j + 1)) = amp;
    ladder(basis.index_e(j + 1), basis.index_e(j)) = amp;
  }
  return d.vectors.transpose() * ladder * d.vectors;
}

}  // namespace qho
