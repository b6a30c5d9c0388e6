// Unit tests for the exact truncated Hamiltonian and its diagonalization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qho/dense.hpp"

using namespace qho;

namespace {
SystemParams paper_params() {
  SystemParams p;
  p.epsilon = 0.5;
  p.g = 0.18;
  p.omega = 1.0;
  p.kappa = 0.0154;
  p.beta = 10.0;
  return p;
}
}  // namespace

TEST_CASE("uncoupled Hamiltonian is diagonal with the product energies") {
  SystemParams p = paper_params();
  p.g = 0.0;
  DenseHamiltonian h = build_hamiltonian(p, 6);
  double delta_b = derive(p).delta_b;

  Eigen::MatrixXd off = h.elements;
  off.diagonal().setZero();
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);

  std::vector<double> expected;
  for (int j = 0; j <= 6; ++j) {
    expected.push_back(-delta_b / 2 + j * p.omega);
    expected.push_back(delta_b / 2 + j * p.omega);
  }
  std::sort(expected.begin(), expected.end());
  EigenDecomposition d = diagonalize(h);
  for (int n = 0; n < d.energies.size(); ++n)
    CHECK(d.energies[n] == doctest::Approx(expected[n]).epsilon(1e-14));
}

TEST_CASE("zero bias removes the parallel coupling channel") {
  SystemParams p = paper_params();
  p.epsilon = 0.0;
  DenseHamiltonian h = build_hamiltonian(p, 5);
  for (int j = 0; j < 5; ++j) {
    CHECK(h.elements(h.basis.index_g(j), h.basis.index_g(j + 1)) == 0.0);
    CHECK(h.elements(h.basis.index_e(j), h.basis.index_e(j + 1)) == 0.0);
  }
}

TEST_CASE("single-quantum flip element matches the closed form") {
  SystemParams p = paper_params();
  DenseHamiltonian h = build_hamiltonian(p, 4);
  double expected = -p.g * p.delta0 / derive(p).delta_b;
  CHECK(h.elements(h.basis.index_e(0), h.basis.index_g(1)) ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK(h.elements(h.basis.index_g(0), h.basis.index_e(1)) ==
        doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("Hamiltonian is symmetric and block tridiagonal") {
  SystemParams p = paper_params();
  DenseHamiltonian h = build_hamiltonian(p, 8);
  CHECK((h.elements - h.elements.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
  int dim = h.basis.dimension();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      if (std::abs(a / 2 - b / 2) >= 2) CHECK(h.elements(a, b) == 0.0);
}

TEST_CASE("truncation below one oscillator level is rejected") {
  CHECK_THROWS_AS(build_hamiltonian(paper_params(), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(paper_params(), -3), std::invalid_argument);
}

TEST_CASE("two-level symmetric off-diagonal block diagonalizes to plus-minus a") {
  DenseHamiltonian h;
  h.basis = ProductBasis{0};
  double a = 0.37;
  h.elements = Eigen::MatrixXd::Zero(2, 2);
  h.elements(0, 1) = a;
  h.elements(1, 0) = a;
  EigenDecomposition d = diagonalize(h);
  CHECK(d.energies[0] == doctest::Approx(-a).epsilon(1e-14));
  CHECK(d.energies[1] == doctest::Approx(a).epsilon(1e-14));
  // Sign rule: components tie in magnitude, so the first one is made positive.
  double r = 1.0 / std::sqrt(2.0);
  CHECK(d.vectors(0, 0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(d.vectors(1, 0) == doctest::Approx(-r).epsilon(1e-12));
  CHECK(d.vectors(0, 1) == doctest::Approx(r).epsilon(1e-12));
  CHECK(d.vectors(1, 1) == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("diagonal input keeps canonical axes") {
  DenseHamiltonian h;
  h.basis = ProductBasis{0};
  h.elements = Eigen::MatrixXd::Zero(2, 2);
  h.elements(0, 0) = 0.3;
  h.elements(1, 1) = 0.9;
  EigenDecomposition d = diagonalize(h);
  CHECK(d.energies[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(d.energies[1] == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(d.vectors(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.vectors(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("resonant zero-bias doublet splitting is twice the coupling") {
  SystemParams p = paper_params();
  p.epsilon = 0.0;
  EigenDecomposition d = diagonalize(build_hamiltonian(p, 10));
  double split = d.energies[2] - d.energies[1];
  CHECK(std::abs(split - 2.0 * p.g) < p.g * p.g * p.g);
}

TEST_CASE("eigenpairs satisfy residual and orthonormality bounds") {
  SystemParams p = paper_params();
  DenseHamiltonian h = build_hamiltonian(p, 10);
  EigenDecomposition d = diagonalize(h);
  for (int n = 0; n < d.energies.size(); ++n) {
    Eigen::VectorXd residual =
        h.elements * d.vectors.col(n) - d.energies[n] * d.vectors.col(n);
    CHECK(residual.norm() <= 1e-10);
  }
  Eigen::MatrixXd gram = d.vectors.transpose() * d.vectors;
  gram -= Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
  CHECK(gram.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("low spectrum is converged in the Fock truncation") {
  SystemParams p = paper_params();
  EigenDecomposition coarse = diagonalize(build_hamiltonian(p, 10));
  EigenDecomposition fine = diagonalize(build_hamiltonian(p, 14));
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(coarse.energies[n] - fine.energies[n]) < 1e-8);
}

TEST_CASE("position elements reduce to the bare ladder without coupling") {
  SystemParams p = paper_params();
  p.g = 0.0;
  EigenDecomposition d = diagonalize(build_hamiltonian(p, 8));
  Eigen::MatrixXd x = numeric_position_elements(d, d.basis);
  // With omega = 1 < delta_b the two lowest levels are |0g> and |1g>.
  CHECK(std::abs(x(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((x - x.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("rotating-wave variant keeps only excitation-conserving flips") {
  SystemParams p = paper_params();
  p.epsilon = 0.0;
  DenseHamiltonian full = build_hamiltonian(p, 5);
  DenseHamiltonian rwa = build_rotating_wave_hamiltonian(p, 5);
  for (int j = 0; j < 5; ++j) {
    CHECK(rwa.elements(rwa.basis.index_g(j), rwa.basis.index_e(j + 1)) == 0.0);
    CHECK(rwa.elements(rwa.basis.index_e(j), rwa.basis.index_g(j + 1)) ==
          full.elements(full.basis.index_e(j), full.basis.index_g(j + 1)));
  }
  CHECK((rwa.elements - rwa.elements.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
}
