// Second-order effective Hamiltonian, generator and dressed eigenstates.
#include "qho/vanvleck.hpp"

#include <cmath>
#include <stdexcept>

namespace qho {

double VanVleckCoefficients::delta_j(int j) const {
  return delta_b - omega - 2.0 * (j + 1) * w0;
}

double VanVleckCoefficients::alpha_j(int j) const {
  return std::atan2(2.0 * std::sqrt(j + 1.0) * std::abs(delta), delta_j(j));
}

VanVleckCoefficients effective_coefficients(const SystemParams& p) {
  DerivedParams d = derive(p);
  VanVleckCoefficients c;
  c.delta = -p.g * p.delta0 / d.delta_b;
  double db2 = d.delta_b * d.delta_b;
  c.w1 = -p.epsilon * p.epsilon * p.g * p.g / (db2 * p.omega);
  c.w0 = -p.delta0 * p.delta0 * p.g * p.g / (db2 * (d.delta_b + p.omega));
  c.delta_b = d.delta_b;
  c.omega = p.omega;
  return c;
}

Spectrum eigenenergies(const SystemParams& p, int n_levels) {
  if (n_levels < 1) throw std::invalid_argument("n_levels must be at least 1");
  VanVleckCoefficients c = effective_coefficients(p);
  Spectrum s;
  s.energies.resize(n_levels);
  s.energies[0] = -c.delta_b / 2.0 + c.w0 + c.w1;
  for (int n = 1; n < n_levels; ++n) {
    int j = (n - 1) / 2;
    double center = (j + 0.5) * p.omega + c.w1 + c.w0;
    double dj = c.delta_j(j);
    double gap = std::sqrt(dj * dj + 4.0 * (j + 1) * c.delta * c.delta);
    s.energies[n] = n % 2 == 1 ? center - gap / 2.0 : center + gap / 2.0;
  }
  s.omega.resize(n_levels, n_levels);
  for (int n = 0; n < n_levels; ++n)
    for (int m = 0; m < n_levels; ++m)
      s.omega(n, m) = s.energies[n] - s.energies[m];
  return s;
}

TransformationS build_s_matrix(const SystemParams& p, int j_max) {
  validate(p);
  if (j_max < 1) throw std::invalid_argument("j_max must be at least 1");
  DerivedParams d = derive(p);
  double db = d.delta_b;
  if (std::abs(2.0 * p.omega - db) < 1e-6)
    throw std::runtime_error(
        "transformation degenerate at delta_b = 2 omega; "
        "second-order coefficients diverge");

  ProductBasis basis{j_max};
  int dim = basis.dimension();
  TransformationS s{basis, Eigen::MatrixXd::Zero(dim, dim),
                    Eigen::MatrixXd::Zero(dim, dim)};

  double g = p.g, eps = p.epsilon, d0 = p.delta0, om = p.omega;
  double db2 = db * db;
  for (int j = 0; j <= j_max; ++j) {
    double r1 = std::sqrt(j + 1.0);
    if (j + 1 <= j_max) {
      s.first_order(basis.index_e(j), basis.index_e(j + 1)) =
          r1 * eps * g / (db * om);
      s.first_order(basis.index_g(j), basis.index_g(j + 1)) =
          -r1 * eps * g / (db * om);
      s.first_order(basis.index_g(j), basis.index_e(j + 1)) =
          r1 * d0 * g / (db * (db + om));
    }
    s.second_order(basis.index_g(j), basis.index_e(j)) =
        -0.5 * (2.0 * j + 1.0) * eps * d0 * g * g / (db2 * om * (db + om));
    if (j + 2 <= j_max) {
      double r2 = std::sqrt((j + 1.0) * (j + 2.0));
      s.second_order(basis.index_e(j), basis.index_g(j + 2)) =
          2.0 * r2 * eps * d0 * g * g / (db2 * om * (2.0 * om - db));
      s.second_order(basis.index_e(j), basis.index_e(j + 2)) =
          -r2 * d0 * d0 * g * g / (2.0 * db2 * om * (db + om));
      s.second_order(basis.index_g(j), basis.index_g(j + 2)) =
          0.5 * r2 * d0 * d0 * g * g / (db2 * om * (om + db));
      s.second_order(basis.index_g(j), basis.index_e(j + 2)) =
          -r2 * eps * d0 * g * g / (db2 * om * (db + om) * (db + 2.0 * om));
    }
  }
  s.first_order -= Eigen::MatrixXd(s.first_order.transpose());
  s.second_order -= Eigen::MatrixXd(s.second_order.transpose());
  return s;
}

Eigen::MatrixXd transform_operator(const TransformationS& s, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  int dim = s.basis.dimension();
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(dim, dim);
  t += sign * (s.first_order + s.second_order);
  t += 0.5 * s.first_order * s.first_order;
  return t;
}

EigenstateTable eigenstates(const SystemParams& p, int n_levels, int j_max) {
  if (n_levels < 1) throw std::invalid_argument("n_levels must be at least 1");
  int j_top = n_levels / 2;  // highest Fock index of the effective states
  if (j_max < j_top + 2)
    throw std::invalid_argument(
        "j_max too small: the transformation mixes two extra Fock levels");

  VanVleckCoefficients c = effective_coefficients(p);
  TransformationS s = build_s_matrix(p, j_max);
  Eigen::MatrixXd undress = transform_operator(s, -1);
  ProductBasis basis{j_max};
  int dim = basis.dimension();

  EigenstateTable table;
  table.basis = basis;
  table.n_levels = n_levels;
  table.g_coeff.setZero(j_max + 1, n_levels);
  table.e_coeff.setZero(j_max + 1, n_levels);

  for (int n = 0; n < n_levels; ++n) {
    Eigen::VectorXd eff = Eigen::VectorXd::Zero(dim);
    if (n == 0) {
      eff[basis.index_g(0)] = 1.0;
    } else {
      int j = (n - 1) / 2;
      double half = c.alpha_j(j) / 2.0;
      if (n % 2 == 1) {
        eff[basis.index_g(j + 1)] = std::cos(half);
        eff[basis.index_e(j)] = std::sin(half);
      } else {
        eff[basis.index_g(j + 1)] = -std::sin(half);
        eff[basis.index_e(j)] = std::cos(half);
      }
    }
    Eigen::VectorXd full = undress * eff;
    for (int j = 0; j <= j_max; ++j) {
      table.g_coeff(j, n) = full[basis.index_g(j)];
      table.e_coeff(j, n) = full[basis.index_e(j)];
    }
  }
  return table;
}

}  // namespace qho
