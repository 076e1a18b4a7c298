#pragma once

#include "ohbox/exact.hpp"
#include "ohbox/group.hpp"
#include "ohbox/spectrum.hpp"
#include "ohbox/symmetry_adapt.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace ohbox {

/// I2(n, m) = int_{-1}^{1} s_n(q) q^2 s_m(q) dq with s_n(q) = sin(n pi (q+1)/2).
///
/// Closed forms: 1/3 - 2/(n^2 pi^2) on the diagonal, 32 n m / ((n^2 - m^2)^2 pi^2)
/// when n + m is even, zero otherwise. Throws std::invalid_argument for n or m < 1.
PiPoly integral_I2(int n, int m);
double integral_I2_value(int n, int m);

enum class Potential {
  Cross,     // x^2 y^2 + x^2 z^2 + y^2 z^2, breaks the dynamical symmetry
  Harmonic,  // x^2 + y^2 + z^2, separable
};

using PiPolyMatrix = DenseMatrix<PiPoly>;

/// <psi_a|V|psi_b> over level.basis, exact.
PiPolyMatrix v_matrix(const EnergyLevel& level, Potential potential = Potential::Cross);

Eigen::MatrixXd to_double(const PiPolyMatrix& m);

/// One first-order eigenvalue of V on the level together with the irrep of
/// the states it belongs to. Irreps occurring once on the level have an
/// exact value; repeated irreps mix inside their isotypic block and are
/// only available in binary64.
struct PerturbationBlock {
  Irrep irrep{};
  int dimension = 0;
  std::optional<PiPoly> exact;
  double value = 0.0;
};

struct PerturbationReport {
  EnergyLevel level;
  Potential potential = Potential::Cross;
  Rational zeroth_pi2;
  std::vector<PerturbationBlock> blocks;  // ascending by value, ties by irrep
  double lambda = 1.0;

  /// E^(0) + lambda E^(1) for one block, binary64.
  double energy(const PerturbationBlock& block) const;
};

/// Degenerate first-order theory on a whole shell, blocks resolved by irrep.
/// Throws std::logic_error when the eigenvalue multiplicities inside an
/// isotypic block disagree with the irrep dimension.
PerturbationReport first_order_split(const EnergyLevel& level,
                                     Potential potential = Potential::Cross,
                                     double lambda = 1.0);

/// Independent route: eigenvalues of the dense binary64 V matrix, ascending.
Eigen::VectorXd dense_first_order(const EnergyLevel& level, Potential potential = Potential::Cross);

/// Rayleigh-Ritz solution of (p^2 + lambda q^2) phi = eps phi on [-1, 1] in
/// the first N sine functions.
struct RitzSolution {
  int basis_size = 0;
  double lambda = 1.0;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, over sine labels 1..N

  /// eps_n for n >= 1.
  double epsilon(int n) const { return eigenvalues(n - 1); }
};

/// Throws std::invalid_argument for N < 8.
RitzSolution ritz_solve(int basis_size, double lambda = 1.0);

/// |eps_n(N) - eps_n(N + step)| for n = 1..count.
Eigen::VectorXd ritz_convergence(int basis_size, int count, int step = 20, double lambda = 1.0);

/// Separable oscillator-in-a-box energies E = eps_a + eps_b + eps_c for a
/// permutation class.
struct HarmonicLevelReport {
  std::array<int, 3> triple{};
  int basis_size = 0;
  double lambda = 1.0;
  std::vector<std::pair<BasisLabel, double>> energies;
  double spread = 0.0;  // max - min over the class
  IrrepMultiset decomposition;
  /// max |[H, D]| for D = 2 H_x - H_y - H_z on the product shell.
  double commutator_norm = 0.0;

  bool degenerate(double tolerance = 1e-12) const { return spread < tolerance; }
};

HarmonicLevelReport harmonic_level_report(std::array<int, 3> triple, const RitzSolution& ritz);
HarmonicLevelReport harmonic_level_report(std::array<int, 3> triple, int basis_size,
                                          double lambda = 1.0);

}  // namespace ohbox
