#pragma once

#include "ohbox/exact.hpp"
#include "ohbox/group.hpp"
#include "ohbox/spectrum.hpp"
#include "ohbox/symmetry_adapt.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohbox {

/// An operator diagonal in the separable product basis: psi_n -> lambda(n) psi_n.
///
/// Scalar is PiPoly for the exact free-box operators and double for
/// operators assembled from numerically solved one-dimensional spectra.
template <class Scalar>
struct DiagonalOperator {
  std::string name;
  std::function<Scalar(std::span<const int>)> eigenvalue;

  Scalar operator()(const BasisLabel& label) const { return eigenvalue(label.quanta()); }
};

/// 2 p_x^2 - p_y^2 - p_z^2, eigenvalue (pi^2/4)(2 n1^2 - n2^2 - n3^2).
DiagonalOperator<PiPoly> d_eg1();
/// 2 p_y^2 - p_x^2 - p_z^2, eigenvalue (pi^2/4)(2 n2^2 - n1^2 - n3^2).
DiagonalOperator<PiPoly> d_eg2();
/// (p_x^2 - p_y^2)(p_x^2 - p_z^2)(p_y^2 - p_z^2).
DiagonalOperator<PiPoly> d_a2g();
/// The free Hamiltonian p_x^2 + p_y^2 + p_z^2.
DiagonalOperator<PiPoly> free_hamiltonian();

/// Symmetry under O_h of each named operator, for direct-product checks.
Irrep operator_irrep(const std::string& name);

template <class Scalar>
LabelCombination<Scalar> apply_diagonal(const DiagonalOperator<Scalar>& op, const SymFunction& f) {
  LabelCombination<Scalar> out;
  for (const auto& [label, c] : f.terms()) out.add(label, op(label) * from_rational<Scalar>(c));
  return out;
}

/// A general operator given by its action on basis labels; used to check
/// commutation of operators that need not be diagonal.
using LabelOperator = std::function<LabelCombination<PiPoly>(const BasisLabel&)>;

template <class Scalar>
LabelOperator as_label_operator(const DiagonalOperator<Scalar>& op) {
  return [op](const BasisLabel& label) {
    LabelCombination<PiPoly> out;
    out.add(label, op(label));
    return out;
  };
}

/// [H, D] = 0 on every state with shell <= max_shell, checked entrywise as
/// H_bb D_ba - D_ba H_aa. Images outside the enumerated range still count.
bool verify_commutation(const LabelOperator& op, int max_shell);
bool verify_commutation(const DiagonalOperator<PiPoly>& op, int max_shell);

/// One projected cross-term P^{to} (D f) for an adapted f of irrep from.
///
/// result = coefficient * function where the first nonzero entry of
/// function (in the level's basis order) is one, and coefficient is a
/// rational multiple of pi^(2 * pi2_power).
struct ConnectionReport {
  int shell = 0;
  std::string op;
  Irrep from{};
  Irrep to{};
  Rational coefficient;
  int pi2_power = 0;
  SymFunction function;
  SymFunction source;

  bool cross() const { return from != to; }
};

/// P^{to}(op f) for one function. Empty when the projection vanishes.
std::optional<ConnectionReport> connect(const EnergyLevel& level,
                                        const DiagonalOperator<PiPoly>& op,
                                        const SymFunction& f, Irrep from, Irrep to);

/// Every nonzero P^{S'}(op f) over the canonical adapted functions f of
/// every irrep S on the level, S' over all ten irreps.
std::vector<ConnectionReport> connection_analysis(const EnergyLevel& level,
                                                  const DiagonalOperator<PiPoly>& op);

/// Unordered irrep pairs {S, S'} with S != S' connected by op on the level.
std::vector<std::pair<Irrep, Irrep>> connected_pairs(const EnergyLevel& level,
                                                     const DiagonalOperator<PiPoly>& op);

/// Coefficients d_kj of one combination D_k = sum_j d_kj H_j.
struct CommutingCombo {
  std::vector<Rational> coefficients;
};

/// D_k with eigenvalue sum_j d_kj eps_j(n_j), one operator per combo.
/// Requires M >= 2 spectra, at most M - 1 combos, each of length M, and
/// linearly independent coefficient vectors; throws std::invalid_argument
/// otherwise.
template <class Scalar>
std::vector<DiagonalOperator<Scalar>> build_commuting_combos(
    const std::vector<std::function<Scalar(int)>>& spectra,
    const std::vector<CommutingCombo>& combos);

/// Exact free-box one-dimensional spectrum eps(n) = (n pi / 2)^2.
std::function<PiPoly(int)> free_box_spectrum();

// Declared for the two scalar fields the library uses.
extern template std::vector<DiagonalOperator<PiPoly>> build_commuting_combos(
    const std::vector<std::function<PiPoly(int)>>&, const std::vector<CommutingCombo>&);
extern template std::vector<DiagonalOperator<double>> build_commuting_combos(
    const std::vector<std::function<double(int)>>&, const std::vector<CommutingCombo>&);

/// Irrep pairs linked by coincident permutation classes on Pythagorean
/// shells versus those linked by the dynamical operators on single-class
/// levels; a report, not an invariant.
struct CoincidenceComparison {
  int shell = 0;
  std::vector<IrrepMultiset> class_decompositions;
  std::vector<std::pair<Irrep, Irrep>> pythagorean_pairs;
  bool all_pairs_dynamical = false;
};

std::vector<CoincidenceComparison> compare_pythagorean_pairs(int max_shell);

}  // namespace ohbox
