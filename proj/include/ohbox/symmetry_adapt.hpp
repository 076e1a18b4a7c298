#pragma once

#include "ohbox/exact.hpp"
#include "ohbox/group.hpp"
#include "ohbox/spectrum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ohbox {

struct SignedLabel {
  BasisLabel label;
  int sign = 1;

  friend bool operator==(const SignedLabel&, const SignedLabel&) = default;
};

/// Finite linear combination of box eigenfunctions, sum_k c_k psi_k.
template <class Scalar>
class LabelCombination {
 public:
  using Terms = std::map<BasisLabel, Scalar>;

  LabelCombination() = default;
  explicit LabelCombination(Terms terms, std::optional<Irrep> irrep = std::nullopt)
      : irrep_(irrep) {
    for (auto& [label, c] : terms) add(label, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const BasisLabel& label) const {
    const auto it = terms_.find(label);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const std::optional<Irrep>& irrep() const { return irrep_; }
  void set_irrep(std::optional<Irrep> irrep) { irrep_ = irrep; }

  void add(const BasisLabel& label, const Scalar& c) {
    if (ohbox::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(label, c);
    if (!inserted) {
      it->second += c;
      if (ohbox::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// The shared shell of all terms, nullopt for the zero function or a mix.
  std::optional<int> shell() const {
    std::optional<int> s;
    for (const auto& [label, c] : terms_) {
      if (s && *s != label.shell()) return std::nullopt;
      s = label.shell();
    }
    return s;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [label, c] : terms_) {
      if (!out.empty()) out += " ";
      out += "[" + coefficient_string(c) + "]psi" + label.to_string();
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const LabelCombination& a, const LabelCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  static std::string coefficient_string(const Rational& c) { return ohbox::to_string(c); }
  static std::string coefficient_string(const PiPoly& c) { return c.to_string(); }
  static std::string coefficient_string(double c) { return std::to_string(c); }

  Terms terms_;
  std::optional<Irrep> irrep_;
};

/// Symmetry-adapted eigenfunction with exact rational coefficients.
using SymFunction = LabelCombination<Rational>;

/// R psi(x) = psi(M^-1 x): the labels are permuted and every negated
/// coordinate contributes (-1)^(n+1) for the quantum number landing there.
SignedLabel act(const GroupElement& g, const SignedLabel& s);

/// D(g)[a][b] = coefficient of basis[a] in R_g psi_{basis[b]}.
Eigen::MatrixXi representation_matrix(const GroupElement& g, const EnergyLevel& level);

/// P^j restricted to the level, exact.
RationalMatrix projector_matrix(Irrep j, const EnergyLevel& level);

/// m_j = (1/48) sum_g chi_j(g) tr D(g). Throws std::logic_error when any
/// multiplicity fails to be a nonnegative integer.
IrrepMultiset level_multiplicities(const EnergyLevel& level);

/// Canonical basis of the image of P^j on the level: rows of the reduced
/// echelon form, leading coefficient one. Empty when m_j = 0.
std::vector<SymFunction> project_level(const EnergyLevel& level, Irrep j);

struct LevelDecomposition {
  EnergyLevel level;
  IrrepMultiset multiplicities;
  std::map<Irrep, std::vector<SymFunction>> adapted_basis;
};

LevelDecomposition decompose_level(const EnergyLevel& level);

/// P^j applied to an arbitrary combination.
template <class Scalar>
LabelCombination<Scalar> project(const LabelCombination<Scalar>& f, Irrep j) {
  const auto coeffs = projector_coefficients(j);
  LabelCombination<Scalar> out;
  for (const auto& g : oh_group().elements()) {
    const Rational& w = coeffs[g.index];
    if (w == 0) continue;
    for (const auto& [label, c] : f.terms()) {
      const SignedLabel image = act(g, SignedLabel{label, 1});
      out.add(image.label, c * from_rational<Scalar>(w * image.sign));
    }
  }
  out.set_irrep(j);
  return out;
}

/// Dense coefficient vector of f over level.basis. Throws
/// std::invalid_argument when f has a term outside the level.
template <class Scalar>
DenseVector<Scalar> coefficients_on(const EnergyLevel& level, const LabelCombination<Scalar>& f) {
  DenseVector<Scalar> v = DenseVector<Scalar>::Constant(level.degeneracy, Scalar(0));
  for (const auto& [label, c] : f.terms()) {
    const int i = level.index_of(label);
    if (i < 0) throw std::invalid_argument("function has a term outside the level");
    v(i) = c;
  }
  return v;
}

/// Exact equality of the spans of two families of functions on a level.
bool same_span(const EnergyLevel& level, const std::vector<SymFunction>& a,
               const std::vector<SymFunction>& b);

/// Inner product sum_ab c_a c_b <psi_a|psi_b>.
Rational overlap(const SymFunction& a, const SymFunction& b);

}  // namespace ohbox
