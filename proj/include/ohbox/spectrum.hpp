#pragma once

#include "ohbox/exact.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ohbox {

/// Quantum numbers (n1, n2, n3) of psi_{n1 n2 n3}; all positive.
struct BasisLabel {
  std::array<int, 3> n{1, 1, 1};

  BasisLabel() = default;
  BasisLabel(int n1, int n2, int n3);  // throws std::invalid_argument on n_i < 1

  int shell() const { return n[0] * n[0] + n[1] * n[1] + n[2] * n[2]; }
  std::span<const int, 3> quanta() const { return n; }
  std::string to_string() const;  // "(1,2,3)"

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

std::ostream& operator<<(std::ostream& os, const BasisLabel& label);

/// The distinct permutations {a,b,c}_P of one sorted triple a <= b <= c.
struct PermClass {
  std::array<int, 3> representative;
  std::vector<BasisLabel> members;  // lexicographic order
};

PermClass make_perm_class(std::array<int, 3> triple);

/// Every eigenstate sharing one shell s = n1^2 + n2^2 + n3^2.
struct EnergyLevel {
  int shell = 0;
  Rational energy_pi2;                // E / pi^2 = s / 4
  std::vector<PermClass> perm_classes;  // sorted by representative
  std::vector<BasisLabel> basis;        // members of all classes, class by class
  int degeneracy = 0;

  /// Two or more permutation classes share the shell.
  bool pythagorean() const { return perm_classes.size() > 1; }
  /// Position of a label in basis, or -1.
  int index_of(const BasisLabel& label) const;
};

/// E / pi^2 = (n1^2 + n2^2 + n3^2) / 4.
Rational energy(const BasisLabel& label);

/// Signs of psi under x -> -x, y -> -y, z -> -z: (-1)^(n_i + 1).
std::array<int, 3> parity_signature(const BasisLabel& label);

/// All nonempty shells up to max_shell, ascending. Throws
/// std::invalid_argument when max_shell < 3.
std::vector<EnergyLevel> enumerate_levels(int max_shell);

/// The full level for one shell, nullopt when no triple reaches it.
std::optional<EnergyLevel> level_of_shell(int shell);

/// A level restricted to the single permutation class of a triple.
EnergyLevel level_of_class(std::array<int, 3> triple);

/// The sine products are orthonormal on [-1,1]^3.
Rational normalized_overlap(const BasisLabel& a, const BasisLabel& b);

/// psi_label(x) for x in [-1,1]^3.
double evaluate_basis(const BasisLabel& label, std::span<const double, 3> x);

}  // namespace ohbox
