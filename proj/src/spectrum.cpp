#include "ohbox/spectrum.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ohbox {

BasisLabel::BasisLabel(int n1, int n2, int n3) : n{n1, n2, n3} {
  if (n1 < 1 || n2 < 1 || n3 < 1) {
    throw std::invalid_argument("quantum numbers must be positive");
  }
}

std::string BasisLabel::to_string() const {
  return "(" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) +
         ")";
}

std::ostream& operator<<(std::ostream& os, const BasisLabel& label) {
  return os << label.to_string();
}

PermClass make_perm_class(std::array<int, 3> triple) {
  std::sort(triple.begin(), triple.end());
  PermClass pc{triple, {}};
  std::array<int, 3> p = triple;
  do {
    pc.members.emplace_back(p[0], p[1], p[2]);
  } while (std::next_permutation(p.begin(), p.end()));
  return pc;
}

int EnergyLevel::index_of(const BasisLabel& label) const {
  const auto it = std::find(basis.begin(), basis.end(), label);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

Rational energy(const BasisLabel& label) { return Rational(label.shell(), 4); }

std::array<int, 3> parity_signature(const BasisLabel& label) {
  std::array<int, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = (label.n[i] % 2 == 1) ? 1 : -1;
  return s;
}

namespace {

EnergyLevel assemble_level(int shell, std::vector<std::array<int, 3>> triples) {
  std::sort(triples.begin(), triples.end());
  EnergyLevel level;
  level.shell = shell;
  level.energy_pi2 = Rational(shell, 4);
  for (const auto& t : triples) {
    level.perm_classes.push_back(make_perm_class(t));
    const auto& members = level.perm_classes.back().members;
    level.basis.insert(level.basis.end(), members.begin(), members.end());
  }
  level.degeneracy = static_cast<int>(level.basis.size());
  return level;
}

// Sorted triples a <= b <= c grouped by shell.
std::map<int, std::vector<std::array<int, 3>>> sorted_triples(int min_shell, int max_shell) {
  std::map<int, std::vector<std::array<int, 3>>> by_shell;
  for (int a = 1; 3 * a * a <= max_shell; ++a) {
    for (int b = a; a * a + 2 * b * b <= max_shell; ++b) {
      for (int c = b; a * a + b * b + c * c <= max_shell; ++c) {
        const int s = a * a + b * b + c * c;
        if (s >= min_shell) by_shell[s].push_back({a, b, c});
      }
    }
  }
  return by_shell;
}

}  // namespace

std::vector<EnergyLevel> enumerate_levels(int max_shell) {
  if (max_shell < 3) throw std::invalid_argument("max_shell must be at least 3");
  std::vector<EnergyLevel> levels;
  for (auto& [shell, triples] : sorted_triples(3, max_shell)) {
    levels.push_back(assemble_level(shell, std::move(triples)));
  }
  return levels;
}

std::optional<EnergyLevel> level_of_shell(int shell) {
  auto by_shell = sorted_triples(shell, shell);
  if (by_shell.empty()) return std::nullopt;
  return assemble_level(shell, std::move(by_shell.begin()->second));
}

EnergyLevel level_of_class(std::array<int, 3> triple) {
  const BasisLabel check(triple[0], triple[1], triple[2]);
  std::sort(triple.begin(), triple.end());
  return assemble_level(check.shell(), {triple});
}

Rational normalized_overlap(const BasisLabel& a, const BasisLabel& b) {
  return a == b ? Rational(1) : Rational(0);
}

double evaluate_basis(const BasisLabel& label, std::span<const double, 3> x) {
  const double pi = boost::math::constants::pi<double>();
  double value = 1.0;
  for (int i = 0; i < 3; ++i) value *= std::sin(label.n[i] * pi * (x[i] + 1.0) / 2.0);
  return value;
}

}  // namespace ohbox
