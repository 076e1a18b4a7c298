#include "ohbox/dynamical.hpp"

#include <algorithm>
#include <set>

namespace ohbox {

namespace {

PiPoly quarter_pi2_power(Rational value, int power) {
  // value * (pi^2/4)^power
  Rational scale = 1;
  for (int i = 0; i < power; ++i) scale /= 4;
  return PiPoly(value * scale, power);
}

}  // namespace

DiagonalOperator<PiPoly> d_eg1() {
  return {"DEg1", [](std::span<const int> n) {
            const int n1 = n[0] * n[0], n2 = n[1] * n[1], n3 = n[2] * n[2];
            return quarter_pi2_power(2 * n1 - n2 - n3, 1);
          }};
}

DiagonalOperator<PiPoly> d_eg2() {
  return {"DEg2", [](std::span<const int> n) {
            const int n1 = n[0] * n[0], n2 = n[1] * n[1], n3 = n[2] * n[2];
            return quarter_pi2_power(2 * n2 - n1 - n3, 1);
          }};
}

DiagonalOperator<PiPoly> d_a2g() {
  return {"DA2g", [](std::span<const int> n) {
            const long n1 = n[0] * n[0], n2 = n[1] * n[1], n3 = n[2] * n[2];
            return quarter_pi2_power(Rational((n1 - n2) * (n1 - n3) * (n2 - n3)), 3);
          }};
}

DiagonalOperator<PiPoly> free_hamiltonian() {
  return {"H", [](std::span<const int> n) {
            return quarter_pi2_power(n[0] * n[0] + n[1] * n[1] + n[2] * n[2], 1);
          }};
}

Irrep operator_irrep(const std::string& name) {
  if (name == "DEg1" || name == "DEg2") return Irrep::Eg;
  if (name == "DA2g") return Irrep::A2g;
  if (name == "H") return Irrep::A1g;
  throw std::invalid_argument("no known symmetry for operator " + name);
}

bool verify_commutation(const LabelOperator& op, int max_shell) {
  for (const auto& level : enumerate_levels(std::max(max_shell, 3))) {
    if (level.shell > max_shell) break;
    const PiPoly energy_a(level.energy_pi2, 1);
    for (const auto& a : level.basis) {
      const LabelCombination<PiPoly> image = op(a);
      for (const auto& [b, d_ba] : image.terms()) {
        const PiPoly energy_b(ohbox::energy(b), 1);
        if (!(energy_b * d_ba - d_ba * energy_a).is_zero()) return false;
      }
    }
  }
  return true;
}

bool verify_commutation(const DiagonalOperator<PiPoly>& op, int max_shell) {
  return verify_commutation(as_label_operator(op), max_shell);
}

std::optional<ConnectionReport> connect(const EnergyLevel& level,
                                        const DiagonalOperator<PiPoly>& op,
                                        const SymFunction& f, Irrep from, Irrep to) {
  const LabelCombination<PiPoly> result = project(apply_diagonal(op, f), to);
  if (result.is_zero()) return std::nullopt;

  std::optional<int> power;
  for (const auto& [label, c] : result.terms()) {
    const auto p = c.homogeneous_power();
    if (!p || (power && *power != *p)) {
      throw std::logic_error("projected result is not a single power of pi^2");
    }
    power = p;
  }

  ConnectionReport report;
  report.shell = level.shell;
  report.op = op.name;
  report.from = from;
  report.to = to;
  report.pi2_power = *power;
  report.source = f;
  for (const auto& label : level.basis) {
    const PiPoly c = result.coefficient(label);
    if (c.is_zero()) continue;
    if (report.coefficient == 0) report.coefficient = c.coefficient(*power);
    report.function.add(label, c.coefficient(*power) / report.coefficient);
  }
  if (report.function.terms().size() != result.terms().size()) {
    throw std::logic_error("connection left the energy level");
  }
  report.function.set_irrep(to);
  return report;
}

std::vector<ConnectionReport> connection_analysis(const EnergyLevel& level,
                                                  const DiagonalOperator<PiPoly>& op) {
  std::vector<ConnectionReport> reports;
  const LevelDecomposition d = decompose_level(level);
  for (const auto& [from, functions] : d.adapted_basis) {
    for (const auto& f : functions) {
      for (Irrep to : kAllIrreps) {
        if (d.multiplicities[to] == 0) continue;
        if (auto r = connect(level, op, f, from, to)) reports.push_back(std::move(*r));
      }
    }
  }
  return reports;
}

std::vector<std::pair<Irrep, Irrep>> connected_pairs(const EnergyLevel& level,
                                                     const DiagonalOperator<PiPoly>& op) {
  std::set<std::pair<Irrep, Irrep>> pairs;
  for (const auto& r : connection_analysis(level, op)) {
    if (!r.cross()) continue;
    pairs.insert(std::minmax(r.from, r.to));
  }
  return {pairs.begin(), pairs.end()};
}

template <class Scalar>
std::vector<DiagonalOperator<Scalar>> build_commuting_combos(
    const std::vector<std::function<Scalar(int)>>& spectra,
    const std::vector<CommutingCombo>& combos) {
  const std::size_t m = spectra.size();
  if (m < 2) throw std::invalid_argument("need at least two commuting parts");
  if (combos.empty() || combos.size() > m - 1) {
    throw std::invalid_argument("between one and M-1 combinations are allowed");
  }
  RationalMatrix d(static_cast<Eigen::Index>(combos.size()), static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < combos.size(); ++k) {
    if (combos[k].coefficients.size() != m) {
      throw std::invalid_argument("combination length differs from the number of parts");
    }
    for (std::size_t j = 0; j < m; ++j) {
      d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = combos[k].coefficients[j];
    }
  }
  if (exact_rank<Rational>(d) != d.rows()) {
    throw std::invalid_argument("combination coefficients are linearly dependent");
  }

  std::vector<DiagonalOperator<Scalar>> ops;
  for (const auto& combo : combos) {
    std::string name = "D(";
    for (std::size_t j = 0; j < m; ++j) {
      name += (j ? "," : "") + to_string(combo.coefficients[j]);
    }
    name += ")";
    ops.push_back({name, [spectra, combo](std::span<const int> quanta) {
                     if (quanta.size() != spectra.size()) {
                       throw std::invalid_argument("label arity differs from the number of parts");
                     }
                     Scalar sum = from_rational<Scalar>(0);
                     for (std::size_t j = 0; j < spectra.size(); ++j) {
                       sum += from_rational<Scalar>(combo.coefficients[j]) * spectra[j](quanta[j]);
                     }
                     return sum;
                   }});
  }
  return ops;
}

template std::vector<DiagonalOperator<PiPoly>> build_commuting_combos(
    const std::vector<std::function<PiPoly(int)>>&, const std::vector<CommutingCombo>&);
template std::vector<DiagonalOperator<double>> build_commuting_combos(
    const std::vector<std::function<double(int)>>&, const std::vector<CommutingCombo>&);

std::function<PiPoly(int)> free_box_spectrum() {
  return [](int n) { return PiPoly(Rational(n * n, 4), 1); };
}

std::vector<CoincidenceComparison> compare_pythagorean_pairs(int max_shell) {
  const auto levels = enumerate_levels(max_shell);
  const std::vector<DiagonalOperator<PiPoly>> ops = {d_eg1(), d_eg2(), d_a2g()};

  std::set<std::pair<Irrep, Irrep>> dynamical;
  for (const auto& level : levels) {
    for (const auto& pc : level.perm_classes) {
      const EnergyLevel single = level_of_class(pc.representative);
      for (const auto& op : ops) {
        for (const auto& p : connected_pairs(single, op)) dynamical.insert(p);
      }
    }
  }

  std::vector<CoincidenceComparison> out;
  for (const auto& level : levels) {
    if (!level.pythagorean()) continue;
    CoincidenceComparison cmp;
    cmp.shell = level.shell;
    for (const auto& pc : level.perm_classes) {
      cmp.class_decompositions.push_back(level_multiplicities(level_of_class(pc.representative)));
    }
    std::set<std::pair<Irrep, Irrep>> pairs;
    const auto& decs = cmp.class_decompositions;
    for (std::size_t a = 0; a < decs.size(); ++a) {
      for (std::size_t b = a + 1; b < decs.size(); ++b) {
        for (Irrep s : kAllIrreps) {
          for (Irrep t : kAllIrreps) {
            if (s != t && decs[a][s] > 0 && decs[b][t] > 0) pairs.insert(std::minmax(s, t));
          }
        }
      }
    }
    cmp.pythagorean_pairs.assign(pairs.begin(), pairs.end());
    cmp.all_pairs_dynamical = std::all_of(pairs.begin(), pairs.end(),
                                          [&](const auto& p) { return dynamical.contains(p); });
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace ohbox
