#include "ohbox/json_io.hpp"

#include <cstdio>

namespace ohbox {

double round_sig12(double value) { return std::stod(format_sig12(value)); }

std::string format_sig12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json to_json(const GroupElement& g) {
  Json matrix = Json::array();
  for (int r = 0; r < 3; ++r) matrix.push_back({g.matrix(r, 0), g.matrix(r, 1), g.matrix(r, 2)});
  return {{"index", g.index}, {"class", class_name(g.class_id)}, {"matrix", matrix}};
}

Json group_elements_json() {
  Json out = Json::array();
  for (const auto& g : oh_group().elements()) out.push_back(to_json(g));
  return out;
}

Json classes_json() {
  Json out = Json::array();
  for (ClassId c : kAllClasses) {
    Json members = Json::array();
    for (const auto& g : oh_group().elements()) {
      if (g.class_id == c) members.push_back(g.index);
    }
    out.push_back({{"class", class_name(c)}, {"size", class_size(c)}, {"elements", members}});
  }
  return out;
}

Json character_table_json() {
  Json classes = Json::array();
  for (ClassId c : kAllClasses) classes.push_back({{"name", class_name(c)}, {"size", class_size(c)}});
  Json rows = Json::array();
  for (Irrep j : kAllIrreps) {
    Json chars = Json::array();
    for (ClassId c : kAllClasses) chars.push_back(character(j, c));
    rows.push_back({{"irrep", irrep_name(j)}, {"dimension", irrep_dimension(j)}, {"characters", chars}});
  }
  return {{"classes", classes}, {"irreps", rows}};
}

Json to_json(const IrrepMultiset& m) {
  Json out = Json::object();
  for (Irrep j : kAllIrreps) out[std::string(irrep_name(j))] = m[j];
  return out;
}

Json product_table_json() {
  Json out = Json::array();
  for (Irrep a : kAllIrreps) {
    for (Irrep b : kAllIrreps) {
      const IrrepMultiset p = decompose_product(a, b);
      out.push_back({{"a", irrep_name(a)},
                     {"b", irrep_name(b)},
                     {"product", p.to_string()},
                     {"multiplicities", to_json(p)}});
    }
  }
  return out;
}

Json to_json(const EnergyLevel& level) {
  Json classes = Json::array();
  for (const auto& pc : level.perm_classes) {
    classes.push_back({pc.representative[0], pc.representative[1], pc.representative[2]});
  }
  return {{"shell", level.shell},
          {"energy_pi2", to_string(level.energy_pi2)},
          {"classes", classes},
          {"degeneracy", level.degeneracy},
          {"pythagorean", level.pythagorean()}};
}

Json to_json(const SymFunction& f) {
  Json out = Json::object();
  for (const auto& [label, c] : f.terms()) out[label.to_string()] = to_string(c);
  return out;
}

Json to_json(const LevelDecomposition& d) {
  Json adapted = Json::object();
  for (const auto& [j, functions] : d.adapted_basis) {
    Json list = Json::array();
    for (const auto& f : functions) list.push_back(to_json(f));
    adapted[std::string(irrep_name(j))] = list;
  }
  return {{"shell", d.level.shell}, {"multiplicities", to_json(d.multiplicities)}, {"adapted", adapted}};
}

Json to_json(const ConnectionReport& r) {
  return {{"shell", r.shell},
          {"op", r.op},
          {"from", irrep_name(r.from)},
          {"to", irrep_name(r.to)},
          {"coeff_pi2", to_string(r.coefficient)},
          {"pi2_power", r.pi2_power},
          {"source", to_json(r.source)},
          {"function", to_json(r.function)}};
}

std::string_view potential_name(Potential p) {
  return p == Potential::Cross ? "cross" : "harmonic";
}

Json to_json(const PerturbationReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"irrep", irrep_name(b.irrep)},
                      {"dimension", b.dimension},
                      {"first_order_exact", b.exact ? Json(b.exact->to_string()) : Json(nullptr)},
                      {"first_order_f64", round_sig12(b.value)},
                      {"energy_f64", round_sig12(r.energy(b))}});
  }
  return {{"shell", r.level.shell},
          {"potential", potential_name(r.potential)},
          {"zeroth_pi2", to_string(r.zeroth_pi2)},
          {"blocks", blocks},
          {"lambda", r.lambda}};
}

Json to_json(const RitzSolution& r, const Eigen::VectorXd& convergence) {
  Json levels = Json::array();
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    Json entry = {{"n", i + 1}, {"epsilon", round_sig12(r.eigenvalues(i))}};
    if (i < convergence.size()) {
      entry["delta"] = round_sig12(convergence(i));
      entry["converged"] = convergence(i) < 1e-10;
    }
    levels.push_back(entry);
  }
  return {{"basis_size", r.basis_size}, {"lambda", r.lambda}, {"levels", levels}};
}

Json to_json(const HarmonicLevelReport& r) {
  Json energies = Json::array();
  for (const auto& [label, e] : r.energies) {
    energies.push_back({{"label", label.to_string()}, {"energy", round_sig12(e)}});
  }
  return {{"triple", r.triple},
          {"basis_size", r.basis_size},
          {"lambda", r.lambda},
          {"energies", energies},
          {"spread", round_sig12(r.spread)},
          {"degenerate", r.degenerate()},
          {"multiplicities", to_json(r.decomposition)},
          {"commutator_norm", round_sig12(r.commutator_norm)}};
}

}  // namespace ohbox
