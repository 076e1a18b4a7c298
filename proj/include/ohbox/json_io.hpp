#pragma once

#include "ohbox/dynamical.hpp"
#include "ohbox/group.hpp"
#include "ohbox/perturb.hpp"
#include "ohbox/spectrum.hpp"
#include "ohbox/symmetry_adapt.hpp"

#include <json.hpp>

#include <string>

namespace ohbox {

using Json = nlohmann::json;

/// Rounds to 12 significant digits, the precision of every printed float.
double round_sig12(double value);
std::string format_sig12(double value);

Json to_json(const GroupElement& g);
Json group_elements_json();
Json classes_json();
Json character_table_json();
Json product_table_json();
Json to_json(const IrrepMultiset& m);

Json to_json(const EnergyLevel& level);
Json to_json(const SymFunction& f);
Json to_json(const LevelDecomposition& d);

Json to_json(const ConnectionReport& r);

std::string_view potential_name(Potential p);
Json to_json(const PerturbationReport& r);
Json to_json(const RitzSolution& r, const Eigen::VectorXd& convergence);
Json to_json(const HarmonicLevelReport& r);

}  // namespace ohbox
