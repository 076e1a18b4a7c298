#include "ohbox/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ohbox;

namespace {

enum class Format { Table, Json, Csv };

// Exit 3: the request is well formed but names an empty result.
struct EmptyResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os, Format format) const {
    if (format == Format::Csv) {
      print_csv_row(os, header);
      for (const auto& r : rows) print_csv_row(os, r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out += cells[c];
        if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }

 private:
  static void print_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& s = cells[c];
      if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        os << quoted << "\"";
      } else {
        os << s;
      }
      os << (c + 1 < cells.size() ? "," : "\n");
    }
  }
};

void emit(const Table& table, const Json& json, Format format) {
  if (format == Format::Json) {
    std::cout << json.dump(2) << "\n";
  } else {
    table.print(std::cout, format);
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string matrix_string(const Eigen::Matrix3i& m) {
  std::vector<std::string> rows;
  for (int r = 0; r < 3; ++r)
    rows.push_back(std::to_string(m(r, 0)) + " " + std::to_string(m(r, 1)) + " " + std::to_string(m(r, 2)));
  return join(rows, "; ");
}

std::string triple_string(const std::array<int, 3>& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

std::array<int, 3> parse_level(const std::string& text) {
  std::array<int, 3> t{};
  std::istringstream in(text);
  std::string part;
  int count = 0;
  while (std::getline(in, part, ',')) {
    if (count == 3) throw Usage("level needs exactly three quantum numbers: " + text);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw Usage("malformed quantum number '" + part + "'");
    }
    if (used != part.size() || value < 1) throw Usage("quantum numbers must be positive integers: " + text);
    t[count++] = value;
  }
  if (count != 3) throw Usage("level needs exactly three quantum numbers: " + text);
  return t;
}

Irrep require_irrep(const std::string& name) {
  const auto j = parse_irrep(name);
  if (!j) throw Usage("unknown irrep '" + name + "'");
  return *j;
}

// ---------------------------------------------------------------- group

void cmd_group(const std::string& what, const std::string& a, const std::string& b, Format format) {
  const auto& G = oh_group();
  Table t;
  if (what == "elements") {
    t.header = {"index", "class", "matrix"};
    for (const auto& g : G.elements())
      t.rows.push_back({std::to_string(g.index), std::string(class_name(g.class_id)), matrix_string(g.matrix)});
    emit(t, group_elements_json(), format);
  } else if (what == "classes") {
    t.header = {"class", "size", "elements"};
    for (const auto& c : classes_json()) {
      std::vector<std::string> members;
      for (const auto& e : c["elements"]) members.push_back(std::to_string(e.get<int>()));
      t.rows.push_back({c["class"], std::to_string(c["size"].get<int>()), join(members, " ")});
    }
    emit(t, classes_json(), format);
  } else if (what == "chartable") {
    t.header = {"irrep"};
    for (ClassId c : kAllClasses) t.header.emplace_back(class_name(c));
    for (Irrep j : kAllIrreps) {
      std::vector<std::string> row = {std::string(irrep_name(j))};
      for (ClassId c : kAllClasses) row.push_back(std::to_string(character(j, c)));
      t.rows.push_back(row);
    }
    emit(t, character_table_json(), format);
  } else if (what == "products") {
    const std::string na = a.empty() ? "" : std::string(irrep_name(require_irrep(a)));
    const std::string nb = b.empty() ? "" : std::string(irrep_name(require_irrep(b)));
    t.header = {"a", "b", "product"};
    Json json = Json::array();
    for (const auto& p : product_table_json()) {
      if (!na.empty() && p["a"] != na) continue;
      if (!nb.empty() && p["b"] != nb) continue;
      t.rows.push_back({p["a"], p["b"], p["product"]});
      json.push_back(p);
    }
    emit(t, json, format);
  } else {
    throw Usage("group expects elements, classes, chartable or products");
  }
}

// ------------------------------------------------------------- spectrum

void cmd_spectrum(int max_shell, bool pythagorean_only, Format format) {
  if (max_shell < 3) throw Usage("--max-shell must be at least 3 (the ground shell)");
  Table t;
  t.header = {"shell", "energy_pi2", "degeneracy", "classes", "class_irreps", "irreps", "pythagorean"};
  Json json = Json::array();
  for (const auto& level : enumerate_levels(max_shell)) {
    if (pythagorean_only && !level.pythagorean()) continue;
    IrrepMultiset total;
    Json classes = Json::array();
    std::vector<std::string> names, irreps;
    for (const auto& pc : level.perm_classes) {
      const IrrepMultiset m = level_multiplicities(level_of_class(pc.representative));
      for (Irrep j : kAllIrreps) total[j] += m[j];
      names.push_back(triple_string(pc.representative));
      irreps.push_back(m.to_string());
      classes.push_back({{"triple", pc.representative},
                         {"members", pc.members.size()},
                         {"irreps", m.to_string()},
                         {"multiplicities", to_json(m)}});
    }
    t.rows.push_back({std::to_string(level.shell), to_string(level.energy_pi2), std::to_string(level.degeneracy),
                      join(names, " "), join(irreps, "; "), total.to_string(),
                      level.pythagorean() ? "yes" : "no"});
    json.push_back({{"shell", level.shell},
                    {"energy_pi2", to_string(level.energy_pi2)},
                    {"degeneracy", level.degeneracy},
                    {"pythagorean", level.pythagorean()},
                    {"classes", classes},
                    {"irreps", total.to_string()},
                    {"multiplicities", to_json(total)}});
  }
  emit(t, json, format);
}

// -------------------------------------------------------------- project

void cmd_project(const std::string& level_text, const std::string& irrep_text, Format format) {
  const EnergyLevel level = level_of_class(parse_level(level_text));
  const LevelDecomposition d = decompose_level(level);
  std::optional<Irrep> only;
  if (!irrep_text.empty()) {
    only = require_irrep(irrep_text);
    if (d.multiplicities[*only] == 0) {
      throw EmptyResult(std::string(irrep_name(*only)) + " does not occur on " +
                        triple_string(level.perm_classes[0].representative) + " (decomposition " +
                        d.multiplicities.to_string() + ")");
    }
  }
  Table t;
  t.header = {"irrep", "index", "function"};
  Json functions = Json::array();
  for (const auto& [j, fs] : d.adapted_basis) {
    if (only && j != *only) continue;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      t.rows.push_back({std::string(irrep_name(j)), std::to_string(i + 1), fs[i].to_string()});
      functions.push_back({{"irrep", irrep_name(j)}, {"index", i + 1}, {"terms", to_json(fs[i])}});
    }
  }
  emit(t,
       {{"shell", level.shell},
        {"triple", level.perm_classes[0].representative},
        {"multiplicities", to_json(d.multiplicities)},
        {"functions", functions}},
       format);
}

// ------------------------------------------------------------ dynamical

void cmd_dynamical(const std::string& level_text, const std::string& op_name, Format format) {
  const EnergyLevel level = level_of_class(parse_level(level_text));
  DiagonalOperator<PiPoly> op;
  if (op_name == "deg1") {
    op = d_eg1();
  } else if (op_name == "deg2") {
    op = d_eg2();
  } else if (op_name == "da2g") {
    op = d_a2g();
  } else {
    throw Usage("--op expects deg1, deg2 or da2g");
  }
  Table t;
  t.header = {"op", "from", "to", "coefficient", "source", "function"};
  Json json = Json::array();
  for (const auto& r : connection_analysis(level, op)) {
    t.rows.push_back({r.op, std::string(irrep_name(r.from)), std::string(irrep_name(r.to)),
                      PiPoly(r.coefficient, r.pi2_power).to_string(), r.source.to_string(), r.function.to_string()});
    json.push_back(to_json(r));
  }
  emit(t, json, format);
}

// -------------------------------------------------------------- perturb

void cmd_perturb(const std::string& potential_text, double lambda, int max_shell, Format format) {
  Potential potential;
  if (potential_text == "cross") {
    potential = Potential::Cross;
  } else if (potential_text == "harmonic") {
    potential = Potential::Harmonic;
  } else {
    throw Usage("--potential expects cross or harmonic");
  }
  if (max_shell < 3) throw Usage("--max-shell must be at least 3 (the ground shell)");
  Table t;
  t.header = {"shell", "zeroth_pi2", "irrep", "dimension", "first_order_exact", "first_order_f64", "energy_f64"};
  Json json = Json::array();
  for (const auto& level : enumerate_levels(max_shell)) {
    const PerturbationReport r = first_order_split(level, potential, lambda);
    for (const auto& b : r.blocks) {
      t.rows.push_back({std::to_string(level.shell), to_string(r.zeroth_pi2), std::string(irrep_name(b.irrep)),
                        std::to_string(b.dimension), b.exact ? b.exact->to_string() : "-", format_sig12(b.value),
                        format_sig12(r.energy(b))});
    }
    json.push_back(to_json(r));
  }
  emit(t, json, format);
}

// ----------------------------------------------------------------- ritz

void cmd_ritz(int basis, double lambda, Format format) {
  if (basis < 8) throw Usage("--basis must be at least 8");
  const RitzSolution r = ritz_solve(basis, lambda);
  const Eigen::VectorXd delta = ritz_convergence(basis, basis, 20, lambda);
  Table t;
  t.header = {"n", "epsilon", "delta", "converged"};
  for (int n = 1; n <= basis; ++n) {
    t.rows.push_back({std::to_string(n), format_sig12(r.epsilon(n)), format_sig12(delta(n - 1)),
                      delta(n - 1) < 1e-10 ? "yes" : "no"});
  }
  emit(t, to_json(r, delta), format);
}

void cmd_harmonic(const std::string& level_text, int basis, double lambda, Format format) {
  if (basis < 8) throw Usage("--basis must be at least 8");
  const std::array<int, 3> triple = parse_level(level_text);
  if (std::max({triple[0], triple[1], triple[2]}) > basis) throw Usage("quantum number exceeds --basis");
  const HarmonicLevelReport r = harmonic_level_report(triple, basis, lambda);
  Table t;
  t.header = {"label", "energy"};
  for (const auto& [label, e] : r.energies) t.rows.push_back({label.to_string(), format_sig12(e)});
  emit(t, to_json(r), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Particle in a cubic box: O_h symmetry, accidental degeneracy, perturbation theory"};
  app.require_subcommand(1);

  std::string format_text = "table";
  if (const char* env = std::getenv("OHBOX_FORMAT")) format_text = env;
  const std::map<std::string, Format> formats = {{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format_text, "table, json or csv (default from OHBOX_FORMAT)")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string what, a, b, level, irrep, op = "deg1", potential = "cross";
  int max_shell = 0, basis = 40;
  double lambda = 1.0;
  bool pythagorean_only = false;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* group = app.add_subcommand("group", "group elements, classes, character table, direct products");
  group->add_option("what", what, "elements|classes|chartable|products")
      ->required()
      ->check(CLI::IsMember({"elements", "classes", "chartable", "products"}));
  group->add_option("--a", a, "first irrep for products");
  group->add_option("--b", b, "second irrep for products");
  add_format(group);

  auto* spectrum = app.add_subcommand("spectrum", "energy levels with irrep decompositions");
  spectrum->add_option("--max-shell", max_shell, "largest n1^2+n2^2+n3^2")->required();
  spectrum->add_flag("--pythagorean-only", pythagorean_only, "only shells shared by several permutation classes");
  add_format(spectrum);

  auto* project = app.add_subcommand("project", "symmetry-adapted functions of a permutation class");
  project->add_option("--level", level, "n1,n2,n3")->required();
  project->add_option("--irrep", irrep, "restrict to one irrep");
  add_format(project);

  auto* dynamical = app.add_subcommand("dynamical", "irrep connections made by a dynamical operator");
  dynamical->add_option("--level", level, "n1,n2,n3")->required();
  dynamical->add_option("--op", op, "deg1|deg2|da2g")->check(CLI::IsMember({"deg1", "deg2", "da2g"}));
  add_format(dynamical);

  auto* perturb = app.add_subcommand("perturb", "first-order corrections per irrep block");
  perturb->add_option("--potential", potential, "cross|harmonic")->check(CLI::IsMember({"cross", "harmonic"}));
  perturb->add_option("--lambda", lambda, "coupling strength");
  perturb->add_option("--max-shell", max_shell, "largest shell")->required();
  add_format(perturb);

  auto* ritz = app.add_subcommand("ritz", "Rayleigh-Ritz eigenvalues of p^2 + lambda q^2 on [-1,1]");
  ritz->add_option("--basis", basis, "number of sine functions");
  ritz->add_option("--lambda", lambda, "oscillator strength");
  add_format(ritz);

  auto* harmonic = app.add_subcommand("harmonic", "oscillator-in-a-box energies of a permutation class");
  harmonic->add_option("--level", level, "n1,n2,n3")->required();
  harmonic->add_option("--basis", basis, "number of sine functions");
  harmonic->add_option("--lambda", lambda, "oscillator strength");
  add_format(harmonic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto f = formats.find(format_text);
    if (f == formats.end()) throw Usage("unknown format '" + format_text + "'");
    const Format format = f->second;
    if (*group) cmd_group(what, a, b, format);
    if (*spectrum) cmd_spectrum(max_shell, pythagorean_only, format);
    if (*project) cmd_project(level, irrep, format);
    if (*dynamical) cmd_dynamical(level, op, format);
    if (*perturb) cmd_perturb(potential, lambda, max_shell, format);
    if (*ritz) cmd_ritz(basis, lambda, format);
    if (*harmonic) cmd_harmonic(level, basis, lambda, format);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyResult& e) {
    std::cerr << "empty: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
