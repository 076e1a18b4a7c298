#include "ohbox/symmetry_adapt.hpp"

#include <stdexcept>

namespace ohbox {

SignedLabel act(const GroupElement& g, const SignedLabel& s) {
  const Eigen::Matrix3i& m = g.matrix;
  SignedLabel out{s.label, s.sign};
  // (M^-1 x)_k = sum_i M(i,k) x_i picks one signed coordinate i per slot k.
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      const int entry = m(i, k);
      if (entry == 0) continue;
      const int n = s.label.n[k];
      out.label.n[i] = n;
      if (entry < 0 && n % 2 == 0) out.sign = -out.sign;
    }
  }
  return out;
}

Eigen::MatrixXi representation_matrix(const GroupElement& g, const EnergyLevel& level) {
  Eigen::MatrixXi rep = Eigen::MatrixXi::Zero(level.degeneracy, level.degeneracy);
  for (int b = 0; b < level.degeneracy; ++b) {
    const SignedLabel image = act(g, SignedLabel{level.basis[b], 1});
    const int a = level.index_of(image.label);
    if (a < 0) throw std::logic_error("group action left the energy level");
    rep(a, b) = image.sign;
  }
  return rep;
}

RationalMatrix projector_matrix(Irrep j, const EnergyLevel& level) {
  const auto coeffs = projector_coefficients(j);
  RationalMatrix p = RationalMatrix::Zero(level.degeneracy, level.degeneracy);
  for (const auto& g : oh_group().elements()) {
    const Rational& w = coeffs[g.index];
    if (w == 0) continue;
    for (int b = 0; b < level.degeneracy; ++b) {
      const SignedLabel image = act(g, SignedLabel{level.basis[b], 1});
      const int a = level.index_of(image.label);
      if (a < 0) throw std::logic_error("group action left the energy level");
      p(a, b) += image.sign > 0 ? w : Rational(-w);
    }
  }
  return p;
}

IrrepMultiset level_multiplicities(const EnergyLevel& level) {
  std::array<int, kClassCount> class_trace_sum{};
  for (const auto& g : oh_group().elements()) {
    int trace = 0;
    for (const auto& label : level.basis) {
      const SignedLabel image = act(g, SignedLabel{label, 1});
      if (image.label == label) trace += image.sign;
    }
    class_trace_sum[index_of(g.class_id)] += trace;
  }
  IrrepMultiset m;
  for (Irrep j : kAllIrreps) {
    int sum = 0;
    for (ClassId c : kAllClasses) sum += character(j, c) * class_trace_sum[index_of(c)];
    if (sum < 0 || sum % kGroupOrder != 0) {
      throw std::logic_error("non-integral irrep multiplicity on shell " +
                             std::to_string(level.shell));
    }
    m[j] = sum / kGroupOrder;
  }
  if (m.dimension() != level.degeneracy) {
    throw std::logic_error("irrep multiplicities do not add up to the degeneracy");
  }
  return m;
}

namespace {

std::vector<SymFunction> rows_to_functions(const EnergyLevel& level, const RationalMatrix& rows,
                                           std::optional<Irrep> tag) {
  std::vector<SymFunction> out;
  out.reserve(rows.rows());
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    SymFunction f;
    for (Eigen::Index c = 0; c < rows.cols(); ++c) f.add(level.basis[c], rows(r, c));
    f.set_irrep(tag);
    out.push_back(std::move(f));
  }
  return out;
}

RationalMatrix stack_rows(const EnergyLevel& level, const std::vector<SymFunction>& fs) {
  RationalMatrix m(static_cast<Eigen::Index>(fs.size()), level.degeneracy);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = coefficients_on(level, fs[i]).transpose();
  }
  return m;
}

}  // namespace

std::vector<SymFunction> project_level(const EnergyLevel& level, Irrep j) {
  const RationalMatrix p = projector_matrix(j, level);
  // Columns of P are the projected basis functions; echelon their span.
  return rows_to_functions(level, row_echelon<Rational>(p.transpose()), j);
}

LevelDecomposition decompose_level(const EnergyLevel& level) {
  LevelDecomposition d{level, level_multiplicities(level), {}};
  for (Irrep j : kAllIrreps) {
    if (d.multiplicities[j] == 0) continue;
    auto functions = project_level(level, j);
    if (static_cast<int>(functions.size()) != d.multiplicities[j] * irrep_dimension(j)) {
      throw std::logic_error("projector rank disagrees with the character multiplicity");
    }
    d.adapted_basis.emplace(j, std::move(functions));
  }
  return d;
}

bool same_span(const EnergyLevel& level, const std::vector<SymFunction>& a,
               const std::vector<SymFunction>& b) {
  const RationalMatrix ea = row_echelon<Rational>(stack_rows(level, a));
  const RationalMatrix eb = row_echelon<Rational>(stack_rows(level, b));
  return ea.rows() == eb.rows() && ea == eb;
}

Rational overlap(const SymFunction& a, const SymFunction& b) {
  Rational sum = 0;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) sum += ca * cb * normalized_overlap(la, lb);
  }
  return sum;
}

}  // namespace ohbox
