#include "ohbox/group.hpp"

#include <Eigen/LU>

#include <stdexcept>

namespace ohbox {

namespace {

constexpr std::array<std::string_view, kClassCount> kClassNames = {
    "E", "8C3", "6C2", "6C4", "3C2h", "i", "6S4", "8S6", "3sh", "6sd"};
constexpr std::array<int, kClassCount> kClassSizes = {1, 8, 6, 6, 3, 1, 6, 8, 3, 6};
constexpr std::array<int, kClassCount> kClassOrders = {1, 3, 2, 4, 2, 2, 4, 6, 2, 2};

constexpr std::array<std::string_view, kIrrepCount> kIrrepNames = {
    "A1g", "A2g", "Eg", "T1g", "T2g", "A1u", "A2u", "Eu", "T1u", "T2u"};
constexpr std::array<int, kIrrepCount> kIrrepDims = {1, 1, 2, 3, 3, 1, 1, 2, 3, 3};

constexpr std::array<std::array<int, 3>, 8> kSignPatterns = {{
    {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1},
    {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1}}};

// Source coordinate of each output slot: (a,b,c), (c,a,b), (b,c,a), (b,a,c), (c,b,a), (a,c,b).
constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}}};

CharacterTable make_character_table() {
  CharacterTable t;
  // clang-format off
  //    E  8C3 6C2 6C4 3C2h  i  6S4 8S6 3sh 6sd
  t <<  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,   // A1g
        1,  1, -1, -1,  1,  1, -1,  1,  1, -1,   // A2g
        2, -1,  0,  0,  2,  2,  0, -1,  2,  0,   // Eg
        3,  0, -1,  1, -1,  3,  1,  0, -1, -1,   // T1g
        3,  0,  1, -1, -1,  3, -1,  0, -1,  1,   // T2g
        1,  1,  1,  1,  1, -1, -1, -1, -1, -1,   // A1u
        1,  1, -1, -1,  1, -1,  1, -1, -1,  1,   // A2u
        2, -1,  0,  0,  2, -2,  0,  1, -2,  0,   // Eu
        3,  0, -1,  1, -1, -3, -1,  0,  1,  1,   // T1u
        3,  0,  1, -1, -1, -3,  1,  0,  1, -1;   // T2u
  // clang-format on
  return t;
}

bool is_diagonal(const Eigen::Matrix3i& m) {
  return m(0, 1) == 0 && m(0, 2) == 0 && m(1, 0) == 0 && m(1, 2) == 0 && m(2, 0) == 0 &&
         m(2, 1) == 0;
}

}  // namespace

std::string_view class_name(ClassId c) { return kClassNames[index_of(c)]; }
int class_size(ClassId c) { return kClassSizes[index_of(c)]; }

std::string_view irrep_name(Irrep j) { return kIrrepNames[index_of(j)]; }
int irrep_dimension(Irrep j) { return kIrrepDims[index_of(j)]; }

std::optional<Irrep> parse_irrep(std::string_view name) {
  for (Irrep j : kAllIrreps) {
    if (irrep_name(j) == name) return j;
  }
  return std::nullopt;
}

const CharacterTable& character_table() {
  static const CharacterTable table = make_character_table();
  return table;
}

int character(Irrep j, ClassId c) { return character_table()(index_of(j), index_of(c)); }

void check_signed_permutation(const Eigen::Matrix3i& m) {
  for (int r = 0; r < 3; ++r) {
    int nonzero_row = 0;
    int nonzero_col = 0;
    for (int c = 0; c < 3; ++c) {
      if (m(r, c) < -1 || m(r, c) > 1) {
        throw std::invalid_argument("matrix entries must lie in {-1, 0, 1}");
      }
      nonzero_row += m(r, c) != 0;
      nonzero_col += m(c, r) != 0;
    }
    if (nonzero_row != 1 || nonzero_col != 1) {
      throw std::invalid_argument("matrix is not a signed permutation");
    }
  }
}

int element_order(const Eigen::Matrix3i& m) {
  Eigen::Matrix3i power = m;
  for (int n = 1; n <= 6; ++n) {
    if (power == Eigen::Matrix3i::Identity()) return n;
    power = power * m;
  }
  throw std::logic_error("element order exceeds 6");
}

ClassId classify_element(const Eigen::Matrix3i& m) {
  check_signed_permutation(m);
  const int trace = m.trace();
  const int det = m.determinant();
  const bool diagonal = is_diagonal(m);

  ClassId id{};
  if (det == 1) {
    switch (trace) {
      case 3: id = ClassId::E; break;
      case 0: id = ClassId::C3; break;
      case 1: id = ClassId::C4; break;
      case -1: id = diagonal ? ClassId::C2h : ClassId::C2; break;
      default: throw std::logic_error("unexpected trace for a proper rotation");
    }
  } else {
    switch (trace) {
      case -3: id = ClassId::I; break;
      case -1: id = ClassId::S4; break;
      case 0: id = ClassId::S6; break;
      case 1: id = diagonal ? ClassId::Sh : ClassId::Sd; break;
      default: throw std::logic_error("unexpected trace for an improper rotation");
    }
  }
  if (element_order(m) != kClassOrders[index_of(id)]) {
    throw std::logic_error("element order inconsistent with its class");
  }
  return id;
}

std::vector<GroupElement> generate_group() {
  std::vector<GroupElement> out;
  out.reserve(kGroupOrder);
  for (const auto& signs : kSignPatterns) {
    for (const auto& perm : kPermutations) {
      Eigen::Matrix3i m = Eigen::Matrix3i::Zero();
      for (int row = 0; row < 3; ++row) m(row, perm[row]) = signs[perm[row]];
      const int index = static_cast<int>(out.size());
      out.push_back({m, classify_element(m), index});
    }
  }
  return out;
}

OhGroup::OhGroup() : elements_(generate_group()) {
  for (int a = 0; a < size(); ++a) {
    if (elements_[a].matrix == Eigen::Matrix3i::Identity()) identity_ = a;
    for (int b = 0; b < size(); ++b) {
      const int p = find(elements_[a].matrix * elements_[b].matrix);
      if (p < 0) throw std::logic_error("group is not closed");
      product_(a, b) = p;
    }
  }
  for (int a = 0; a < size(); ++a) {
    inverse_[a] = find(elements_[a].matrix.transpose());
  }
}

int OhGroup::find(const Eigen::Matrix3i& m) const {
  for (const auto& g : elements_) {
    if (g.matrix == m) return g.index;
  }
  return -1;
}

const OhGroup& oh_group() {
  static const OhGroup group;
  return group;
}

int IrrepMultiset::dimension() const {
  int d = 0;
  for (Irrep j : kAllIrreps) d += (*this)[j] * irrep_dimension(j);
  return d;
}

int IrrepMultiset::total() const {
  int n = 0;
  for (int c : counts_) n += c;
  return n;
}

std::string IrrepMultiset::to_string() const {
  std::string out;
  for (Irrep j : kAllIrreps) {
    const int m = (*this)[j];
    if (m == 0) continue;
    if (!out.empty()) out += " + ";
    if (m > 1) out += std::to_string(m);
    out += irrep_name(j);
  }
  return out.empty() ? "0" : out;
}

IrrepMultiset decompose_product(Irrep a, Irrep b) {
  IrrepMultiset result;
  for (Irrep j : kAllIrreps) {
    int sum = 0;
    for (ClassId c : kAllClasses) {
      sum += class_size(c) * character(a, c) * character(b, c) * character(j, c);
    }
    if (sum % kGroupOrder != 0 || sum < 0) {
      throw std::logic_error("non-integral product multiplicity");
    }
    result[j] = sum / kGroupOrder;
  }
  return result;
}

std::array<Rational, kGroupOrder> projector_coefficients(Irrep j) {
  std::array<Rational, kGroupOrder> coeffs;
  for (const auto& g : oh_group().elements()) {
    coeffs[g.index] = Rational(irrep_dimension(j) * character(j, g.class_id), kGroupOrder);
  }
  return coeffs;
}

}  // namespace ohbox
