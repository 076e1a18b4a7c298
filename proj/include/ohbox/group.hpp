#pragma once

#include "ohbox/exact.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ohbox {

inline constexpr int kGroupOrder = 48;
inline constexpr int kClassCount = 10;
inline constexpr int kIrrepCount = 10;

/// Conjugacy classes of O_h in character-table column order.
///
/// ASCII names: 3C2h is the C4^2 axis class 3C2(=C4^2), 3sh is 3 sigma_h,
/// 6sd is 6 sigma_d.
enum class ClassId : int { E, C3, C2, C4, C2h, I, S4, S6, Sh, Sd };

/// Irreducible representations of O_h in character-table row order.
enum class Irrep : int { A1g, A2g, Eg, T1g, T2g, A1u, A2u, Eu, T1u, T2u };

inline constexpr std::array<ClassId, kClassCount> kAllClasses = {
    ClassId::E, ClassId::C3, ClassId::C2, ClassId::C4, ClassId::C2h,
    ClassId::I, ClassId::S4, ClassId::S6, ClassId::Sh, ClassId::Sd};

inline constexpr std::array<Irrep, kIrrepCount> kAllIrreps = {
    Irrep::A1g, Irrep::A2g, Irrep::Eg, Irrep::T1g, Irrep::T2g,
    Irrep::A1u, Irrep::A2u, Irrep::Eu, Irrep::T1u, Irrep::T2u};

std::string_view class_name(ClassId c);
int class_size(ClassId c);

std::string_view irrep_name(Irrep j);
std::optional<Irrep> parse_irrep(std::string_view name);
int irrep_dimension(Irrep j);

constexpr int index_of(ClassId c) { return static_cast<int>(c); }
constexpr int index_of(Irrep j) { return static_cast<int>(j); }

using CharacterTable = Eigen::Matrix<int, kIrrepCount, kClassCount>;

/// Integer characters, rows = irreps, columns = classes.
const CharacterTable& character_table();
int character(Irrep j, ClassId c);

/// A symmetry operation x' = M x of the cube.
struct GroupElement {
  Eigen::Matrix3i matrix;
  ClassId class_id;
  int index;  // position in generate_group()
};

/// Throws std::invalid_argument unless m is a signed permutation matrix.
void check_signed_permutation(const Eigen::Matrix3i& m);

/// Classifies by (trace, determinant, order). The two ambiguous pairs,
/// {6C2, 3C2h} and {6sd, 3sh}, are split by whether the matrix is diagonal:
/// the axis operations are diagonal, the edge and diagonal-plane ones are not.
ClassId classify_element(const Eigen::Matrix3i& m);

/// Smallest n with m^n = I. Throws std::logic_error beyond 6.
int element_order(const Eigen::Matrix3i& m);

/// The 48 operations. Index = 6 * sign_pattern + permutation where the sign
/// patterns are (+++), (-++), (+-+), (++-), (--+), (-+-), (+--), (---) and the
/// permutations of the signed coordinates (a,b,c) are, in order,
/// (a,b,c), (c,a,b), (b,c,a), (b,a,c), (c,b,a), (a,c,b).
std::vector<GroupElement> generate_group();

/// Immutable group with its multiplication table.
class OhGroup {
 public:
  OhGroup();

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](int index) const { return elements_[index]; }
  int size() const { return static_cast<int>(elements_.size()); }

  /// index of M_a * M_b
  int product(int a, int b) const { return product_(a, b); }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }

  /// Index of a matrix, or -1 when it is not a group element.
  int find(const Eigen::Matrix3i& m) const;

 private:
  std::vector<GroupElement> elements_;
  Eigen::Matrix<int, kGroupOrder, kGroupOrder> product_;
  std::array<int, kGroupOrder> inverse_{};
  int identity_ = -1;
};

const OhGroup& oh_group();

/// Multiplicities over the ten irreps.
class IrrepMultiset {
 public:
  IrrepMultiset() { counts_.fill(0); }

  int operator[](Irrep j) const { return counts_[index_of(j)]; }
  int& operator[](Irrep j) { return counts_[index_of(j)]; }

  /// sum_j multiplicity(j) * dim(j)
  int dimension() const;
  int total() const;

  /// "T1u + T2u", "2Eg + A1g" style; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const IrrepMultiset&, const IrrepMultiset&) = default;

 private:
  std::array<int, kIrrepCount> counts_;
};

/// Multiplicity of j in a x b via the character inner product.
IrrepMultiset decompose_product(Irrep a, Irrep b);

/// Coefficient of each group element in P^j = (l_j / 48) sum_R chi_j(R) R.
std::array<Rational, kGroupOrder> projector_coefficients(Irrep j);

}  // namespace ohbox
