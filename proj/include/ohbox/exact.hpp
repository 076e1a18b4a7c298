#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace ohbox {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;

/// "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& r);

/// Laurent polynomial in pi^2 with rational coefficients.
///
/// The key k holds the coefficient of pi^(2k). Energies of the free box
/// live at k = 1, the one-dimensional moment integrals at k in {0, -1}, and
/// first-order perturbation corrections at k in {0, -1, -2}. Zero
/// coefficients are never stored, so structural equality is value equality.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(int value) : PiPoly(Rational(value)) {}  // NOLINT: implicit by design of Eigen casts
  PiPoly(const Rational& value, int pi2_power = 0);

  static PiPoly monomial(const Rational& coefficient, int pi2_power) {
    return PiPoly(coefficient, pi2_power);
  }

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int pi2_power) const;
  bool is_zero() const { return terms_.empty(); }

  /// The single power of pi^2 carried by a nonzero monomial; nullopt otherwise.
  std::optional<int> homogeneous_power() const;

  double to_double() const;

  /// Human-readable closed form, e.g. "(36*pi^4-304*pi^2+285)/(108*pi^4)".
  std::string to_string() const;

  PiPoly& operator+=(const PiPoly& other);
  PiPoly& operator-=(const PiPoly& other);
  PiPoly& operator*=(const PiPoly& other);
  PiPoly& operator*=(const Rational& scale);
  PiPoly& operator/=(const Rational& scale);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator*(PiPoly a, const Rational& s) { return a *= s; }
  friend PiPoly operator*(const Rational& s, PiPoly a) { return a *= s; }
  friend PiPoly operator/(PiPoly a, const Rational& s) { return a /= s; }
  friend PiPoly operator-(PiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const PiPoly& p);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const PiPoly& p) { return p.to_double(); }
inline double to_double(double d) { return d; }

/// Maps an exact rational into another scalar field.
template <class Scalar>
Scalar from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
inline PiPoly from_rational<PiPoly>(const Rational& r) { return PiPoly(r); }
template <>
inline double from_rational<double>(const Rational& r) { return to_double(r); }

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const PiPoly& p) { return p.is_zero(); }

/// Reduced row echelon form with zero rows dropped. Every pivot is one and
/// every other entry of a pivot column is zero, so two matrices have the same
/// row space iff their echelon forms are identical. Exact scalars only.
template <class Scalar>
DenseMatrix<Scalar> row_echelon(DenseMatrix<Scalar> m) {
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    m.row(pivot_row).swap(m.row(found));
    const Scalar pivot = m(pivot_row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(pivot_row, c) /= pivot;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    ++pivot_row;
  }
  return m.topRows(pivot_row);
}

template <class Scalar>
Eigen::Index exact_rank(const DenseMatrix<Scalar>& m) {
  return row_echelon<Scalar>(m).rows();
}

}  // namespace ohbox

namespace Eigen {

// Container-level traits so PiPoly can live in dense matrices and take part in
// exact products; none of the floating-point facilities are meaningful here.
template <>
struct NumTraits<ohbox::PiPoly> : GenericNumTraits<ohbox::PiPoly> {
  using Real = ohbox::PiPoly;
  using NonInteger = ohbox::PiPoly;
  using Literal = ohbox::PiPoly;
  using Nested = ohbox::PiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  // Exact values print as strings; no decimal precision applies.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
