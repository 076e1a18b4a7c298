#include "ohbox/group.hpp"

#include <Eigen/LU>

#include <doctest.h>

#include <map>
#include <set>

using namespace ohbox;

namespace {

Eigen::Matrix3i mat(std::initializer_list<int> entries) {
  Eigen::Matrix3i m;
  auto it = entries.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = *it++;
  return m;
}

// The 48 matrices written out by hand, class by class.
std::map<ClassId, std::vector<Eigen::Matrix3i>> hand_listing() {
  std::map<ClassId, std::vector<Eigen::Matrix3i>> out;
  out[ClassId::E] = {mat({1, 0, 0, 0, 1, 0, 0, 0, 1})};
  out[ClassId::I] = {mat({-1, 0, 0, 0, -1, 0, 0, 0, -1})};
  out[ClassId::C3] = {
      mat({0, 1, 0, 0, 0, 1, 1, 0, 0}),    mat({0, 0, 1, 1, 0, 0, 0, 1, 0}),
      mat({0, -1, 0, 0, 0, -1, 1, 0, 0}),  mat({0, 0, -1, -1, 0, 0, 0, 1, 0}),
      mat({0, 1, 0, 0, 0, -1, -1, 0, 0}),  mat({0, 0, 1, -1, 0, 0, 0, -1, 0}),
      mat({0, -1, 0, 0, 0, 1, -1, 0, 0}),  mat({0, 0, -1, 1, 0, 0, 0, -1, 0})};
  out[ClassId::C2] = {
      mat({-1, 0, 0, 0, 0, 1, 0, 1, 0}),   mat({0, 0, 1, 0, -1, 0, 1, 0, 0}),
      mat({0, 1, 0, 1, 0, 0, 0, 0, -1}),   mat({-1, 0, 0, 0, 0, -1, 0, -1, 0}),
      mat({0, 0, -1, 0, -1, 0, -1, 0, 0}), mat({0, -1, 0, -1, 0, 0, 0, 0, -1})};
  out[ClassId::C4] = {
      mat({0, -1, 0, 1, 0, 0, 0, 0, 1}),   mat({0, 0, -1, 0, 1, 0, 1, 0, 0}),
      mat({0, 1, 0, -1, 0, 0, 0, 0, 1}),   mat({1, 0, 0, 0, 0, -1, 0, 1, 0}),
      mat({0, 0, 1, 0, 1, 0, -1, 0, 0}),   mat({1, 0, 0, 0, 0, 1, 0, -1, 0})};
  out[ClassId::C2h] = {mat({-1, 0, 0, 0, -1, 0, 0, 0, 1}), mat({1, 0, 0, 0, -1, 0, 0, 0, -1}),
                       mat({-1, 0, 0, 0, 1, 0, 0, 0, -1})};
  out[ClassId::S4] = {
      mat({-1, 0, 0, 0, 0, -1, 0, 1, 0}),  mat({0, 0, -1, 0, -1, 0, 1, 0, 0}),
      mat({0, 0, 1, 0, -1, 0, -1, 0, 0}),  mat({0, 1, 0, -1, 0, 0, 0, 0, -1}),
      mat({-1, 0, 0, 0, 0, 1, 0, -1, 0}),  mat({0, -1, 0, 1, 0, 0, 0, 0, -1})};
  out[ClassId::S6] = {
      mat({0, -1, 0, 0, 0, 1, 1, 0, 0}),   mat({0, 0, -1, 1, 0, 0, 0, 1, 0}),
      mat({0, 1, 0, 0, 0, -1, 1, 0, 0}),   mat({0, 0, 1, -1, 0, 0, 0, 1, 0}),
      mat({0, 1, 0, 0, 0, 1, -1, 0, 0}),   mat({0, 0, 1, 1, 0, 0, 0, -1, 0}),
      mat({0, -1, 0, 0, 0, -1, -1, 0, 0}), mat({0, 0, -1, -1, 0, 0, 0, -1, 0})};
  out[ClassId::Sh] = {mat({-1, 0, 0, 0, 1, 0, 0, 0, 1}), mat({1, 0, 0, 0, -1, 0, 0, 0, 1}),
                      mat({1, 0, 0, 0, 1, 0, 0, 0, -1})};
  out[ClassId::Sd] = {
      mat({1, 0, 0, 0, 0, 1, 0, 1, 0}),    mat({0, 0, 1, 0, 1, 0, 1, 0, 0}),
      mat({0, 1, 0, 1, 0, 0, 0, 0, 1}),    mat({0, -1, 0, -1, 0, 0, 0, 0, 1}),
      mat({1, 0, 0, 0, 0, -1, 0, -1, 0}),  mat({0, 0, -1, 0, 1, 0, -1, 0, 0})};
  return out;
}

}  // namespace

TEST_CASE("generate_group yields the 48 distinct signed permutations") {
  const auto elements = generate_group();
  REQUIRE(elements.size() == 48);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& g = elements[i];
    CHECK(g.index == static_cast<int>(i));
    CHECK_NOTHROW(check_signed_permutation(g.matrix));
    CHECK(g.matrix.transpose() * g.matrix == Eigen::Matrix3i::Identity());
    CHECK(std::abs(g.matrix.determinant()) == 1);
    seen.insert(std::vector<int>(g.matrix.data(), g.matrix.data() + 9));
  }
  CHECK(seen.size() == 48);
  CHECK(elements.front().matrix == Eigen::Matrix3i::Identity());
  // (-x,-y,-z) with the identity permutation is the first element of the last sign block.
  CHECK(elements[42].matrix == -Eigen::Matrix3i::Identity());
}

TEST_CASE("group axioms hold by brute force") {
  const auto& G = oh_group();
  int identity_count = 0;
  for (int a = 0; a < 48; ++a) {
    if (G[a].matrix == Eigen::Matrix3i::Identity()) ++identity_count;
    CHECK(G.product(a, G.inverse(a)) == G.identity());
    CHECK(G.product(G.inverse(a), a) == G.identity());
    for (int b = 0; b < 48; ++b) {
      const Eigen::Matrix3i p = G[a].matrix * G[b].matrix;
      REQUIRE(G.find(p) >= 0);
      CHECK(G[G.product(a, b)].matrix == p);
      for (int c = 0; c < 48; c += 7) {
        CHECK(G.product(G.product(a, b), c) == G.product(a, G.product(b, c)));
      }
    }
  }
  CHECK(identity_count == 1);
}

TEST_CASE("classification matches the hand listing") {
  const auto listing = hand_listing();
  int total = 0;
  for (const auto& [cls, matrices] : listing) {
    CHECK(static_cast<int>(matrices.size()) == class_size(cls));
    for (const auto& m : matrices) {
      CHECK(classify_element(m) == cls);
      const int idx = oh_group().find(m);
      REQUIRE(idx >= 0);
      CHECK(oh_group()[idx].class_id == cls);
    }
    total += static_cast<int>(matrices.size());
  }
  CHECK(total == 48);
}

TEST_CASE("classify_element named examples") {
  CHECK(classify_element(-Eigen::Matrix3i::Identity()) == ClassId::I);
  CHECK(classify_element(Eigen::Matrix3i::Identity()) == ClassId::E);
  CHECK(classify_element(mat({-1, 0, 0, 0, -1, 0, 0, 0, 1})) == ClassId::C2h);
  CHECK(classify_element(mat({-1, 0, 0, 0, 0, 1, 0, 1, 0})) == ClassId::C2);
}

TEST_CASE("classify_element rejects non-members") {
  CHECK_THROWS_AS(classify_element(mat({1, 1, 0, 0, 1, 0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify_element(mat({2, 0, 0, 0, 1, 0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify_element(mat({1, 0, 0, 1, 0, 0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify_element(Eigen::Matrix3i::Zero()), std::invalid_argument);
}

TEST_CASE("classes are exactly the conjugacy classes") {
  const auto& G = oh_group();
  // Brute-force orbits under conjugation.
  std::set<std::set<int>> orbits;
  for (int g = 0; g < 48; ++g) {
    std::set<int> orbit;
    for (int h = 0; h < 48; ++h) orbit.insert(G.product(G.product(h, g), G.inverse(h)));
    orbits.insert(orbit);
    for (int member : orbit) CHECK(G[member].class_id == G[g].class_id);
  }
  CHECK(orbits.size() == 10);
  std::map<ClassId, int> sizes;
  for (const auto& g : G.elements()) ++sizes[g.class_id];
  const std::array<int, 10> expected = {1, 8, 6, 6, 3, 1, 6, 8, 3, 6};
  int sum = 0;
  for (ClassId c : kAllClasses) {
    CHECK(sizes[c] == expected[index_of(c)]);
    CHECK(class_size(c) == expected[index_of(c)]);
    sum += class_size(c);
  }
  CHECK(sum == 48);
}

TEST_CASE("character table values and orthogonality") {
  CHECK(character(Irrep::Eg, ClassId::C3) == -1);
  for (ClassId c : kAllClasses) CHECK(character(Irrep::A1g, c) == 1);

  int dim_sq = 0;
  for (Irrep a : kAllIrreps) {
    CHECK(character(a, ClassId::E) == irrep_dimension(a));
    dim_sq += irrep_dimension(a) * irrep_dimension(a);
    for (Irrep b : kAllIrreps) {
      int sum = 0;
      for (ClassId c : kAllClasses) sum += class_size(c) * character(a, c) * character(b, c);
      CHECK(sum == (a == b ? 48 : 0));
    }
  }
  CHECK(dim_sq == 48);

  // Column orthogonality: sum_j chi_j(c) chi_j(c') = delta * 48 / |c|.
  for (ClassId c : kAllClasses) {
    for (ClassId d : kAllClasses) {
      int sum = 0;
      for (Irrep j : kAllIrreps) sum += character(j, c) * character(j, d);
      CHECK(sum == (c == d ? 48 / class_size(c) : 0));
    }
  }
}

TEST_CASE("T1u characters are the matrix traces and 1D characters are homomorphisms") {
  const auto& G = oh_group();
  for (const auto& g : G.elements()) CHECK(character(Irrep::T1u, g.class_id) == g.matrix.trace());
  for (Irrep j : {Irrep::A1g, Irrep::A2g, Irrep::A1u, Irrep::A2u}) {
    for (int a = 0; a < 48; ++a) {
      for (int b = 0; b < 48; ++b) {
        CHECK(character(j, G[G.product(a, b)].class_id) ==
              character(j, G[a].class_id) * character(j, G[b].class_id));
      }
    }
  }
}

TEST_CASE("T1u x T2u inner product vanishes") {
  int sum = 0;
  for (ClassId c : kAllClasses) sum += class_size(c) * character(Irrep::T1u, c) * character(Irrep::T2u, c);
  CHECK(sum == 0);
}

TEST_CASE("decompose_product reproduces the Eg product table") {
  auto ms = [](std::initializer_list<std::pair<Irrep, int>> items) {
    IrrepMultiset m;
    for (auto [j, k] : items) m[j] = k;
    return m;
  };
  CHECK(decompose_product(Irrep::Eg, Irrep::A1g) == ms({{Irrep::Eg, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::A2g) == ms({{Irrep::Eg, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::Eg) ==
        ms({{Irrep::A1g, 1}, {Irrep::A2g, 1}, {Irrep::Eg, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::T1g) == ms({{Irrep::T1g, 1}, {Irrep::T2g, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::T2g) == ms({{Irrep::T1g, 1}, {Irrep::T2g, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::A1u) == ms({{Irrep::Eu, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::A2u) == ms({{Irrep::Eu, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::Eu) ==
        ms({{Irrep::A1u, 1}, {Irrep::A2u, 1}, {Irrep::Eu, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::T1u) == ms({{Irrep::T1u, 1}, {Irrep::T2u, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::T2u) == ms({{Irrep::T1u, 1}, {Irrep::T2u, 1}}));
  CHECK(decompose_product(Irrep::Eg, Irrep::T1u).to_string() == "T1u + T2u");

  for (Irrep a : kAllIrreps) {
    IrrepMultiset identity;
    identity[a] = 1;
    CHECK(decompose_product(Irrep::A1g, a) == identity);
    for (Irrep b : kAllIrreps) {
      const auto p = decompose_product(a, b);
      CHECK(p.dimension() == irrep_dimension(a) * irrep_dimension(b));
      CHECK(p == decompose_product(b, a));
    }
  }
}

TEST_CASE("projector coefficients") {
  for (const auto& c : projector_coefficients(Irrep::A1g)) CHECK(c == Rational(1, 48));
  const auto eg = projector_coefficients(Irrep::Eg);
  CHECK(eg[oh_group().identity()] == Rational(1, 12));
}

TEST_CASE("projectors are complete orthogonal idempotents in the regular representation") {
  const auto& G = oh_group();
  // L_g e_h = e_{gh}
  std::array<RationalMatrix, 10> p;
  for (Irrep j : kAllIrreps) {
    const auto coeffs = projector_coefficients(j);
    RationalMatrix m = RationalMatrix::Zero(48, 48);
    for (int g = 0; g < 48; ++g) {
      for (int h = 0; h < 48; ++h) m(G.product(g, h), h) += coeffs[g];
    }
    p[index_of(j)] = m;
  }
  RationalMatrix sum = RationalMatrix::Zero(48, 48);
  for (Irrep j : kAllIrreps) {
    const RationalMatrix& pj = p[index_of(j)];
    CHECK(pj * pj == pj);
    CHECK(exact_rank<Rational>(pj) == irrep_dimension(j) * irrep_dimension(j));
    sum += pj;
    for (Irrep k : kAllIrreps) {
      if (index_of(k) > index_of(j)) CHECK(pj * p[index_of(k)] == RationalMatrix::Zero(48, 48));
    }
  }
  CHECK(sum == RationalMatrix::Identity(48, 48));
}

TEST_CASE("irrep names round-trip") {
  for (Irrep j : kAllIrreps) CHECK(parse_irrep(irrep_name(j)) == j);
  CHECK_FALSE(parse_irrep("B1g").has_value());
}
