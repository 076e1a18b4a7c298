#include "ohbox/perturb.hpp"

#include "ohbox/dynamical.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ohbox {

PiPoly integral_I2(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sine labels must be positive");
  if (n == m) return PiPoly(Rational(1, 3)) + PiPoly(Rational(-2, n * n), -1);
  if ((n + m) % 2 != 0) return PiPoly();
  const long diff = static_cast<long>(n) * n - static_cast<long>(m) * m;
  return PiPoly(Rational(32L * n * m) / Rational(diff * diff), -1);
}

double integral_I2_value(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sine labels must be positive");
  const double pi2 = boost::math::constants::pi_sqr<double>();
  if (n == m) return 1.0 / 3.0 - 2.0 / (double(n) * n * pi2);
  if ((n + m) % 2 != 0) return 0.0;
  const double diff = double(n) * n - double(m) * m;
  return 32.0 * n * m / (diff * diff * pi2);
}

namespace {

PiPoly cross_element(const BasisLabel& a, const BasisLabel& b) {
  // x^2 y^2, x^2 z^2, y^2 z^2: the spectator coordinate must match.
  constexpr std::array<std::array<int, 3>, 3> kTerms = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  PiPoly sum;
  for (const auto& [i, j, k] : kTerms) {
    if (a.n[k] != b.n[k]) continue;
    sum += integral_I2(a.n[i], b.n[i]) * integral_I2(a.n[j], b.n[j]);
  }
  return sum;
}

PiPoly harmonic_element(const BasisLabel& a, const BasisLabel& b) {
  PiPoly sum;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (a.n[j] == b.n[j] && a.n[k] == b.n[k]) sum += integral_I2(a.n[i], b.n[i]);
  }
  return sum;
}

// Exact matrix-vector product on PiPoly entries.
DenseVector<PiPoly> multiply(const PiPolyMatrix& m, const DenseVector<PiPoly>& v) {
  DenseVector<PiPoly> out = DenseVector<PiPoly>::Constant(m.rows(), PiPoly());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v(c).is_zero()) out(r) += m(r, c) * v(c);
    }
  }
  return out;
}

PerturbationBlock exact_block(const PiPolyMatrix& v, const EnergyLevel& level, Irrep j,
                              const SymFunction& f) {
  const DenseVector<Rational> coeffs = coefficients_on(level, f);
  DenseVector<PiPoly> vec(coeffs.size());
  Rational norm = 0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    vec(i) = PiPoly(coeffs(i));
    norm += coeffs(i) * coeffs(i);
  }
  const DenseVector<PiPoly> image = multiply(v, vec);
  PiPoly rayleigh;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) rayleigh += image(i) * coeffs(i);
  rayleigh /= norm;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (!(image(i) == rayleigh * coeffs(i))) {
      throw std::logic_error("adapted function is not an eigenvector of V");
    }
  }
  return {j, irrep_dimension(j), rayleigh, rayleigh.to_double()};
}

std::vector<PerturbationBlock> numeric_blocks(const Eigen::MatrixXd& v, const EnergyLevel& level,
                                              Irrep j, const std::vector<SymFunction>& fs) {
  const int l = irrep_dimension(j);
  Eigen::MatrixXd basis(level.degeneracy, static_cast<Eigen::Index>(fs.size()));
  for (std::size_t c = 0; c < fs.size(); ++c) {
    const auto coeffs = coefficients_on(level, fs[c]);
    for (Eigen::Index r = 0; r < coeffs.size(); ++r) {
      basis(r, static_cast<Eigen::Index>(c)) = to_double(coeffs(r));
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
  const Eigen::MatrixXd restricted = q.transpose() * v * q;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted,
                                                              Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();

  std::vector<PerturbationBlock> blocks;
  for (Eigen::Index start = 0; start < ev.size(); start += l) {
    const double lo = ev(start);
    const double hi = ev(start + l - 1);
    if (hi - lo > 1e-9 * std::max(1.0, std::abs(hi))) {
      throw std::logic_error("eigenvalue multiplicity inconsistent with irrep dimension");
    }
    blocks.push_back({j, l, std::nullopt, ev.segment(start, l).mean()});
  }
  return blocks;
}

}  // namespace

PiPolyMatrix v_matrix(const EnergyLevel& level, Potential potential) {
  const auto d = level.degeneracy;
  PiPolyMatrix v(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      v(a, b) = potential == Potential::Cross ? cross_element(level.basis[a], level.basis[b])
                                              : harmonic_element(level.basis[a], level.basis[b]);
    }
  }
  return v;
}

Eigen::MatrixXd to_double(const PiPolyMatrix& m) {
  return m.unaryExpr([](const PiPoly& p) { return p.to_double(); });
}

double PerturbationReport::energy(const PerturbationBlock& block) const {
  return ohbox::to_double(zeroth_pi2) * boost::math::constants::pi_sqr<double>() +
         lambda * block.value;
}

PerturbationReport first_order_split(const EnergyLevel& level, Potential potential,
                                     double lambda) {
  const LevelDecomposition d = decompose_level(level);
  const PiPolyMatrix v = v_matrix(level, potential);

  PerturbationReport report{level, potential, level.energy_pi2, {}, lambda};
  std::optional<Eigen::MatrixXd> v_double;
  for (const auto& [j, functions] : d.adapted_basis) {
    if (d.multiplicities[j] == 1) {
      report.blocks.push_back(exact_block(v, level, j, functions.front()));
    } else {
      if (!v_double) v_double = to_double(v);
      for (auto& b : numeric_blocks(*v_double, level, j, functions)) report.blocks.push_back(b);
    }
  }
  std::stable_sort(report.blocks.begin(), report.blocks.end(),
                   [](const PerturbationBlock& a, const PerturbationBlock& b) {
                     if (a.value != b.value) return a.value < b.value;
                     return index_of(a.irrep) < index_of(b.irrep);
                   });
  return report;
}

Eigen::VectorXd dense_first_order(const EnergyLevel& level, Potential potential) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_double(v_matrix(level, potential)),
                                                              Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RitzSolution ritz_solve(int basis_size, double lambda) {
  if (basis_size < 8) throw std::invalid_argument("Ritz basis size must be at least 8");
  const double pi2 = boost::math::constants::pi_sqr<double>();
  Eigen::MatrixXd h(basis_size, basis_size);
  for (int n = 1; n <= basis_size; ++n) {
    for (int m = 1; m <= basis_size; ++m) {
      h(n - 1, m - 1) = lambda * integral_I2_value(n, m) + (n == m ? n * n * pi2 / 4.0 : 0.0);
    }
  }
  // I2 couples only labels of equal parity, so the two parity blocks are
  // solved separately and the eigenvectors carry exact zeros elsewhere.
  std::vector<std::pair<double, Eigen::VectorXd>> pairs;
  for (int parity = 1; parity >= 0; --parity) {
    std::vector<int> idx;
    for (int n = 1; n <= basis_size; ++n)
      if (n % 2 == parity) idx.push_back(n - 1);
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) block(i, j) = h(idx[i], idx[j]);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Ritz eigensolve failed");
    for (Eigen::Index c = 0; c < k; ++c) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(basis_size);
      for (Eigen::Index i = 0; i < k; ++i) v(idx[i]) = solver.eigenvectors()(i, c);
      pairs.emplace_back(solver.eigenvalues()(c), std::move(v));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  RitzSolution out{basis_size, lambda, Eigen::VectorXd(basis_size), Eigen::MatrixXd(basis_size, basis_size)};
  for (int c = 0; c < basis_size; ++c) {
    out.eigenvalues(c) = pairs[c].first;
    out.eigenvectors.col(c) = pairs[c].second;
  }
  // Fix the sign of each eigenvector: largest component positive.
  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
    Eigen::Index imax = 0;
    out.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
    if (out.eigenvectors(imax, c) < 0) out.eigenvectors.col(c) *= -1.0;
  }
  return out;
}

Eigen::VectorXd ritz_convergence(int basis_size, int count, int step, double lambda) {
  const RitzSolution small = ritz_solve(basis_size, lambda);
  const RitzSolution large = ritz_solve(basis_size + step, lambda);
  count = std::min(count, basis_size);
  return (small.eigenvalues.head(count) - large.eigenvalues.head(count)).cwiseAbs();
}

HarmonicLevelReport harmonic_level_report(std::array<int, 3> triple, const RitzSolution& ritz) {
  const PermClass pc = make_perm_class(triple);
  if (pc.representative[2] > ritz.basis_size) {
    throw std::invalid_argument("quantum number exceeds the Ritz basis");
  }
  HarmonicLevelReport report;
  report.triple = pc.representative;
  report.basis_size = ritz.basis_size;
  report.lambda = ritz.lambda;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& label : pc.members) {
    const double e = ritz.epsilon(label.n[0]) + ritz.epsilon(label.n[1]) + ritz.epsilon(label.n[2]);
    report.energies.emplace_back(label, e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  report.spread = hi - lo;
  report.decomposition = level_multiplicities(level_of_class(triple));

  const std::function<double(int)> eps = [&ritz](int n) { return ritz.epsilon(n); };
  const auto ops = build_commuting_combos<double>(
      {eps, eps, eps}, {CommutingCombo{{2, -1, -1}}, CommutingCombo{{1, 1, 1}}});
  const auto size = static_cast<Eigen::Index>(pc.members.size());
  Eigen::MatrixXd dmat = Eigen::MatrixXd::Zero(size, size);
  Eigen::MatrixXd hmat = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    dmat(i, i) = ops[0](pc.members[i]);
    hmat(i, i) = ops[1](pc.members[i]);
  }
  report.commutator_norm = (dmat * hmat - hmat * dmat).cwiseAbs().maxCoeff();
  return report;
}

HarmonicLevelReport harmonic_level_report(std::array<int, 3> triple, int basis_size,
                                          double lambda) {
  return harmonic_level_report(triple, ritz_solve(basis_size, lambda));
}

}  // namespace ohbox
