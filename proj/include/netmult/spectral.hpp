#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "netmult/admissible.hpp"
#include "netmult/error.hpp"
#include "netmult/multipliers.hpp"
#include "netmult/network.hpp"
#include "netmult/random.hpp"

namespace netmult {

/// m_l per multiplier, aligned with MultiplierSet order.
using MultiplicityVector = std::vector<long long>;

/// Self-loop counts keyed by monoid element order.
inline Vector element_traces(const Network& net, const Monoid& m) {
  Vector t(static_cast<Eigen::Index>(m.size()));
  for (std::size_t s = 0; s < m.size(); ++s)
    t(static_cast<Eigen::Index>(s)) = static_cast<double>(net.map(m.names[s]).fixed_points());
  return t;
}

/// Solves trace_functional(net) = Σ_l m_l χ_l for integer m_l ≥ 0.
inline MultiplicityVector multiplicities(const Network& net, const MultiplierSet& ms) {
  if (!is_constructible(net, ms.monoid))
    fail(ErrorCode::NotConstructible, "network does not satisfy the relations of the multipliers' monoid");
  const Vector t = element_traces(net, ms.monoid);
  const Matrix chi = characters(ms).transpose();
  const Vector sol = chi.completeOrthogonalDecomposition().solve(t);

  const double residual = (chi * sol - t).norm();
  if (residual > 1e-6 * std::max(1.0, t.norm()))
    fail(ErrorCode::InconsistentTrace, "trace vector is not a combination of the characters (residual " +
                                           std::to_string(residual) + ")");
  MultiplicityVector out;
  out.reserve(static_cast<std::size_t>(sol.size()));
  long long weighted = 0;
  for (Eigen::Index l = 0; l < sol.size(); ++l) {
    const double rounded = std::round(sol(l).real());
    if (std::abs(sol(l) - Complex(rounded)) > 1e-6)
      fail(ErrorCode::InconsistentTrace, "multiplicity " + std::to_string(l + 1) + " is not an integer");
    if (rounded < 0) fail(ErrorCode::InconsistentTrace, "negative multiplicity");
    out.push_back(static_cast<long long>(rounded));
    weighted += out.back() * static_cast<long long>(ms.blocks[static_cast<std::size_t>(l)].size);
  }
  if (weighted != static_cast<long long>(net.node_count))
    fail(ErrorCode::InconsistentTrace, "Σ m_l n_l = " + std::to_string(weighted) + " differs from the node count " +
                                           std::to_string(net.node_count));
  return out;
}

inline void require_finite(const Matrix& m) {
  if (!m.allFinite()) fail(ErrorCode::NonFinite, "matrix has non-finite entries");
}

/// Working precision of the dense oracle. A Jordan block of size k moves
/// eigenvalues by about ε^(1/k), so both the assembly of γ and its Schur form
/// run in 50-digit arithmetic.
using OracleReal = boost::multiprecision::cpp_bin_float_50;
using OracleComplex = std::complex<OracleReal>;
using OracleMatrix = Eigen::Matrix<OracleComplex, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

inline OracleComplex widen(Complex z) { return {OracleReal(z.real()), OracleReal(z.imag())}; }

inline std::vector<Complex> eigenvalues(const OracleMatrix& m) {
  Eigen::ComplexEigenSolver<OracleMatrix> es(m, false);
  if (es.info() != Eigen::Success) fail(ErrorCode::NonFinite, "eigenvalue iteration did not converge");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto& v = es.eigenvalues()(i);
    out.emplace_back(v.real().convert_to<double>(), v.imag().convert_to<double>());
  }
  return out;
}

}  // namespace detail

/// Every eigenvalue of m with algebraic multiplicity.
inline std::vector<Complex> dense_spectrum(const Matrix& m) {
  require_finite(m);
  if (m.rows() != m.cols()) fail(ErrorCode::SizeMismatch, "matrix is not square");
  OracleMatrix ext(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) ext(i, j) = detail::widen(m(i, j));
  return detail::eigenvalues(ext);
}

/// Oracle spectrum of γ_f(c): the blocks are summed without rounding to double.
inline std::vector<Complex> admissible_spectrum(const Network& net, const Coefficients& c) {
  detail::require_labels(net, c);
  for (const auto& [label, b] : c.blocks) require_finite(b);
  const Eigen::Index m = c.block_dim;
  const auto n = static_cast<Eigen::Index>(net.node_count);
  OracleMatrix g = OracleMatrix::Constant(n * m, n * m, OracleComplex(0));
  for (const auto& a : net.arrows) {
    const Matrix& block = c.at(a.label);
    for (std::size_t p = 0; p < net.node_count; ++p) {
      const auto row = static_cast<Eigen::Index>(p) * m;
      const auto col = static_cast<Eigen::Index>(a.map(p)) * m;
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) g(row + i, col + j) += detail::widen(block(i, j));
    }
  }
  return detail::eigenvalues(g);
}

inline std::vector<Complex> predicted_spectrum(const Network& net, const MultiplierSet& ms, const Coefficients& c,
                                               const MultiplicityVector* known = nullptr) {
  const MultiplicityVector mult = known ? *known : multiplicities(net, ms);
  std::vector<Complex> out;
  for (std::size_t l = 0; l < ms.count(); ++l) {
    if (mult[l] == 0) continue;
    const auto eig = dense_spectrum(evaluate(ms, l, c));
    for (long long r = 0; r < mult[l]; ++r) out.insert(out.end(), eig.begin(), eig.end());
  }
  return out;
}

struct MatchResult {
  bool pass = false;
  double max_distance = 0.0;
};

/// Greedy nearest-neighbour matching after sorting by (re, im); passes iff the
/// multisets have equal size and every pair is within tol · (1 + max modulus).
inline MatchResult match_spectra(std::vector<Complex> a, const std::vector<Complex>& b, double tol) {
  MatchResult r;
  std::vector<Complex> other = b;
  if (a.size() > other.size()) std::swap(a, other);
  std::sort(a.begin(), a.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  double modulus = 0.0;
  for (auto v : a) modulus = std::max(modulus, std::abs(v));
  for (auto v : other) modulus = std::max(modulus, std::abs(v));
  std::vector<bool> used(other.size(), false);
  for (auto v : a) {
    std::size_t best = other.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(v - other[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    r.max_distance = std::max(r.max_distance, best_d);
  }
  r.pass = a.size() == other.size() && r.max_distance <= tol * (1.0 + modulus);
  return r;
}

/// Closed-form multipliers of the n-cycle: a^{k, s_j} = ω^{jk}, ω = e^{2πi/n}.
inline MultiplierSet circulant_multipliers(std::size_t n) {
  const Network ring = circulant_network(n);
  std::vector<InputMap> maps;
  std::vector<std::string> names;
  for (const auto& a : ring.arrows) {
    maps.push_back(a.map);
    names.push_back(a.label);
  }
  MultiplierSet ms;
  ms.monoid = monoid_closure(maps, n + 1, names);
  for (std::size_t k = 0; k < n; ++k) {
    SimpleBlock b;
    b.size = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex w = detail::snap(std::polar(
          1.0, 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n)));
      b.images.push_back(Matrix::Constant(1, 1, w));
      b.character.push_back(w);
    }
    ms.blocks.push_back(std::move(b));
  }
  return ms;
}

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;

  friend bool operator==(const Check&, const Check&) = default;
};

struct SpectralReport {
  std::string label;
  std::size_t trial = 0;
  Eigen::Index block_dim = 1;
  std::vector<Complex> predicted;
  std::vector<Complex> oracle;
  double max_match_distance = 0.0;
  MultiplicityVector multiplicities;
  bool pass = false;
  std::vector<Check> checks;

  friend bool operator==(const SpectralReport&, const SpectralReport&) = default;
};

struct VerificationOptions {
  std::size_t trials = 50;
  std::vector<Eigen::Index> block_dims{1, 2};
  std::uint64_t seed = 0;
  double tol = 1e-6;
  double multiplicativity_tol = 1e-9;
  double composition_tol = 1e-12;
  std::size_t max_partition_nodes = 12;
};

struct Verification {
  MultiplicityVector multiplicities;
  std::vector<SpectralReport> reports;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Largest relative error of Λ^l(c ∘_Σ d) against Λ^l(c) Λ^l(d) over all l.
inline double multiplicativity_error(const MultiplierSet& ms, const Coefficients& c, const Coefficients& d) {
  const Coefficients cd = sigma_product(c, d, ms.monoid);
  double worst = 0.0;
  for (std::size_t l = 0; l < ms.count(); ++l) {
    const Matrix lhs = evaluate(ms, l, cd);
    const Matrix rhs = evaluate(ms, l, c) * evaluate(ms, l, d);
    worst = std::max(worst, (lhs - rhs).norm() / std::max({1.0, lhs.norm(), rhs.norm()}));
  }
  return worst;
}

/// Relative error of γ_c γ_d against γ_{c ∘_Σ d}.
inline double composition_error(const Network& net, const Monoid& m, const Coefficients& c, const Coefficients& d) {
  const Matrix lhs = build_admissible(net, c).matrix * build_admissible(net, d).matrix;
  const Matrix rhs = build_admissible(net, sigma_product(c, d, m)).matrix;
  return (lhs - rhs).norm() / std::max({1.0, lhs.norm(), rhs.norm()});
}

/// m^P_l ≤ m^N_l for every balanced partition P of net; returns false on the first violation.
inline bool quotient_monotone(const Network& net, const MultiplierSet& ms, const MultiplicityVector& parent,
                              std::size_t max_nodes, std::size_t* checked = nullptr) {
  std::size_t count = 0;
  for (const auto& part : enumerate_balanced_partitions(net, max_nodes)) {
    const auto q = quotient(net, part).first;
    const auto mq = multiplicities(q, ms);
    ++count;
    for (std::size_t l = 0; l < mq.size(); ++l)
      if (mq[l] > parent[l]) {
        if (checked) *checked = count;
        return false;
      }
  }
  if (checked) *checked = count;
  return true;
}

/// Oracle campaign on a constructible network: predicted spectra against a
/// dense eigensolver for random complex Gaussian coefficients, plus the
/// multiplicativity and composition identities.
inline Verification verify_network(const Network& net, const MultiplierSet& ms, const VerificationOptions& opt = {}) {
  Verification v;
  v.multiplicities = multiplicities(net, ms);
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    for (Eigen::Index m : opt.block_dims) {
      Rng rng(derive_seed(opt.seed, {trial, static_cast<std::uint64_t>(m)}));
      const Coefficients c = Coefficients::random(ms.monoid.names, m, rng);
      const Coefficients d = Coefficients::random(ms.monoid.names, m, rng);

      SpectralReport r;
      r.label = "trial " + std::to_string(trial) + ", m = " + std::to_string(m);
      r.trial = trial;
      r.block_dim = m;
      r.multiplicities = v.multiplicities;
      r.predicted = predicted_spectrum(net, ms, c, &v.multiplicities);
      r.oracle = admissible_spectrum(net, c);
      const MatchResult match = match_spectra(r.predicted, r.oracle, opt.tol);
      r.max_match_distance = match.max_distance;
      r.checks.push_back({"spectrum", match.pass, match.max_distance});
      const double mult_err = multiplicativity_error(ms, c, d);
      r.checks.push_back({"multiplicativity", mult_err <= opt.multiplicativity_tol, mult_err});
      const double comp_err = composition_error(net, ms.monoid, c, d);
      r.checks.push_back({"composition", comp_err <= opt.composition_tol, comp_err});
      r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& ch) { return ch.pass; });
      v.reports.push_back(std::move(r));
    }
  }
  if (net.node_count <= opt.max_partition_nodes) {
    std::size_t checked = 0;
    const bool ok = quotient_monotone(net, ms, v.multiplicities, opt.max_partition_nodes, &checked);
    v.checks.push_back({"quotient_monotonicity", ok, static_cast<double>(checked)});
  }
  return v;
}

}  // namespace netmult
