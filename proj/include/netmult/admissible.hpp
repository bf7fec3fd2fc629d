#pragma once

// Linear admissible maps: block (p, q) of γ_f is the sum of C_σ over the
// labels σ with σ(p) = q.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "netmult/error.hpp"
#include "netmult/network.hpp"
#include "netmult/random.hpp"

namespace netmult {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// One m×m block per arrow label.
struct Coefficients {
  Eigen::Index block_dim = 1;
  std::map<std::string, Matrix> blocks;

  const Matrix& at(const std::string& label) const {
    auto it = blocks.find(label);
    if (it == blocks.end()) fail(ErrorCode::LabelMismatch, "no coefficient block for label '" + label + "'");
    return it->second;
  }

  static Coefficients scalar(const std::map<std::string, Complex>& values) {
    Coefficients c;
    c.block_dim = 1;
    for (const auto& [label, v] : values) c.blocks[label] = Matrix::Constant(1, 1, v);
    return c;
  }

  static Coefficients zero(const std::vector<std::string>& labels, Eigen::Index m) {
    Coefficients c;
    c.block_dim = m;
    for (const auto& l : labels) c.blocks[l] = Matrix::Zero(m, m);
    return c;
  }

  static Coefficients random(const std::vector<std::string>& labels, Eigen::Index m, Rng& rng) {
    Coefficients c;
    c.block_dim = m;
    for (const auto& l : labels) {
      Matrix b(m, m);
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) b(i, j) = complex_gaussian(rng);
      c.blocks[l] = std::move(b);
    }
    return c;
  }

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    if (a.block_dim != b.block_dim || a.blocks.size() != b.blocks.size()) return false;
    for (const auto& [label, blk] : a.blocks) {
      auto it = b.blocks.find(label);
      if (it == b.blocks.end() || it->second != blk) return false;
    }
    return true;
  }
};

/// δ_σ ⊗ I_m on the monoid's element names.
inline Coefficients delta(const Monoid& m, std::size_t sigma, Eigen::Index block_dim = 1) {
  Coefficients c = Coefficients::zero(m.names, block_dim);
  c.blocks[m.names[sigma]] = Matrix::Identity(block_dim, block_dim);
  return c;
}

struct AdmissibleMatrix {
  Matrix matrix;
  Network network;
  Eigen::Index block_dim = 1;
};

namespace detail {

inline void require_labels(const Network& net, const Coefficients& c) {
  if (c.blocks.size() != net.arrows.size())
    fail(ErrorCode::LabelMismatch, "coefficients must cover exactly the network's arrow labels");
  for (const auto& a : net.arrows) {
    const Matrix& b = c.at(a.label);
    if (b.rows() != c.block_dim || b.cols() != c.block_dim)
      fail(ErrorCode::DimMismatch, "coefficient block '" + a.label + "' is not " + std::to_string(c.block_dim) + "x" +
                                       std::to_string(c.block_dim));
  }
}

inline void require_monoid_labels(const Monoid& m, const Coefficients& c) {
  if (c.blocks.size() != m.size())
    fail(ErrorCode::LabelMismatch, "coefficients must be keyed by the monoid element names");
  for (const auto& name : m.names) {
    const Matrix& b = c.at(name);
    if (b.rows() != c.block_dim || b.cols() != c.block_dim)
      fail(ErrorCode::DimMismatch, "coefficient block '" + name + "' has the wrong size");
  }
}

}  // namespace detail

inline AdmissibleMatrix build_admissible(const Network& net, const Coefficients& c) {
  detail::require_labels(net, c);
  const Eigen::Index m = c.block_dim;
  const Eigen::Index n = static_cast<Eigen::Index>(net.node_count);
  AdmissibleMatrix out{Matrix::Zero(n * m, n * m), net, m};
  for (const auto& a : net.arrows) {
    const Matrix& block = c.at(a.label);
    for (std::size_t p = 0; p < net.node_count; ++p) {
      const auto row = static_cast<Eigen::Index>(p) * m;
      const auto col = static_cast<Eigen::Index>(a.map(p)) * m;
      out.matrix.block(row, col, m, m) += block;
    }
  }
  return out;
}

/// Re-keys coefficients of an original network onto its completion: aliases
/// of one element are summed, generated elements get zero blocks.
inline Coefficients rekey_for_completion(const Completion& comp, const Coefficients& original) {
  Coefficients out = Coefficients::zero(comp.monoid.names, original.block_dim);
  for (const auto& [label, element] : comp.aliases) out.blocks[comp.monoid.names[element]] += original.at(label);
  return out;
}

/// (C ∘_Σ D)_σ = Σ_{κ∘τ=σ} C_τ D_κ, so that Γ_C Γ_D = Γ_{C ∘_Σ D}.
inline Coefficients sigma_product(const Coefficients& c, const Coefficients& d, const Monoid& m) {
  if (c.block_dim != d.block_dim) fail(ErrorCode::DimMismatch, "coefficient block dimensions differ");
  detail::require_monoid_labels(m, c);
  detail::require_monoid_labels(m, d);
  Coefficients out = Coefficients::zero(m.names, c.block_dim);
  std::vector<const Matrix*> cb(m.size()), db(m.size());
  std::vector<Matrix*> ob(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    cb[i] = &c.at(m.names[i]);
    db[i] = &d.at(m.names[i]);
    ob[i] = &out.blocks[m.names[i]];
  }
  for (std::size_t tau = 0; tau < m.size(); ++tau)
    for (std::size_t kappa = 0; kappa < m.size(); ++kappa) *ob[m.product(kappa, tau)] += (*cb[tau]) * (*db[kappa]);
  return out;
}

/// Self-loop count per arrow label, in arrow order: tr γ = Σ_σ t_σ tr C_σ.
inline std::vector<long long> trace_functional(const Network& net) {
  std::vector<long long> t;
  t.reserve(net.arrows.size());
  for (const auto& a : net.arrows) t.push_back(static_cast<long long>(a.map.fixed_points()));
  return t;
}

/// A_σ with (A_σ X)_τ = X_{τ∘σ}; A_σ A_τ = A_{σ∘τ}.
inline std::vector<Eigen::MatrixXd> symmetry_operators(const Monoid& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(m.size());
  for (std::size_t s = 0; s < m.size(); ++s) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t t = 0; t < m.size(); ++t) a(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(m.product(t, s))) = 1.0;
    ops.push_back(std::move(a));
  }
  return ops;
}

/// ρ_σ = Γ_{δ_σ} for scalar coefficients: entry (τ, σ∘τ) = 1; ρ_τ ρ_κ = ρ_{κ∘τ}.
inline std::vector<Eigen::MatrixXd> generator_operators(const Monoid& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(m.size());
  for (std::size_t s = 0; s < m.size(); ++s) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t t = 0; t < m.size(); ++t) r(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(m.product(s, t))) = 1.0;
    ops.push_back(std::move(r));
  }
  return ops;
}

/// True iff M commutes with every A_σ ⊗ I_k to within 1e-10·‖M‖.
inline bool check_equivariance(const Monoid& m, const Matrix& mat) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (mat.rows() != mat.cols() || n == 0 || mat.rows() % n != 0)
    fail(ErrorCode::SizeMismatch, "matrix size must be a multiple of the monoid order");
  const Eigen::Index k = mat.rows() / n;
  const double tol = 1e-10 * mat.norm();
  for (const auto& a : symmetry_operators(m)) {
    Matrix inflated = Matrix::Zero(n * k, n * k);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (a(i, j) != 0.0) inflated.block(i * k, j * k, k, k).setIdentity();
    if ((inflated * mat - mat * inflated).norm() > tol) return false;
  }
  return true;
}

/// Frobenius-norm closeness: ‖a − b‖ ≤ tol · max(1, ‖a‖, ‖b‖).
inline bool relatively_close(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() <= tol * scale;
}

}  // namespace netmult
