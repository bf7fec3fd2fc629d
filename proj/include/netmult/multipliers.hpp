#pragma once

// Network multipliers of a monoid Σ.
//
// The scalar admissible maps of the fundamental network form an algebra with
// basis ρ_σ and product ρ_a ρ_b = ρ_{b∘a}. Its Jacobson radical is the kernel
// of the trace form tr(ρ_a ρ_b), computed exactly. The semisimple quotient is
// split into simple blocks with primitive central idempotents, and each block
// M_n(ℂ) is realised on a minimal left ideal B·e. The matrices Λ^l(δ_σ) are the
// network multipliers' coefficient tensors.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "netmult/admissible.hpp"
#include "netmult/error.hpp"
#include "netmult/exact.hpp"
#include "netmult/network.hpp"
#include "netmult/random.hpp"

namespace netmult {

struct AdmissibleAlgebra {
  std::size_t dim = 0;
  std::size_t unit = 0;
  /// structure[a * dim + b] = c with ρ_a ρ_b = ρ_c.
  std::vector<std::size_t> structure;
  std::vector<Eigen::MatrixXd> generators;

  std::size_t product(std::size_t a, std::size_t b) const { return structure[a * dim + b]; }
};

inline AdmissibleAlgebra algebra_structure(const Monoid& m) {
  AdmissibleAlgebra alg;
  alg.dim = m.size();
  alg.unit = m.unit;
  alg.structure.resize(alg.dim * alg.dim);
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b) alg.structure[a * alg.dim + b] = m.product(b, a);
  alg.generators = generator_operators(m);
  return alg;
}

/// Radical of the admissible algebra and an exact description of the quotient.
struct RadicalSplit {
  std::size_t algebra_dim = 0;
  std::size_t unit = 0;
  /// Reduced echelon basis of the radical, in generator coordinates.
  std::vector<exact::RatVector> radical_basis;
  std::vector<std::size_t> radical_pivots;
  /// Generators whose cosets form the quotient basis q_0..q_{d-1}.
  std::vector<std::size_t> quotient_basis;
  /// projection[k][σ]: k-th quotient coordinate of ρ_σ.
  exact::RatMatrix projection;
  /// structure[(i * d + j) * d + k] = coefficient of q_k in q_i q_j.
  std::vector<exact::Rational> structure;

  std::size_t quotient_dim() const { return quotient_basis.size(); }
  std::size_t radical_dim() const { return radical_basis.size(); }

  exact::RatVector project(const exact::RatVector& v) const {
    exact::RatVector out(quotient_dim());
    for (std::size_t k = 0; k < quotient_dim(); ++k) {
      exact::Rational s = v[quotient_basis[k]];
      for (std::size_t i = 0; i < radical_basis.size(); ++i)
        if (v[radical_pivots[i]] != 0) s -= v[radical_pivots[i]] * radical_basis[i][quotient_basis[k]];
      out[k] = s;
    }
    return out;
  }
};

namespace detail {

/// v · ρ_a (right = true) or ρ_a · v in generator coordinates.
inline exact::RatVector multiply_by_generator(const AdmissibleAlgebra& alg, const exact::RatVector& v, std::size_t a,
                                              bool right) {
  exact::RatVector out(alg.dim, exact::Rational(0));
  for (std::size_t b = 0; b < alg.dim; ++b) {
    if (v[b] == 0) continue;
    out[right ? alg.product(b, a) : alg.product(a, b)] += v[b];
  }
  return out;
}

}  // namespace detail

/// The radical is the kernel of the integer Gram matrix G_ab = tr(ρ_a ρ_b),
/// taken by fraction-free elimination. Throws if the result is not a two-sided ideal.
inline RadicalSplit radical(const AdmissibleAlgebra& alg) {
  const std::size_t n = alg.dim;
  std::vector<long long> trace(n, 0);
  for (std::size_t c = 0; c < n; ++c) trace[c] = static_cast<long long>(std::llround(alg.generators[c].trace()));

  exact::IntMatrix gram(n, std::vector<exact::Integer>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram[a][b] = trace[alg.product(a, b)];

  RadicalSplit split;
  split.algebra_dim = n;
  split.unit = alg.unit;
  exact::RatMatrix kernel;
  for (auto& v : exact::integer_nullspace(gram, n)) {
    exact::RatVector r;
    r.reserve(n);
    for (auto& x : v) r.emplace_back(x);
    kernel.push_back(std::move(r));
  }
  exact::ReducedEchelon reduced = exact::rref(std::move(kernel));
  split.radical_basis = std::move(reduced.rows);
  split.radical_pivots = std::move(reduced.pivots);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : split.radical_pivots) is_pivot[p] = true;
  for (std::size_t s = 0; s < n; ++s)
    if (!is_pivot[s]) split.quotient_basis.push_back(s);

  const std::size_t d = split.quotient_dim();
  split.projection.assign(d, exact::RatVector(n, exact::Rational(0)));
  for (std::size_t s = 0; s < n; ++s) {
    exact::RatVector e(n, exact::Rational(0));
    e[s] = 1;
    exact::RatVector p = split.project(e);
    for (std::size_t k = 0; k < d; ++k) split.projection[k][s] = p[k];
  }

  split.structure.assign(d * d * d, exact::Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t c = alg.product(split.quotient_basis[i], split.quotient_basis[j]);
      for (std::size_t k = 0; k < d; ++k) split.structure[(i * d + j) * d + k] = split.projection[k][c];
    }

  for (const auto& r : split.radical_basis)
    for (std::size_t a = 0; a < n; ++a)
      for (bool right : {false, true}) {
        exact::RatVector prod = split.project(detail::multiply_by_generator(alg, r, a, right));
        for (const auto& x : prod)
          if (x != 0) fail(ErrorCode::InconsistentTrace, "trace-form kernel is not a two-sided ideal");
      }
  return split;
}

/// The semisimple quotient with complex structure constants.
struct SemisimpleQuotient {
  Eigen::Index dim = 0;
  std::vector<double> structure;  // same layout as RadicalSplit::structure
  Matrix generator_images;        // column σ = π(ρ_σ)
  std::vector<Matrix> generator_left;  // L_{π(ρ_σ)}
  Vector unit;

  double gamma(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return structure[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }

  /// L_x y = x y.
  Matrix left_multiplication(const Vector& x) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (x(i) == Complex(0)) continue;
      for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index k = 0; k < dim; ++k) {
          const double g = gamma(i, j, k);
          if (g != 0.0) out(k, j) += x(i) * g;
        }
    }
    return out;
  }

  /// R_x y = y x.
  Matrix right_multiplication(const Vector& x) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (x(j) == Complex(0)) continue;
      for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index k = 0; k < dim; ++k) {
          const double g = gamma(i, j, k);
          if (g != 0.0) out(k, i) += x(j) * g;
        }
    }
    return out;
  }

  Vector multiply(const Vector& x, const Vector& y) const { return left_multiplication(x) * y; }
};

inline SemisimpleQuotient semisimple_quotient(const RadicalSplit& split) {
  SemisimpleQuotient q;
  q.dim = static_cast<Eigen::Index>(split.quotient_dim());
  q.structure.reserve(split.structure.size());
  for (const auto& x : split.structure) q.structure.push_back(exact::to_double(x));
  const auto n = static_cast<Eigen::Index>(split.algebra_dim);
  q.generator_images = Matrix::Zero(q.dim, n);
  for (Eigen::Index k = 0; k < q.dim; ++k)
    for (Eigen::Index s = 0; s < n; ++s)
      q.generator_images(k, s) = exact::to_double(split.projection[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]);
  q.unit = q.generator_images.col(static_cast<Eigen::Index>(split.unit));
  q.generator_left.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index s = 0; s < n; ++s) q.generator_left.push_back(q.left_multiplication(q.generator_images.col(s)));
  return q;
}

struct WedderburnBlock {
  Vector idempotent;  // primitive central idempotent, quotient coordinates
  Matrix basis;       // orthonormal columns spanning e·B
  std::size_t dim = 0;
};

struct WedderburnDecomposition {
  SemisimpleQuotient quotient;
  std::vector<WedderburnBlock> blocks;
};

inline constexpr int kMaxDraws = 8;
inline constexpr double kClusterTol = 1e-8;

namespace detail {

/// Single-linkage clusters of values closer than tol; returns cluster id per value.
inline std::vector<std::size_t> cluster_values(const Vector& values, double tol, std::size_t& count) {
  const auto n = static_cast<std::size_t>(values.size());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values(static_cast<Eigen::Index>(i)) - values(static_cast<Eigen::Index>(j))) <= tol)
        parent[find(i)] = find(j);
  std::vector<std::size_t> id(n), root_id(n, static_cast<std::size_t>(-1));
  count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (root_id[r] == static_cast<std::size_t>(-1)) root_id[r] = count++;
    id[i] = root_id[r];
  }
  return id;
}

struct Clusters {
  std::vector<Complex> centers;
  std::vector<std::size_t> sizes;
};

inline Clusters cluster_eigenvalues(const Vector& values) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, std::abs(values(i)));
  std::size_t count = 0;
  auto id = cluster_values(values, kClusterTol * scale, count);
  Clusters c;
  c.centers.assign(count, Complex(0));
  c.sizes.assign(count, 0);
  for (std::size_t i = 0; i < id.size(); ++i) {
    c.centers[id[i]] += values(static_cast<Eigen::Index>(i));
    ++c.sizes[id[i]];
  }
  for (std::size_t k = 0; k < count; ++k) c.centers[k] /= static_cast<double>(c.sizes[k]);
  return c;
}

/// Π_{j≠l} (L − μ_j)/(μ_l − μ_j) applied to v.
inline Vector lagrange_projector(const Matrix& op, const std::vector<Complex>& centers, std::size_t l, const Vector& v) {
  Vector out = v;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    if (j == l) continue;
    out = (op * out - centers[j] * out) / (centers[l] - centers[j]);
  }
  return out;
}

inline Matrix column_space(const Matrix& a, Eigen::Index& rank) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  rank = 0;
  const double cutoff = kClusterTol * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

inline std::vector<Vector> center_basis(const RadicalSplit& split) {
  const std::size_t d = split.quotient_dim();
  exact::RatMatrix eqs;
  eqs.reserve(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      exact::RatVector row(d);
      bool nonzero = false;
      for (std::size_t i = 0; i < d; ++i) {
        row[i] = split.structure[(i * d + j) * d + k] - split.structure[(j * d + i) * d + k];
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) eqs.push_back(std::move(row));
    }
  std::vector<Vector> out;
  for (const auto& v : exact::rational_nullspace(eqs, d)) {
    Vector z(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) z(static_cast<Eigen::Index>(i)) = exact::to_double(v[i]);
    out.push_back(z / z.norm());
  }
  return out;
}

}  // namespace detail

/// Splits the semisimple quotient into simple two-sided ideals using a random
/// central element; retries on ambiguous eigenvalue clusters.
inline WedderburnDecomposition wedderburn_blocks(const RadicalSplit& split, std::uint64_t seed) {
  WedderburnDecomposition out;
  out.quotient = semisimple_quotient(split);
  const SemisimpleQuotient& q = out.quotient;
  const Eigen::Index d = q.dim;

  const std::vector<Vector> center = detail::center_basis(split);
  if (center.empty()) fail(ErrorCode::InconsistentTrace, "quotient algebra has trivial center");

  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Rng rng(derive_seed(seed, {0x57ed, static_cast<std::uint64_t>(attempt)}));
    Vector z = Vector::Zero(d);
    for (const auto& c : center) z += complex_gaussian(rng) * c;
    const Matrix lz = q.left_multiplication(z);

    std::vector<Complex> centers;
    std::vector<std::size_t> sizes;
    if (center.size() == 1) {
      centers.push_back(Complex(0));
      sizes.push_back(static_cast<std::size_t>(d));
    } else {
      Eigen::ComplexEigenSolver<Matrix> es(lz, false);
      if (es.info() != Eigen::Success) continue;
      auto clusters = detail::cluster_eigenvalues(es.eigenvalues());
      if (clusters.centers.size() != center.size()) continue;
      centers = std::move(clusters.centers);
      sizes = std::move(clusters.sizes);
    }

    std::vector<WedderburnBlock> blocks;
    std::size_t total = 0;
    bool ok = true;
    for (std::size_t l = 0; l < centers.size() && ok; ++l) {
      WedderburnBlock b;
      b.idempotent = detail::lagrange_projector(lz, centers, l, q.unit);
      Eigen::Index rank = 0;
      b.basis = detail::column_space(q.left_multiplication(b.idempotent), rank);
      b.dim = static_cast<std::size_t>(rank);
      if (b.dim != sizes[l]) ok = false;
      total += b.dim;
      blocks.push_back(std::move(b));
    }
    if (!ok || total != static_cast<std::size_t>(d)) continue;
    out.blocks = std::move(blocks);
    return out;
  }
  fail(ErrorCode::DegenerateDraw, "could not separate the central idempotents after " + std::to_string(kMaxDraws) + " draws");
}

/// One irreducible block: Λ(δ_σ) for every monoid element σ.
struct SimpleBlock {
  std::size_t size = 1;
  std::vector<Matrix> images;
  std::vector<Complex> character;

  friend bool operator==(const SimpleBlock& a, const SimpleBlock& b) {
    return a.size == b.size && a.images == b.images && a.character == b.character;
  }
};

namespace detail {

inline bool satisfies_product_law(const std::vector<Matrix>& images, const AdmissibleAlgebra& alg, double tol) {
  double scale = 1.0;
  for (const auto& m : images) scale = std::max(scale, m.norm());
  const Eigen::Index n = images.front().rows();
  if ((images[alg.unit] - Matrix::Identity(n, n)).norm() > tol * scale) return false;
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b)
      if ((images[a] * images[b] - images[alg.product(a, b)]).norm() > tol * scale * scale) return false;
  return true;
}

inline bool spans_full_matrix_algebra(const std::vector<Matrix>& images) {
  const Eigen::Index n = images.front().rows();
  Matrix stacked(n * n, static_cast<Eigen::Index>(images.size()));
  for (std::size_t s = 0; s < images.size(); ++s)
    stacked.col(static_cast<Eigen::Index>(s)) = Eigen::Map<const Vector>(images[s].data(), n * n);
  Eigen::Index rank = 0;
  (void)column_space(stacked, rank);
  return rank == n * n;
}

inline std::size_t integer_sqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace detail

/// Realises the irreducible representation of a simple block on the left
/// ideal B·e, with e a rank-one idempotent from Lagrange interpolation on a
/// random block element.
inline SimpleBlock realize_block(const WedderburnDecomposition& dec, std::size_t block_index,
                                 const AdmissibleAlgebra& alg, std::uint64_t seed) {
  const SemisimpleQuotient& q = dec.quotient;
  const WedderburnBlock& blk = dec.blocks.at(block_index);
  const std::size_t n = detail::integer_sqrt(blk.dim);
  if (n * n != blk.dim)
    fail(ErrorCode::NonSquareBlockDim, "simple block of dimension " + std::to_string(blk.dim) + " is not a square");
  const auto ni = static_cast<Eigen::Index>(n);
  const auto dim = static_cast<Eigen::Index>(blk.dim);

  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Rng rng(derive_seed(seed, {0x4ea1, static_cast<std::uint64_t>(attempt)}));
    Vector g(dim);
    for (Eigen::Index i = 0; i < dim; ++i) g(i) = complex_gaussian(rng);
    const Vector x = blk.basis * g;
    const Matrix lx = q.left_multiplication(x);

    Vector e = blk.idempotent;
    if (n > 1) {
      const Matrix restricted = blk.basis.adjoint() * lx * blk.basis;
      Eigen::ComplexEigenSolver<Matrix> es(restricted, false);
      if (es.info() != Eigen::Success) continue;
      auto clusters = detail::cluster_eigenvalues(es.eigenvalues());
      if (clusters.centers.size() != n) continue;
      if (std::any_of(clusters.sizes.begin(), clusters.sizes.end(), [&](std::size_t s) { return s != n; })) continue;
      e = detail::lagrange_projector(lx, clusters.centers, 0, blk.idempotent);
    }

    Eigen::Index rank = 0;
    const Matrix ideal = detail::column_space(q.right_multiplication(e) * blk.basis, rank);
    if (rank != ni) continue;

    SimpleBlock out;
    out.size = n;
    out.images.reserve(alg.dim);
    for (std::size_t s = 0; s < alg.dim; ++s) out.images.push_back(ideal.adjoint() * q.generator_left[s] * ideal);
    if (!detail::satisfies_product_law(out.images, alg, 1e-8)) continue;
    if (!detail::spans_full_matrix_algebra(out.images)) continue;
    out.character.reserve(alg.dim);
    for (const auto& img : out.images) out.character.push_back(img.trace());
    return out;
  }
  fail(ErrorCode::DegenerateDraw, "could not realise block " + std::to_string(block_index) + " after " +
                                      std::to_string(kMaxDraws) + " draws");
}

/// Ordered family of network multipliers with the monoid they belong to.
struct MultiplierSet {
  Monoid monoid;
  std::vector<SimpleBlock> blocks;

  std::size_t count() const { return blocks.size(); }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks) out.push_back(b.size);
    return out;
  }

  /// a^{l,σ}_{i,j}
  Complex coefficient(std::size_t l, std::size_t sigma, std::size_t i, std::size_t j) const {
    return blocks.at(l).images.at(sigma)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  friend bool operator==(const MultiplierSet&, const MultiplierSet&) = default;
};

namespace detail {

/// Rounds onto a dyadic grid (2^-36) so that seed-level float noise does not
/// reach the reported characters.
inline double snap(double v) {
  constexpr double grid = 68719476736.0;
  const double r = std::round(v * grid) / grid;
  return r == 0.0 ? 0.0 : r;
}

inline Complex snap(Complex v) { return {snap(v.real()), snap(v.imag())}; }

inline bool character_greater(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto key = [](double v) { return std::round(v * 1e9); };
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const double ar = key(a[i].real()), br = key(b[i].real());
    if (ar != br) return ar > br;
    const double ai = key(a[i].imag()), bi = key(b[i].imag());
    if (ai != bi) return ai > bi;
  }
  return false;
}

inline bool is_trivial_block(const SimpleBlock& b) {
  if (b.size != 1) return false;
  for (const auto& img : b.images)
    if (std::abs(img(0, 0) - Complex(1)) > 1e-8) return false;
  return true;
}

}  // namespace detail

/// Canonical order: trivial block, then ascending size, then characters in
/// descending lexicographic order (rounded to 9 decimals, monoid element order).
inline void canonical_order(std::vector<SimpleBlock>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const SimpleBlock& a, const SimpleBlock& b) {
    const bool ta = detail::is_trivial_block(a), tb = detail::is_trivial_block(b);
    if (ta != tb) return ta;
    if (a.size != b.size) return a.size < b.size;
    return detail::character_greater(a.character, b.character);
  });
}

inline MultiplierSet multipliers(const Monoid& m, std::uint64_t seed = 0) {
  const AdmissibleAlgebra alg = algebra_structure(m);
  const RadicalSplit split = radical(alg);
  const WedderburnDecomposition dec = wedderburn_blocks(split, seed);

  MultiplierSet ms;
  ms.monoid = m;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b)
    ms.blocks.push_back(realize_block(dec, b, alg, derive_seed(seed, {0xb10c, b})));

  std::size_t trivial = 0;
  for (auto& blk : ms.blocks) {
    for (auto& c : blk.character) c = detail::snap(c);
    if (blk.size == 1)
      for (auto& img : blk.images) img(0, 0) = detail::snap(img(0, 0));
    if (detail::is_trivial_block(blk)) {
      ++trivial;
      for (auto& img : blk.images) img(0, 0) = 1.0;
      for (auto& c : blk.character) c = 1.0;
    }
  }
  if (trivial != 1) fail(ErrorCode::InconsistentTrace, "expected exactly one trivial block, found " + std::to_string(trivial));
  canonical_order(ms.blocks);
  return ms;
}

/// n_l × n_l block matrix whose (i, j) block is Σ_σ a^{l,σ}_{i,j} C_σ.
inline Matrix evaluate(const MultiplierSet& ms, std::size_t l, const Coefficients& c) {
  if (l >= ms.count()) fail(ErrorCode::IndexOutOfRange, "multiplier index " + std::to_string(l) + " out of range");
  detail::require_monoid_labels(ms.monoid, c);
  const SimpleBlock& blk = ms.blocks[l];
  const auto n = static_cast<Eigen::Index>(blk.size);
  const Eigen::Index m = c.block_dim;
  Matrix out = Matrix::Zero(n * m, n * m);
  for (std::size_t s = 0; s < ms.monoid.size(); ++s) {
    const Matrix& cs = c.at(ms.monoid.names[s]);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex a = blk.images[s](i, j);
        if (a != Complex(0)) out.block(i * m, j * m, m, m) += a * cs;
      }
  }
  return out;
}

/// k × |Σ| matrix of χ_l(σ).
inline Matrix characters(const MultiplierSet& ms) {
  Matrix out(static_cast<Eigen::Index>(ms.count()), static_cast<Eigen::Index>(ms.monoid.size()));
  for (std::size_t l = 0; l < ms.count(); ++l)
    for (std::size_t s = 0; s < ms.monoid.size(); ++s)
      out(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(s)) = ms.blocks[l].character[s];
  return out;
}

}  // namespace netmult
