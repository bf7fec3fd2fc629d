#pragma once

// Exact linear algebra over the integers and rationals. Used wherever a rank
// decision changes the shape of the answer (radical, center).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace netmult::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

struct Echelon {
  IntMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

/// Bareiss fraction-free row echelon form. Every intermediate entry is a minor
/// of the input, so all divisions are exact.
inline Echelon bareiss(IntMatrix a) {
  Echelon out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  return l;
}

/// Primitive integer representative of a rational direction.
inline std::vector<Integer> to_primitive_integer(const RatVector& v) {
  Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer e = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    out.push_back(e);
    g = boost::multiprecision::gcd(g, e);
  }
  if (g > 1)
    for (auto& e : out) e /= g;
  return out;
}

/// Basis of {x : A x = 0}, one vector per free column, as primitive integer vectors.
inline std::vector<std::vector<Integer>> integer_nullspace(const IntMatrix& a, std::size_t columns) {
  Echelon e = bareiss(a);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(columns, Rational(0));
    x[f] = 1;
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      const std::size_t p = e.pivots[i];
      Rational s = 0;
      for (std::size_t j = p + 1; j < columns; ++j)
        if (x[j] != 0 && e.rows[i][j] != 0) s += Rational(e.rows[i][j]) * x[j];
      x[p] = -s / Rational(e.rows[i][p]);
    }
    basis.push_back(to_primitive_integer(x));
  }
  return basis;
}

/// Scales each row to integers, then returns the rational null space basis.
inline std::vector<RatVector> rational_nullspace(const RatMatrix& a, std::size_t columns) {
  IntMatrix scaled;
  scaled.reserve(a.size());
  for (const auto& row : a) {
    Integer l = lcm_of_denominators(row);
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    scaled.push_back(std::move(r));
  }
  std::vector<RatVector> out;
  for (auto& v : integer_nullspace(scaled, columns)) {
    RatVector r;
    r.reserve(v.size());
    for (auto& x : v) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

struct ReducedEchelon {
  RatMatrix rows;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over the rationals (pivots normalised to 1).
inline ReducedEchelon rref(RatMatrix a) {
  ReducedEchelon out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline std::size_t rank(const IntMatrix& a) { return bareiss(a).pivots.size(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace netmult::exact
