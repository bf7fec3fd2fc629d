#pragma once

#include <algorithm>
#include <complex>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netmult/netmult.hpp"

namespace fixtures {

using netmult::Complex;
using netmult::Network;
using netmult::make_network;

inline std::string data_path(const std::string& name) { return std::string(NETMULT_DATA_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline netmult::NetworkDocument document(const std::string& name) { return netmult::parse_network_document(read(name)); }

inline Network fig2() { return make_network(3, {{"e", {1, 2, 3}}, {"b", {1, 3, 2}}, {"c", {1, 1, 1}}, {"d", {3, 3, 3}}}); }

inline Network fig3_left() {
  return make_network(3, {{"A", {1, 2, 3}}, {"B", {1, 3, 2}}, {"C", {1, 1, 1}}, {"D", {3, 3, 3}}, {"E", {2, 2, 2}}});
}

inline Network fig2x() {
  return make_network(4, {{"A", {1, 2, 3, 4}},
                          {"B", {1, 1, 1, 1}},
                          {"C", {2, 2, 2, 2}},
                          {"D", {3, 4, 4, 4}},
                          {"E", {3, 3, 3, 3}},
                          {"F", {4, 4, 4, 4}}});
}

/// Σ-labelled over the monoid of fig3_left.
inline Network fig5_left() {
  return make_network(5, {{"A", {1, 2, 3, 4, 5}},
                          {"B", {2, 1, 3, 4, 5}},
                          {"C", {3, 3, 3, 3, 3}},
                          {"D", {4, 4, 4, 4, 4}},
                          {"E", {4, 4, 4, 4, 4}}});
}

inline Network exam44() {
  return make_network(3, {{"A", {1, 2, 3}}, {"B", {2, 2, 3}}, {"C", {1, 1, 1}}, {"D", {2, 2, 2}}, {"E", {3, 3, 3}}});
}

inline Network exam49() {
  return make_network(4, {{"A", {1, 2, 3, 4}},
                          {"B", {2, 3, 4, 4}},
                          {"C", {3, 4, 4, 4}},
                          {"D", {4, 4, 4, 4}},
                          {"E", {1, 1, 1, 1}},
                          {"F", {2, 2, 2, 2}},
                          {"G", {3, 3, 3, 3}}});
}

inline Network exam410() {
  return make_network(6, {{"A", {1, 2, 3, 4, 5, 6}},
                          {"B", {2, 2, 2, 5, 5, 6}},
                          {"C", {1, 1, 1, 1, 1, 1}},
                          {"D", {2, 2, 2, 2, 2, 2}},
                          {"E", {3, 3, 3, 3, 3, 3}},
                          {"F", {4, 4, 4, 4, 4, 4}},
                          {"G", {5, 5, 5, 5, 5, 5}},
                          {"H", {6, 6, 6, 6, 6, 6}}});
}

/// Fundamental network of the 8-element monoid, read off its Γ_f.
inline Network exam612() {
  return make_network(8, {{"A", {1, 2, 3, 4, 5, 6, 7, 8}},
                          {"B", {2, 6, 5, 2, 6, 6, 8, 6}},
                          {"C", {3, 4, 7, 7, 3, 8, 7, 7}},
                          {"D", {4, 8, 3, 4, 8, 8, 7, 8}},
                          {"E", {5, 2, 8, 8, 5, 6, 8, 8}},
                          {"F", {6, 6, 6, 6, 6, 6, 6, 6}},
                          {"G", {7, 7, 7, 7, 7, 7, 7, 7}},
                          {"H", {8, 8, 8, 8, 8, 8, 8, 8}}});
}

inline netmult::Monoid monoid_of(const Network& net) { return netmult::completion(net).monoid; }

// ---------------------------------------------------------------------------
// Independent oracles. None of these call into the library beyond plain data.

using RawMap = std::vector<int>;  // 0-based

inline RawMap compose(const RawMap& a, const RawMap& b) {
  RawMap out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

/// Closure by repeated pairwise composition until nothing new appears.
inline std::set<RawMap> brute_closure(std::vector<RawMap> gens) {
  std::set<RawMap> s(gens.begin(), gens.end());
  RawMap id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  s.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RawMap> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(compose(a, b)).second) grew = true;
  }
  return s;
}

inline RawMap raw(const netmult::InputMap& m) {
  RawMap out;
  for (auto v : m.one_based()) out.push_back(static_cast<int>(v - 1));
  return out;
}

/// Scalar admissible matrix straight from the definition: entry (p, q) sums
/// c_σ over the labels whose input map sends p to q.
inline Eigen::MatrixXcd scalar_gamma(const Network& net, const std::map<std::string, Complex>& c) {
  const auto n = static_cast<Eigen::Index>(net.node_count);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& a : net.arrows) {
    const auto targets = a.map.one_based();
    for (Eigen::Index p = 0; p < n; ++p) g(p, targets[static_cast<std::size_t>(p)] - 1) += c.at(a.label);
  }
  return g;
}

/// Sorted-multiset distance with brute-force optimal assignment for small sizes.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return 1e300;
  std::vector<std::size_t> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  if (a.size() <= 7) {
    double best = 1e300;
    do {
      double worst = 0;
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  auto key = [](Complex x, Complex y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::vector<Complex> repeat(std::initializer_list<std::pair<Complex, int>> items) {
  std::vector<Complex> out;
  for (auto [v, k] : items)
    for (int i = 0; i < k; ++i) out.push_back(v);
  return out;
}

/// Character row of a multiplier, read at the element named `name`.
inline Complex chi(const netmult::MultiplierSet& ms, std::size_t l, const std::string& name) {
  return ms.blocks[l].character[*ms.monoid.index_of(name)];
}

}  // namespace fixtures
