#pragma once

// Homogeneous networks with asymmetric inputs, described by one input map per
// arrow label. Nodes are stored 0-based; every external format is 1-based.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netmult/error.hpp"

namespace netmult {

/// A self-map of {0..n-1}; entry i is the node that i receives its input from.
class InputMap {
 public:
  InputMap() = default;
  explicit InputMap(std::vector<std::size_t> targets) : targets_(std::move(targets)) {}

  static InputMap identity(std::size_t n) {
    std::vector<std::size_t> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    return InputMap(std::move(t));
  }

  static InputMap from_one_based(const std::vector<long long>& entries) {
    std::vector<std::size_t> t;
    t.reserve(entries.size());
    for (long long v : entries) {
      if (v < 1) fail(ErrorCode::IndexOutOfRange, "node index " + std::to_string(v) + " is not positive");
      t.push_back(static_cast<std::size_t>(v - 1));
    }
    return InputMap(std::move(t));
  }

  std::vector<long long> one_based() const {
    std::vector<long long> out;
    out.reserve(targets_.size());
    for (std::size_t v : targets_) out.push_back(static_cast<long long>(v) + 1);
    return out;
  }

  std::size_t size() const { return targets_.size(); }
  std::size_t operator()(std::size_t p) const { return targets_[p]; }
  const std::vector<std::size_t>& targets() const { return targets_; }

  /// (*this ∘ inner)(i) = (*this)(inner(i)).
  InputMap after(const InputMap& inner) const {
    std::vector<std::size_t> t(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) t[i] = targets_[inner.targets_[i]];
    return InputMap(std::move(t));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (targets_[i] != i) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (targets_[i] == i) ++count;
    return count;
  }

  friend bool operator==(const InputMap&, const InputMap&) = default;
  friend auto operator<=>(const InputMap&, const InputMap&) = default;

 private:
  std::vector<std::size_t> targets_;
};

struct InputMapHash {
  std::size_t operator()(const InputMap& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t v : m.targets()) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Arrow {
  std::string label;
  InputMap map;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Network {
  std::size_t node_count = 0;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return i;
    return std::nullopt;
  }

  const InputMap& map(const std::string& label) const {
    auto i = find(label);
    if (!i) fail(ErrorCode::LabelMismatch, "network has no arrow labelled '" + label + "'");
    return arrows[*i].map;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(arrows.size());
    for (const auto& a : arrows) out.push_back(a.label);
    return out;
  }

  friend bool operator==(const Network&, const Network&) = default;
};

/// A finite monoid of self-maps; table[a * size() + b] is the index of a ∘ b.
struct Monoid {
  std::vector<InputMap> elements;
  std::vector<std::string> names;
  std::size_t unit = 0;
  std::vector<std::size_t> table;

  std::size_t size() const { return elements.size(); }
  std::size_t degree() const { return elements.empty() ? 0 : elements.front().size(); }
  std::size_t product(std::size_t a, std::size_t b) const { return table[a * size() + b]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Monoid&, const Monoid&) = default;
};

/// Node partition; class indices are contiguous and numbered by smallest member.
struct Partition {
  std::vector<std::size_t> class_of;

  std::size_t class_count() const {
    std::size_t k = 0;
    for (std::size_t c : class_of) k = std::max(k, c + 1);
    return k;
  }

  static Partition normalized(const std::vector<std::size_t>& labels) {
    std::unordered_map<std::size_t, std::size_t> renumber;
    Partition p;
    p.class_of.reserve(labels.size());
    for (std::size_t v : labels) {
      auto [it, inserted] = renumber.try_emplace(v, renumber.size());
      p.class_of.push_back(it->second);
    }
    return p;
  }

  /// Builds a partition from 1-based node classes, e.g. {{1}, {2, 3}}.
  static Partition from_classes(std::size_t n, const std::vector<std::vector<long long>>& classes) {
    std::vector<std::size_t> labels(n, static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (long long v : classes[c]) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
          fail(ErrorCode::IndexOutOfRange, "partition names node " + std::to_string(v));
        labels[static_cast<std::size_t>(v - 1)] = c;
      }
    }
    for (std::size_t v : labels)
      if (v == static_cast<std::size_t>(-1)) fail(ErrorCode::InvalidArgument, "partition does not cover every node");
    return normalized(labels);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Fibration {
  std::vector<std::size_t> node_map;
};

// ---------------------------------------------------------------------------

inline void validate_network(const Network& net) {
  if (net.node_count == 0) fail(ErrorCode::EmptyNetwork, "network has no nodes");
  std::set<std::string> seen;
  for (const auto& a : net.arrows) {
    if (!seen.insert(a.label).second) fail(ErrorCode::DuplicateLabel, "duplicate arrow label '" + a.label + "'");
    if (a.map.size() != net.node_count)
      fail(ErrorCode::SizeMismatch, "input map '" + a.label + "' has length " + std::to_string(a.map.size()) +
                                        ", expected " + std::to_string(net.node_count));
    for (std::size_t v : a.map.targets())
      if (v >= net.node_count)
        fail(ErrorCode::IndexOutOfRange, "input map '" + a.label + "' targets node " + std::to_string(v + 1) +
                                             " of a " + std::to_string(net.node_count) + "-node network");
  }
}

/// Convenience constructor from 1-based arrays; the result is validated.
inline Network make_network(std::size_t node_count,
                            const std::vector<std::pair<std::string, std::vector<long long>>>& arrows) {
  Network net;
  net.node_count = node_count;
  for (const auto& [label, entries] : arrows) net.arrows.push_back({label, InputMap::from_one_based(entries)});
  validate_network(net);
  return net;
}

namespace detail {

inline std::string fresh_name(const std::set<std::string>& taken, std::size_t index) {
  std::string name = "s" + std::to_string(index + 1);
  while (taken.count(name)) name += "'";
  return name;
}

inline void fill_table(Monoid& m, const std::unordered_map<InputMap, std::size_t, InputMapHash>& index) {
  const std::size_t n = m.size();
  m.table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a * n + b] = index.at(m.elements[a].after(m.elements[b]));
}

}  // namespace detail

/// Closure of {identity} ∪ maps under composition. Element order: identity,
/// the given maps in order (duplicates skipped), then new maps in BFS order.
/// `names` optionally names the given maps; an unnamed identity is called "id".
inline Monoid monoid_closure(const std::vector<InputMap>& maps, std::size_t cap = 5000,
                             const std::vector<std::string>& names = {}) {
  if (maps.empty()) fail(ErrorCode::InvalidArgument, "monoid_closure needs at least one map");
  const std::size_t n = maps.front().size();
  for (const auto& g : maps)
    if (g.size() != n) fail(ErrorCode::SizeMismatch, "input maps of different lengths");
  if (!names.empty() && names.size() != maps.size())
    fail(ErrorCode::SizeMismatch, "one name per input map required");

  Monoid m;
  std::unordered_map<InputMap, std::size_t, InputMapHash> index;
  std::set<std::string> taken(names.begin(), names.end());

  auto push = [&](InputMap map, std::string name) {
    if (m.elements.size() >= cap)
      fail(ErrorCode::ClosureCapExceeded, "monoid closure exceeds " + std::to_string(cap) + " elements");
    index.emplace(map, m.elements.size());
    m.elements.push_back(std::move(map));
    m.names.push_back(std::move(name));
  };

  std::optional<std::string> given_unit;
  for (std::size_t i = 0; i < maps.size() && !names.empty(); ++i)
    if (maps[i].is_identity()) {
      given_unit = names[i];
      break;
    }
  std::string unit_name = given_unit.value_or("id");
  if (!given_unit)
    while (taken.count(unit_name)) unit_name += "'";
  taken.insert(unit_name);
  push(InputMap::identity(n), unit_name);

  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (index.count(maps[i])) continue;
    push(maps[i], names.empty() ? detail::fresh_name(taken, m.elements.size()) : names[i]);
    taken.insert(m.names.back());
  }

  for (std::size_t k = 0; k < m.elements.size(); ++k) {
    for (const auto& g : maps) {
      InputMap next = g.after(m.elements[k]);
      if (index.count(next)) continue;
      std::string name = detail::fresh_name(taken, m.elements.size());
      taken.insert(name);
      push(std::move(next), std::move(name));
    }
  }
  m.unit = 0;
  detail::fill_table(m, index);
  return m;
}

struct Completion {
  Network network;
  Monoid monoid;
  /// Original arrow label -> monoid element index.
  std::vector<std::pair<std::string, std::size_t>> aliases;
};

inline Completion completion(const Network& net, std::size_t cap = 5000) {
  validate_network(net);
  std::vector<InputMap> maps;
  std::vector<std::string> names;
  for (const auto& a : net.arrows) {
    maps.push_back(a.map);
    names.push_back(a.label);
  }
  Completion out;
  if (maps.empty()) {
    maps.push_back(InputMap::identity(net.node_count));
    names.push_back("id");
  }
  out.monoid = monoid_closure(maps, cap, names);
  out.network.node_count = net.node_count;
  for (std::size_t i = 0; i < out.monoid.size(); ++i)
    out.network.arrows.push_back({out.monoid.names[i], out.monoid.elements[i]});
  std::unordered_map<InputMap, std::size_t, InputMapHash> index;
  for (std::size_t i = 0; i < out.monoid.size(); ++i) index.emplace(out.monoid.elements[i], i);
  for (const auto& a : net.arrows) out.aliases.emplace_back(a.label, index.at(a.map));
  return out;
}

/// Nodes are the monoid elements; arrow τ sends node σ to τ ∘ σ.
inline Network fundamental_network(const Monoid& m) {
  Network net;
  net.node_count = m.size();
  for (std::size_t t = 0; t < m.size(); ++t) {
    std::vector<std::size_t> targets(m.size());
    for (std::size_t s = 0; s < m.size(); ++s) targets[s] = m.product(t, s);
    net.arrows.push_back({m.names[t], InputMap(std::move(targets))});
  }
  return net;
}

/// Subnetwork on every node that influences p, directly or indirectly. The
/// second component maps local indices (ascending) to original node indices.
inline std::pair<Network, std::vector<std::size_t>> input_network(const Network& net, std::size_t p) {
  if (p >= net.node_count) fail(ErrorCode::IndexOutOfRange, "node " + std::to_string(p + 1) + " does not exist");
  std::vector<bool> reached(net.node_count, false);
  std::deque<std::size_t> queue{p};
  reached[p] = true;
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (const auto& a : net.arrows) {
      std::size_t r = a.map(q);
      if (!reached[r]) {
        reached[r] = true;
        queue.push_back(r);
      }
    }
  }
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> local(net.node_count, 0);
  for (std::size_t q = 0; q < net.node_count; ++q)
    if (reached[q]) {
      local[q] = nodes.size();
      nodes.push_back(q);
    }
  Network sub;
  sub.node_count = nodes.size();
  for (const auto& a : net.arrows) {
    std::vector<std::size_t> targets;
    targets.reserve(nodes.size());
    for (std::size_t q : nodes) targets.push_back(local[a.map(q)]);
    sub.arrows.push_back({a.label, InputMap(std::move(targets))});
  }
  return {std::move(sub), std::move(nodes)};
}

namespace detail {

inline void require_same_labels(const Network& a, const Network& b) {
  auto la = a.labels();
  auto lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) fail(ErrorCode::LabelMismatch, "networks do not share the same arrow labels");
}

}  // namespace detail

/// True iff f ∘ σ_src = σ_dst ∘ f for every label σ.
inline bool is_fibration(const Network& src, const Network& dst, const Fibration& f) {
  detail::require_same_labels(src, dst);
  if (f.node_map.size() != src.node_count)
    fail(ErrorCode::SizeMismatch, "node map length differs from source node count");
  for (std::size_t v : f.node_map)
    if (v >= dst.node_count) fail(ErrorCode::IndexOutOfRange, "node map leaves the target network");
  for (const auto& a : src.arrows) {
    const InputMap& target_map = dst.map(a.label);
    for (std::size_t p = 0; p < src.node_count; ++p)
      if (f.node_map[a.map(p)] != target_map(f.node_map[p])) return false;
  }
  return true;
}

inline bool is_balanced(const Network& net, const Partition& part) {
  if (part.class_of.size() != net.node_count)
    fail(ErrorCode::SizeMismatch, "partition length differs from node count");
  // Balanced iff every input map sends each class into a single class.
  const std::size_t k = part.class_count();
  for (const auto& a : net.arrows) {
    std::vector<std::size_t> image(k, static_cast<std::size_t>(-1));
    for (std::size_t p = 0; p < net.node_count; ++p) {
      std::size_t c = part.class_of[p];
      std::size_t target = part.class_of[a.map(p)];
      if (image[c] == static_cast<std::size_t>(-1))
        image[c] = target;
      else if (image[c] != target)
        return false;
    }
  }
  return true;
}

inline std::pair<Network, Fibration> quotient(const Network& net, const Partition& part) {
  if (!is_balanced(net, part)) fail(ErrorCode::NotBalanced, "partition is not balanced");
  Partition p = Partition::normalized(part.class_of);
  const std::size_t k = p.class_count();
  std::vector<std::size_t> representative(k, static_cast<std::size_t>(-1));
  for (std::size_t q = 0; q < net.node_count; ++q)
    if (representative[p.class_of[q]] == static_cast<std::size_t>(-1)) representative[p.class_of[q]] = q;
  Network out;
  out.node_count = k;
  for (const auto& a : net.arrows) {
    std::vector<std::size_t> targets(k);
    for (std::size_t c = 0; c < k; ++c) targets[c] = p.class_of[a.map(representative[c])];
    out.arrows.push_back({a.label, InputMap(std::move(targets))});
  }
  return {std::move(out), Fibration{p.class_of}};
}

/// Every set partition (restricted growth strings) filtered by is_balanced,
/// coarsest first; ties keep enumeration order.
inline std::vector<Partition> enumerate_balanced_partitions(const Network& net, std::size_t max_nodes = 12) {
  const std::size_t n = net.node_count;
  if (n > max_nodes)
    fail(ErrorCode::TooLarge, "balanced-partition search is limited to " + std::to_string(max_nodes) + " nodes");
  std::vector<Partition> found;
  if (n == 0) return found;
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    Partition part{rgs};
    if (is_balanced(net, part)) found.push_back(std::move(part));
    // next restricted growth string
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Partition& a, const Partition& b) { return a.class_count() < b.class_count(); });
  return found;
}

/// Σ-labelled network satisfying every relation of the monoid table, with the
/// unit acting as the identity.
inline bool is_constructible(const Network& net, const Monoid& m) {
  {
    auto labels = net.labels();
    auto names = m.names;
    std::sort(labels.begin(), labels.end());
    std::sort(names.begin(), names.end());
    if (labels != names) fail(ErrorCode::LabelMismatch, "arrow labels are not the monoid element names");
  }
  std::vector<const InputMap*> maps(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) maps[i] = &net.map(m.names[i]);
  if (!maps[m.unit]->is_identity()) return false;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (maps[a]->after(*maps[b]) != *maps[m.product(a, b)]) return false;
  return true;
}

inline Network disjoint_union(const Network& a, const Network& b) {
  detail::require_same_labels(a, b);
  Network out;
  out.node_count = a.node_count + b.node_count;
  for (const auto& arrow : a.arrows) {
    std::vector<std::size_t> targets = arrow.map.targets();
    for (std::size_t v : b.map(arrow.label).targets()) targets.push_back(v + a.node_count);
    out.arrows.push_back({arrow.label, InputMap(std::move(targets))});
  }
  return out;
}

/// Ring network on n nodes; label s_k sends node i to i + k (mod n).
inline Network circulant_network(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "circulant network needs n >= 1");
  Network net;
  net.node_count = n;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> targets(n);
    for (std::size_t i = 0; i < n; ++i) targets[i] = (i + k) % n;
    net.arrows.push_back({"s" + std::to_string(k), InputMap(std::move(targets))});
  }
  return net;
}

}  // namespace netmult
