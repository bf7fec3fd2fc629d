#include "catch_amalgamated.hpp"
#include "fixtures.hpp"

using namespace netmult;
using namespace fixtures;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("validate_network accepts well-formed networks", "[network]") {
  CHECK_NOTHROW(make_network(3, {{"e", {1, 2, 3}}}));
  CHECK_NOTHROW(fig2());
  CHECK(fig2().arrows[1].map.one_based() == std::vector<long long>{1, 3, 2});
}

TEST_CASE("validate_network rejects bad targets, labels and sizes", "[network]") {
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [] { make_network(3, {{"x", {1, 4, 2}}}); }));
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [] { make_network(3, {{"x", {0, 1, 2}}}); }));
  CHECK(throws_code(ErrorCode::DuplicateLabel, [] { make_network(2, {{"x", {1, 2}}, {"x", {2, 1}}}); }));
  CHECK(throws_code(ErrorCode::SizeMismatch, [] { make_network(3, {{"x", {1, 2}}}); }));
  CHECK(throws_code(ErrorCode::EmptyNetwork, [] { make_network(0, {}); }));
}

TEST_CASE("monoid_closure of fig2 adds exactly [2,2,2]", "[network]") {
  const Network net = fig2();
  std::vector<InputMap> maps;
  for (const auto& a : net.arrows) maps.push_back(a.map);
  const Monoid m = monoid_closure(maps);
  REQUIRE(m.size() == 5);
  CHECK(m.elements.back().one_based() == std::vector<long long>{2, 2, 2});
  CHECK(m.elements[m.unit].is_identity());

  std::vector<RawMap> gens;
  for (const auto& a : net.arrows) gens.push_back(raw(a.map));
  const auto oracle = brute_closure(gens);
  std::set<RawMap> got;
  for (const auto& e : m.elements) got.insert(raw(e));
  CHECK(got == oracle);
}

TEST_CASE("monoid_closure small cases", "[network]") {
  CHECK(monoid_closure({InputMap::identity(4)}).size() == 1);
  const Monoid c4 = monoid_closure({InputMap::from_one_based({2, 3, 4, 1})});
  CHECK(c4.size() == 4);
  CHECK(brute_closure({RawMap{1, 2, 3, 0}}).size() == 4);
  for (std::size_t a = 0; a < c4.size(); ++a)
    for (std::size_t b = 0; b < c4.size(); ++b)
      CHECK(c4.elements[c4.product(a, b)] == c4.elements[a].after(c4.elements[b]));
}

TEST_CASE("monoid_closure honours the cap", "[network]") {
  // Full transformation monoid on 4 points has 256 elements; two generators reach all of S4 plus more.
  std::vector<InputMap> gens{InputMap::from_one_based({2, 3, 4, 1}), InputMap::from_one_based({2, 1, 3, 4}),
                             InputMap::from_one_based({1, 1, 3, 4})};
  CHECK(monoid_closure(gens).size() == 256);
  CHECK(throws_code(ErrorCode::ClosureCapExceeded, [&] { monoid_closure(gens, 100); }));
}

TEST_CASE("completion of fig2 is the network of fig3left", "[network]") {
  const Completion comp = completion(fig2());
  CHECK(comp.network.arrows.size() == 5);
  CHECK(comp.monoid.size() == 5);
  CHECK(comp.network.arrows.back().map.one_based() == std::vector<long long>{2, 2, 2});
  for (std::size_t i = 0; i < 4; ++i) CHECK(comp.network.arrows[i] == fig2().arrows[i]);

  const Completion again = completion(fig3_left());
  CHECK(again.network == fig3_left());

  const Completion single = completion(make_network(1, {{"e", {1}}}));
  CHECK(single.network.arrows.size() == 1);
  CHECK(single.monoid.size() == 1);
}

TEST_CASE("completion names the identity after a given identity arrow", "[network]") {
  const Completion comp = completion(make_network(2, {{"id", {2, 1}}}));
  CHECK(comp.monoid.size() == 2);
  CHECK(comp.monoid.elements[comp.monoid.unit].is_identity());
  CHECK(comp.monoid.names[comp.monoid.unit] != "id");
  CHECK(comp.aliases == std::vector<std::pair<std::string, std::size_t>>{{"id", 1}});
}

TEST_CASE("fig3left fundamental network", "[network]") {
  const Network f = fundamental_network(monoid_of(fig3_left()));
  REQUIRE(f.node_count == 5);
  // Rows of Γ_f: node σ receives its τ-input from τ∘σ.
  CHECK(f.map("A").one_based() == std::vector<long long>{1, 2, 3, 4, 5});
  CHECK(f.map("B").one_based() == std::vector<long long>{2, 1, 3, 5, 4});
  CHECK(f.map("C").one_based() == std::vector<long long>{3, 3, 3, 3, 3});
  CHECK(f.map("D").one_based() == std::vector<long long>{4, 4, 4, 4, 4});
  CHECK(f.map("E").one_based() == std::vector<long long>{5, 5, 5, 5, 5});
}

TEST_CASE("fundamental network of trivial and cyclic monoids", "[network]") {
  const Network one = fundamental_network(monoid_closure({InputMap::identity(3)}));
  CHECK(one.node_count == 1);
  CHECK(one.arrows.size() == 1);
  CHECK(one.arrows[0].map.is_identity());

  const Monoid c4 = monoid_closure({InputMap::from_one_based({2, 3, 4, 1})});
  const Network ring = fundamental_network(c4);
  CHECK(ring.node_count == 4);
  for (const auto& a : ring.arrows) {
    // Every arrow of the ring is a permutation (shift).
    auto t = a.map.one_based();
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<long long>{1, 2, 3, 4});
  }
  std::set<RawMap> shifts;
  for (const auto& a : ring.arrows) shifts.insert(raw(a.map));
  CHECK(shifts.size() == 4);
}

TEST_CASE("input networks", "[network]") {
  for (std::size_t p = 0; p < 3; ++p) {
    const auto [sub, nodes] = input_network(fig2(), p);
    CHECK(sub.node_count == 3);
    CHECK(nodes.size() == 3);
  }
  const Network blue = make_network(3, {{"d", {3, 3, 3}}});
  const auto [sub3, nodes3] = input_network(blue, 2);
  CHECK(nodes3 == std::vector<std::size_t>{2});
  CHECK(sub3.node_count == 1);
  CHECK(sub3.map("d").is_identity());
  const auto [sub1, nodes1] = input_network(blue, 0);
  CHECK(nodes1 == std::vector<std::size_t>{0, 2});

  const Network loose = make_network(2, {{"e", {1, 2}}});
  CHECK(input_network(loose, 0).second == std::vector<std::size_t>{0});
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { input_network(loose, 5); }));
}

TEST_CASE("fibrations from the fig3left fundamental network onto fig3left", "[network]") {
  const Network left = fig3_left();
  const Network right = fundamental_network(monoid_of(left));
  CHECK(is_fibration(right, left, Fibration{{0, 0, 0, 2, 1}}));
  CHECK_FALSE(is_fibration(right, left, Fibration{{0, 0, 0, 0, 0}}));
  CHECK(is_fibration(left, left, Fibration{{0, 1, 2}}));
  CHECK(throws_code(ErrorCode::LabelMismatch, [&] { is_fibration(fig2(), left, Fibration{{0, 1, 2}}); }));
}

TEST_CASE("balanced partitions", "[network]") {
  CHECK(is_balanced(fig3_left(), Partition::from_classes(3, {{1}, {2, 3}})));
  CHECK_FALSE(is_balanced(fig3_left(), Partition::from_classes(3, {{1, 2}, {3}})));
  CHECK(is_balanced(fig3_left(), Partition{{0, 1, 2}}));
  CHECK(is_balanced(exam44(), Partition::from_classes(3, {{1, 2}, {3}})));
}

TEST_CASE("quotient of fig2x by {1,2},{3,4}", "[network]") {
  const auto [q, f] = quotient(fig2x(), Partition::from_classes(4, {{1, 2}, {3, 4}}));
  REQUIRE(q.node_count == 2);
  const Eigen::MatrixXcd g =
      scalar_gamma(q, {{"A", 1.0}, {"B", 10.0}, {"C", 100.0}, {"D", 1e3}, {"E", 1e4}, {"F", 1e5}});
  CHECK(g(0, 0) == Complex(111.0));
  CHECK(g(0, 1) == Complex(111000.0));
  CHECK(g(1, 0) == Complex(110.0));
  CHECK(g(1, 1) == Complex(111001.0));
  CHECK(f.node_map == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(is_fibration(fig2x(), q, f));
}

TEST_CASE("quotients by the finest and coarsest partitions", "[network]") {
  const Network net = fig3_left();
  CHECK(quotient(net, Partition{{0, 1, 2}}).first == net);
  const Network point = quotient(net, Partition{{0, 0, 0}}).first;
  CHECK(point.node_count == 1);
  for (const auto& a : point.arrows) CHECK(a.map.is_identity());
  CHECK(throws_code(ErrorCode::NotBalanced, [&] { quotient(net, Partition{{0, 0, 1}}); }));
}

TEST_CASE("enumerate_balanced_partitions", "[network]") {
  CHECK(enumerate_balanced_partitions(make_network(1, {{"e", {1}}})).size() == 1);

  const auto parts = enumerate_balanced_partitions(fig3_left());
  auto has = [&](const Partition& p) { return std::find(parts.begin(), parts.end(), p) != parts.end(); };
  CHECK(has(Partition::from_classes(3, {{1}, {2, 3}})));
  CHECK(has(Partition{{0, 0, 0}}));
  CHECK(parts.front().class_count() == 1);

  // Ring on 4 nodes: brute-force filter of all 15 partitions.
  const Network ring = circulant_network(4);
  const auto ring_parts = enumerate_balanced_partitions(ring);
  CHECK(std::find(ring_parts.begin(), ring_parts.end(), Partition::from_classes(4, {{1, 3}, {2, 4}})) !=
        ring_parts.end());
  std::size_t oracle = 0;
  for (int code = 0; code < 64; ++code) {
    std::vector<std::size_t> lab{0, static_cast<std::size_t>(code % 4), static_cast<std::size_t>((code / 4) % 4),
                                 static_cast<std::size_t>((code / 16) % 4)};
    const Partition p = Partition::normalized(lab);
    if (p.class_of != lab) continue;  // count each set partition once
    bool ok = true;
    for (const auto& a : ring.arrows)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          if (lab[x] == lab[y] && lab[a.map(x)] != lab[a.map(y)]) ok = false;
    if (ok) ++oracle;
  }
  CHECK(ring_parts.size() == oracle);
  CHECK(throws_code(ErrorCode::TooLarge, [] { enumerate_balanced_partitions(circulant_network(13)); }));
}

TEST_CASE("constructibility", "[network]") {
  const Monoid m = monoid_of(fig3_left());
  CHECK(is_constructible(fig5_left(), m));
  CHECK(is_constructible(fundamental_network(m), m));
  CHECK(is_constructible(fig3_left(), m));
  // Red and green swapped on node 1: red∘red is no longer the identity.
  const Network swapped = make_network(5, {{"A", {1, 2, 3, 4, 5}},
                                           {"B", {3, 1, 3, 4, 5}},
                                           {"C", {2, 3, 3, 3, 3}},
                                           {"D", {4, 4, 4, 4, 4}},
                                           {"E", {4, 4, 4, 4, 4}}});
  CHECK_FALSE(is_constructible(swapped, m));
  CHECK(throws_code(ErrorCode::LabelMismatch, [&] { is_constructible(fig2(), m); }));
}

TEST_CASE("disjoint unions", "[network]") {
  const Network one = make_network(1, {{"a", {1}}, {"b", {1}}});
  const Network two = disjoint_union(one, one);
  CHECK(two.node_count == 2);
  for (const auto& a : two.arrows) CHECK(a.map.fixed_points() == 2);

  const Monoid m = monoid_of(fig3_left());
  const Network u = disjoint_union(fig3_left(), fundamental_network(m));
  CHECK(u.node_count == 8);
  CHECK(is_constructible(u, m));
  CHECK(is_constructible(disjoint_union(fig5_left(), u), m));
}

TEST_CASE("circulant networks", "[network]") {
  const Network ring = circulant_network(4);
  const Eigen::MatrixXcd g = scalar_gamma(ring, {{"s0", 1.0}, {"s1", 2.0}, {"s2", 3.0}, {"s3", 4.0}});
  // Rows "A B C D / D A B C / C D A B / B C D A".
  Eigen::MatrixXcd expected(4, 4);
  expected << 1, 2, 3, 4, 4, 1, 2, 3, 3, 4, 1, 2, 2, 3, 4, 1;
  CHECK(g == expected);

  const Network single = circulant_network(1);
  CHECK(single.node_count == 1);
  CHECK(single.arrows.size() == 1);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(monoid_of(circulant_network(n)).size() == n);
}
