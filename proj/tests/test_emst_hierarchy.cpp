#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "diskroute/error.hpp"
#include "diskroute/hierarchy.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diskroute;

namespace {

Hierarchy hierarchy_of(Emst& tree) {
  Hierarchy h = build_hierarchy(tree);
  assign_labels(h);
  return h;
}

// Component of `from` in the forest of EMST edges with level >= min_level.
std::set<SiteId> forest_component(const Emst& tree, SiteId from,
                                  int min_level) {
  std::set<SiteId> seen{from};
  std::vector<SiteId> stack{from};
  while (!stack.empty()) {
    SiteId u = stack.back();
    stack.pop_back();
    for (SiteId v : tree.neighbors[u]) {
      if (seen.count(v)) continue;
      if (tree.edge_level.at(make_edge(u, v)) < min_level) continue;
      seen.insert(v);
      stack.push_back(v);
    }
  }
  return seen;
}

std::set<SiteId> node_sites(const Hierarchy& h, int node) {
  std::set<SiteId> out;
  for (Label l = h.node(node).lo; l <= h.node(node).hi; ++l) {
    out.insert(h.label_site[l]);
  }
  return out;
}

}  // namespace

TEST_CASE("build_emst") {
  SUBCASE("triangle keeps its two shortest sides") {
    // side lengths 0.6, 0.8, 0.9
    const double x = (0.64 - 0.81 + 0.36) / 1.2;
    const double y = std::sqrt(0.64 - x * x);
    const auto g =
        build_udg({{0, {0, 0}}, {1, {0.6, 0}}, {2, {x, y}}});
    REQUIRE(dist(g.sites[0], g.sites[2]) == doctest::Approx(0.8).epsilon(1e-12));
    REQUIRE(dist(g.sites[1], g.sites[2]) == doctest::Approx(0.9).epsilon(1e-12));
    const Emst t = build_emst(g);
    CHECK(t.edges == std::vector<TreeEdge>{{0, 1}, {0, 2}});
  }
  SUBCASE("unit chain is its own EMST") {
    const auto g = build_udg(fixtures::chain(6));
    const Emst t = build_emst(g);
    REQUIRE(t.edges.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(t.edges[i] == TreeEdge{i, i + 1});
  }
  SUBCASE("agrees with the sorted-edge greedy oracle") {
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
      const auto g = build_udg(fixtures::uniform(15, seed));
      const Emst t = build_emst(g);
      const auto expect = oracles::kruskal_mst(g);
      CHECK(t.edges == expect);
      CHECK(oracles::tree_weight(g, t.edges) ==
            doctest::Approx(oracles::tree_weight(g, expect)).epsilon(1e-12));
    }
  }
  SUBCASE("disconnected input names two components") {
    const auto g = build_udg({{0, {0, 0}}, {1, {9, 0}}});
    CHECK_THROWS_WITH_AS(build_emst(g),
                         doctest::Contains("different components"), Error);
  }
  SUBCASE("neighbor lists are counterclockwise") {
    const auto g = build_udg(fixtures::uniform(40, 5));
    const Emst t = build_emst(g);
    for (int s = 0; s < t.n; ++s) {
      for (std::size_t i = 1; i < t.neighbors[s].size(); ++i) {
        const auto angle = [&](SiteId v) {
          return std::atan2(g.sites[v].pos.y - g.sites[s].pos.y,
                            g.sites[v].pos.x - g.sites[s].pos.x);
        };
        CHECK(angle(t.neighbors[s][i - 1]) <= angle(t.neighbors[s][i]));
      }
    }
  }
  SUBCASE("degree stays at most 6 in general position") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
      const auto g = build_udg(fixtures::uniform(80, seed));
      const Emst t = build_emst(g);
      for (int s = 0; s < t.n; ++s) CHECK(t.degree(s) <= 6);
    }
  }
}

TEST_CASE("balanced_edge") {
  SUBCASE("two sites split 1/1") {
    const auto g = build_udg(fixtures::chain(2));
    Emst t = build_emst(g);
    CHECK(balanced_edge(t, {0, 1}) == TreeEdge{0, 1});
  }
  SUBCASE("path of 7 splits {3,4}") {
    const auto g = build_udg(fixtures::chain(7));
    Emst t = build_emst(g);
    const TreeEdge e = balanced_edge(t, {0, 1, 2, 3, 4, 5, 6});
    CHECK(e == TreeEdge{2, 3});  // sides {0,1,2} and {3,4,5,6}
  }
  SUBCASE("path of 13 splits {6,7} and every split is exhaustively best") {
    const auto g = build_udg(fixtures::chain(13));
    Emst t = build_emst(g);
    std::vector<SiteId> all(13);
    for (int i = 0; i < 13; ++i) all[i] = i;
    const TreeEdge e = balanced_edge(t, all);
    CHECK(e == TreeEdge{5, 6});
    const auto splits = oracles::edge_splits(t, all);
    int best = 0;
    for (auto [edge, side] : splits) best = std::max(best, side);
    CHECK(best == 6);
    for (auto [edge, side] : splits) {
      if (edge == e) CHECK(side == best);
      CHECK(side >= 1);
    }
    CHECK(best >= (13 - 1 + 5) / 6);  // ceil(12/6) = 2
  }
  SUBCASE("returns the exhaustive argmax with lexicographic ties") {
    const auto g = build_udg(fixtures::uniform(30, 8));
    Emst t = build_emst(g);
    std::vector<SiteId> all(30);
    for (int i = 0; i < 30; ++i) all[i] = i;
    const TreeEdge e = balanced_edge(t, all);
    const auto splits = oracles::edge_splits(t, all);
    int best = 0;
    for (auto [edge, side] : splits) best = std::max(best, side);
    TreeEdge expect{-1, -1};
    for (auto [edge, side] : splits) {
      if (side == best && (expect.first < 0 || edge < expect)) expect = edge;
    }
    CHECK(e == expect);
    CHECK(best >= (30 - 1 + 5) / 6);
  }
}

TEST_CASE("build_hierarchy") {
  SUBCASE("two sites") {
    const auto g = build_udg(fixtures::chain(2));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    REQUIRE(h.nodes.size() == 3);
    CHECK(h.node(h.root).edge == TreeEdge{0, 1});
    CHECK(t.edge_level.at({0, 1}) == 0);
    CHECK(h.height == 1);
  }
  SUBCASE("binary tree identities hold for any n") {
    for (int n : {2, 7, 23, 64}) {
      const auto g = build_udg(fixtures::chain(n));
      Emst t = build_emst(g);
      const Hierarchy h = hierarchy_of(t);
      int leaves = 0, internal = 0;
      for (const HierarchyNode& nd : h.nodes) {
        nd.is_leaf() ? ++leaves : ++internal;
      }
      CHECK(leaves == n);
      CHECK(internal == n - 1);
    }
  }
  SUBCASE("child sizes satisfy the degree-6 balance bound") {
    for (std::uint64_t seed : {2ULL, 6ULL}) {
      const auto g = build_udg(fixtures::uniform(90, seed));
      Emst t = build_emst(g);
      const Hierarchy h = hierarchy_of(t);
      for (const HierarchyNode& nd : h.nodes) {
        if (nd.is_leaf()) continue;
        const int need = (nd.size - 1 + 5) / 6;
        CHECK(h.node(nd.child[0]).size >= need);
        CHECK(h.node(nd.child[1]).size >= need);
        CHECK(h.node(nd.child[0]).size + h.node(nd.child[1]).size == nd.size);
      }
    }
  }
  SUBCASE("shrink ratio 11/12 along every edge to a parent of size >= 2") {
    const auto g = build_udg(fixtures::uniform(120, 3));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    for (const HierarchyNode& nd : h.nodes) {
      if (nd.is_leaf()) continue;
      CHECK(12 * h.node(nd.child[0]).size <= 11 * nd.size);
      CHECK(12 * h.node(nd.child[1]).size <= 11 * nd.size);
    }
  }
  SUBCASE("height is logarithmic") {
    for (int n : {10, 50, 200}) {
      const auto g = build_udg(fixtures::chain(n));
      Emst t = build_emst(g);
      const Hierarchy h = hierarchy_of(t);
      const int cap = static_cast<int>(std::ceil(
                          std::log(n) / std::log(12.0 / 11.0))) +
                      1;
      CHECK(h.height <= cap);
    }
  }
  SUBCASE("every subtree is a component of the level-filtered forest") {
    const auto g = build_udg(fixtures::uniform(40, 4));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    for (int i = 0; i < static_cast<int>(h.nodes.size()); ++i) {
      const std::set<SiteId> expect = node_sites(h, i);
      const std::set<SiteId> got =
          forest_component(t, *expect.begin(), h.node(i).depth);
      CHECK(got == expect);
    }
  }
  SUBCASE("every tree edge gets exactly one level") {
    const auto g = build_udg(fixtures::uniform(50, 12));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    CHECK(t.edge_level.size() == t.edges.size());
    for (const TreeEdge& e : t.edges) CHECK(t.edge_level.count(e) == 1);
    // levels match the depth of the removing node
    for (const HierarchyNode& nd : h.nodes) {
      if (nd.is_leaf()) continue;
      CHECK(t.edge_level.at(nd.edge) == nd.depth);
    }
  }
}

TEST_CASE("assign_labels") {
  SUBCASE("path of 7: postorder labels, intervals, golden dump") {
    const auto g = build_udg(fixtures::chain(7));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    for (int i = 0; i < 7; ++i) CHECK(h.site_label[i] == i + 1);
    CHECK(h.node(h.root).lo == 1);
    CHECK(h.node(h.root).hi == 7);
    const char* expect =
        "0 7 1 7 2 3\n"
        "1 3 1 3 0 1\n"
        "2 1 1 1 -1 -1\n"
        "2 2 2 3 1 2\n"
        "3 1 2 2 -1 -1\n"
        "3 1 3 3 -1 -1\n"
        "1 4 4 7 4 5\n"
        "2 2 4 5 3 4\n"
        "3 1 4 4 -1 -1\n"
        "3 1 5 5 -1 -1\n"
        "2 2 6 7 5 6\n"
        "3 1 6 6 -1 -1\n"
        "3 1 7 7 -1 -1\n";
    CHECK(dump_hierarchy(h) == expect);
  }
  SUBCASE("labels are a permutation of 1..n") {
    const auto g = build_udg(fixtures::uniform(33, 9));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    std::set<Label> seen(h.site_label.begin(), h.site_label.end());
    CHECK(seen.size() == 33);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 33);
  }
  SUBCASE("interval membership equals subtree membership") {
    const auto g = build_udg(fixtures::uniform(50, 15));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    Rng rng(99);
    for (int k = 0; k < 100; ++k) {
      const SiteId s = static_cast<SiteId>(rng.next_below(50));
      const int node = static_cast<int>(rng.next_below(h.nodes.size()));
      const bool by_interval = h.node(node).lo <= h.site_label[s] &&
                               h.site_label[s] <= h.node(node).hi;
      const bool by_leaves = node_sites(h, node).count(s) > 0;
      CHECK(by_interval == by_leaves);
    }
  }
  SUBCASE("sibling intervals are disjoint and adjacent") {
    const auto g = build_udg(fixtures::uniform(64, 2));
    Emst t = build_emst(g);
    const Hierarchy h = hierarchy_of(t);
    for (const HierarchyNode& nd : h.nodes) {
      if (nd.is_leaf()) continue;
      const HierarchyNode& a = h.node(nd.child[0]);
      const HierarchyNode& b = h.node(nd.child[1]);
      CHECK(a.hi + 1 == b.lo);
      CHECK(nd.lo == a.lo);
      CHECK(nd.hi == b.hi);
    }
  }
}
