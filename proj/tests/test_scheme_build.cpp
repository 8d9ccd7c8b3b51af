#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskroute/error.hpp"
#include "diskroute/middle_site.hpp"
#include "diskroute/scheme.hpp"
#include "diskroute/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diskroute;

TEST_CASE("bits_for is ceil(log2(v+1))") {
  CHECK(bits_for(0) == 0);
  CHECK(bits_for(1) == 1);
  CHECK(bits_for(2) == 2);
  CHECK(bits_for(100) == 7);
  CHECK(bits_for(300) == 9);
}

TEST_CASE("choose_c") {
  CHECK(choose_c(1.0, 2.0) == 200.0);
  CHECK(choose_c(0.5, 4.0) == 800.0);
  SUBCASE("floor of 13 for large epsilon") {
    CHECK(choose_c(100.0, 2.0) == 13.0);
    CHECK(choose_c(1e9, 1e9) == 13.0);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(choose_c(0.0, 4.0), Error);
    CHECK_THROWS_AS(choose_c(1.0, 1.5), Error);
  }
}

TEST_CASE("middle_site") {
  SUBCASE("unit chain of 7: the exact midpoint") {
    const auto g = build_udg(fixtures::chain(7));
    const auto spt = shortest_paths(g, 0);
    CHECK(middle_site(spt, 6) == 3);
  }
  SUBCASE("unit chain of 6: tie goes to the vertex nearer the source") {
    const auto g = build_udg(fixtures::chain(6));
    const auto spt = shortest_paths(g, 0);
    CHECK(middle_site(spt, 5) == 2);  // max{2,3} = max{3,2}, p2 is nearer
  }
  SUBCASE("minimizes the path maximum against independent distances") {
    const auto g = build_udg(fixtures::uniform(40, 51));
    const auto d = oracles::all_pairs(g);
    for (SiteId s : {0, 7, 19}) {
      const auto spt = shortest_paths(g, s);
      for (SiteId t = 0; t < g.n(); ++t) {
        if (t == s || spt.dist[t] == kInf) continue;
        const SiteId mid = middle_site(spt, t);
        const double achieved = std::max(d[s][mid], d[mid][t]);
        double best = kInf;
        for (SiteId v = t; v != -1; v = spt.parent[v]) {
          best = std::min(best, std::max(d[s][v], d[v][t]));
        }
        CHECK(achieved <= best + 1e-9);
      }
    }
  }
  SUBCASE("unreachable target is an error") {
    const auto g = build_udg({{0, {0, 0}}, {1, {9, 9}}});
    const auto spt = shortest_paths(g, 0);
    CHECK_THROWS_AS(middle_site(spt, 1), Error);
  }
}

TEST_CASE("compute_middle_sites_fast") {
  SUBCASE("chain agrees with the per-target scan") {
    const auto g = build_udg(fixtures::chain(25));
    const auto spt = shortest_paths(g, 0);
    const auto fast = compute_middle_sites_fast(g, 0);
    for (SiteId t = 1; t < g.n(); ++t) {
      CHECK(fast.middle[t] == middle_site(spt, t));
    }
  }
  SUBCASE("star: the hub is the middle of opposite leaves") {
    std::vector<Site> sites{{0, {0, 0}}};
    for (int k = 0; k < 6; ++k) {
      const double a = k * M_PI / 3.0;
      sites.push_back({k + 1, {std::cos(a), std::sin(a)}});
    }
    const auto g = build_udg(sites);
    const auto fast = compute_middle_sites_fast(g, 1);
    CHECK(fast.middle[4] == 0);  // leaf at angle 0 to the leaf at angle pi
  }
  SUBCASE("full agreement with the scan oracle on random instances") {
    for (std::uint64_t seed : {61ULL, 62ULL}) {
      const auto g = build_udg(fixtures::uniform(100, seed));
      for (SiteId s : {0, 31, 77}) {
        const auto spt = shortest_paths(g, s);
        const auto fast = compute_middle_sites_fast(spt);
        std::int64_t mismatches = 0;
        for (SiteId t = 0; t < g.n(); ++t) {
          if (t == s || spt.dist[t] == kInf) continue;
          if (fast.middle[t] != middle_site(spt, t)) ++mismatches;
        }
        CHECK(mismatches == 0);
      }
    }
  }
  SUBCASE("heap work stays within the 2n budget") {
    const auto g = build_udg(fixtures::uniform(100, 63));
    const auto fast = compute_middle_sites_fast(g, 0);
    const std::int64_t n = g.n();
    CHECK(fast.counts.inserts <= 2 * n);
    CHECK(fast.counts.extracts <= 2 * n);
  }
}

TEST_CASE("assign_pairs") {
  SUBCASE("round robin: 10 pairs over a 5-site node is 2 each") {
    Hierarchy h;
    h.nodes.resize(7);
    for (int i = 0; i < 5; ++i) {
      h.nodes[i].site = i;
      h.nodes[i].size = 1;
      h.nodes[i].lo = h.nodes[i].hi = i + 1;
    }
    h.nodes[5].size = 5;
    h.nodes[5].lo = 1;
    h.nodes[5].hi = 5;
    h.nodes[5].child[0] = 0;
    h.nodes[5].child[1] = 1;
    h.nodes[6].site = 5;
    h.nodes[6].size = 1;
    h.nodes[6].lo = h.nodes[6].hi = 6;
    h.leaf_of = {0, 1, 2, 3, 4, 6};
    h.site_label = {1, 2, 3, 4, 5, 6};
    h.label_site = {-1, 0, 1, 2, 3, 4, 5};
    Wspd w;
    w.c = 13.0;
    for (int i = 0; i < 10; ++i) w.pairs.push_back({5, 6, 0, 5});
    const auto per_site = assign_pairs(w, h);
    for (int s = 0; s < 5; ++s) CHECK(per_site[s].size() == 2);
    CHECK(per_site[5].size() == 10);  // the singleton side stores them all
  }
  SUBCASE("every oriented pair is stored exactly once, balanced per node") {
    const auto a = build_scheme_artifacts(fixtures::cluster_walk(60, 20, 71),
                                          1.0, 13.0);
    const auto per_site = assign_pairs(a.wspd, a.hierarchy);
    std::vector<int> forward(a.wspd.pairs.size(), 0);
    std::vector<int> backward(a.wspd.pairs.size(), 0);
    std::vector<std::map<int, int>> node_load(a.hierarchy.nodes.size());
    for (SiteId s = 0; s < a.graph.n(); ++s) {
      for (const OrientedAssignment& oa : per_site[s]) {
        (oa.reversed ? backward : forward)[oa.pair_index] += 1;
        const WspdPair& p = a.wspd.pairs[oa.pair_index];
        node_load[oa.reversed ? p.v : p.u][s] += 1;
      }
    }
    for (std::size_t i = 0; i < a.wspd.pairs.size(); ++i) {
      CHECK(forward[i] == 1);
      CHECK(backward[i] == 1);
    }
    for (std::size_t node = 0; node < node_load.size(); ++node) {
      const int count = a.wspd.per_node_count[node];
      const int size = a.hierarchy.node(static_cast<int>(node)).size;
      const int cap = (count + size - 1) / size;
      for (auto [site, load] : node_load[node]) CHECK(load <= cap);
    }
  }
}

TEST_CASE("build_scheme") {
  SUBCASE("two adjacent sites: one singleton pair, no middle sites") {
    const auto s = build_scheme(fixtures::chain(2), 1.0, 13.0);
    CHECK(s.stats.pair_count == 1);
    for (const auto& entries : s.global) {
      REQUIRE(entries.size() == 1);
      CHECK(entries[0].middle == 0);
    }
  }
  SUBCASE("chain of 40 at c=13: stored middles match the scan oracle") {
    const auto a =
        build_scheme_artifacts(fixtures::chain(40), 1.0, 13.0);
    const auto assignments = assign_pairs(a.wspd, a.hierarchy);
    std::int64_t with_middle = 0;
    for (SiteId r = 0; r < a.graph.n(); ++r) {
      const auto spt = shortest_paths(a.graph, r);
      for (const OrientedAssignment& oa : assignments[r]) {
        const WspdPair& p = a.wspd.pairs[oa.pair_index];
        const int v_node = oa.reversed ? p.u : p.v;
        const SiteId rep = oa.reversed ? p.rep_u : p.rep_v;
        const GlobalEntry* e =
            a.scheme.match(r, a.hierarchy.node(v_node).lo);
        REQUIRE(e != nullptr);
        if (a.graph.edge_weight(r, rep).has_value()) {
          CHECK(e->middle == 0);
        } else {
          ++with_middle;
          REQUIRE(e->middle != 0);
          CHECK(e->middle == a.scheme.site_label[middle_site(spt, rep)]);
        }
      }
    }
    CHECK(with_middle > 0);
  }
  SUBCASE("middle-site detour/halving bounds hold at distance >= c") {
    const auto sites = fixtures::cluster_walk(90, 40, 73);
    const auto a = build_scheme_artifacts(sites, 1.0, 13.0);
    const auto d = all_pairs_distances(a.graph);
    REQUIRE(a.scheme.diameter >= 13.0);  // the checks must not be vacuous
    const AuditResult r = audit_middle_site_bounds(a, d);
    CHECK(r.pass);
    INFO(r.detail);
    CHECK(r.detail.find("0 stored") != 0);
  }
  SUBCASE("random 100-site instance at eps 0.5 has 7-bit labels") {
    const auto s = build_scheme(fixtures::uniform(100, 77), 0.5);
    CHECK(s.stats.label_bits == 7);
    CHECK(s.label_bits() == 7);
  }
  SUBCASE("c override must respect the middle-site floor") {
    CHECK_THROWS_AS(build_scheme(fixtures::chain(10), 1.0, 12.0), Error);
  }
  SUBCASE("disconnected input is rejected with component witnesses") {
    CHECK_THROWS_WITH_AS(
        build_scheme({{0, {0, 0}}, {1, {5, 5}}}, 1.0),
        doctest::Contains("different components"), Error);
  }
  SUBCASE("small diameter without an override is rejected") {
    CHECK_THROWS_AS(build_scheme(fixtures::chain(2), 1.0), Error);
  }
}
