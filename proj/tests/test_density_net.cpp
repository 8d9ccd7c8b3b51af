#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskroute/density_net.hpp"
#include "diskroute/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diskroute;

namespace {

// near-coincident clusters on a connected random walk
std::vector<Site> dense_clusters(int clusters, int per_cluster,
                                 std::uint64_t seed) {
  return fixtures::cluster_walk(clusters * per_cluster, clusters, seed,
                                /*radius=*/0.001);
}

}  // namespace

TEST_CASE("build_net") {
  SUBCASE("everything within eps1 of site 0 collapses to {0}") {
    std::vector<Site> sites;
    for (int i = 0; i < 8; ++i) sites.push_back({i, {0.01 * i, 0.0}});
    CHECK(build_net(sites, 0.5) == std::vector<SiteId>{0});
  }
  SUBCASE("sites spaced exactly eps1 are all admitted (closed packing)") {
    std::vector<Site> sites;
    for (int i = 0; i < 6; ++i) sites.push_back({i, {0.5 * i, 0.0}});
    const auto net = build_net(sites, 0.5);
    CHECK(net.size() == 6);
  }
  SUBCASE("packing and covering verified exhaustively on clusters") {
    const auto sites = dense_clusters(12, 15, 5);
    const double eps1 = 0.05;
    const auto net = build_net(sites, eps1);
    for (std::size_t i = 0; i < net.size(); ++i) {
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        CHECK(dist(sites[net[i]], sites[net[j]]) >= eps1);
      }
    }
    for (const Site& s : sites) {
      double best = kInf;
      for (SiteId r : net) best = std::min(best, dist(sites[r], s));
      CHECK(best <= eps1);
    }
  }
}

TEST_CASE("find_bridges") {
  SUBCASE("a constructed non-adjacent net pair gets its bridge") {
    const std::vector<Site> sites{
        {0, {0, 0}}, {1, {1.5, 0}}, {2, {0.25, 0}}, {3, {1.25, 0}}};
    const double eps1 = 0.5;
    const auto net = build_net(sites, eps1);
    REQUIRE(net == std::vector<SiteId>{0, 1});
    const auto bridges = find_bridges(sites, net, eps1);
    REQUIRE(bridges.size() == 1);
    CHECK(bridges[0] == Bridge{0, 1, 2, 3});
    CHECK(dump_net(build_net_sets(sites, eps1)) == "R: 0 1\n0 1 2 3\n");
  }
  SUBCASE("adjacent net sites are never bridged") {
    const std::vector<Site> sites{{0, {0, 0}}, {1, {0.9, 0}}};
    const auto net = build_net(sites, 0.5);
    REQUIRE(net.size() == 2);
    CHECK(find_bridges(sites, net, 0.5).empty());
  }
  SUBCASE("degenerate bridges with s == p are found") {
    // s can reach q directly; q sits within eps1 of t
    const std::vector<Site> sites{{0, {0, 0}}, {1, {1.4, 0}}, {2, {1.0, 0}}};
    const double eps1 = 0.5;
    const auto net = build_net(sites, eps1);
    REQUIRE(net == std::vector<SiteId>{0, 1});
    const auto bridges = find_bridges(sites, net, eps1);
    REQUIRE(bridges.size() == 1);
    CHECK(bridges[0] == Bridge{0, 1, 0, 2});
  }
  SUBCASE("recorded bridges satisfy the path definition") {
    const auto sites = dense_clusters(14, 10, 21);
    const double eps1 = 0.05;
    const auto nets = build_net_sets(sites, eps1);
    for (const Bridge& b : nets.bridges) {
      CHECK(dist(sites[b.s], sites[b.t]) > 1.0);
      CHECK(dist(sites[b.s], sites[b.p]) <= eps1);
      CHECK(dist(sites[b.q], sites[b.t]) <= eps1);
      CHECK(dist(sites[b.p], sites[b.q]) <= 1.0);
      if (b.p != b.s) CHECK(dist(sites[b.s], sites[b.p]) <= 1.0);
      if (b.q != b.t) CHECK(dist(sites[b.q], sites[b.t]) <= 1.0);
    }
  }
  SUBCASE("UD(Z) restricted to R has the component structure of UD(S)") {
    const auto sites = dense_clusters(10, 12, 9);
    const double eps1 = 1.0 / 103.0;
    const auto nets = build_net_sets(sites, eps1);
    // union-find over R through UD(Z) edges
    oracles::UnionFind uf_z(static_cast<int>(sites.size()));
    std::vector<Site> z_view;
    for (std::size_t i = 0; i < nets.z.size(); ++i)
      z_view.push_back({static_cast<SiteId>(i), sites[nets.z[i]].pos});
    const auto zg = build_udg(z_view);
    for (int u = 0; u < zg.n(); ++u) {
      for (const UdEdge& e : zg.adj[u]) {
        uf_z.unite(nets.z[u], nets.z[e.to]);
      }
    }
    // union-find over R through UD(S) connectivity
    oracles::UnionFind uf_s(static_cast<int>(sites.size()));
    const auto g = build_udg(sites);
    for (int u = 0; u < g.n(); ++u) {
      for (const UdEdge& e : g.adj[u]) uf_s.unite(u, e.to);
    }
    for (SiteId a : nets.net) {
      for (SiteId b : nets.net) {
        CHECK((uf_s.find(a) == uf_s.find(b)) ==
              (uf_z.find(a) == uf_z.find(b)));
      }
    }
  }
}

TEST_CASE("build_extended_scheme") {
  SUBCASE("already separated input keeps R = S with no bridges") {
    const auto sites = fixtures::chain(12);
    const auto ext = build_extended_scheme(sites, 1.0);
    CHECK(ext.nets.net.size() == sites.size());
    CHECK(ext.nets.bridges.empty());
    CHECK(ext.nets.z.size() == sites.size());
    for (SiteId s = 0; s < 12; ++s) CHECK(ext.closest_net[s] == s);
  }
  SUBCASE("50 coincident clusters of 10 collapse to |R| = 50") {
    std::vector<Site> sites;
    int id = 0;
    for (int k = 0; k < 50; ++k) {
      const Point c{0.6 * k, 0.0};
      for (int j = 0; j < 10; ++j) sites.push_back({id++, c});
    }
    const auto ext = build_extended_scheme(sites, 1.0);
    CHECK(ext.nets.net.size() == 50);
    for (std::size_t i = 0; i < ext.nets.net.size(); ++i) {
      for (std::size_t j = i + 1; j < ext.nets.net.size(); ++j) {
        CHECK(dist(sites[ext.nets.net[i]], sites[ext.nets.net[j]]) >=
              ext.epsilon1);
      }
    }
  }
  SUBCASE("eps1 is eps/103") {
    const auto ext = build_extended_scheme(fixtures::chain(8), 1.0);
    CHECK(ext.epsilon1 == 1.0 / 103.0);
  }
  SUBCASE("tiny Z degrades to the next-hop table") {
    std::vector<Site> sites;
    for (int i = 0; i < 30; ++i)
      sites.push_back({i, {0.001 * i, 0.0}});
    const auto ext = build_extended_scheme(sites, 1.0);
    CHECK(ext.uses_next_hop());
    const auto g = build_udg(sites);
    const auto t = route_extended(ext, g, 0, 29);
    CHECK(t.delivered);
  }
}

TEST_CASE("route_extended") {
  SUBCASE("adjacent pairs route directly at ratio 1") {
    const auto sites = dense_clusters(8, 10, 13);
    const auto ext = build_extended_scheme(sites, 1.0);
    const auto g = build_udg(sites);
    const auto d = oracles::relaxation_distances(g, 0);
    for (const UdEdge& e : g.adj[0]) {
      const auto t = route_extended(ext, g, 0, e.to);
      CHECK(t.delivered);
      CHECK(t.distance == doctest::Approx(e.weight).epsilon(1e-12));
    }
    (void)d;
  }
  SUBCASE("net-to-net pairs reduce to the inner route") {
    const auto sites = fixtures::chain(25);  // R == S here
    const auto ext = build_extended_scheme(sites, 1.0);
    REQUIRE(!ext.uses_next_hop());
    const auto g = build_udg(sites);
    const auto outer = route_extended(ext, g, 0, 24);
    const auto inner = route(std::get<RoutingScheme>(ext.inner), ext.z_graph,
                             ext.inner_index[0], ext.inner_index[24]);
    CHECK(outer.distance == doctest::Approx(inner.distance).epsilon(1e-12));
  }
  SUBCASE("dense instance meets the closed-form stretch chain") {
    const auto sites = dense_clusters(10, 30, 17);
    const double eps = 1.0;
    const auto ext = build_extended_scheme(sites, eps);
    const double e1 = ext.epsilon1;
    const auto g = build_udg(sites);
    const auto d = oracles::all_pairs(g);
    const double chain_bound =
        1.0 + 29.0 * e1 + 50.0 * e1 * e1 + 24.0 * e1 * e1 * e1;
    REQUIRE(chain_bound <= 1.0 + eps);
    for (SiteId s = 0; s < g.n(); s += 7) {
      for (SiteId t = 1; t < g.n(); t += 5) {
        if (s == t) continue;
        const auto tr = route_extended(ext, g, s, t);
        REQUIRE(tr.delivered);
        if (d[s][t] > 1.0) {
          CHECK(tr.distance <= chain_bound * d[s][t] + 1e-9);
        } else {
          CHECK(tr.distance == doctest::Approx(d[s][t]).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("the full net audit passes on a dense instance") {
    const auto sites = dense_clusters(10, 20, 23);
    const auto pairs = sample_ordered_pairs(static_cast<int>(sites.size()),
                                            600, 3);
    for (const AuditResult& r : audit_net(sites, 1.0, pairs)) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("net and Z density monitors scale with eps1") {
  const auto sites = dense_clusters(10, 30, 29);
  const auto ext = build_extended_scheme(sites, 1.0);
  std::vector<Site> net_view, z_view;
  for (std::size_t i = 0; i < ext.nets.net.size(); ++i)
    net_view.push_back({static_cast<SiteId>(i), sites[ext.nets.net[i]].pos});
  for (std::size_t i = 0; i < ext.nets.z.size(); ++i)
    z_view.push_back({static_cast<SiteId>(i), sites[ext.nets.z[i]].pos});
  const double e1 = ext.epsilon1;
  // fixture-calibrated constants; only the exponents are structural
  CHECK(density_upper_bound(net_view) <= 8.0 / (e1 * e1));
  CHECK(density_upper_bound(z_view) <= 8.0 / (e1 * e1 * e1));
}
