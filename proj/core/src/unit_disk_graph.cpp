#include "diskroute/unit_disk_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "diskroute/error.hpp"

namespace diskroute {

std::optional<double> UnitDiskGraph::edge_weight(SiteId s, SiteId t) const {
  const auto& row = adj[s];
  auto it = std::lower_bound(
      row.begin(), row.end(), t,
      [](const UdEdge& e, SiteId id) { return e.to < id; });
  if (it != row.end() && it->to == t) return it->weight;
  return std::nullopt;
}

UnitDiskGraph build_udg(std::vector<Site> sites) {
  if (sites.empty()) throw Error("build_udg: empty site set");
  const int n = static_cast<int>(sites.size());
  std::sort(sites.begin(), sites.end(),
            [](const Site& a, const Site& b) { return a.id < b.id; });
  for (int i = 0; i < n; ++i) {
    if (sites[i].id != i)
      throw Error("build_udg: site ids must be contiguous 0..n-1");
    if (!std::isfinite(sites[i].pos.x) || !std::isfinite(sites[i].pos.y))
      throw Error("build_udg: non-finite coordinate at site " +
                  std::to_string(i));
  }

  UnitDiskGraph g;
  g.adj.assign(n, {});
  UniformGrid grid(sites, 1.0);
  for (int i = 0; i < n; ++i) {
    for (SiteId j : grid.sites_within(sites[i].pos, 1.0)) {
      if (j == i) continue;
      g.adj[i].push_back({j, dist(sites[i], sites[j])});
    }
  }
  g.sites = std::move(sites);
  return g;
}

ShortestPathTree shortest_paths(const UnitDiskGraph& g, SiteId source) {
  const int n = g.n();
  if (source < 0 || source >= n) throw Error("shortest_paths: bad source");
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, kInf);
  t.parent.assign(n, -1);
  t.dist[source] = 0.0;

  using Entry = std::pair<double, SiteId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  pq.push({0.0, source});
  std::vector<char> settled(n, 0);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const UdEdge& e : g.adj[u]) {
      const double nd = d + e.weight;
      if (nd < t.dist[e.to]) {
        t.dist[e.to] = nd;
        t.parent[e.to] = u;
        pq.push({nd, e.to});
      }
    }
  }
  return t;
}

std::vector<int> connected_components(const UnitDiskGraph& g) {
  const int n = g.n();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<SiteId> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int c = next++;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      SiteId u = stack.back();
      stack.pop_back();
      for (const UdEdge& e : g.adj[u]) {
        if (comp[e.to] == -1) {
          comp[e.to] = c;
          stack.push_back(e.to);
        }
      }
    }
  }
  return comp;
}

std::vector<double> component_diameters(const UnitDiskGraph& g) {
  const std::vector<int> comp = connected_components(g);
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<double> diam(k, 0.0);
  for (int s = 0; s < g.n(); ++s) {
    ShortestPathTree t = shortest_paths(g, s);
    for (int v = 0; v < g.n(); ++v) {
      if (t.dist[v] != kInf && t.dist[v] > diam[comp[s]])
        diam[comp[s]] = t.dist[v];
    }
  }
  return diam;
}

double graph_diameter(const UnitDiskGraph& g) {
  double best = 0.0;
  for (double d : component_diameters(g)) best = std::max(best, d);
  return best;
}

int density_upper_bound(const std::vector<Site>& sites) {
  if (sites.empty()) return 0;
  UniformGrid grid(sites, 1.0);
  const auto& cells = grid.cells();
  auto count_at = [&](std::int64_t ax, std::int64_t ay) {
    int total = 0;
    for (std::int64_t dx = 0; dx < 3; ++dx) {
      for (std::int64_t dy = 0; dy < 3; ++dy) {
        auto it = cells.find(UniformGrid::key(ax + dx, ay + dy));
        if (it != cells.end()) total += static_cast<int>(it->second.size());
      }
    }
    return total;
  };
  int best = 0;
  for (const Site& s : sites) {
    const std::int64_t cx = grid.cell_of(s.pos.x);
    const std::int64_t cy = grid.cell_of(s.pos.y);
    // every 3x3 block containing this cell
    for (std::int64_t dx = -2; dx <= 0; ++dx) {
      for (std::int64_t dy = -2; dy <= 0; ++dy) {
        best = std::max(best, count_at(cx + dx, cy + dy));
      }
    }
  }
  return best;
}

}  // namespace diskroute
