#include "diskroute/emst.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "diskroute/error.hpp"

namespace diskroute {

Emst build_emst(const UnitDiskGraph& g) {
  const int n = g.n();
  Emst t;
  t.n = n;
  t.neighbors.assign(n, {});
  if (n == 1) return t;

  // Prim with a lazy queue keyed by (weight, min id, max id). All keys are
  // distinct, so the MST is unique and matches a Kruskal run under the
  // same order.
  using Key = std::tuple<double, SiteId, SiteId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pq;
  std::vector<char> in_tree(n, 0);
  auto add_vertex = [&](SiteId u) {
    in_tree[u] = 1;
    for (const UdEdge& e : g.adj[u]) {
      if (!in_tree[e.to]) {
        auto [a, b] = make_edge(u, e.to);
        pq.push({e.weight, a, b});
      }
    }
  };
  add_vertex(0);
  int joined = 1;
  while (joined < n && !pq.empty()) {
    auto [w, a, b] = pq.top();
    pq.pop();
    if (in_tree[a] && in_tree[b]) continue;
    SiteId fresh = in_tree[a] ? b : a;
    t.edges.push_back({a, b});
    t.neighbors[a].push_back(b);
    t.neighbors[b].push_back(a);
    add_vertex(fresh);
    ++joined;
  }
  if (joined < n) {
    SiteId other = -1;
    for (int v = 0; v < n && other < 0; ++v)
      if (!in_tree[v]) other = v;
    throw Error("build_emst: UD(S) is disconnected (site 0 and site " +
                std::to_string(other) + " are in different components)");
  }
  std::sort(t.edges.begin(), t.edges.end());

  for (int s = 0; s < n; ++s) {
    const Point& o = g.sites[s].pos;
    std::sort(t.neighbors[s].begin(), t.neighbors[s].end(),
              [&](SiteId a, SiteId b) {
                const double aa =
                    std::atan2(g.sites[a].pos.y - o.y, g.sites[a].pos.x - o.x);
                const double ab =
                    std::atan2(g.sites[b].pos.y - o.y, g.sites[b].pos.x - o.x);
                if (aa != ab) return aa < ab;
                return a < b;
              });
  }
  return t;
}

}  // namespace diskroute
