#include "diskroute/next_hop.hpp"

#include "diskroute/error.hpp"

namespace diskroute {

NextHopTable build_next_hop_table(const UnitDiskGraph& g) {
  const int n = g.n();
  NextHopTable table;
  table.n = n;
  table.next.assign(n, std::vector<SiteId>(n, -1));
  for (int s = 0; s < n; ++s) {
    const ShortestPathTree spt = shortest_paths(g, s);
    for (int t = 0; t < n; ++t) {
      if (t == s || spt.dist[t] == kInf) continue;
      SiteId hop = t;
      while (spt.parent[hop] != s) hop = spt.parent[hop];
      table.next[s][t] = hop;
    }
  }
  return table;
}

std::vector<SiteId> next_hop_path(const NextHopTable& table, SiteId s,
                                  SiteId t) {
  std::vector<SiteId> path{s};
  SiteId cur = s;
  int guard = 0;
  while (cur != t) {
    cur = table.next[cur][t];
    if (cur < 0) return {};
    path.push_back(cur);
    if (++guard > table.n) throw Error("next_hop_path: cycle in table");
  }
  return path;
}

}  // namespace diskroute
