#pragma once

#include <map>
#include <utility>
#include <vector>

#include "diskroute/unit_disk_graph.hpp"

namespace diskroute {

using TreeEdge = std::pair<SiteId, SiteId>;  // always (min id, max id)

inline TreeEdge make_edge(SiteId a, SiteId b) {
  return a < b ? TreeEdge{a, b} : TreeEdge{b, a};
}

/// Euclidean minimum spanning tree of the site set, restricted to unit disk
/// edges (equivalent when UD(S) is connected). Neighbor lists are sorted
/// counterclockwise by angle, ties by id. Edge levels are assigned later by
/// build_hierarchy.
struct Emst {
  int n = 0;
  std::vector<TreeEdge> edges;                 // sorted lexicographically
  std::vector<std::vector<SiteId>> neighbors;  // ccw order per site
  std::map<TreeEdge, int> edge_level;          // empty until hierarchy built

  int degree(SiteId s) const { return static_cast<int>(neighbors[s].size()); }
};

/// Prim's algorithm under the total edge order (length, min id, max id);
/// the result equals the unique MST under that order. Throws on
/// disconnected input, naming two sites from different components.
Emst build_emst(const UnitDiskGraph& g);

}  // namespace diskroute
