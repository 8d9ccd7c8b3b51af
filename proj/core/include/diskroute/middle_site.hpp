#pragma once

#include <vector>

#include "diskroute/unit_disk_graph.hpp"

namespace diskroute {

/// True when the parent m' (weakly closer to the source) is at least as
/// good a middle as m for a target at shortest-path distance d from the
/// source. Shared by the brute-force scan and the heap sweep so both pick
/// identical vertices.
inline bool parent_at_least_as_good(double dist_m, double dist_parent,
                                    double d) {
  const double fm = std::max(dist_m, d - dist_m);
  const double fp = std::max(dist_parent, d - dist_parent);
  return fp <= fm;
}

/// Middle site of the shortest-path-tree path from spt.source to target:
/// the path vertex minimizing max{d(s,m), d(m,target)}, ties broken toward
/// the vertex nearest the source along the path. Throws if target is
/// unreachable.
SiteId middle_site(const ShortestPathTree& spt, SiteId target);

struct MiddleHeapCounts {
  std::int64_t inserts = 0;
  std::int64_t melds = 0;
  std::int64_t extracts = 0;
};

struct MiddleSites {
  SiteId source = -1;
  std::vector<SiteId> middle;  // per target; -1 for unreachable, source at s
  MiddleHeapCounts counts;
};

/// Middle sites for every reachable target at once: post-order sweep of the
/// shortest path tree with meldable max-heaps keyed by d(s,t). At each
/// vertex m the candidates still owned by m's subtree are popped while m's
/// parent is not a better middle; popped targets receive middle m. Agrees
/// with middle_site on every target.
MiddleSites compute_middle_sites_fast(const UnitDiskGraph& g, SiteId s);

/// Same sweep over an existing shortest path tree.
MiddleSites compute_middle_sites_fast(const ShortestPathTree& spt);

}  // namespace diskroute
