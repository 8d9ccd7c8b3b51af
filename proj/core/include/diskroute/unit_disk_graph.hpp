#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "diskroute/geometry.hpp"

namespace diskroute {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct UdEdge {
  SiteId to = -1;
  double weight = 0.0;

  bool operator==(const UdEdge&) const = default;
};

/// Unit disk graph: an edge between distinct sites s, t iff |st| <= 1,
/// weighted by the Euclidean distance. Immutable once built.
struct UnitDiskGraph {
  std::vector<Site> sites;
  std::vector<std::vector<UdEdge>> adj;  // per site, sorted by neighbor id

  int n() const { return static_cast<int>(sites.size()); }

  /// Edge weight if s and t are adjacent (s != t, |st| <= 1).
  std::optional<double> edge_weight(SiteId s, SiteId t) const;

  bool operator==(const UnitDiskGraph&) const = default;
};

/// Builds the unit disk graph. The closed threshold |st| <= 1 is taken
/// literally with exact double comparison. Coincident sites are adjacent
/// with weight-0 edges. Throws on non-finite coordinates or non-contiguous
/// ids.
UnitDiskGraph build_udg(std::vector<Site> sites);

struct ShortestPathTree {
  SiteId source = -1;
  std::vector<double> dist;    // kInf for unreachable
  std::vector<SiteId> parent;  // -1 at the source and unreachable sites
};

/// Dijkstra from `source`. Ties are settled by site id so parent trees are
/// reproducible across runs.
ShortestPathTree shortest_paths(const UnitDiskGraph& g, SiteId source);

/// Per-site component index, components numbered by smallest member id.
std::vector<int> connected_components(const UnitDiskGraph& g);

/// Diameter of each connected component (max shortest-path distance),
/// indexed like the component numbering of connected_components().
std::vector<double> component_diameters(const UnitDiskGraph& g);

/// Max shortest-path distance over ordered pairs; on disconnected input the
/// max over per-component diameters.
double graph_diameter(const UnitDiskGraph& g);

/// Upper bound on the density (max sites in any unit disk) via a 1x1 grid:
/// the max total count over any 3x3 block of cells. Any unit disk fits in
/// such a block.
int density_upper_bound(const std::vector<Site>& sites);

}  // namespace diskroute
