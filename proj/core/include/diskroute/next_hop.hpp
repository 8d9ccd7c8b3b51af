#pragma once

#include <vector>

#include "diskroute/unit_disk_graph.hpp"

namespace diskroute {

/// All-pairs next-hop map for the constant-size regime (diameter below 2):
/// table-free routing is overkill there, one hop per lookup suffices.
struct NextHopTable {
  int n = 0;
  std::vector<std::vector<SiteId>> next;  // next[s][t]; -1 unreachable, s==t

  bool operator==(const NextHopTable&) const = default;
};

NextHopTable build_next_hop_table(const UnitDiskGraph& g);

/// Shortest path s -> t by following next hops; empty if unreachable.
std::vector<SiteId> next_hop_path(const NextHopTable& table, SiteId s,
                                  SiteId t);

}  // namespace diskroute
