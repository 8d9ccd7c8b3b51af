#pragma once

#include <string>
#include <vector>

#include "diskroute/hierarchy.hpp"

namespace diskroute {

/// A well-separated pair of hierarchy nodes with its representatives.
/// Stored unordered: one entry serves both orientations (u,v) and (v,u).
struct WspdPair {
  int u = -1, v = -1;        // hierarchy node indices
  SiteId rep_u = -1, rep_v = -1;
};

struct Wspd {
  double c = 0.0;
  std::vector<WspdPair> pairs;
  std::vector<int> per_node_count;  // pairs containing each node
};

/// The separation test written exactly as the algebraic condition:
/// (c+2) * max{|S_u|-1, |S_v|-1} <= |sigma(u) sigma(v)|.
inline bool is_well_separated(int size_u, int size_v, double rep_dist,
                              double c) {
  return (c + 2.0) * static_cast<double>(std::max(size_u - 1, size_v - 1)) <=
         rep_dist;
}

bool is_well_separated(const Hierarchy& h, const std::vector<Site>& sites,
                       int u, int v, double c);

/// Callahan-Kosaraju style greedy refinement over the hierarchy. The
/// resulting products S_u x S_v, each counted in both orientations,
/// partition the ordered distinct site pairs. Requires labels assigned
/// (representatives are the minimum-label sites).
Wspd build_wspd(const Hierarchy& h, const std::vector<Site>& sites, double c);

struct RepresentingPair {
  int pair_index = -1;
  bool reversed = false;  // true when (s,t) matches (S_v, S_u)
};

/// Test/debug oracle: the unique stored pair representing the ordered pair
/// (s, t). Throws if zero or more than one pair matches.
RepresentingPair find_representing_pair(const Wspd& w, const Hierarchy& h,
                                        SiteId s, SiteId t);

/// Dump for golden tests: |S_u| |S_v| rep_u rep_v sep_lhs sep_rhs per line.
std::string dump_wspd(const Wspd& w, const Hierarchy& h,
                      const std::vector<Site>& sites);

}  // namespace diskroute
