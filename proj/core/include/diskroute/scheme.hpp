#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diskroute/middle_site.hpp"
#include "diskroute/wspd.hpp"

namespace diskroute {

/// Bits needed to store values 0..v, i.e. ceil(log2(v+1)).
int bits_for(std::int64_t v);

/// Local routing table: the EMST neighbors in counterclockwise order with
/// their edge levels, the labels of all unit-disk neighbors, and the depth
/// of the site's leaf in the hierarchy.
struct LocalTable {
  std::vector<std::pair<Label, int>> tree_neighbors;  // (label, edge level)
  std::vector<Label> ud_neighbors;                    // sorted
  int own_depth = 0;

  bool has_ud_neighbor(Label l) const;

  bool operator==(const LocalTable&) const = default;
};

/// One stored WSPD pair orientation: the target interval I_v and, when
/// sigma(v) is not a unit-disk neighbor of the storing site, the label of
/// the middle site on a shortest path from the storing site to sigma(v).
struct GlobalEntry {
  Label lo = 0, hi = 0;
  Label middle = 0;  // 0 = absent

  bool operator==(const GlobalEntry&) const = default;
};

struct SchemeStats {
  int label_bits = 0;
  int level_bits = 0;
  std::int64_t max_local_bits = 0;
  std::int64_t max_global_bits = 0;
  std::int64_t max_table_bits = 0;
  std::int64_t total_table_bits = 0;
  std::int64_t pair_count = 0;

  bool operator==(const SchemeStats&) const = default;
};

struct RoutingScheme {
  int n = 0;
  double c = 0.0;
  double epsilon = 0.0;
  double alpha = 0.0;
  double diameter = 0.0;
  int height = 0;
  std::vector<Label> site_label;   // site -> label, 1..n
  std::vector<SiteId> label_site;  // label -> site, [0] = -1
  std::vector<LocalTable> local;
  std::vector<std::vector<GlobalEntry>> global;  // per site, sorted by lo
  SchemeStats stats;

  int label_bits() const { return bits_for(n); }
  int level_bits() const { return bits_for(height); }

  /// The stored entry whose interval contains `target`, if any. Entries of
  /// one site have pairwise disjoint intervals, so at most one matches.
  const GlobalEntry* match(SiteId s, Label target) const;

  bool operator==(const RoutingScheme&) const = default;
};

/// Separation parameter from the stretch parameter and the diameter:
/// max(13, (alpha/epsilon) * log2(D)). The 13 floor is the middle-site
/// precondition. Requires epsilon > 0 and D >= 2.
double choose_c(double epsilon, double diameter, double alpha = 200.0);

struct OrientedAssignment {
  int pair_index = -1;
  bool reversed = false;  // true: this site is in S_v, targets are in S_u
};

/// Distributes both orientations of every WSPD pair: orientation (u,v) goes
/// to one site of S_u, round-robin over S_u in label order, so per-site
/// load for a node is at most ceil(count/|S_u|). Returns per-site lists.
std::vector<std::vector<OrientedAssignment>> assign_pairs(const Wspd& w,
                                                          const Hierarchy& h);

struct SchemeArtifacts {
  UnitDiskGraph graph;
  Emst emst;
  Hierarchy hierarchy;
  Wspd wspd;
  RoutingScheme scheme;
};

/// The full preprocessing pipeline: EMST, hierarchy, labels, WSPD with c
/// from choose_c (or the override), pair assignment, and middle sites for
/// every stored pair whose sigma(v) is not a unit-disk neighbor of the
/// storing site. Requires UD(S) connected; without an override also D >= 2.
RoutingScheme build_scheme(const std::vector<Site>& sites, double epsilon,
                           std::optional<double> c_override = std::nullopt,
                           double alpha = 200.0);

/// Same pipeline, returning the intermediate structures alongside the
/// scheme (verification suites and tests want them).
SchemeArtifacts build_scheme_artifacts(
    const std::vector<Site>& sites, double epsilon,
    std::optional<double> c_override = std::nullopt, double alpha = 200.0);

}  // namespace diskroute
