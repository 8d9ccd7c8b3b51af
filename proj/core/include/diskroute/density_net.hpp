#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diskroute/next_hop.hpp"
#include "diskroute/router.hpp"

namespace diskroute {

/// A bridge certifies UD(S) connectivity between two net sites that are
/// more than unit distance apart: s, p, q, t is a path in UD(S) with
/// |sp| <= eps1 and |qt| <= eps1 (s == p or q == t allowed).
struct Bridge {
  SiteId s = -1, t = -1;  // net sites, s < t
  SiteId p = -1, q = -1;

  bool operator==(const Bridge&) const = default;
};

struct NetSets {
  double eps1 = 0.0;
  std::vector<SiteId> net;      // R, sorted
  std::vector<Bridge> bridges;  // one per neighbor pair of R
  std::vector<SiteId> z;        // R plus bridge endpoints, sorted

  bool operator==(const NetSets&) const = default;
};

/// Greedy eps1-net over sites in id order, grid-bucketed: a site is
/// admitted iff every previously admitted site is at distance >= eps1
/// (closed packing). Covering follows: every rejected site saw an admitted
/// site closer than eps1.
std::vector<SiteId> build_net(const std::vector<Site>& sites, double eps1);

/// One bridge (the lexicographically smallest (p, q)) per neighbor pair of
/// net sites. Candidate pairs live within Euclidean distance 1 + 2*eps1.
std::vector<Bridge> find_bridges(const std::vector<Site>& sites,
                                 const std::vector<SiteId>& net, double eps1);

NetSets build_net_sets(const std::vector<Site>& sites, double eps1);

/// Routing scheme for arbitrary density: an inner scheme over UD(Z) built
/// with eps1 = eps/103 as the stretch parameter, plus the closest net site
/// of every input site. The inner side degrades to a next-hop map when
/// UD(Z) has diameter below 2.
struct ExtendedScheme {
  double epsilon = 0.0;
  double epsilon1 = 0.0;
  NetSets nets;
  std::vector<SiteId> z_sites;       // inner index -> original id
  std::vector<int> inner_index;      // original id -> inner index or -1
  std::vector<SiteId> closest_net;   // original id -> nearest net site id
  std::variant<RoutingScheme, NextHopTable> inner;
  UnitDiskGraph z_graph;             // UD(Z), inner indexing

  bool uses_next_hop() const {
    return std::holds_alternative<NextHopTable>(inner);
  }
  /// Inner label of the nearest net site (scheme mode only).
  Label closest_net_label(SiteId s) const;

  bool operator==(const ExtendedScheme&) const = default;
};

ExtendedScheme build_extended_scheme(
    const std::vector<Site>& sites, double epsilon,
    std::optional<double> c_override = std::nullopt, double alpha = 200.0);

/// Routes s -> t: directly when adjacent, else s -> s' -> (inner route over
/// UD(Z)) -> t' -> t where s', t' are the closest net sites.
RouteTrace route_extended(const ExtendedScheme& ext, const UnitDiskGraph& g,
                          SiteId s, SiteId t, std::int64_t step_limit = -1);

/// Dump for golden tests: "R: ids..." then one "s t p q" line per bridge.
std::string dump_net(const NetSets& nets);

}  // namespace diskroute
