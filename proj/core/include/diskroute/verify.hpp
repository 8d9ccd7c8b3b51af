#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskroute/density_net.hpp"
#include "diskroute/scheme.hpp"

namespace diskroute {

struct AuditResult {
  std::string name;
  bool pass = true;
  std::string detail;  // witness on failure, measurements otherwise
};

struct AuditReport {
  std::vector<AuditResult> results;

  bool all_pass() const;
  void add(AuditResult r) { results.push_back(std::move(r)); }
};

/// All-pairs shortest path distances (n single-source runs).
std::vector<std::vector<double>> all_pairs_distances(const UnitDiskGraph& g);

AuditResult audit_wspd_partition(const SchemeArtifacts& a);
AuditResult audit_separation(const SchemeArtifacts& a);
AuditResult audit_close_pair_singletons(const SchemeArtifacts& a,
                                  const std::vector<std::vector<double>>& d);
AuditResult audit_middle_site_bounds(const SchemeArtifacts& a,
                                const std::vector<std::vector<double>>& d);
AuditResult audit_table_assignment(const SchemeArtifacts& a);

struct RoutingAudit {
  AuditResult delivery;
  AuditResult stack_restoration;
  AuditResult exactness_below_c;
  AuditResult local_phase_bound;
  AuditResult header_size;
};

/// Routes the given ordered pairs and checks delivery, stack restoration,
/// exactness below c, the (48/c) local-routing bound, and the header stack
/// depth cap.
RoutingAudit audit_routing(const SchemeArtifacts& a,
                           const std::vector<std::vector<double>>& d,
                           const std::vector<std::pair<SiteId, SiteId>>& pairs);

/// Packing/covering of the eps1-net, the d^Z distance-preservation bound,
/// and end-to-end extended routing stretch on the given pairs.
std::vector<AuditResult> audit_net(
    const std::vector<Site>& sites, double epsilon,
    const std::vector<std::pair<SiteId, SiteId>>& pairs,
    std::uint64_t sample_seed = 7);

/// Ordered same-pair-free sample; all ordered pairs when count < 0 or the
/// instance is small enough.
std::vector<std::pair<SiteId, SiteId>> sample_ordered_pairs(
    int n, std::int64_t count, std::uint64_t seed);

/// The whole suite for one instance, as run by the verify command.
AuditReport run_verify_suite(const std::vector<Site>& sites, double epsilon,
                             std::optional<double> c_override = std::nullopt,
                             double alpha = 200.0);

}  // namespace diskroute
