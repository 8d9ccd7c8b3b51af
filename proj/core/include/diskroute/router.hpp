#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diskroute/error.hpp"
#include "diskroute/scheme.hpp"

namespace diskroute {

/// Mutable per-packet state. start_edge is present exactly while local
/// routing (the Euler-tour search) is in progress; level and prev_vertex
/// accompany it.
struct Header {
  std::vector<Label> stack;
  std::optional<int> level;
  std::optional<std::pair<Label, Label>> start_edge;  // directed (from, to)
  std::optional<Label> prev_vertex;

  bool operator==(const Header&) const = default;
};

/// Measured size of a header in bits under the scheme's label/level widths.
std::int64_t header_bits(const Header& h, const RoutingScheme& s);

struct StepResult {
  SiteId next_site = -1;               // current site or a UD neighbor
  std::optional<Label> next_target;    // absent only on final delivery
  Header header;
};

/// Everything the routing function may consult about the current site.
/// Keeping the step function on this view (rather than the whole scheme)
/// is what makes the routing local.
struct SiteView {
  Label self = 0;
  const LocalTable* local = nullptr;
  std::span<const GlobalEntry> global;
};

struct RawStep {
  Label next = 0;  // label of the next site (== self for stationary steps)
  std::optional<Label> next_target;
  bool moved = false;
};

/// One application of the routing function, reading only the current
/// site's tables, the target label, and the header.
RawStep route_step_local(const SiteView& view, Label target, Header& h);

/// Wrapper resolving labels to site ids against the scheme.
StepResult route_step(const RoutingScheme& scheme, SiteId s, Label target,
                      Header h);

/// One local-routing discovery phase: from the step that set the start
/// edge until a stored pair matched, with the distance walked meanwhile.
struct PhaseRecord {
  SiteId origin = -1;
  Label target = 0;
  double distance = 0.0;
};

struct RouteTrace {
  std::vector<SiteId> path;  // s0..sk, moves only
  double distance = 0.0;
  std::int64_t step_count = 0;  // all invocations, stationary included
  std::int64_t max_header_bits = 0;
  std::int64_t max_stack_depth = 0;
  bool delivered = false;
  bool stack_restored = true;  // every push matched its pop at the target
  std::vector<PhaseRecord> phases;
};

/// Step limit exceeded; carries the partial trace for diagnostics.
class RouteLimitError : public Error {
 public:
  RouteLimitError(std::string what, RouteTrace partial)
      : Error(std::move(what)), trace(std::move(partial)) {}
  RouteTrace trace;
};

std::int64_t default_step_limit(const RoutingScheme& scheme);

/// Drives the routing function from (s, label(t), empty header) until
/// delivery. The graph supplies edge lengths and the adjacency check for
/// the step-legality assertion.
RouteTrace route(const RoutingScheme& scheme, const UnitDiskGraph& g,
                 SiteId s, SiteId t, std::int64_t step_limit = -1);

struct StretchRecord {
  SiteId src = -1, dst = -1;
  double d_rho = 0.0;
  double d_opt = 0.0;
  double ratio = 1.0;
  std::int64_t steps = 0;
  std::int64_t max_header_bits = 0;
};

struct StretchSummary {
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::int64_t max_header_bits = 0;
  std::size_t pair_count = 0;
};

/// Routes each (s, t) pair and compares against Dijkstra distances.
std::vector<StretchRecord> measure_stretch(
    const RoutingScheme& scheme, const UnitDiskGraph& g,
    const std::vector<std::pair<SiteId, SiteId>>& pairs,
    std::int64_t step_limit = -1);

StretchSummary summarize(const std::vector<StretchRecord>& records);

}  // namespace diskroute
