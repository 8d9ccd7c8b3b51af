#include "diskroute/router.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace diskroute {

std::int64_t header_bits(const Header& h, const RoutingScheme& s) {
  const std::int64_t lb = s.label_bits();
  std::int64_t bits = 3;  // presence flags for the three optionals
  bits += static_cast<std::int64_t>(h.stack.size()) * lb;
  if (h.level.has_value()) bits += s.level_bits();
  if (h.start_edge.has_value()) bits += 2 * lb;
  if (h.prev_vertex.has_value()) bits += lb;
  return bits;
}

RawStep route_step_local(const SiteView& view, Label target, Header& h) {
  // intermediate or final target reached
  if (view.self == target) {
    if (h.stack.empty()) return {view.self, std::nullopt, false};
    const Label next_target = h.stack.back();
    h.stack.pop_back();
    return {view.self, next_target, false};
  }

  // global routing: a stored pair whose target interval contains t
  const GlobalEntry* entry = nullptr;
  {
    auto it = std::upper_bound(
        view.global.begin(), view.global.end(), target,
        [](Label t, const GlobalEntry& e) { return t < e.lo; });
    if (it != view.global.begin()) {
      --it;
      if (it->lo <= target && target <= it->hi) entry = &*it;
    }
  }
  if (entry != nullptr) {
    h.start_edge.reset();
    h.level.reset();
    h.prev_vertex.reset();
    if (view.local->has_ud_neighbor(target)) {
      return {target, target, true};
    }
    if (entry->middle == 0)
      throw Error("route_step: matched pair has no middle site");
    h.stack.push_back(target);
    return {view.self, entry->middle, false};
  }

  // local routing: Euler tour over growing EMST subtrees
  const auto& nbs = view.local->tree_neighbors;
  if (!h.start_edge.has_value()) {
    const int level = view.local->own_depth - 1;
    Label r = 0;
    for (const auto& [label, edge_level] : nbs) {
      if (edge_level == level) {
        r = label;
        break;
      }
    }
    if (r == 0) throw Error("route_step: no start edge at this site");
    h.level = level;
    h.start_edge = std::make_pair(view.self, r);
    h.prev_vertex = view.self;
    return {r, target, true};
  }

  if (!h.level.has_value() || !h.prev_vertex.has_value())
    throw Error("route_step: malformed header (missing local fields)");
  const int deg = static_cast<int>(nbs.size());
  int prev_index = -1;
  for (int i = 0; i < deg; ++i) {
    if (nbs[i].first == *h.prev_vertex) {
      prev_index = i;
      break;
    }
  }
  if (prev_index < 0)
    throw Error("route_step: previous vertex is not a tree neighbor");
  // clockwise scan = decreasing index over the counterclockwise list;
  // the edge back to prev_vertex is the last candidate
  Label r = 0;
  for (int k = 1; k <= deg; ++k) {
    const int j = ((prev_index - k) % deg + deg) % deg;
    if (nbs[j].second >= *h.level) {
      r = nbs[j].first;
      break;
    }
  }
  if (r == 0) throw Error("route_step: Euler tour found no qualifying edge");
  if (std::make_pair(view.self, r) == *h.start_edge) {
    // the tour would re-traverse the start edge: move to the next larger
    // subtree and follow the start edge again
    *h.level -= 1;
    if (*h.level < 0)
      throw Error("route_step: search level fell below the root");
  }
  h.prev_vertex = view.self;
  return {r, target, true};
}

namespace {

SiteView view_of(const RoutingScheme& scheme, SiteId s) {
  return {scheme.site_label[s], &scheme.local[s],
          {scheme.global[s].data(), scheme.global[s].size()}};
}

}  // namespace

StepResult route_step(const RoutingScheme& scheme, SiteId s, Label target,
                      Header h) {
  if (target < 1 || target > scheme.n)
    throw Error("route_step: target label out of range");
  const RawStep raw = route_step_local(view_of(scheme, s), target, h);
  StepResult res;
  res.next_site = raw.moved ? scheme.label_site[raw.next] : s;
  res.next_target = raw.next_target;
  res.header = std::move(h);
  return res;
}

std::int64_t default_step_limit(const RoutingScheme& scheme) {
  const double d = std::max(2.0, scheme.diameter);
  const std::int64_t stack_cap =
      static_cast<std::int64_t>(
          std::ceil(std::log(d) / std::log(8.0 / 5.0))) +
      2;
  return 50LL * std::max(scheme.n, 2) * stack_cap;
}

RouteTrace route(const RoutingScheme& scheme, const UnitDiskGraph& g,
                 SiteId s, SiteId t, std::int64_t step_limit) {
  if (step_limit < 0) step_limit = default_step_limit(scheme);
  RouteTrace trace;
  trace.path.push_back(s);

  struct Frame {
    Label pushed;
    Label middle;
  };
  std::vector<Frame> shadow;
  bool in_phase = false;
  PhaseRecord phase;

  SiteId cur = s;
  Label target = scheme.site_label[t];
  Header h;
  while (true) {
    if (trace.step_count >= step_limit) {
      throw RouteLimitError(
          "route: step limit " + std::to_string(step_limit) +
              " exceeded routing " + std::to_string(s) + " -> " +
              std::to_string(t),
          trace);
    }
    const bool had_start_edge = h.start_edge.has_value();
    const std::size_t old_depth = h.stack.size();
    const Label old_target = target;

    StepResult res = route_step(scheme, cur, target, std::move(h));
    ++trace.step_count;
    h = std::move(res.header);

    trace.max_header_bits =
        std::max(trace.max_header_bits, header_bits(h, scheme));
    trace.max_stack_depth = std::max(
        trace.max_stack_depth, static_cast<std::int64_t>(h.stack.size()));

    // push/pop bookkeeping for the stack-restoration property
    if (h.stack.size() == old_depth + 1) {
      shadow.push_back({h.stack.back(), *res.next_target});
      if (h.stack.back() != old_target) trace.stack_restored = false;
    } else if (h.stack.size() + 1 == old_depth) {
      if (shadow.empty()) {
        trace.stack_restored = false;
      } else {
        const Frame f = shadow.back();
        shadow.pop_back();
        if (f.pushed != *res.next_target || f.middle != old_target ||
            scheme.site_label[cur] != old_target)
          trace.stack_restored = false;
      }
    } else if (h.stack.size() != old_depth) {
      trace.stack_restored = false;
    }

    // discovery-phase segmentation
    if (!had_start_edge && h.start_edge.has_value()) {
      in_phase = true;
      phase = {cur, old_target, 0.0};
    }
    if (res.next_site != cur) {
      const auto w = g.edge_weight(cur, res.next_site);
      if (!w.has_value())
        throw Error("route: illegal step from " + std::to_string(cur) +
                    " to " + std::to_string(res.next_site));
      trace.distance += *w;
      if (in_phase && h.start_edge.has_value()) phase.distance += *w;
      trace.path.push_back(res.next_site);
      cur = res.next_site;
    }
    if (in_phase && !h.start_edge.has_value()) {
      in_phase = false;
      trace.phases.push_back(phase);
    }

    if (!res.next_target.has_value()) {
      trace.delivered = true;
      if (!h.stack.empty() || !shadow.empty()) trace.stack_restored = false;
      break;
    }
    target = *res.next_target;
  }
  return trace;
}

std::vector<StretchRecord> measure_stretch(
    const RoutingScheme& scheme, const UnitDiskGraph& g,
    const std::vector<std::pair<SiteId, SiteId>>& pairs,
    std::int64_t step_limit) {
  std::unordered_map<SiteId, ShortestPathTree> oracle;
  std::vector<StretchRecord> out;
  out.reserve(pairs.size());
  for (auto [s, t] : pairs) {
    auto it = oracle.find(s);
    if (it == oracle.end()) it = oracle.emplace(s, shortest_paths(g, s)).first;
    const RouteTrace trace = route(scheme, g, s, t, step_limit);
    StretchRecord rec;
    rec.src = s;
    rec.dst = t;
    rec.d_rho = trace.distance;
    rec.d_opt = it->second.dist[t];
    rec.ratio = rec.d_opt > 0.0 ? rec.d_rho / rec.d_opt : 1.0;
    rec.steps = trace.step_count;
    rec.max_header_bits = trace.max_header_bits;
    out.push_back(rec);
  }
  return out;
}

StretchSummary summarize(const std::vector<StretchRecord>& records) {
  StretchSummary s;
  s.pair_count = records.size();
  if (records.empty()) return s;
  double sum = 0.0;
  for (const StretchRecord& r : records) {
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    s.max_header_bits = std::max(s.max_header_bits, r.max_header_bits);
    sum += r.ratio;
  }
  s.mean_ratio = sum / static_cast<double>(records.size());
  return s;
}

}  // namespace diskroute
