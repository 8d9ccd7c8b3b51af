#include "diskroute/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diskroute/error.hpp"
#include "diskroute/generators.hpp"
#include "diskroute/router.hpp"

namespace diskroute {

bool AuditReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AuditResult& r) { return r.pass; });
}

std::vector<std::vector<double>> all_pairs_distances(const UnitDiskGraph& g) {
  std::vector<std::vector<double>> d;
  d.reserve(g.n());
  for (int s = 0; s < g.n(); ++s) d.push_back(shortest_paths(g, s).dist);
  return d;
}

namespace {

std::string pair_str(SiteId s, SiteId t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

}  // namespace

AuditResult audit_wspd_partition(const SchemeArtifacts& a) {
  const int n = a.graph.n();
  const Hierarchy& h = a.hierarchy;
  std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
  for (const WspdPair& p : a.wspd.pairs) {
    const HierarchyNode& nu = h.node(p.u);
    const HierarchyNode& nv = h.node(p.v);
    for (Label ls = nu.lo; ls <= nu.hi; ++ls) {
      for (Label lt = nv.lo; lt <= nv.hi; ++lt) {
        const SiteId s = h.label_site[ls];
        const SiteId t = h.label_site[lt];
        ++count[static_cast<std::size_t>(s) * n + t];
        ++count[static_cast<std::size_t>(t) * n + s];
      }
    }
  }
  for (SiteId s = 0; s < n; ++s) {
    for (SiteId t = 0; t < n; ++t) {
      if (s == t) continue;
      const int c = count[static_cast<std::size_t>(s) * n + t];
      if (c != 1) {
        return {"wspd-partition", false,
                "ordered pair " + pair_str(s, t) + " represented " +
                    std::to_string(c) + " times"};
      }
    }
  }
  return {"wspd-partition", true,
          std::to_string(a.wspd.pairs.size()) + " pairs partition " +
              std::to_string(static_cast<std::int64_t>(n) * (n - 1)) +
              " ordered pairs"};
}

AuditResult audit_separation(const SchemeArtifacts& a) {
  const Hierarchy& h = a.hierarchy;
  for (std::size_t i = 0; i < a.wspd.pairs.size(); ++i) {
    const WspdPair& p = a.wspd.pairs[i];
    const HierarchyNode& nu = h.node(p.u);
    const HierarchyNode& nv = h.node(p.v);
    const Label lu = h.site_label[p.rep_u];
    const Label lv = h.site_label[p.rep_v];
    if (lu < nu.lo || lu > nu.hi || lv < nv.lo || lv > nv.hi) {
      return {"wspd-separation", false,
              "pair " + std::to_string(i) + ": representative outside node"};
    }
    const double rd = dist(a.graph.sites[p.rep_u], a.graph.sites[p.rep_v]);
    if (!is_well_separated(nu.size, nv.size, rd, a.wspd.c)) {
      std::ostringstream os;
      os << "pair " << i << ": (c+2)*max{" << nu.size - 1 << ","
         << nv.size - 1 << "} > " << rd;
      return {"wspd-separation", false, os.str()};
    }
  }
  return {"wspd-separation", true,
          "all " + std::to_string(a.wspd.pairs.size()) + " pairs satisfy the separation inequality"};
}

AuditResult audit_close_pair_singletons(const SchemeArtifacts& a,
                                  const std::vector<std::vector<double>>& d) {
  const Hierarchy& h = a.hierarchy;
  const double c = a.wspd.c;
  for (const WspdPair& p : a.wspd.pairs) {
    const HierarchyNode& nu = h.node(p.u);
    const HierarchyNode& nv = h.node(p.v);
    if (nu.size == 1 && nv.size == 1) continue;
    for (Label ls = nu.lo; ls <= nu.hi; ++ls) {
      for (Label lt = nv.lo; lt <= nv.hi; ++lt) {
        const SiteId s = h.label_site[ls];
        const SiteId t = h.label_site[lt];
        if (d[s][t] < c) {
          return {"close-pair-singletons", false,
                  "pair with |S_u|=" + std::to_string(nu.size) + ",|S_v|=" +
                      std::to_string(nv.size) + " represents " +
                      pair_str(s, t) + " at distance " +
                      std::to_string(d[s][t]) + " < c"};
        }
      }
    }
  }
  return {"close-pair-singletons", true,
          "every represented pair below distance c is singleton-singleton"};
}

AuditResult audit_middle_site_bounds(const SchemeArtifacts& a,
                                const std::vector<std::vector<double>>& d) {
  const Hierarchy& h = a.hierarchy;
  const RoutingScheme& s = a.scheme;
  const double c = s.c;
  const double tol = 1e-9;
  std::int64_t checked = 0;
  const auto assignments = assign_pairs(a.wspd, h);
  for (SiteId r = 0; r < a.graph.n(); ++r) {
    for (const OrientedAssignment& oa : assignments[r]) {
      const WspdPair& p = a.wspd.pairs[oa.pair_index];
      const int v_node = oa.reversed ? p.u : p.v;
      const SiteId rep = oa.reversed ? p.rep_u : p.rep_v;
      const GlobalEntry* e = s.match(r, h.node(v_node).lo);
      if (e == nullptr || e->lo != h.node(v_node).lo ||
          e->hi != h.node(v_node).hi) {
        return {"middle-sites", false,
                "site " + std::to_string(r) + ": stored interval missing"};
      }
      const bool neighbor = a.graph.edge_weight(r, rep).has_value();
      if (neighbor != (e->middle == 0)) {
        return {"middle-sites", false,
                "site " + std::to_string(r) +
                    ": middle presence disagrees with sigma(v) adjacency"};
      }
      if (e->middle == 0) continue;
      const SiteId m = s.label_site[e->middle];
      for (Label lt = e->lo; lt <= e->hi; ++lt) {
        const SiteId t = h.label_site[lt];
        const double drt = d[r][t];
        if (drt < c) continue;
        ++checked;
        if (d[r][m] + d[m][t] > (1.0 + 2.0 / c) * drt + tol) {
          return {"middle-sites", false,
                  "detour bound (1+2/c)d fails at storing site " + std::to_string(r) +
                      " target " + std::to_string(t)};
        }
        if (std::max(d[r][m], d[m][t]) > (5.0 / 8.0) * drt + tol) {
          return {"middle-sites", false,
                  "halving bound (5/8)d fails at storing site " + std::to_string(r) +
                      " target " + std::to_string(t)};
        }
      }
    }
  }
  return {"middle-sites", true,
          std::to_string(checked) + " stored (site,target) pairs at distance >= c verified"};
}

AuditResult audit_table_assignment(const SchemeArtifacts& a) {
  const Hierarchy& h = a.hierarchy;
  const auto assignments = assign_pairs(a.wspd, h);
  std::int64_t total = 0;
  for (SiteId r = 0; r < a.graph.n(); ++r) {
    std::vector<std::pair<Label, Label>> expected;
    for (const OrientedAssignment& oa : assignments[r]) {
      const WspdPair& p = a.wspd.pairs[oa.pair_index];
      const int v_node = oa.reversed ? p.u : p.v;
      expected.push_back({h.node(v_node).lo, h.node(v_node).hi});
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::pair<Label, Label>> stored;
    for (const GlobalEntry& e : a.scheme.global[r]) {
      stored.push_back({e.lo, e.hi});
    }
    std::sort(stored.begin(), stored.end());
    for (std::size_t i = 1; i < stored.size(); ++i) {
      if (stored[i].first <= stored[i - 1].second) {
        return {"table-assignment", false,
                "site " + std::to_string(r) +
                    ": stored intervals overlap, lookup would be ambiguous"};
      }
    }
    if (expected != stored) {
      Label lo = -1, hi = -1;
      for (std::size_t i = 0; i < std::max(expected.size(), stored.size());
           ++i) {
        if (i >= expected.size() || i >= stored.size() ||
            expected[i] != stored[i]) {
          if (i < stored.size()) {
            lo = stored[i].first;
            hi = stored[i].second;
          }
          break;
        }
      }
      return {"table-assignment", false,
              "site " + std::to_string(r) +
                  ": stored intervals disagree with the pair assignment "
                  "(first divergent stored interval [" +
                  std::to_string(lo) + "," + std::to_string(hi) + "])"};
    }
    total += static_cast<std::int64_t>(stored.size());
  }
  if (total != 2 * static_cast<std::int64_t>(a.wspd.pairs.size())) {
    return {"table-assignment", false,
            "stored orientation count " + std::to_string(total) +
                " != 2 * pair count"};
  }
  return {"table-assignment", true,
          std::to_string(total) + " oriented pairs stored exactly once"};
}

RoutingAudit audit_routing(
    const SchemeArtifacts& a, const std::vector<std::vector<double>>& d,
    const std::vector<std::pair<SiteId, SiteId>>& pairs) {
  RoutingAudit out;
  out.delivery = {"delivery", true, ""};
  out.stack_restoration = {"stack-restoration", true, ""};
  out.exactness_below_c = {"exactness-below-c", true, ""};
  out.local_phase_bound = {"local-routing-bound", true, ""};
  out.header_size = {"header-size", true, ""};

  const RoutingScheme& s = a.scheme;
  const double c = s.c;
  const std::int64_t stack_cap =
      static_cast<std::int64_t>(std::ceil(
          std::log(std::max(2.0, s.diameter)) / std::log(8.0 / 5.0))) +
      2;
  std::int64_t exact_checked = 0, phases_checked = 0;
  std::int64_t max_stack = 0, max_bits = 0;
  for (auto [src, dst] : pairs) {
    RouteTrace trace;
    try {
      trace = route(s, a.graph, src, dst);
    } catch (const Error& e) {
      if (out.delivery.pass)
        out.delivery = {"delivery", false, pair_str(src, dst) + ": " + e.what()};
      continue;
    }
    if (!trace.delivered && out.delivery.pass) {
      out.delivery = {"delivery", false, pair_str(src, dst) + " not delivered"};
    }
    if (!trace.stack_restored && out.stack_restoration.pass) {
      out.stack_restoration = {"stack-restoration", false,
                               pair_str(src, dst) + " violates push/pop matching"};
    }
    if (d[src][dst] < c) {
      ++exact_checked;
      if (std::abs(trace.distance - d[src][dst]) > 1e-9 &&
          out.exactness_below_c.pass) {
        out.exactness_below_c = {
            "exactness-below-c", false,
            pair_str(src, dst) + ": d_rho=" + std::to_string(trace.distance) +
                " vs d=" + std::to_string(d[src][dst])};
      }
    }
    for (const PhaseRecord& ph : trace.phases) {
      const SiteId tgt = s.label_site[ph.target];
      const double dot = d[ph.origin][tgt];
      if (dot < c) {
        if (out.local_phase_bound.pass) {
          out.local_phase_bound = {
              "local-routing-bound", false,
              "discovery phase started for a pair below distance c at site " +
                  std::to_string(ph.origin)};
        }
        continue;
      }
      ++phases_checked;
      if (ph.distance > (48.0 / c) * dot + 1e-6 && out.local_phase_bound.pass) {
        out.local_phase_bound = {
            "local-routing-bound", false,
            "phase from " + std::to_string(ph.origin) + " toward " +
                std::to_string(tgt) + " walked " + std::to_string(ph.distance) +
                " > (48/c)*" + std::to_string(dot)};
      }
    }
    max_stack = std::max(max_stack, trace.max_stack_depth);
    max_bits = std::max(max_bits, trace.max_header_bits);
  }
  if (max_stack > stack_cap) {
    out.header_size = {"header-size", false,
                       "stack depth " + std::to_string(max_stack) +
                           " exceeds cap " + std::to_string(stack_cap)};
  } else {
    out.header_size.detail = "max stack depth " + std::to_string(max_stack) +
                             " <= cap " + std::to_string(stack_cap) +
                             ", max header bits " + std::to_string(max_bits);
  }
  out.delivery.detail = out.delivery.pass
                            ? std::to_string(pairs.size()) + " routes delivered"
                            : out.delivery.detail;
  out.exactness_below_c.detail =
      out.exactness_below_c.pass
          ? std::to_string(exact_checked) + " pairs below c routed exactly"
          : out.exactness_below_c.detail;
  out.local_phase_bound.detail =
      out.local_phase_bound.pass
          ? std::to_string(phases_checked) + " discovery phases within (48/c)d"
          : out.local_phase_bound.detail;
  return out;
}

std::vector<std::pair<SiteId, SiteId>> sample_ordered_pairs(
    int n, std::int64_t count, std::uint64_t seed) {
  std::vector<std::pair<SiteId, SiteId>> pairs;
  const std::int64_t all = static_cast<std::int64_t>(n) * (n - 1);
  if (count < 0 || count >= all) {
    pairs.reserve(all);
    for (SiteId s = 0; s < n; ++s) {
      for (SiteId t = 0; t < n; ++t) {
        if (s != t) pairs.push_back({s, t});
      }
    }
    return pairs;
  }
  Rng rng(seed);
  pairs.reserve(count);
  for (std::int64_t i = 0; i < count; ++i) {
    const SiteId s = static_cast<SiteId>(rng.next_below(n));
    SiteId t = static_cast<SiteId>(rng.next_below(n - 1));
    if (t >= s) ++t;
    pairs.push_back({s, t});
  }
  return pairs;
}

std::vector<AuditResult> audit_net(
    const std::vector<Site>& sites, double epsilon,
    const std::vector<std::pair<SiteId, SiteId>>& pairs,
    std::uint64_t sample_seed) {
  std::vector<AuditResult> out;
  const ExtendedScheme ext = build_extended_scheme(sites, epsilon);
  const double eps1 = ext.epsilon1;

  // packing and covering, closed inequalities, exhaustive
  {
    AuditResult r{"net-packing", true, ""};
    const auto& net = ext.nets.net;
    for (std::size_t i = 0; i < net.size() && r.pass; ++i) {
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        if (dist(sites[net[i]], sites[net[j]]) < eps1) {
          r = {"net-packing", false,
               "net sites " + std::to_string(net[i]) + " and " +
                   std::to_string(net[j]) + " closer than eps1"};
          break;
        }
      }
    }
    if (r.pass)
      r.detail = "|R|=" + std::to_string(net.size()) + " pairwise >= eps1";
    out.push_back(r);

    AuditResult cov{"net-covering", true, ""};
    for (const Site& s : sites) {
      double best = kInf;
      for (SiteId rr : net) best = std::min(best, dist(sites[rr], s));
      if (best > eps1) {
        cov = {"net-covering", false,
               "site " + std::to_string(s.id) + " at distance " +
                   std::to_string(best) + " from R"};
        break;
      }
    }
    if (cov.pass) cov.detail = "every site within eps1 of R";
    out.push_back(cov);
  }

  const UnitDiskGraph g = build_udg(sites);

  // d^Z(s,t) <= (1 + 12 eps1) d(s,t) + 12 eps1 on sampled net pairs
  {
    AuditResult r{"net-distance-preservation", true, ""};
    Rng rng(sample_seed);
    const auto& net = ext.nets.net;
    const int checks =
        static_cast<int>(std::min<std::size_t>(200, net.size() * net.size()));
    std::int64_t done = 0;
    for (int k = 0; k < checks && r.pass; ++k) {
      const SiteId s = net[rng.next_below(net.size())];
      const SiteId t = net[rng.next_below(net.size())];
      if (s == t) continue;
      const ShortestPathTree spt = shortest_paths(g, s);
      if (spt.dist[t] == kInf) continue;
      const ShortestPathTree zspt =
          shortest_paths(ext.z_graph, ext.inner_index[s]);
      const double dz = zspt.dist[ext.inner_index[t]];
      ++done;
      if (dz > (1.0 + 12.0 * eps1) * spt.dist[t] + 12.0 * eps1 + 1e-9) {
        r = {"net-distance-preservation", false,
             "net pair " + pair_str(s, t) + ": d^Z=" + std::to_string(dz) +
                 " vs d=" + std::to_string(spt.dist[t])};
      }
    }
    if (r.pass)
      r.detail = std::to_string(done) + " net pairs within (1+12eps1)d + 12eps1";
    out.push_back(r);
  }

  // end-to-end extended stretch
  {
    AuditResult r{"extended-stretch", true, ""};
    std::int64_t checked = 0;
    std::unordered_map<SiteId, ShortestPathTree> oracle;
    for (auto [s, t] : pairs) {
      auto it = oracle.find(s);
      if (it == oracle.end())
        it = oracle.emplace(s, shortest_paths(g, s)).first;
      const double dopt = it->second.dist[t];
      if (dopt == kInf) continue;
      const RouteTrace trace = route_extended(ext, g, s, t);
      ++checked;
      const double bound =
          dopt > 1.0 ? (1.0 + epsilon) * dopt : dopt;  // direct below 1
      if (trace.distance > bound + 1e-9) {
        r = {"extended-stretch", false,
             pair_str(s, t) + ": routed " + std::to_string(trace.distance) +
                 " vs bound " + std::to_string(bound)};
        break;
      }
    }
    if (r.pass)
      r.detail = std::to_string(checked) + " pairs within (1+eps)d";
    out.push_back(r);
  }

  // density monitors (report-only)
  {
    std::vector<Site> net_sites, z_sites;
    for (std::size_t i = 0; i < ext.nets.net.size(); ++i)
      net_sites.push_back({static_cast<SiteId>(i), sites[ext.nets.net[i]].pos});
    for (std::size_t i = 0; i < ext.nets.z.size(); ++i)
      z_sites.push_back({static_cast<SiteId>(i), sites[ext.nets.z[i]].pos});
    std::ostringstream os;
    os << "density(R)<=" << density_upper_bound(net_sites) << " (O(eps1^-2)="
       << 1.0 / (eps1 * eps1) << "), density(Z)<=" << density_upper_bound(z_sites)
       << " (O(eps1^-3)=" << 1.0 / (eps1 * eps1 * eps1) << ")";
    out.push_back({"net-density-monitor", true, os.str()});
  }
  return out;
}

AuditReport run_verify_suite(const std::vector<Site>& sites, double epsilon,
                             std::optional<double> c_override, double alpha) {
  AuditReport report;
  const SchemeArtifacts a =
      build_scheme_artifacts(sites, epsilon, c_override, alpha);
  const auto d = all_pairs_distances(a.graph);

  report.add(audit_wspd_partition(a));
  report.add(audit_separation(a));
  report.add(audit_close_pair_singletons(a, d));
  report.add(audit_middle_site_bounds(a, d));
  report.add(audit_table_assignment(a));

  const int n = a.graph.n();
  const auto pairs =
      sample_ordered_pairs(n, n <= 120 ? -1 : 4000, /*seed=*/11);
  const RoutingAudit ra = audit_routing(a, d, pairs);
  report.add(ra.delivery);
  report.add(ra.stack_restoration);
  report.add(ra.exactness_below_c);
  report.add(ra.local_phase_bound);
  report.add(ra.header_size);

  const auto net_pairs =
      sample_ordered_pairs(n, n <= 60 ? -1 : 1500, /*seed=*/13);
  for (AuditResult& r : audit_net(sites, epsilon, net_pairs)) {
    report.add(std::move(r));
  }
  return report;
}

}  // namespace diskroute
