#include "diskroute/density_net.hpp"

#include <algorithm>
#include <sstream>

#include "diskroute/error.hpp"

namespace diskroute {

std::vector<SiteId> build_net(const std::vector<Site>& sites, double eps1) {
  if (eps1 <= 0.0) throw Error("build_net: eps1 must be positive");
  std::vector<SiteId> net;
  std::unordered_map<std::uint64_t, std::vector<SiteId>> cells;
  auto cell_of = [&](double v) {
    return static_cast<std::int64_t>(std::floor(v / eps1));
  };
  for (const Site& s : sites) {
    const std::int64_t cx = cell_of(s.pos.x);
    const std::int64_t cy = cell_of(s.pos.y);
    bool blocked = false;
    for (std::int64_t dx = -1; dx <= 1 && !blocked; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !blocked; ++dy) {
        auto it = cells.find(UniformGrid::key(cx + dx, cy + dy));
        if (it == cells.end()) continue;
        for (SiteId r : it->second) {
          if (dist(sites[r], s) < eps1) {
            blocked = true;
            break;
          }
        }
      }
    }
    if (!blocked) {
      net.push_back(s.id);
      cells[UniformGrid::key(cx, cy)].push_back(s.id);
    }
  }
  return net;
}

std::vector<Bridge> find_bridges(const std::vector<Site>& sites,
                                 const std::vector<SiteId>& net,
                                 double eps1) {
  std::vector<Site> net_sites;
  net_sites.reserve(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    net_sites.push_back({static_cast<SiteId>(i), sites[net[i]].pos});
  }
  UniformGrid net_grid(net_sites, 1.0);
  UniformGrid all_grid(sites, 1.0);

  std::vector<Bridge> bridges;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const SiteId s = net[i];
    // any bridged pair satisfies |st| <= 1 + 2*eps1
    for (SiteId nj : net_grid.sites_within(sites[s].pos, 1.0 + 2.0 * eps1)) {
      const SiteId t = net[nj];
      if (t <= s) continue;
      if (dist(sites[s], sites[t]) <= 1.0) continue;  // already adjacent
      // lexicographically smallest (p, q): p, q range over all of S
      const std::vector<SiteId> near_s =
          all_grid.sites_within(sites[s].pos, eps1);
      const std::vector<SiteId> near_t =
          all_grid.sites_within(sites[t].pos, eps1);
      Bridge best;
      bool found = false;
      for (SiteId p : near_s) {
        if (found) break;
        if (p != s && dist(sites[s], sites[p]) > 1.0) continue;
        for (SiteId q : near_t) {
          if (q != t && dist(sites[q], sites[t]) > 1.0) continue;
          if (dist(sites[p], sites[q]) <= 1.0) {
            best = {s, t, p, q};
            found = true;
            break;
          }
        }
      }
      if (found) bridges.push_back(best);
    }
  }
  std::sort(bridges.begin(), bridges.end(), [](const Bridge& a,
                                               const Bridge& b) {
    return std::tie(a.s, a.t) < std::tie(b.s, b.t);
  });
  return bridges;
}

NetSets build_net_sets(const std::vector<Site>& sites, double eps1) {
  NetSets out;
  out.eps1 = eps1;
  out.net = build_net(sites, eps1);
  out.bridges = find_bridges(sites, out.net, eps1);
  out.z = out.net;
  for (const Bridge& b : out.bridges) {
    out.z.push_back(b.p);
    out.z.push_back(b.q);
  }
  std::sort(out.z.begin(), out.z.end());
  out.z.erase(std::unique(out.z.begin(), out.z.end()), out.z.end());
  return out;
}

Label ExtendedScheme::closest_net_label(SiteId s) const {
  const RoutingScheme& scheme = std::get<RoutingScheme>(inner);
  return scheme.site_label[inner_index[closest_net[s]]];
}

ExtendedScheme build_extended_scheme(const std::vector<Site>& sites,
                                     double epsilon,
                                     std::optional<double> c_override,
                                     double alpha) {
  if (epsilon <= 0.0)
    throw Error("build_extended_scheme: epsilon must be positive");
  ExtendedScheme ext;
  ext.epsilon = epsilon;
  // eps/103 makes the stretch chain close; the clamp keeps net hops on
  // unit-disk edges for absurdly large eps
  ext.epsilon1 = std::min(epsilon / 103.0, 1.0);
  ext.nets = build_net_sets(sites, ext.epsilon1);
  ext.z_sites = ext.nets.z;

  const int n = static_cast<int>(sites.size());
  ext.inner_index.assign(n, -1);
  std::vector<Site> z_sites;
  z_sites.reserve(ext.z_sites.size());
  for (std::size_t i = 0; i < ext.z_sites.size(); ++i) {
    ext.inner_index[ext.z_sites[i]] = static_cast<int>(i);
    z_sites.push_back({static_cast<SiteId>(i), sites[ext.z_sites[i]].pos});
  }
  ext.z_graph = build_udg(z_sites);

  // nearest net site per input site (covering puts one within eps1)
  std::vector<Site> net_view;
  net_view.reserve(ext.nets.net.size());
  for (std::size_t i = 0; i < ext.nets.net.size(); ++i) {
    net_view.push_back({static_cast<SiteId>(i), sites[ext.nets.net[i]].pos});
  }
  UniformGrid net_grid(net_view, std::max(ext.epsilon1, 1e-9));
  ext.closest_net.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    double best = kInf;
    SiteId best_id = -1;
    for (SiteId i : net_grid.sites_within(sites[s].pos, ext.epsilon1)) {
      const double d = dist(net_view[i].pos, sites[s].pos);
      if (d < best || (d == best && ext.nets.net[i] < best_id)) {
        best = d;
        best_id = ext.nets.net[i];
      }
    }
    if (best_id < 0)
      throw Error("build_extended_scheme: covering violated at site " +
                  std::to_string(s));
    ext.closest_net[s] = best_id;
  }

  const double z_diam = graph_diameter(ext.z_graph);
  if (ext.z_graph.n() == 1 || (z_diam < 2.0 && !c_override.has_value())) {
    ext.inner = build_next_hop_table(ext.z_graph);
  } else {
    ext.inner = build_scheme(z_sites, ext.epsilon1, c_override, alpha);
  }
  return ext;
}

RouteTrace route_extended(const ExtendedScheme& ext, const UnitDiskGraph& g,
                          SiteId s, SiteId t, std::int64_t step_limit) {
  RouteTrace trace;
  trace.path.push_back(s);
  if (s == t) {
    trace.delivered = true;
    return trace;
  }
  auto hop = [&](SiteId from, SiteId to) {
    if (from == to) return;
    const auto w = g.edge_weight(from, to);
    if (!w.has_value())
      throw Error("route_extended: illegal hop from " + std::to_string(from) +
                  " to " + std::to_string(to));
    trace.distance += *w;
    trace.path.push_back(to);
    ++trace.step_count;
  };
  if (g.edge_weight(s, t).has_value()) {
    hop(s, t);
    trace.delivered = true;
    return trace;
  }

  const SiteId s_net = ext.closest_net[s];
  const SiteId t_net = ext.closest_net[t];
  hop(s, s_net);
  if (s_net != t_net) {
    const SiteId zs = ext.inner_index[s_net];
    const SiteId zt = ext.inner_index[t_net];
    if (ext.uses_next_hop()) {
      const auto path =
          next_hop_path(std::get<NextHopTable>(ext.inner), zs, zt);
      if (path.empty())
        throw Error("route_extended: net sites in different components");
      for (std::size_t i = 1; i < path.size(); ++i) {
        hop(ext.z_sites[path[i - 1]], ext.z_sites[path[i]]);
      }
    } else {
      const RoutingScheme& inner = std::get<RoutingScheme>(ext.inner);
      RouteTrace zt_trace = route(inner, ext.z_graph, zs, zt, step_limit);
      for (std::size_t i = 1; i < zt_trace.path.size(); ++i) {
        trace.path.push_back(ext.z_sites[zt_trace.path[i]]);
      }
      trace.distance += zt_trace.distance;
      trace.step_count += zt_trace.step_count;
      trace.max_header_bits =
          std::max(trace.max_header_bits, zt_trace.max_header_bits);
      trace.max_stack_depth =
          std::max(trace.max_stack_depth, zt_trace.max_stack_depth);
      if (!zt_trace.stack_restored) trace.stack_restored = false;
    }
  }
  hop(t_net, t);
  trace.delivered = true;
  return trace;
}

std::string dump_net(const NetSets& nets) {
  std::ostringstream os;
  os << "R:";
  for (SiteId r : nets.net) os << ' ' << r;
  os << '\n';
  for (const Bridge& b : nets.bridges) {
    os << b.s << ' ' << b.t << ' ' << b.p << ' ' << b.q << '\n';
  }
  return os.str();
}

}  // namespace diskroute
