#include "diskroute/scheme.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "diskroute/error.hpp"

namespace diskroute {

int bits_for(std::int64_t v) {
  if (v <= 0) return 0;
  return std::bit_width(static_cast<std::uint64_t>(v));
}

bool LocalTable::has_ud_neighbor(Label l) const {
  return std::binary_search(ud_neighbors.begin(), ud_neighbors.end(), l);
}

const GlobalEntry* RoutingScheme::match(SiteId s, Label target) const {
  const auto& entries = global[s];
  auto it = std::upper_bound(
      entries.begin(), entries.end(), target,
      [](Label t, const GlobalEntry& e) { return t < e.lo; });
  if (it == entries.begin()) return nullptr;
  --it;
  if (it->lo <= target && target <= it->hi) return &*it;
  return nullptr;
}

double choose_c(double epsilon, double diameter, double alpha) {
  if (epsilon <= 0.0) throw Error("choose_c: epsilon must be positive");
  if (diameter < 2.0)
    throw Error("choose_c: diameter below 2, use direct next-hop routing");
  return std::max(13.0, (alpha / epsilon) * std::log2(diameter));
}

std::vector<std::vector<OrientedAssignment>> assign_pairs(const Wspd& w,
                                                          const Hierarchy& h) {
  std::vector<std::vector<OrientedAssignment>> per_site(h.n_sites());
  std::vector<int> cursor(h.nodes.size(), 0);
  auto place = [&](int node, int pair_index, bool reversed) {
    const HierarchyNode& nd = h.node(node);
    const Label l = nd.lo + (cursor[node]++ % nd.size);
    per_site[h.label_site[l]].push_back({pair_index, reversed});
  };
  for (int i = 0; i < static_cast<int>(w.pairs.size()); ++i) {
    place(w.pairs[i].u, i, false);
    place(w.pairs[i].v, i, true);
  }
  return per_site;
}

namespace {

RoutingScheme assemble(const SchemeArtifacts& a, double epsilon, double c,
                       double alpha, double diameter) {
  const UnitDiskGraph& g = a.graph;
  const Hierarchy& h = a.hierarchy;
  const int n = g.n();

  RoutingScheme s;
  s.n = n;
  s.c = c;
  s.epsilon = epsilon;
  s.alpha = alpha;
  s.diameter = diameter;
  s.height = h.height;
  s.site_label = h.site_label;
  s.label_site = h.label_site;

  s.local.resize(n);
  for (int v = 0; v < n; ++v) {
    LocalTable& lt = s.local[v];
    lt.own_depth = h.node(h.leaf_of[v]).depth;
    for (SiteId nb : a.emst.neighbors[v]) {
      lt.tree_neighbors.push_back(
          {h.site_label[nb], a.emst.edge_level.at(make_edge(v, nb))});
    }
    for (const UdEdge& e : g.adj[v]) {
      lt.ud_neighbors.push_back(h.site_label[e.to]);
    }
    std::sort(lt.ud_neighbors.begin(), lt.ud_neighbors.end());
  }

  const auto assignments = assign_pairs(a.wspd, h);
  s.global.resize(n);
  // targets whose middle site is needed, grouped by storing site
  std::vector<std::vector<std::pair<int, SiteId>>> wanted(n);
  for (int r = 0; r < n; ++r) {
    for (const OrientedAssignment& oa : assignments[r]) {
      const WspdPair& p = a.wspd.pairs[oa.pair_index];
      const int v_node = oa.reversed ? p.u : p.v;
      const SiteId rep = oa.reversed ? p.rep_u : p.rep_v;
      GlobalEntry e;
      e.lo = h.node(v_node).lo;
      e.hi = h.node(v_node).hi;
      if (!g.edge_weight(r, rep).has_value()) {
        wanted[r].push_back({static_cast<int>(s.global[r].size()), rep});
      }
      s.global[r].push_back(e);
    }
  }
  for (int r = 0; r < n; ++r) {
    if (wanted[r].empty()) continue;
    const MiddleSites mids = compute_middle_sites_fast(g, r);
    for (auto [entry_index, rep] : wanted[r]) {
      const SiteId m = mids.middle[rep];
      if (m < 0)
        throw Error("build_scheme: middle target unreachable from site " +
                    std::to_string(r));
      s.global[r][entry_index].middle = h.site_label[m];
    }
  }
  for (int r = 0; r < n; ++r) {
    std::sort(s.global[r].begin(), s.global[r].end(),
              [](const GlobalEntry& x, const GlobalEntry& y) {
                return x.lo < y.lo;
              });
  }

  SchemeStats& st = s.stats;
  st.label_bits = s.label_bits();
  st.level_bits = s.level_bits();
  st.pair_count = static_cast<std::int64_t>(a.wspd.pairs.size());
  for (int v = 0; v < n; ++v) {
    const LocalTable& lt = s.local[v];
    const std::int64_t local_bits =
        static_cast<std::int64_t>(lt.tree_neighbors.size()) *
            (st.label_bits + st.level_bits) +
        static_cast<std::int64_t>(lt.ud_neighbors.size()) * st.label_bits +
        st.level_bits;
    std::int64_t global_bits = 0;
    for (const GlobalEntry& e : s.global[v]) {
      global_bits += 2 * st.label_bits + 1;  // interval + middle presence
      if (e.middle != 0) global_bits += st.label_bits;
    }
    st.max_local_bits = std::max(st.max_local_bits, local_bits);
    st.max_global_bits = std::max(st.max_global_bits, global_bits);
    st.max_table_bits = std::max(st.max_table_bits, local_bits + global_bits);
    st.total_table_bits += local_bits + global_bits;
  }
  return s;
}

}  // namespace

SchemeArtifacts build_scheme_artifacts(const std::vector<Site>& sites,
                                       double epsilon,
                                       std::optional<double> c_override,
                                       double alpha) {
  SchemeArtifacts a;
  a.graph = build_udg(sites);
  const auto comp = connected_components(a.graph);
  for (int v = 0; v < a.graph.n(); ++v) {
    if (comp[v] != comp[0])
      throw Error("build_scheme: UD(S) is disconnected (site 0 and site " +
                  std::to_string(v) + " are in different components)");
  }
  const double diameter = graph_diameter(a.graph);
  double c;
  if (c_override.has_value()) {
    if (*c_override < 13.0)
      throw Error("build_scheme: c override must be at least 13");
    c = *c_override;
  } else {
    c = choose_c(epsilon, diameter, alpha);
  }
  a.emst = build_emst(a.graph);
  a.hierarchy = build_hierarchy(a.emst);
  assign_labels(a.hierarchy);
  a.wspd = build_wspd(a.hierarchy, a.graph.sites, c);
  a.scheme = assemble(a, epsilon, c, alpha, diameter);
  return a;
}

RoutingScheme build_scheme(const std::vector<Site>& sites, double epsilon,
                           std::optional<double> c_override, double alpha) {
  return build_scheme_artifacts(sites, epsilon, c_override, alpha).scheme;
}

}  // namespace diskroute
