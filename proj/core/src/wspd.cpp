#include "diskroute/wspd.hpp"

#include <functional>
#include <sstream>

#include "diskroute/error.hpp"

namespace diskroute {

bool is_well_separated(const Hierarchy& h, const std::vector<Site>& sites,
                       int u, int v, double c) {
  const double d = dist(sites[h.representative(u)].pos,
                        sites[h.representative(v)].pos);
  return is_well_separated(h.node(u).size, h.node(v).size, d, c);
}

Wspd build_wspd(const Hierarchy& h, const std::vector<Site>& sites, double c) {
  if (!h.has_labels()) throw Error("build_wspd: hierarchy has no labels");
  if (c < 1.0) throw Error("build_wspd: separation parameter must be >= 1");
  Wspd w;
  w.c = c;
  w.per_node_count.assign(h.nodes.size(), 0);

  std::function<void(int, int)> refine = [&](int u, int v) {
    if (u == v) {
      if (h.node(u).is_leaf()) return;  // diagonal pairs are not represented
      const int a = h.node(u).child[0];
      const int b = h.node(u).child[1];
      refine(a, a);
      refine(b, b);
      refine(a, b);
      return;
    }
    if (is_well_separated(h, sites, u, v, c)) {
      w.pairs.push_back(
          {u, v, h.representative(u), h.representative(v)});
      ++w.per_node_count[u];
      ++w.per_node_count[v];
      return;
    }
    // split the larger side, ties toward u
    if (h.node(u).size >= h.node(v).size) {
      refine(h.node(u).child[0], v);
      refine(h.node(u).child[1], v);
    } else {
      refine(u, h.node(v).child[0]);
      refine(u, h.node(v).child[1]);
    }
  };
  refine(h.root, h.root);
  return w;
}

RepresentingPair find_representing_pair(const Wspd& w, const Hierarchy& h,
                                        SiteId s, SiteId t) {
  if (s == t) throw Error("find_representing_pair: s == t");
  const Label ls = h.site_label[s];
  const Label lt = h.site_label[t];
  RepresentingPair found;
  int matches = 0;
  for (int i = 0; i < static_cast<int>(w.pairs.size()); ++i) {
    const WspdPair& p = w.pairs[i];
    const HierarchyNode& nu = h.node(p.u);
    const HierarchyNode& nv = h.node(p.v);
    if (nu.lo <= ls && ls <= nu.hi && nv.lo <= lt && lt <= nv.hi) {
      found = {i, false};
      ++matches;
    }
    if (nv.lo <= ls && ls <= nv.hi && nu.lo <= lt && lt <= nu.hi) {
      found = {i, true};
      ++matches;
    }
  }
  if (matches != 1)
    throw Error("find_representing_pair: " + std::to_string(matches) +
                " pairs represent (" + std::to_string(s) + "," +
                std::to_string(t) + "); the partition is broken");
  return found;
}

std::string dump_wspd(const Wspd& w, const Hierarchy& h,
                      const std::vector<Site>& sites) {
  std::ostringstream os;
  for (const WspdPair& p : w.pairs) {
    const double rd = dist(sites[p.rep_u].pos, sites[p.rep_v].pos);
    const double lhs =
        (w.c + 2.0) * std::max(h.node(p.u).size - 1, h.node(p.v).size - 1);
    os << h.node(p.u).size << ' ' << h.node(p.v).size << ' ' << p.rep_u << ' '
       << p.rep_v << ' ' << lhs << ' ' << rd << '\n';
  }
  return os.str();
}

}  // namespace diskroute
