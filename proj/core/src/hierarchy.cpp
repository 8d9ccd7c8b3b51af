#include "diskroute/hierarchy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "diskroute/error.hpp"

namespace diskroute {

namespace {

// Subtree sizes of the induced tree, rooted at vertices[0]. Fills
// parent_of/size_of for members only (indexed by site id).
void induced_sizes(const Emst& tree, const std::vector<SiteId>& vertices,
                   const std::vector<char>& member,
                   std::vector<SiteId>& parent_of, std::vector<int>& size_of) {
  std::vector<SiteId> order;
  order.reserve(vertices.size());
  std::vector<SiteId> stack{vertices[0]};
  parent_of[vertices[0]] = vertices[0];
  while (!stack.empty()) {
    SiteId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (SiteId v : tree.neighbors[u]) {
      if (!member[v] || v == parent_of[u] || parent_of[v] != -1) continue;
      parent_of[v] = u;
      stack.push_back(v);
    }
  }
  if (order.size() != vertices.size())
    throw Error("balanced_edge: vertex set is not connected in the tree");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size_of[*it] = 1;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SiteId u = *it;
    if (u != vertices[0]) size_of[parent_of[u]] += size_of[u];
  }
}

}  // namespace

TreeEdge balanced_edge(const Emst& tree, const std::vector<SiteId>& vertices) {
  const int m = static_cast<int>(vertices.size());
  if (m < 2) throw Error("balanced_edge: need at least two vertices");
  std::vector<char> member(tree.n, 0);
  for (SiteId v : vertices) member[v] = 1;
  std::vector<SiteId> parent_of(tree.n, -1);
  std::vector<int> size_of(tree.n, 0);
  induced_sizes(tree, vertices, member, parent_of, size_of);

  int best_min = -1;
  TreeEdge best{-1, -1};
  for (SiteId u : vertices) {
    if (u == vertices[0]) continue;
    const int a = size_of[u];
    const int side = std::min(a, m - a);
    TreeEdge e = make_edge(u, parent_of[u]);
    if (side > best_min || (side == best_min && e < best)) {
      best_min = side;
      best = e;
    }
  }
  return best;
}

namespace {

struct Builder {
  Emst& tree;
  Hierarchy& h;

  // Splits `vertices` along `cut`; the side containing `from` is returned.
  std::vector<SiteId> side_of(const std::vector<SiteId>& vertices,
                              TreeEdge cut, SiteId from) {
    std::vector<char> member(tree.n, 0);
    for (SiteId v : vertices) member[v] = 1;
    std::vector<char> seen(tree.n, 0);
    std::vector<SiteId> out, stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      SiteId u = stack.back();
      stack.pop_back();
      out.push_back(u);
      for (SiteId v : tree.neighbors[u]) {
        if (!member[v] || seen[v]) continue;
        if (make_edge(u, v) == cut) continue;
        seen[v] = 1;
        stack.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int build(const std::vector<SiteId>& vertices, int depth, int parent) {
    const int idx = static_cast<int>(h.nodes.size());
    h.nodes.emplace_back();
    h.nodes[idx].depth = depth;
    h.nodes[idx].size = static_cast<int>(vertices.size());
    h.nodes[idx].parent = parent;
    h.height = std::max(h.height, depth);
    if (vertices.size() == 1) {
      h.nodes[idx].site = vertices[0];
      h.leaf_of[vertices[0]] = idx;
      return idx;
    }
    const TreeEdge cut = balanced_edge(tree, vertices);
    h.nodes[idx].edge = cut;
    tree.edge_level[cut] = depth;
    const std::vector<SiteId> first = side_of(vertices, cut, cut.first);
    const std::vector<SiteId> second = side_of(vertices, cut, cut.second);
    const int c0 = build(first, depth + 1, idx);
    const int c1 = build(second, depth + 1, idx);
    h.nodes[idx].child[0] = c0;
    h.nodes[idx].child[1] = c1;
    return idx;
  }
};

}  // namespace

Hierarchy build_hierarchy(Emst& tree) {
  Hierarchy h;
  h.leaf_of.assign(tree.n, -1);
  tree.edge_level.clear();
  std::vector<SiteId> all(tree.n);
  for (int i = 0; i < tree.n; ++i) all[i] = i;
  Builder b{tree, h};
  h.root = b.build(all, 0, -1);
  return h;
}

void assign_labels(Hierarchy& h) {
  const int n = h.n_sites();
  h.site_label.assign(n, 0);
  h.label_site.assign(n + 1, -1);
  Label next = 1;
  std::function<void(int)> visit = [&](int idx) {
    HierarchyNode& node = h.nodes[idx];
    if (node.is_leaf()) {
      node.lo = node.hi = next;
      h.site_label[node.site] = next;
      h.label_site[next] = node.site;
      ++next;
      return;
    }
    visit(node.child[0]);
    visit(node.child[1]);
    node.lo = h.nodes[node.child[0]].lo;
    node.hi = h.nodes[node.child[1]].hi;
  };
  visit(h.root);
}

std::string dump_hierarchy(const Hierarchy& h) {
  std::ostringstream os;
  std::function<void(int)> visit = [&](int idx) {
    const HierarchyNode& node = h.nodes[idx];
    os << node.depth << ' ' << node.size << ' ' << node.lo << ' ' << node.hi
       << ' ' << node.edge.first << ' ' << node.edge.second << '\n';
    if (!node.is_leaf()) {
      visit(node.child[0]);
      visit(node.child[1]);
    }
  };
  if (h.root >= 0) visit(h.root);
  return os.str();
}

}  // namespace diskroute
