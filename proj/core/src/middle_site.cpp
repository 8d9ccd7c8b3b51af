#include "diskroute/middle_site.hpp"

#include <algorithm>

#include "diskroute/error.hpp"

namespace diskroute {

SiteId middle_site(const ShortestPathTree& spt, SiteId target) {
  if (target < 0 || target >= static_cast<SiteId>(spt.dist.size()) ||
      spt.dist[target] == kInf)
    throw Error("middle_site: target unreachable from source");
  std::vector<SiteId> path;
  for (SiteId v = target; v != -1; v = spt.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // source first

  const double d = spt.dist[target];
  SiteId best = path[0];
  double best_max = std::max(spt.dist[best], d - spt.dist[best]);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const SiteId m = path[i];
    const double fm = std::max(spt.dist[m], d - spt.dist[m]);
    if (fm < best_max) {
      best_max = fm;
      best = m;
    }
  }
  return best;
}

namespace {

// Arena-backed max pairing heap keyed by (distance, site id); meld is O(1)
// and extract-max is amortized logarithmic.
class PairingHeap {
 public:
  struct Node {
    double key = 0.0;
    SiteId site = -1;
    int child = -1;
    int sibling = -1;
  };

  explicit PairingHeap(int capacity, MiddleHeapCounts& counts)
      : counts_(counts) {
    nodes_.reserve(capacity);
  }

  int make(double key, SiteId site) {
    nodes_.push_back({key, site, -1, -1});
    ++counts_.inserts;
    return static_cast<int>(nodes_.size()) - 1;
  }

  // Root of the meld of two heaps (either may be -1).
  int meld(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    ++counts_.melds;
    if (less(a, b)) std::swap(a, b);
    nodes_[b].sibling = nodes_[a].child;
    nodes_[a].child = b;
    return a;
  }

  const Node& top(int root) const { return nodes_[root]; }

  int pop(int root) {
    ++counts_.extracts;
    int list = nodes_[root].child;
    // two-pass pairing
    int paired = -1;
    while (list >= 0) {
      int a = list;
      int b = nodes_[a].sibling;
      if (b < 0) {
        nodes_[a].sibling = paired;
        paired = a;
        break;
      }
      list = nodes_[b].sibling;
      nodes_[a].sibling = -1;
      nodes_[b].sibling = -1;
      int m = meld(a, b);
      nodes_[m].sibling = paired;
      paired = m;
    }
    int result = -1;
    while (paired >= 0) {
      int next = nodes_[paired].sibling;
      nodes_[paired].sibling = -1;
      result = meld(result, paired);
      paired = next;
    }
    return result;
  }

 private:
  bool less(int a, int b) const {
    if (nodes_[a].key != nodes_[b].key) return nodes_[a].key < nodes_[b].key;
    return nodes_[a].site < nodes_[b].site;
  }

  std::vector<Node> nodes_;
  MiddleHeapCounts& counts_;
};

}  // namespace

MiddleSites compute_middle_sites_fast(const ShortestPathTree& spt) {
  const int n = static_cast<int>(spt.dist.size());
  const SiteId s = spt.source;
  MiddleSites out;
  out.source = s;
  out.middle.assign(n, -1);

  std::vector<std::vector<SiteId>> children(n);
  for (int v = 0; v < n; ++v) {
    if (spt.parent[v] != -1) children[spt.parent[v]].push_back(v);
  }

  // iterative post-order over the shortest path tree
  std::vector<SiteId> order;
  order.reserve(n);
  std::vector<SiteId> stack{s};
  while (!stack.empty()) {
    SiteId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (SiteId c : children[u]) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());

  PairingHeap heap(n, out.counts);
  std::vector<int> root(n, -1);
  for (SiteId m : order) {
    int r = -1;
    for (SiteId c : children[m]) r = heap.meld(r, root[c]);
    r = heap.meld(r, heap.make(spt.dist[m], m));
    const SiteId up = spt.parent[m];
    while (r >= 0) {
      const SiteId t = heap.top(r).site;
      if (up != -1 &&
          parent_at_least_as_good(spt.dist[m], spt.dist[up], spt.dist[t])) {
        break;  // t and everything below it keeps bubbling up
      }
      out.middle[t] = m;
      r = heap.pop(r);
    }
    root[m] = r;
  }
  return out;
}

MiddleSites compute_middle_sites_fast(const UnitDiskGraph& g, SiteId s) {
  return compute_middle_sites_fast(shortest_paths(g, s));
}

}  // namespace diskroute
