#pragma once

#include <string>
#include <vector>

#include "diskroute/emst.hpp"

namespace diskroute {

struct HierarchyNode {
  int depth = 0;
  int size = 0;                 // |S_v|
  Label lo = 0, hi = 0;         // label interval I_v (set by assign_labels)
  SiteId site = -1;             // leaves only
  TreeEdge edge{-1, -1};        // associated edge e_v (internal nodes)
  int child[2] = {-1, -1};
  int parent = -1;

  bool is_leaf() const { return site >= 0; }
};

/// Balanced hierarchical decomposition of the EMST: a binary tree whose
/// leaves are the sites and where each internal node removes a balanced
/// edge from its subtree. The level of a tree edge is the depth of the
/// node that removed it.
struct Hierarchy {
  std::vector<HierarchyNode> nodes;
  int root = -1;
  std::vector<int> leaf_of;        // site -> leaf node index
  int height = 0;                  // max node depth
  std::vector<Label> site_label;   // site -> label (1..n), by assign_labels
  std::vector<SiteId> label_site;  // label -> site, [0] unused (-1)

  const HierarchyNode& node(int i) const { return nodes[i]; }
  int n_sites() const { return static_cast<int>(leaf_of.size()); }
  bool has_labels() const { return !site_label.empty(); }

  /// Representative site sigma(v): the minimum-label site of the node.
  SiteId representative(int node_index) const {
    return label_site[nodes[node_index].lo];
  }
};

/// The edge of the tree induced on `vertices` whose removal leaves the most
/// balanced split; among qualifying edges (min side >= ceil((|V|-1)/6) when
/// the degree bound holds) returns the one maximizing the smaller side,
/// ties by lexicographically smaller edge.
TreeEdge balanced_edge(const Emst& tree, const std::vector<SiteId>& vertices);

/// Recursively decomposes the tree and assigns every edge its level
/// (the depth of the removing node) into tree.edge_level.
Hierarchy build_hierarchy(Emst& tree);

/// Postorder traversal of the hierarchy: leaves get labels 1..n in
/// encounter order, each node gets the interval of its leaf labels, so
/// membership of a site in a subtree is an interval test on its label.
void assign_labels(Hierarchy& h);

/// Debug dump, one line per node: depth size lo hi edge_u edge_v
/// (preorder; leaves print -1 -1 for the edge).
std::string dump_hierarchy(const Hierarchy& h);

}  // namespace diskroute
