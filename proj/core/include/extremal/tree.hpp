#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Vertex subsets of a tree are bitmasks over vertex indices.
using TreeMask = std::uint32_t;

enum class TreeKind { Path, Spider, General };

const char* tree_kind_name(TreeKind k);

// Tree on vertices 0..v-1 whose label is index + 1. Side 0 (A) holds label 1.
class LabeledTree {
 public:
  static constexpr int kMaxVertices = 24;

  LabeledTree() = default;
  // Throws PreconditionViolated unless the edges form a tree on 2..kMaxVertices vertices.
  LabeledTree(int v, const std::vector<Edge>& edges);

  // Path with `length` edges, labels in path order.
  static LabeledTree path(int length);
  // Center has label 1; legs follow in order, each numbered outward from the center.
  static LabeledTree spider(const std::vector<int>& legs);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_vertices() - 1; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  // Leaves in label order.
  const std::vector<int>& leaves() const { return leaves_; }
  bool is_leaf(int v) const { return degree(v) == 1; }
  // Position of v in the leaf vector, or -1.
  int leaf_index(int v) const { return leaf_pos_[v]; }
  int side(int v) const { return side_[v] ^ (flipped_ ? 1 : 0); }
  int side_size(int s) const;
  // Same tree with A and B exchanged.
  LabeledTree flipped() const;

  TreeKind kind() const { return kind_; }
  // Spiders: center and legs listed outward from the center (center excluded).
  int center() const { return center_; }
  const std::vector<std::vector<int>>& legs() const { return legs_; }
  std::vector<int> leg_lengths() const;
  // Paths: vertices from the first leaf to the second.
  const std::vector<int>& path_order() const { return path_order_; }

  TreeMask full_mask() const { return num_vertices() == 32 ? ~TreeMask{0} : (TreeMask{1} << num_vertices()) - 1; }
  bool is_connected(TreeMask mask) const;
  // Induced subtree relabelled in ascending label order. Needs at least two vertices.
  LabeledTree subtree(TreeMask mask) const;
  // The edge-disjoint subtrees that have v as a leaf and cover the tree.
  std::vector<TreeMask> split_subtrees(int v) const;
  // Every nonempty connected vertex subset.
  std::vector<TreeMask> connected_subsets() const;
  // Vertices of the unique path between u and w, in order.
  std::vector<int> path_between(int u, int w) const;

  std::string describe() const;

 private:
  void finish();

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> leaves_;
  std::vector<int> leaf_pos_;
  std::vector<int> side_;
  bool flipped_ = false;
  TreeKind kind_ = TreeKind::General;
  int center_ = -1;
  std::vector<std::vector<int>> legs_;
  std::vector<int> path_order_;
};

std::vector<int> mask_vertices(TreeMask mask);

}  // namespace extremal
