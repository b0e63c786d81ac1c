#include "extremal/tree.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

const char* tree_kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::Path: return "path";
    case TreeKind::Spider: return "spider";
    case TreeKind::General: return "general";
  }
  return "general";
}

std::vector<int> mask_vertices(TreeMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

LabeledTree::LabeledTree(int v, const std::vector<Edge>& edges) {
  if (v < 2 || v > kMaxVertices) throw PreconditionViolated("tree must have 2.." + std::to_string(kMaxVertices) + " vertices");
  if (static_cast<int>(edges.size()) != v - 1) throw PreconditionViolated("a tree on v vertices has v-1 edges");
  adj_.assign(v, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v || a == b) throw PreconditionViolated("bad tree edge");
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) throw PreconditionViolated("repeated tree edge");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (!is_connected(full_mask())) throw PreconditionViolated("tree edges are not connected");
  finish();
  int big = 0;
  for (int x = 0; x < v; ++x) big += degree(x) >= 3;
  if (big == 0) {
    kind_ = TreeKind::Path;
  } else if (big == 1) {
    kind_ = TreeKind::Spider;
    for (int x = 0; x < v; ++x)
      if (degree(x) >= 3) center_ = x;
    for (int first : adj_[center_]) {
      std::vector<int> leg{first};
      int prev = center_, cur = first;
      while (degree(cur) == 2) {
        int nxt = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = nxt;
        leg.push_back(cur);
      }
      legs_.push_back(std::move(leg));
    }
    // Legs in the order of their leaves' labels.
    std::sort(legs_.begin(), legs_.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
  }
}

void LabeledTree::finish() {
  int v = num_vertices();
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  std::sort(edges_.begin(), edges_.end());
  leaves_.clear();
  leaf_pos_.assign(v, -1);
  for (int x = 0; x < v; ++x)
    if (degree(x) == 1) {
      leaf_pos_[x] = static_cast<int>(leaves_.size());
      leaves_.push_back(x);
    }
  side_.assign(v, -1);
  side_[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[x])
      if (side_[y] < 0) {
        side_[y] = side_[x] ^ 1;
        stack.push_back(y);
      }
  }
  if (leaves_.size() == 2) path_order_ = path_between(leaves_[0], leaves_[1]);
}

LabeledTree LabeledTree::path(int length) {
  if (length < 1) throw PreconditionViolated("path length must be at least 1");
  std::vector<Edge> es;
  for (int i = 0; i < length; ++i) es.emplace_back(i, i + 1);
  return LabeledTree(length + 1, es);
}

LabeledTree LabeledTree::spider(const std::vector<int>& legs) {
  if (legs.size() < 2) throw PreconditionViolated("spider needs at least two legs");
  std::vector<Edge> es;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw PreconditionViolated("spider legs must have length at least 1");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  LabeledTree t(next, es);
  t.kind_ = TreeKind::Spider;
  t.center_ = 0;
  t.legs_.clear();
  int start = 1;
  for (int len : legs) {
    std::vector<int> leg;
    for (int i = 0; i < len; ++i) leg.push_back(start + i);
    start += len;
    t.legs_.push_back(std::move(leg));
  }
  return t;
}

bool LabeledTree::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int LabeledTree::side_size(int s) const {
  int c = 0;
  for (int x = 0; x < num_vertices(); ++x) c += side(x) == s;
  return c;
}

LabeledTree LabeledTree::flipped() const {
  LabeledTree t = *this;
  t.flipped_ = !flipped_;
  return t;
}

std::vector<int> LabeledTree::leg_lengths() const {
  std::vector<int> out;
  for (const auto& leg : legs_) out.push_back(static_cast<int>(leg.size()));
  return out;
}

bool LabeledTree::is_connected(TreeMask mask) const {
  if (mask == 0) return false;
  TreeMask seen = mask & (~mask + 1);
  TreeMask frontier = seen;
  while (frontier) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (int y : adj_[x]) {
      TreeMask b = TreeMask{1} << y;
      if ((mask & b) && !(seen & b)) {
        seen |= b;
        frontier |= b;
      }
    }
  }
  return seen == mask;
}

LabeledTree LabeledTree::subtree(TreeMask mask) const {
  std::vector<int> vs = mask_vertices(mask);
  std::vector<int> pos(num_vertices(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [a, b] : edges_)
    if (pos[a] >= 0 && pos[b] >= 0) es.emplace_back(pos[a], pos[b]);
  return LabeledTree(static_cast<int>(vs.size()), es);
}

std::vector<TreeMask> LabeledTree::split_subtrees(int v) const {
  std::vector<TreeMask> out;
  for (int start : adj_[v]) {
    TreeMask comp = (TreeMask{1} << v) | (TreeMask{1} << start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj_[x]) {
        TreeMask b = TreeMask{1} << y;
        if (!(comp & b)) {
          comp |= b;
          stack.push_back(y);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<TreeMask> LabeledTree::connected_subsets() const {
  // Grow each subset from its lowest vertex so every subset is produced once.
  std::vector<TreeMask> out;
  int v = num_vertices();
  for (int root = 0; root < v; ++root) {
    TreeMask allowed = full_mask() & ~((TreeMask{1} << root) - 1);
    std::vector<std::pair<TreeMask, TreeMask>> stack{{TreeMask{1} << root, 0}};
    while (!stack.empty()) {
      auto [cur, banned] = stack.back();
      stack.pop_back();
      out.push_back(cur);
      TreeMask ext = 0;
      for (int x : mask_vertices(cur))
        for (int y : adj_[x]) ext |= TreeMask{1} << y;
      ext &= allowed & ~cur & ~banned;
      // Branch on each extension vertex, banning the earlier ones in later branches.
      TreeMask ban = banned;
      for (int y : mask_vertices(ext)) {
        stack.emplace_back(cur | (TreeMask{1} << y), ban);
        ban |= TreeMask{1} << y;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LabeledTree::path_between(int u, int w) const {
  std::vector<int> parent(num_vertices(), -1);
  std::vector<int> stack{u};
  parent[u] = u;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[x])
      if (parent[y] < 0) {
        parent[y] = x;
        stack.push_back(y);
      }
  }
  std::vector<int> out{w};
  while (out.back() != u) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string LabeledTree::describe() const {
  std::ostringstream os;
  os << tree_kind_name(kind_) << " v=" << num_vertices() << " edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i)
    os << (i ? "," : "") << edges_[i].first + 1 << "-" << edges_[i].second + 1;
  return os.str();
}

}  // namespace extremal
