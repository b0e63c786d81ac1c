#include "extremal/family.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

bool lex_less(const int* a, const int* b, std::size_t n) {
  return std::lexicographical_compare(a, a + n, b, b + n);
}

// Leaves of the subtree on `mask`, in label order.
std::vector<int> mask_leaves(const LabeledTree& t, TreeMask mask) {
  std::vector<int> out;
  for (int x : mask_vertices(mask)) {
    int d = 0;
    for (int y : t.neighbors(x)) d += (mask >> y) & 1;
    if (d == 1) out.push_back(x);
  }
  return out;
}

}  // namespace

EmbeddingFamily::EmbeddingFamily(LabeledTree tree, std::shared_ptr<const Graph> host, std::vector<int> flat,
                                 std::optional<int> side_boundary)
    : tree_(std::move(tree)), host_(std::move(host)), boundary_(side_boundary) {
  stride_ = static_cast<std::size_t>(tree_.num_vertices());
  if (flat.size() % stride_ != 0) throw PreconditionViolated("family storage is not a whole number of members");
  std::size_t n = flat.size() / stride_;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(flat.data() + a * stride_, flat.data() + b * stride_, stride_);
  });
  flat_.reserve(flat.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int* p = flat.data() + order[i] * stride_;
    if (count_ > 0 && std::equal(p, p + stride_, flat_.data() + (count_ - 1) * stride_)) continue;
    flat_.insert(flat_.end(), p, p + stride_);
    ++count_;
  }
  for (std::size_t i = 0; i < count_; ++i) classes_[leaf_vector(i)].push_back(static_cast<int>(i));
}

std::vector<int> EmbeddingFamily::leaf_vector(std::size_t i) const {
  std::vector<int> out;
  auto m = member(i);
  for (int x : tree_.leaves()) out.push_back(m[x]);
  return out;
}

const std::vector<int>& EmbeddingFamily::with_leaf_vector(const std::vector<int>& lv) const {
  static const std::vector<int> kEmpty;
  auto it = classes_.find(lv);
  return it == classes_.end() ? kEmpty : it->second;
}

long EmbeddingFamily::find(std::span<const int> emb) const {
  if (emb.size() != stride_) return -1;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(flat_.data() + mid * stride_, emb.data(), stride_))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count_ && std::equal(emb.begin(), emb.end(), flat_.data() + lo * stride_)) return static_cast<long>(lo);
  return -1;
}

EmbeddingFamily EmbeddingFamily::subfamily(const std::vector<int>& indices) const {
  std::vector<int> flat;
  flat.reserve(indices.size() * stride_);
  for (int i : indices) {
    auto m = member(static_cast<std::size_t>(i));
    flat.insert(flat.end(), m.begin(), m.end());
  }
  return EmbeddingFamily(tree_, host_, std::move(flat), boundary_);
}

std::vector<int> EmbeddingFamily::project_member(std::size_t i, TreeMask mask) const {
  std::vector<int> out;
  auto m = member(i);
  for (int x : mask_vertices(mask)) out.push_back(m[x]);
  return out;
}

EmbeddingFamily EmbeddingFamily::project(TreeMask mask) const {
  LabeledTree sub = tree_.subtree(mask);
  std::vector<int> flat;
  flat.reserve(count_ * sub.num_vertices());
  for (std::size_t i = 0; i < count_; ++i) {
    auto p = project_member(i, mask);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  // The subtree's own sides start from its lowest label; keep them aligned with the parent tree.
  if (sub.side(0) != tree_.side(mask_vertices(mask).front())) sub = sub.flipped();
  return EmbeddingFamily(std::move(sub), host_, std::move(flat), boundary_);
}

long double homomorphism_estimate(const Graph& g, const LabeledTree& t, std::optional<int> boundary) {
  int n = g.num_vertices(), v = t.num_vertices();
  auto allowed = [&](int x, int u) {
    if (!boundary) return true;
    return (t.side(x) == 0) == (u < *boundary);
  };
  std::vector<int> parent(v, -1), order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : t.neighbors(order[i]))
      if (parent[y] < 0) {
        parent[y] = order[i];
        order.push_back(y);
      }
  std::vector<std::vector<long double>> f(v, std::vector<long double>(n, 0.0L));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    for (int u = 0; u < n; ++u) {
      if (!allowed(x, u)) continue;
      long double prod = 1.0L;
      for (int c : t.neighbors(x)) {
        if (c == parent[x]) continue;
        long double s = 0.0L;
        for (int w : g.neighbors(u)) s += f[c][w];
        prod *= s;
      }
      f[x][u] = prod;
    }
  }
  long double total = 0.0L;
  for (int u = 0; u < n; ++u) total += f[0][u];
  return total;
}

namespace {

EmbeddingFamily enumerate_impl(std::shared_ptr<const Graph> host, const LabeledTree& t, std::optional<int> boundary,
                               const EnumerationOptions& opt) {
  const Graph& g = *host;
  int v = t.num_vertices();
  if (v > kMaxEnumerationVertices)
    throw TooLarge("tree has " + std::to_string(v) + " vertices; enumeration is limited to " +
                   std::to_string(kMaxEnumerationVertices));
  long double est = homomorphism_estimate(g, t, boundary);
  if (est > 64.0L * static_cast<long double>(opt.max_copies))
    throw TooLarge("estimated copy count exceeds the enumeration ceiling");
  // Connected label order: always place the smallest unplaced vertex next to the placed ones.
  std::vector<int> order{0}, parent(v, -1);
  std::vector<bool> placed(v, false);
  placed[0] = true;
  while (static_cast<int>(order.size()) < v) {
    int best = -1, par = -1;
    for (int x : order)
      for (int y : t.neighbors(x))
        if (!placed[y] && (best < 0 || y < best)) {
          best = y;
          par = x;
        }
    placed[best] = true;
    parent[best] = par;
    order.push_back(best);
  }
  auto allowed = [&](int x, int u) {
    if (!boundary) return true;
    return (t.side(x) == 0) == (u < *boundary);
  };
  std::vector<int> flat, img(v, -1);
  std::vector<char> used(g.num_vertices(), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == v) {
      if (++count > opt.max_copies) throw TooLarge("copy count exceeds the enumeration ceiling");
      flat.insert(flat.end(), img.begin(), img.end());
      return;
    }
    int x = order[depth];
    auto try_vertex = [&](int u) {
      if (used[u] || !allowed(x, u)) return;
      used[u] = 1;
      img[x] = u;
      self(self, depth + 1);
      used[u] = 0;
    };
    if (depth == 0) {
      for (int u = 0; u < g.num_vertices(); ++u) try_vertex(u);
    } else {
      for (int u : g.neighbors(img[parent[x]])) try_vertex(u);
    }
  };
  rec(rec, 0);
  return EmbeddingFamily(t, std::move(host), std::move(flat), boundary);
}

}  // namespace

EmbeddingFamily enumerate_copies(const Graph& g, const LabeledTree& t, const EnumerationOptions& opt) {
  return enumerate_impl(std::make_shared<const Graph>(g), t, std::nullopt, opt);
}

EmbeddingFamily enumerate_copies(const BipartiteGraph& g, const LabeledTree& t, bool a_into_M,
                                 const EnumerationOptions& opt) {
  auto host = std::make_shared<const Graph>(g.graph());
  if (!a_into_M) return enumerate_impl(std::move(host), t, std::nullopt, opt);
  return enumerate_impl(std::move(host), t, g.m(), opt);
}

BigInt heavy_threshold(std::int64_t h, int edges) {
  if (h < 1) throw PreconditionViolated("h must be at least 1");
  BigInt r = 1, base = h;
  for (int i = 0; i < edges * edges; ++i) r *= base;
  return r;
}

bool is_heavy(const EmbeddingFamily& fam, std::size_t i, std::int64_t h) {
  BigInt th = heavy_threshold(h, fam.tree().num_edges());
  return BigInt(fam.with_leaf_vector(fam.leaf_vector(i)).size()) >= th;
}

HeavyPartition classify_heavy(const EmbeddingFamily& fam, std::int64_t h) {
  BigInt th = heavy_threshold(h, fam.tree().num_edges());
  std::vector<bool> heavy(fam.size(), false);
  for (const auto& [lv, idx] : fam.leaf_classes())
    if (BigInt(idx.size()) >= th)
      for (int i : idx) heavy[i] = true;
  HeavyPartition out;
  for (std::size_t i = 0; i < fam.size(); ++i) (heavy[i] ? out.heavy : out.light).push_back(static_cast<int>(i));
  return out;
}

std::vector<bool> admissible_flags(const EmbeddingFamily& fam, std::int64_t h) {
  const LabeledTree& t = fam.tree();
  std::vector<bool> ok(fam.size(), true);
  if (t.num_edges() == 1) return ok;
  std::set<TreeMask> masks;
  for (int v = 0; v < t.num_vertices(); ++v)
    if (!t.is_leaf(v))
      for (TreeMask d : t.split_subtrees(v)) masks.insert(d);
  for (TreeMask d : masks) {
    std::vector<int> leaves = mask_leaves(t, d);
    std::vector<int> verts = mask_vertices(d);
    std::vector<int> leaf_pos;
    for (int x : leaves) leaf_pos.push_back(static_cast<int>(std::find(verts.begin(), verts.end(), x) - verts.begin()));
    int e = static_cast<int>(verts.size()) - 1;
    BigInt th = heavy_threshold(h, e);
    std::vector<std::vector<int>> proj(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) proj[i] = fam.project_member(i, d);
    std::set<std::vector<int>> distinct(proj.begin(), proj.end());
    std::map<std::vector<int>, std::size_t> per_leaf;
    auto leaf_of = [&](const std::vector<int>& p) {
      std::vector<int> lv;
      for (int q : leaf_pos) lv.push_back(p[q]);
      return lv;
    };
    for (const auto& p : distinct) ++per_leaf[leaf_of(p)];
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (BigInt(per_leaf[leaf_of(proj[i])]) >= th) ok[i] = false;
  }
  return ok;
}

bool is_admissible(const EmbeddingFamily& fam, std::span<const int> emb, std::int64_t h) {
  long idx = fam.find(emb);
  if (idx < 0) throw MemberNotFound("embedding is not a member of the family");
  if (fam.tree().num_edges() == 1) return true;
  return admissible_flags(fam, h)[static_cast<std::size_t>(idx)];
}

void write_family(std::ostream& out, const EmbeddingFamily& fam) {
  out << "# " << fam.tree().describe() << " members=" << fam.size() << "\n";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto m = fam.member(i);
    for (std::size_t x = 0; x < m.size(); ++x) out << (x ? " " : "") << x + 1 << ":" << m[x];
    out << "\n";
  }
}

EmbeddingFamily read_family(std::istream& in, const LabeledTree& t, std::shared_ptr<const Graph> host) {
  int v = t.num_vertices();
  std::vector<int> flat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream is(line);
    std::vector<int> img(v, -1);
    std::string tok;
    while (is >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected label:vertex");
      int label = 0, vert = 0;
      try {
        std::size_t p1 = 0, p2 = 0;
        label = std::stoi(tok.substr(0, colon), &p1);
        vert = std::stoi(tok.substr(colon + 1), &p2);
        if (p1 != colon || p2 != tok.size() - colon - 1) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
      if (label < 1 || label > v || img[label - 1] >= 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad or repeated label");
      if (vert < 0 || vert >= host->num_vertices()) throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
      img[label - 1] = vert;
    }
    std::set<int> distinct(img.begin(), img.end());
    if (distinct.count(-1) || static_cast<int>(distinct.size()) != v)
      throw ParseError("line " + std::to_string(lineno) + ": not an injective map of every label");
    for (auto [a, b] : t.edges())
      if (!host->has_edge(img[a], img[b])) throw ParseError("line " + std::to_string(lineno) + ": tree edge not in host");
    flat.insert(flat.end(), img.begin(), img.end());
  }
  return EmbeddingFamily(t, std::move(host), std::move(flat));
}

}  // namespace extremal
