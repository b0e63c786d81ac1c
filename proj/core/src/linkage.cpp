#include "extremal/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "extremal/errors.hpp"

namespace extremal {

long double ProofConstants::robust_min_degree(long double eps, long double mu, long double eta, int a, int b) {
  int t = a + b - 1;
  return (a + b) * std::pow(2.0L * mu, a + b) * std::pow(eta, static_cast<long double>(t) * t + 1) / (eps * eps);
}

long double ProofConstants::thin_thick_eps(long double alpha, long double beta) {
  return (std::pow(2.0L, alpha + beta - 1.0L) - 1.0L) / 2.0L;
}

long double ProofConstants::subdivision_eta(int k, int r, int s, int t) {
  return 4.0L * k * k * r * s * t;
}

long double ProofConstants::subdivision_eps(long double mu, int k, int s) {
  return 1.0L / (4.0L * std::pow(8.0L * mu, 2.0L * k * s));
}

long double ProofConstants::light_h(int p, int k, int r) {
  return std::pow(static_cast<long double>(p), 4) * k * k * static_cast<long double>(r) * r;
}

long double ProofConstants::light_q(int p, int k, int r) {
  return static_cast<long double>(p) * p * k * r;
}

long double ProofConstants::light_gamma(long double h, long double q, long double mu, int k) {
  return 0.25L * std::pow(1.0L / (64.0L * h * q * mu), k / 2);
}

std::uint64_t count_paths_between(const Graph& g, int x, int y, int len, std::uint64_t cap, std::uint64_t budget) {
  if (x == y || len < 1 || cap == 0) return 0;
  int n = g.num_vertices();
  // Distances to y, only up to len.
  std::vector<int> dist(n, std::numeric_limits<int>::max());
  std::vector<int> queue{y};
  dist[y] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    if (dist[u] >= len) continue;
    for (int w : g.neighbors(u))
      if (dist[w] == std::numeric_limits<int>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  if (dist[x] > len) return 0;
  std::vector<char> on(n, 0);
  on[x] = 1;
  std::uint64_t count = 0, nodes = 0;
  auto rec = [&](auto&& self, int u, int left) -> void {
    if (++nodes > budget) throw TooLarge("path count exceeds the search budget");
    if (left == 0) {
      if (u == y) ++count;
      return;
    }
    for (int w : g.neighbors(u)) {
      if (on[w] || dist[w] > left - 1) continue;
      if (w == y && left != 1) continue;
      on[w] = 1;
      self(self, w, left - 1);
      on[w] = 0;
      if (count >= cap) return;
    }
  };
  rec(rec, x, len);
  return std::min(count, cap);
}

bool path_pair_heavy(const Graph& g, int x, int y, int len, std::int64_t eta) {
  BigInt th = heavy_threshold(eta, len);
  // No pair has more than Delta^(len-1) connecting paths.
  BigInt most = 1;
  for (int i = 1; i < len; ++i) most *= g.max_degree();
  if (most < th) return false;
  std::uint64_t cap = static_cast<std::uint64_t>(th);
  return count_paths_between(g, x, y, len, cap) >= cap;
}

namespace {

void check_host_path(const Graph& g, const std::vector<int>& path) {
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw PreconditionViolated("path repeats a vertex");
  for (int v : path)
    if (v < 0 || v >= g.num_vertices()) throw PreconditionViolated("path vertex out of range");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) throw PreconditionViolated("path uses a non-edge");
}

}  // namespace

SubpathResult find_admissible_subpath(const Graph& g, const std::vector<int>& path, std::int64_t eta) {
  if (eta < 2) throw PreconditionViolated("eta must be at least 2");
  int len = static_cast<int>(path.size()) - 1;
  if (len < 2) throw PreconditionViolated("path must have length at least 2");
  check_host_path(g, path);
  if (!path_pair_heavy(g, path.front(), path.back(), len, eta)) throw NotHeavy("path is not heavy in the host");
  for (int j = 2; j <= len; ++j)
    for (int s = 0; s + j <= len; ++s)
      if (path_pair_heavy(g, path[s], path[s + j], j, eta))
        return {s, j, std::vector<int>(path.begin() + s, path.begin() + s + j + 1)};
  throw InternalInvariantBroken("heavy path has no heavy window");
}

SubspiderResult find_admissible_subspider(const EmbeddingFamily& fam, std::span<const int> member, std::int64_t eta,
                                          int k) {
  const LabeledTree& t = fam.tree();
  if (t.kind() != TreeKind::Spider) throw PreconditionViolated("family tree is not a spider");
  if (eta < 2) throw PreconditionViolated("eta must be at least 2");
  long idx = fam.find(member);
  if (idx < 0) throw MemberNotFound("embedding is not a member of the family");
  if (!is_heavy(fam, static_cast<std::size_t>(idx), eta)) throw NotHeavy("member is not heavy in the family");
  std::vector<int> legs = t.leg_lengths();
  for (int l : legs)
    if (l > k) throw PreconditionViolated("spider leg longer than k");
  // The member must contain no heavy j-path for 2 <= j <= k.
  int v = t.num_vertices();
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      std::vector<int> tp = t.path_between(a, b);
      int j = static_cast<int>(tp.size()) - 1;
      if (j >= 2 && j <= k && path_pair_heavy(fam.host(), member[a], member[b], j, eta))
        throw PreconditionViolated("member contains a heavy path of length " + std::to_string(j));
    }
  auto check_sums = [&](const std::vector<int>& lens) {
    for (std::size_t i = 0; i < lens.size(); ++i)
      for (std::size_t j = i + 1; j < lens.size(); ++j)
        if (lens[i] + lens[j] <= k)
          throw PreconditionViolated("family members contain heavy paths: two legs of the subspider sum to at most k");
  };
  SubspiderResult out;
  if (is_admissible(fam, member, eta)) {
    check_sums(legs);
    out.leg_lengths = legs;
    out.mask = t.full_mask();
    out.vertices.assign(member.begin(), member.end());
    out.whole = true;
    return out;
  }
  // Candidate leg-length vectors by total length, then lexicographically.
  std::vector<std::vector<int>> cands;
  std::vector<int> cur(legs.size(), 1);
  while (true) {
    cands.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == legs[i]) cur[i++] = 1;
    if (i == cur.size()) break;
    ++cur[i];
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& lens : cands) {
    TreeMask mask = TreeMask{1} << t.center();
    for (std::size_t i = 0; i < lens.size(); ++i)
      for (int q = 0; q < lens[i]; ++q) mask |= TreeMask{1} << t.legs()[i][q];
    EmbeddingFamily proj = fam.project(mask);
    std::vector<int> pm = fam.project_member(static_cast<std::size_t>(idx), mask);
    long pi = proj.find(pm);
    if (!is_heavy(proj, static_cast<std::size_t>(pi), eta)) continue;
    check_sums(lens);
    if (!is_admissible(proj, pm, eta)) throw InternalInvariantBroken("minimal heavy subspider is not admissible");
    out.leg_lengths = lens;
    out.mask = mask;
    out.vertices = pm;
    out.whole = mask == t.full_mask();
    return out;
  }
  throw InternalInvariantBroken("heavy member has no heavy subspider");
}

namespace {

// Greedy packing of `members` that are disjoint outside the shared leaves.
std::vector<int> greedy_pack(const EmbeddingFamily& fam, const std::vector<int>& members, std::size_t want) {
  const LabeledTree& t = fam.tree();
  std::set<int> used;
  std::vector<int> out;
  for (int i : members) {
    auto m = fam.member(static_cast<std::size_t>(i));
    bool ok = true;
    for (int x = 0; x < t.num_vertices() && ok; ++x)
      if (!t.is_leaf(x) && used.count(m[x])) ok = false;
    if (!ok) continue;
    for (int x = 0; x < t.num_vertices(); ++x)
      if (!t.is_leaf(x)) used.insert(m[x]);
    out.push_back(i);
    if (out.size() >= want) break;
  }
  return out;
}

struct ExtensionPair {
  TreeMask base;
  int added;
};

std::vector<ExtensionPair> extension_pairs(const LabeledTree& t) {
  std::vector<ExtensionPair> out;
  for (TreeMask m : t.connected_subsets()) {
    if (m == t.full_mask()) continue;
    TreeMask ext = 0;
    for (int x : mask_vertices(m))
      for (int y : t.neighbors(x)) ext |= TreeMask{1} << y;
    ext &= ~m;
    for (int y : mask_vertices(ext)) out.push_back({m, y});
  }
  return out;
}

}  // namespace

LinkCertificate certify_linked(const EmbeddingFamily& fam, const std::vector<int>& leaf_image, std::int64_t h) {
  if (h < 1) throw PreconditionViolated("h must be at least 1");
  const std::vector<int>& cls = fam.with_leaf_vector(leaf_image);
  LinkCertificate c;
  c.class_size = cls.size();
  c.half_threshold_times_two = heavy_threshold(h, fam.tree().num_edges());
  c.members = greedy_pack(fam, cls, static_cast<std::size_t>(h));
  if (static_cast<std::int64_t>(c.members.size()) >= h) {
    c.linked = true;
    return c;
  }
  c.refusal = BigInt(2 * c.class_size) < c.half_threshold_times_two ? LinkRefusal::BelowCount : LinkRefusal::PackingShort;
  return c;
}

RobustResult extract_robust(const EmbeddingFamily& fam, std::int64_t eta, const std::optional<RobustBound>& bound) {
  if (eta < 1) throw PreconditionViolated("eta must be at least 1");
  const LabeledTree& t = fam.tree();
  std::vector<ExtensionPair> pairs = extension_pairs(t);
  BigInt th = heavy_threshold(eta, t.num_edges());
  std::vector<char> alive(fam.size(), 1);
  RobustReport rep;
  rep.input_size = fam.size();
  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.rounds;
    for (const auto& pr : pairs) {
      std::map<std::vector<int>, std::pair<std::set<int>, std::vector<int>>> groups;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        if (!alive[i]) continue;
        auto& g = groups[fam.project_member(i, pr.base)];
        g.first.insert(fam.member(i)[pr.added]);
        g.second.push_back(static_cast<int>(i));
      }
      for (auto& [key, g] : groups)
        if (static_cast<std::int64_t>(g.first.size()) < eta) {
          for (int i : g.second) alive[i] = 0;
          rep.removed_type_one += g.second.size();
          changed = true;
        }
    }
    for (const auto& [lv, idx] : fam.leaf_classes()) {
      std::size_t live = 0;
      for (int i : idx) live += alive[i];
      if (live > 0 && BigInt(2 * live) < th) {
        for (int i : idx) alive[i] = 0;
        rep.removed_type_two += live;
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (alive[i]) keep.push_back(static_cast<int>(i));
  if (bound) {
    rep.statement_bound = bound->eps * bound->edges * std::pow(bound->d_M, bound->b - 1) * std::pow(bound->d_N, bound->a - 1);
    rep.proof_bound = bound->eps * static_cast<long double>(fam.size());
  }
  return {fam.subfamily(keep), rep};
}

RobustCheck check_robust(const EmbeddingFamily& fam, std::int64_t eta) {
  RobustCheck out;
  for (const auto& [lv, idx] : fam.leaf_classes())
    if (static_cast<std::int64_t>(greedy_pack(fam, idx, static_cast<std::size_t>(eta)).size()) < eta) {
      out.linked = false;
      out.failure = "leaf vector without eta disjoint members";
      break;
    }
  const LabeledTree& t = fam.tree();
  for (const auto& pr : extension_pairs(t)) {
    std::map<std::vector<int>, std::set<int>> groups;
    for (std::size_t i = 0; i < fam.size(); ++i) groups[fam.project_member(i, pr.base)].insert(fam.member(i)[pr.added]);
    for (const auto& [key, imgs] : groups)
      if (static_cast<std::int64_t>(imgs.size()) < eta) {
        out.extensions = false;
        if (out.failure.empty()) out.failure = "subtree pair with fewer than eta extensions";
        return out;
      }
  }
  return out;
}

namespace {

// Members agreeing with a given member on every vertex except one tree vertex.
class RerouteIndex {
 public:
  RerouteIndex(const EmbeddingFamily& fam, int skip) : fam_(fam), mask_(fam.tree().full_mask() & ~(TreeMask{1} << skip)) {
    for (std::size_t i = 0; i < fam.size(); ++i) index_[fam.project_member(i, mask_)].push_back(static_cast<int>(i));
  }
  const std::vector<int>& agreeing(int member) const {
    return index_.at(fam_.project_member(static_cast<std::size_t>(member), mask_));
  }

 private:
  const EmbeddingFamily& fam_;
  TreeMask mask_;
  std::map<std::vector<int>, std::vector<int>> index_;
};

}  // namespace

Extension robust_extend(const EmbeddingFamily& fam, int member, int leaf, Parity parity, int t,
                        const std::set<int>& avoid, std::int64_t eta) {
  const LabeledTree& tree = fam.tree();
  if (member < 0 || static_cast<std::size_t>(member) >= fam.size()) throw MemberNotFound("member index out of range");
  if (leaf < 0 || leaf >= static_cast<int>(tree.leaves().size())) throw PreconditionViolated("leaf index out of range");
  if (t < 0) throw PreconditionViolated("t must be nonnegative");
  if (eta < static_cast<std::int64_t>(avoid.size()) + 2 * t + 2) throw PreconditionViolated("eta < |S| + 2t + 2");
  int vj = tree.leaves()[leaf];
  int uj = tree.neighbors(vj)[0];
  auto m0 = fam.member(static_cast<std::size_t>(member));
  int yj = m0[vj];
  if (avoid.count(yj)) throw PreconditionViolated("avoid set contains the moving leaf");
  if (parity == Parity::Odd && avoid.count(m0[uj])) throw PreconditionViolated("avoid set contains the leaf's neighbour");
  RerouteIndex reroute(fam, vj);

  auto even = [&](int start, const std::set<int>& S) {
    auto f0 = fam.member(static_cast<std::size_t>(start));
    std::set<int> base = S;
    for (int x : tree.leaves()) base.insert(f0[x]);
    base.insert(f0[uj]);
    std::vector<int> path{f0[vj]};
    int cur = start;
    for (int i = 1; i <= t; ++i) {
      std::set<int> forbid = base;
      forbid.insert(path.begin(), path.end());
      int f1 = -1;
      for (int c : fam.with_leaf_vector(fam.leaf_vector(static_cast<std::size_t>(cur))))
        if (!forbid.count(fam.member(static_cast<std::size_t>(c))[uj])) {
          f1 = c;
          break;
        }
      if (f1 < 0) throw ExtensionFailed("no member re-embeds the leaf neighbour outside the used set");
      int xi = fam.member(static_cast<std::size_t>(f1))[uj];
      forbid.insert(xi);
      int f2 = -1;
      for (int c : reroute.agreeing(f1))
        if (!forbid.count(fam.member(static_cast<std::size_t>(c))[vj])) {
          f2 = c;
          break;
        }
      if (f2 < 0) throw ExtensionFailed("no member re-embeds the leaf outside the used set");
      path.push_back(xi);
      path.push_back(fam.member(static_cast<std::size_t>(f2))[vj]);
      cur = f2;
    }
    return Extension{cur, path};
  };

  if (parity == Parity::Even) return even(member, avoid);
  std::set<int> S = avoid;
  S.insert(yj);
  int star = -1;
  for (int c : reroute.agreeing(member))
    if (!S.count(fam.member(static_cast<std::size_t>(c))[vj])) {
      star = c;
      break;
    }
  if (star < 0) throw ExtensionFailed("no member moves the leaf outside the avoid set");
  Extension e = even(star, S);
  e.path.insert(e.path.begin(), m0[uj]);
  return e;
}

PathLinker::PathLinker(const EmbeddingFamily& fam, int member, int k, std::int64_t h)
    : fam_(&fam), member_(member), k_(k), h_(h) {
  const LabeledTree& t = fam.tree();
  if (t.leaves().size() != 2) throw PreconditionViolated("family tree is not a path");
  int j = t.num_edges();
  if (j < 2 || j > k) throw PreconditionViolated("path length j must satisfy 2 <= j <= k");
  if (h < 1) throw PreconditionViolated("h must be at least 1");
  if (member < 0 || static_cast<std::size_t>(member) >= fam.size()) throw MemberNotFound("member index out of range");
  eta_ = 2 * static_cast<std::int64_t>(k) * h;
  const auto& cls = fam.with_leaf_vector(fam.leaf_vector(static_cast<std::size_t>(member)));
  if (static_cast<std::int64_t>(greedy_pack(fam, cls, static_cast<std::size_t>(eta_)).size()) < eta_)
    throw PreconditionViolated("family is not eta-robust: the member's leaf vector is not linked");
  flip_ = (k - j) % 2 != 0;
  auto m = fam.member(static_cast<std::size_t>(member));
  const auto& order = t.path_order();
  x_ = m[order.front()];
  z_ = flip_ ? m[order[order.size() - 2]] : m[order.back()];
}

std::vector<int> PathLinker::produce(const std::set<int>& W) const {
  if (static_cast<std::int64_t>(W.size()) > static_cast<std::int64_t>(k_) * h_)
    throw PreconditionViolated("|W| exceeds kh");
  if (W.count(x_) || W.count(z_)) throw PreconditionViolated("W contains an endpoint");
  const LabeledTree& t = fam_->tree();
  int j = t.num_edges();
  const auto& order = t.path_order();
  // The dropped endpoint may sit in W; the odd extension avoids it regardless.
  std::set<int> S = W;
  if (flip_) S.erase(fam_->member(static_cast<std::size_t>(member_))[order.back()]);
  Extension e = flip_ ? robust_extend(*fam_, member_, 1, Parity::Odd, (k_ - j - 1) / 2, S, eta_)
                      : robust_extend(*fam_, member_, 1, Parity::Even, (k_ - j) / 2, S, eta_);
  int yend = e.path.back();
  std::set<int> block = W;
  block.insert(e.path.begin(), e.path.end());
  std::vector<int> lv{x_, yend};
  for (int c : fam_->with_leaf_vector(lv)) {
    auto m = fam_->member(static_cast<std::size_t>(c));
    bool ok = true;
    for (int x : order)
      if (m[x] != yend && block.count(m[x])) ok = false;
    if (!ok) continue;
    std::vector<int> out;
    for (int x : order) out.push_back(m[x]);
    for (auto it = e.path.rbegin() + 1; it != e.path.rend(); ++it) out.push_back(*it);
    const Graph& g = fam_->host();
    bool valid = static_cast<int>(out.size()) == k_ + 1 && out.front() == x_ && out.back() == z_;
    std::set<int> seen(out.begin(), out.end());
    valid = valid && seen.size() == out.size();
    for (std::size_t i = 0; valid && i + 1 < out.size(); ++i) valid = g.has_edge(out[i], out[i + 1]);
    for (int v : out) valid = valid && !W.count(v);
    if (!valid) throw InternalInvariantBroken("linked path failed validation");
    return out;
  }
  throw ExtensionFailed("no member closes the linked path outside W");
}

SpiderLinkage spider_linkage(const EmbeddingFamily& fam, int member, int k, int t) {
  const LabeledTree& tree = fam.tree();
  if (tree.kind() != TreeKind::Spider) throw PreconditionViolated("family tree is not a spider");
  if (k < 2 || t < 1) throw PreconditionViolated("need k >= 2 and t >= 1");
  if (member < 0 || static_cast<std::size_t>(member) >= fam.size()) throw MemberNotFound("member index out of range");
  std::vector<int> lens = tree.leg_lengths();
  int s = static_cast<int>(lens.size());
  int ones = 0;
  for (int l : lens) {
    if (l < 1 || l > k) throw PreconditionViolated("leg lengths must lie in [1, k]");
    ones += l == 1;
  }
  if (ones > 1) throw PreconditionViolated("at most one leg may have length 1");
  std::int64_t eta = 2LL * k * s * t;
  const auto& cls = fam.with_leaf_vector(fam.leaf_vector(static_cast<std::size_t>(member)));
  if (static_cast<std::int64_t>(greedy_pack(fam, cls, static_cast<std::size_t>(eta)).size()) < eta)
    throw PreconditionViolated("family is not eta-robust: the member's leaf vector is not linked");
  auto f = fam.member(static_cast<std::size_t>(member));
  std::vector<int> leaf(s), nbr(s), x(s);
  std::vector<bool> odd(s);
  for (int i = 0; i < s; ++i) {
    leaf[i] = tree.leaves()[i];
    nbr[i] = tree.neighbors(leaf[i])[0];
    odd[i] = (k - lens[i]) % 2 != 0;
    x[i] = odd[i] ? f[nbr[i]] : f[leaf[i]];
  }
  const Graph& g = fam.host();
  SpiderLinkage out;
  out.branch = x;
  std::set<int> W;
  try {
    for (int copy = 0; copy < t; ++copy) {
      int cur = member;
      std::vector<std::vector<int>> paths(s);
      auto avoid_for = [&](int i, bool own_branch) {
        std::set<int> S = W;
        for (int q = 0; q < s; ++q) {
          if (q != i || own_branch) S.insert(x[q]);
          if (q != i) S.insert(paths[q].begin(), paths[q].end());
        }
        S.erase(fam.member(static_cast<std::size_t>(cur))[leaf[i]]);
        return S;
      };
      // Move every odd leg's leaf first, which keeps each x_i in place.
      for (int i = 0; i < s; ++i)
        if (odd[i]) {
          Extension e = robust_extend(fam, cur, i, Parity::Odd, 0, avoid_for(i, false), eta);
          cur = e.member;
          paths[i] = {x[i]};
        }
      for (int i = 0; i < s; ++i) {
        int ti = odd[i] ? (k - lens[i] - 1) / 2 : (k - lens[i]) / 2;
        Extension e = robust_extend(fam, cur, i, Parity::Even, ti, avoid_for(i, odd[i]), eta);
        cur = e.member;
        paths[i].insert(paths[i].end(), e.path.begin(), e.path.end());
      }
      std::set<int> block = W;
      for (int q = 0; q < s; ++q) {
        block.insert(x[q]);
        block.insert(paths[q].begin(), paths[q].end());
      }
      int fin = -1;
      for (int c : fam.with_leaf_vector(fam.leaf_vector(static_cast<std::size_t>(cur)))) {
        auto m = fam.member(static_cast<std::size_t>(c));
        bool ok = true;
        for (int v = 0; v < tree.num_vertices() && ok; ++v)
          if (!tree.is_leaf(v) && block.count(m[v])) ok = false;
        if (ok) {
          fin = c;
          break;
        }
      }
      if (fin < 0) throw AssemblyFailed("no member closes the spider outside the used set");
      auto m = fam.member(static_cast<std::size_t>(fin));
      std::vector<int> spider{m[tree.center()]};
      for (int i = 0; i < s; ++i) {
        for (int v : tree.legs()[i]) spider.push_back(m[v]);
        for (auto it = paths[i].rbegin() + 1; it != paths[i].rend(); ++it) spider.push_back(*it);
      }
      // Validate: a k-spider with leaves x_i avoiding W.
      std::set<int> seen(spider.begin(), spider.end());
      bool valid = seen.size() == spider.size() && static_cast<int>(spider.size()) == 1 + s * k;
      for (int i = 0; valid && i < s; ++i) {
        int prev = spider[0];
        for (int q = 0; q < k; ++q) {
          int v = spider[1 + i * k + q];
          valid = valid && g.has_edge(prev, v) && !W.count(v);
          prev = v;
        }
        valid = valid && prev == x[i];
      }
      valid = valid && !W.count(spider[0]);
      if (!valid) throw AssemblyFailed("assembled spider failed validation");
      for (int v : spider)
        if (std::find(x.begin(), x.end(), v) == x.end()) W.insert(v);
      out.copies.push_back(std::move(spider));
    }
  } catch (const ExtensionFailed& e) {
    throw AssemblyFailed(std::string("extension step failed: ") + e.what());
  }
  return out;
}

}  // namespace extremal
