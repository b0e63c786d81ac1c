#include "extremal/light_paths.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "extremal/errors.hpp"
#include "extremal/family.hpp"
#include "extremal/peel.hpp"
#include "extremal/tree.hpp"

namespace extremal {

LightPairGraph light_pair_graph(const BipartiteGraph& g, std::int64_t h) {
  if (h < 1) throw PreconditionViolated("h must be at least 1");
  BigInt th = heavy_threshold(h, 2);
  int m = g.m();
  std::vector<std::int64_t> codeg(m, 0);
  std::vector<int> touched;
  std::vector<Edge> edges;
  LightPairGraph out;
  for (int u = 0; u < m; ++u) {
    touched.clear();
    for (int w : g.neighbors(u))
      for (int v : g.neighbors(w))
        if (v > u) {
          if (codeg[v]++ == 0) touched.push_back(v);
        }
    std::sort(touched.begin(), touched.end());
    for (int v : touched) {
      if (BigInt(codeg[v]) < th) {
        edges.emplace_back(u, v);
        out.multiplicity.emplace_back(u, v, codeg[v]);
      }
      codeg[v] = 0;
    }
  }
  out.graph = Graph(m, edges);
  return out;
}

LightPathCollection light_path_collection(const BipartiteGraph& g, int k, std::int64_t h,
                                          const LightPathOptions& opt) {
  if (k < 2) throw PreconditionViolated("k must be at least 2");
  LightPathCollection out;
  LightPairGraph lp = light_pair_graph(g, h);
  out.report.pair_edges = lp.graph.num_edges();
  DegreeStats st = degree_stats(g);
  if (opt.gamma && st.m > 0 && st.n > 0)
    out.report.target = *opt.gamma * st.m * std::pow(to_long_double(st.avg_M), (k + 1) / 2) *
                        std::pow(to_long_double(st.avg_N), k / 2);
  if (lp.graph.num_edges() == 0) return out;
  // Peel the pair graph at half its average degree.
  int thresh = static_cast<int>(ceil_to_int64(lp.graph.average_degree() / 2));
  Graph core = peel_to_min_degree(lp.graph, std::max(thresh, 1));
  out.report.peeled_vertices = core.num_vertices();
  out.report.peeled_min_degree = core.num_vertices() ? core.min_degree() : 0;
  if (core.num_vertices() == 0) return out;
  const std::vector<int>& org = core.origin();
  int q = k / 2;
  std::vector<int> mpath, npath;
  std::vector<char> used(g.num_vertices(), 0);
  auto emit = [&]() {
    std::vector<int> p;
    for (int i = 0; i < q; ++i) {
      p.push_back(mpath[i]);
      p.push_back(npath[i]);
    }
    p.push_back(mpath[q]);
    if (k % 2 == 0) {
      out.paths.push_back(p);
      return;
    }
    for (int w : g.neighbors(mpath[q])) {
      if (used[w]) continue;
      if (out.paths.size() >= opt.max_paths) {
        out.report.capped = true;
        return;
      }
      p.push_back(w);
      out.paths.push_back(p);
      p.pop_back();
    }
  };
  // Grow M-sequences in the peeled pair graph, expanding each step through every common neighbour.
  auto rec = [&](auto&& self, int cv) -> void {
    if (out.paths.size() >= opt.max_paths) {
      out.report.capped = true;
      return;
    }
    if (static_cast<int>(mpath.size()) == q + 1) {
      emit();
      return;
    }
    int u = mpath.back();
    for (int cw : core.neighbors(cv)) {
      int v = org[cw];
      if (used[v]) continue;
      used[v] = 1;
      mpath.push_back(v);
      for (int w : g.neighbors(u)) {
        if (used[w] || !g.has_edge(w, v)) continue;
        used[w] = 1;
        npath.push_back(w);
        self(self, cw);
        npath.pop_back();
        used[w] = 0;
        if (out.report.capped) break;
      }
      mpath.pop_back();
      used[v] = 0;
      if (out.report.capped) return;
    }
  };
  for (int cv = 0; cv < core.num_vertices() && !out.report.capped; ++cv) {
    int u = org[cv];
    used[u] = 1;
    mpath = {u};
    rec(rec, cv);
    used[u] = 0;
  }
  // Every 2-path with both ends in M must be light.
  BigInt th = heavy_threshold(h, 2);
  for (const auto& p : out.paths)
    for (std::size_t i = 0; i + 2 < p.size(); i += 2) {
      std::int64_t c = 0;
      for (int w : g.neighbors(p[i])) c += g.has_edge(w, p[i + 2]);
      if (BigInt(c) >= th) throw InternalInvariantBroken("light path collection holds a heavy 2-path");
    }
  out.report.found = out.paths.size();
  return out;
}

HeavyAdmissibleCounts count_heavy_admissible(const BipartiteGraph& g, int j, std::int64_t eta) {
  if (j < 1) throw PreconditionViolated("j must be at least 1");
  if (eta < 1) throw PreconditionViolated("eta must be at least 1");
  LabeledTree p = LabeledTree::path(j);
  EmbeddingFamily fam = enumerate_copies(g, p, false);
  HeavyPartition hp = classify_heavy(fam, eta);
  std::vector<bool> adm = admissible_flags(fam, eta);
  HeavyAdmissibleCounts out;
  out.copies = fam.size();
  for (int i : hp.heavy) {
    if (!adm[i]) continue;
    auto m = fam.member(static_cast<std::size_t>(i));
    bool a = g.in_M(m.front()), b = g.in_M(m.back());
    if (a && b)
      ++out.mm;
    else if (!a && !b)
      ++out.nn;
    else
      ++out.mixed;
  }
  return out;
}

}  // namespace extremal
