#include "extremal/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/peel.hpp"
#include "matching.hpp"

namespace extremal {

namespace {

struct LocalTight {
  std::vector<int> A1;     // local A indices
  std::vector<int> mate;   // mate[k] = local B index of A1[k]
};

// adj: local A -> sorted local B. Every A-vertex has degree d.
LocalTight local_tight(int na, int nb, const std::vector<std::vector<int>>& adj) {
  std::vector<int> mate_a, mate_b;
  detail::max_bipartite_matching(na, nb, adj, mate_a, mate_b);

  std::vector<int> T;
  int a0 = -1;
  for (int a = 0; a < na; ++a)
    if (mate_a[a] < 0) {
      a0 = a;
      break;
    }
  if (a0 >= 0) {
    std::vector<char> seen_a(na, 0), seen_b(nb, 0);
    std::vector<int> queue{a0};
    seen_a[a0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int b : adj[queue[qi]]) {
        if (seen_b[b]) continue;
        seen_b[b] = 1;
        int a = mate_b[b];
        if (a < 0) throw InternalInvariantBroken("tight_matching: augmenting path after maximum matching");
        if (!seen_a[a]) {
          seen_a[a] = 1;
          queue.push_back(a);
        }
      }
    }
    for (int a = 0; a < na; ++a)
      if (seen_a[a] && a != a0) T.push_back(a);
  } else {
    T.resize(na);
    std::iota(T.begin(), T.end(), 0);
  }
  if (T.empty()) throw InternalInvariantBroken("tight_matching: empty tight set");

  // x -> y when x is adjacent to mate(y); closed sets are exactly the tight subsets.
  std::vector<int> pos(na, -1);
  for (std::size_t i = 0; i < T.size(); ++i) pos[T[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(T.size());
  for (std::size_t i = 0; i < T.size(); ++i)
    for (int b : adj[T[i]]) {
      int y = mate_b[b];
      if (y < 0 || pos[y] < 0) throw InternalInvariantBroken("tight_matching: neighbourhood escapes tight set");
      if (pos[y] != static_cast<int>(i)) out[i].push_back(pos[y]);
    }
  int ncomp = 0;
  std::vector<int> comp = detail::strong_components(out, ncomp);
  std::vector<char> sink(ncomp, 1);
  std::vector<int> size(ncomp, 0), low(ncomp, na);
  for (std::size_t i = 0; i < T.size(); ++i) {
    ++size[comp[i]];
    low[comp[i]] = std::min(low[comp[i]], T[i]);
    for (int j : out[i])
      if (comp[j] != comp[i]) sink[comp[i]] = 0;
  }
  int best = -1;
  for (int c = 0; c < ncomp; ++c) {
    if (!sink[c]) continue;
    if (best < 0 || size[c] < size[best] || (size[c] == size[best] && low[c] < low[best])) best = c;
  }
  LocalTight res;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (comp[i] == best) {
      res.A1.push_back(T[i]);
      res.mate.push_back(mate_a[T[i]]);
    }
  return res;
}

void check_half_regular(int na, int nb, const std::vector<std::vector<int>>& adj, int d) {
  if (na < nb || nb < 1) throw PreconditionViolated("tight_matching: need |A| >= |B| >= 1");
  if (d < 1) throw PreconditionViolated("tight_matching: need d >= 1");
  for (int a = 0; a < na; ++a)
    if (static_cast<int>(adj[a].size()) != d)
      throw PreconditionViolated("tight_matching: A-vertex of degree " + std::to_string(adj[a].size()) +
                                 " != " + std::to_string(d));
}

}  // namespace

TightMatching tight_matching(const BipartiteGraph& g, Side a_side, int d) {
  int a_off = g.first(a_side), b_off = g.first(other(a_side));
  int na = g.size(a_side), nb = g.size(other(a_side));
  std::vector<std::vector<int>> adj(na);
  for (int a = 0; a < na; ++a)
    for (int b : g.neighbors(a_off + a)) adj[a].push_back(b - b_off);
  check_half_regular(na, nb, adj, d);
  LocalTight t = local_tight(na, nb, adj);
  TightMatching res;
  for (std::size_t k = 0; k < t.A1.size(); ++k) {
    res.A1.push_back(a_off + t.A1[k]);
    res.B1.push_back(b_off + t.mate[k]);
    res.matching.emplace_back(a_off + t.A1[k], b_off + t.mate[k]);
  }
  std::sort(res.B1.begin(), res.B1.end());
  return res;
}

std::vector<std::vector<Edge>> matching_cascade(const BipartiteGraph& g, Side a_side, int d) {
  int a_off = g.first(a_side), b_off = g.first(other(a_side));
  int na = g.size(a_side), nb = g.size(other(a_side));
  // current residual graph on local ids (alive A-list, alive B-list)
  std::vector<int> A(na), B(nb);
  std::iota(A.begin(), A.end(), 0);
  std::iota(B.begin(), B.end(), 0);
  std::vector<std::vector<int>> adj(na);
  for (int a = 0; a < na; ++a)
    for (int b : g.neighbors(a_off + a)) adj[a].push_back(b - b_off);

  std::vector<std::vector<Edge>> out;
  int rounds = (d + 1) / 2;
  for (int i = 1; i <= rounds; ++i) {
    int di = d - i + 1;
    // compact ids of the current residual
    std::vector<int> bpos(nb, -1);
    for (std::size_t k = 0; k < B.size(); ++k) bpos[B[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> local(A.size());
    for (std::size_t k = 0; k < A.size(); ++k)
      for (int b : adj[A[k]]) local[k].push_back(bpos[b]);
    check_half_regular(static_cast<int>(A.size()), static_cast<int>(B.size()), local, di);
    LocalTight t = local_tight(static_cast<int>(A.size()), static_cast<int>(B.size()), local);

    std::vector<Edge> mi;
    std::vector<int> nextA, nextB;
    std::vector<char> keepB(nb, 0);
    for (std::size_t k = 0; k < t.A1.size(); ++k) {
      int a = A[t.A1[k]], b = B[t.mate[k]];
      mi.emplace_back(a_off + a, b_off + b);
      nextA.push_back(a);
      keepB[b] = 1;
    }
    for (int b : B)
      if (keepB[b]) nextB.push_back(b);
    std::sort(nextA.begin(), nextA.end());
    // residual: restrict to V(M_i) and drop M_i
    for (std::size_t k = 0; k < t.A1.size(); ++k) {
      int a = A[t.A1[k]], b = B[t.mate[k]];
      auto& row = adj[a];
      std::vector<int> kept;
      for (int x : row)
        if (x != b && keepB[x]) kept.push_back(x);
      row = std::move(kept);
    }
    A = std::move(nextA);
    B = std::move(nextB);
    std::sort(mi.begin(), mi.end());
    out.push_back(std::move(mi));
  }
  return out;
}

std::vector<int> greedy_max_cut(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> side(n, -1);
  for (int v = 0; v < n; ++v) {
    int cnt[2] = {0, 0};
    for (int u : g.neighbors(v))
      if (side[u] >= 0) ++cnt[side[u]];
    side[v] = cnt[0] > cnt[1] ? 1 : 0;
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int same = 0;
      for (int u : g.neighbors(v)) same += side[u] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] ^= 1;
        moved = true;
      }
    }
  }
  return side;
}

namespace {

long double log2_ratio(int n, const Rational& d) {
  return std::log2(2.0L * n / to_long_double(d));
}

void evaluate(RegularizationCertificate& cert) {
  long double eps = to_long_double(cert.eps), c = to_long_double(cert.c);
  cert.edge_bound = (std::pow(2.0L, eps) - 1) / 48 * c * std::pow(static_cast<long double>(cert.m), 1 + eps);
  long double dg = to_long_double(cert.input_avg_degree);
  long double lg = log2_ratio(cert.input_n, cert.input_avg_degree);
  cert.avg_degree_bound = lg > 0 ? dg / (12 * lg) : dg / 12;
  cert.edge_ok = cert.m > 0 && ge_with_slack(static_cast<long double>(cert.edges), cert.edge_bound);
  cert.ratio_ok = cert.m > 0 && cert.min_degree > 0 &&
                  static_cast<long long>(cert.max_degree) <= static_cast<long long>(cert.ratio_bound) * cert.min_degree;
  long double dh = cert.m > 0 ? 2.0L * cert.edges / cert.m : 0;
  cert.avg_degree_ok = cert.m > 0 && ge_with_slack(dh, cert.avg_degree_bound);
}

}  // namespace

RegularizationResult enhanced_regularize(const Graph& g, const Rational& c, const Rational& eps) {
  if (!(eps > 0 && eps < 1)) throw PreconditionViolated("enhanced_regularize: need 0 < eps < 1");
  if (!(c > 0)) throw PreconditionViolated("enhanced_regularize: need c > 0");
  int n = g.num_vertices();
  std::int64_t e = g.num_edges();
  long double epsf = to_long_double(eps), cf = to_long_double(c);
  if (n == 0 || !ge_with_slack(static_cast<long double>(e), cf * std::pow(static_cast<long double>(n), 1 + epsf)))
    throw PreconditionViolated("enhanced_regularize: need e(G) >= c n^{1+eps}");

  RegularizationResult res;
  RegularizationTrace& tr = res.trace;
  // Core at the largest admissible threshold ceil(e/n) >= ceil(c n^eps).
  tr.peel_threshold = static_cast<int>((e + n - 1) / n);
  Graph core = peel_to_min_degree(g, tr.peel_threshold);
  if (core.num_vertices() == 0) throw InternalInvariantBroken("enhanced_regularize: empty core");

  std::vector<int> side = greedy_max_cut(core);
  int cnt1 = static_cast<int>(std::count(side.begin(), side.end(), 1));
  int a_label = cnt1 > core.num_vertices() - cnt1 ? 1 : 0;
  std::vector<int> Aset, Bset;
  for (int v = 0; v < core.num_vertices(); ++v) (side[v] == a_label ? Aset : Bset).push_back(v);
  // Bipartite graph of cross edges, A first.
  std::vector<int> pos(core.num_vertices());
  for (std::size_t k = 0; k < Aset.size(); ++k) pos[Aset[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < Bset.size(); ++k) pos[Bset[k]] = static_cast<int>(Aset.size() + k);
  std::vector<Edge> cross;
  for (auto [u, v] : core.edges())
    if (side[u] != side[v]) {
      int a = pos[u], b = pos[v];
      cross.emplace_back(std::min(a, b), std::max(a, b));
    }
  int na = static_cast<int>(Aset.size()), nb = static_cast<int>(Bset.size());
  BipartiteGraph bip(na, nb, cross);
  std::vector<int> bip_origin(na + nb);
  for (int k = 0; k < na; ++k) bip_origin[k] = core.origin()[Aset[k]];
  for (int k = 0; k < nb; ++k) bip_origin[na + k] = core.origin()[Bset[k]];

  int d0 = bip.graph().num_vertices() ? bip.degree(0) : 0;
  for (int a = 0; a < na; ++a) d0 = std::min(d0, bip.degree(a));
  if (d0 < 1 || nb < 1) throw InternalInvariantBroken("enhanced_regularize: bipartition lost all edges");
  tr.half_degree = d0;
  BipartiteGraph half = half_regularize(bip, Side::M, d0);
  auto matchings = matching_cascade(half, Side::M, d0);
  tr.cascade_length = static_cast<int>(matchings.size());
  for (const auto& mi : matchings) tr.matching_sizes.push_back(static_cast<int>(mi.size()));

  // Buckets I_j = {i : n/2^{j+1} < |M_i| <= n/2^j}.
  long double lg = std::log2(2.0L * n / d0);
  int jmax = std::max(1, static_cast<int>(std::floor(lg)));
  std::vector<std::vector<int>> bucket(jmax + 2);
  for (int i = 0; i < tr.cascade_length; ++i) {
    int sz = tr.matching_sizes[i];
    int j = 0;
    while (static_cast<long double>(sz) * std::pow(2.0L, j + 1) <= n) ++j;
    // now n/2^{j+1} < sz <= n/2^j
    if (j < 1 || j > jmax) throw InternalInvariantBroken("enhanced_regularize: matching size outside bucket range");
    bucket[j].push_back(i);
  }
  long double need = d0 / (4 * std::max(lg, 1.0L));
  int best = -1;
  for (int j = 1; j <= jmax; ++j) {
    long double thick = (std::pow(2.0L, epsf) - 1) / 2 * cf * std::pow(n / std::pow(2.0L, j), epsf);
    long double sz = static_cast<long double>(bucket[j].size());
    if (sz < thick || sz < need) continue;
    if (best < 0 || bucket[j].size() > bucket[best].size()) best = j;
  }
  if (best < 0) throw InternalInvariantBroken("enhanced_regularize: no thick bucket of the required size");
  tr.bucket = best;
  int p = static_cast<int>(bucket[best].size());
  tr.bucket_size = p;

  std::vector<Edge> F;
  for (int i : bucket[best])
    for (auto [a, b] : matchings[i]) F.emplace_back(bip_origin[a], bip_origin[b]);
  for (auto& [u, v] : F)
    if (u > v) std::swap(u, v);
  Graph Fg(n, F);
  // drop isolated vertices, then peel at p/6
  std::vector<int> touched;
  for (int v = 0; v < n; ++v)
    if (Fg.degree(v) > 0) touched.push_back(v);
  Graph Fsub = Fg.induced(touched);
  res.H = peel_to_min_degree(Fsub, (p + 5) / 6);

  RegularizationCertificate& cert = res.certificate;
  cert.input_n = n;
  cert.input_edges = e;
  cert.input_avg_degree = g.average_degree();
  cert.c = c;
  cert.eps = eps;
  cert.m = res.H.num_vertices();
  cert.edges = res.H.num_edges();
  cert.min_degree = res.H.min_degree();
  cert.max_degree = res.H.max_degree();
  evaluate(cert);
  return res;
}

bool check_certificate(const RegularizationCertificate& cert, const Graph& H) {
  RegularizationCertificate re = cert;
  re.m = H.num_vertices();
  re.edges = H.num_edges();
  re.min_degree = H.min_degree();
  re.max_degree = H.max_degree();
  re.ratio_bound = 6;
  evaluate(re);
  return re.m == cert.m && re.edges == cert.edges && re.min_degree == cert.min_degree &&
         re.max_degree == cert.max_degree && cert.ratio_bound == 6 && re.edge_ok == cert.edge_ok &&
         re.ratio_ok == cert.ratio_ok && re.avg_degree_ok == cert.avg_degree_ok && re.all_ok();
}

nlohmann::json RegularizationCertificate::to_json() const {
  return {
      {"kind", "regularization"},
      {"input", {{"n", input_n}, {"edges", input_edges}, {"avg_degree", to_string(input_avg_degree)}}},
      {"params", {{"c", to_string(c)}, {"eps", to_string(eps)}}},
      {"output", {{"m", m}, {"edges", edges}, {"min_degree", min_degree}, {"max_degree", max_degree}}},
      {"bounds",
       {{"edge_bound", static_cast<double>(edge_bound)},
        {"ratio_bound", ratio_bound},
        {"avg_degree_bound", static_cast<double>(avg_degree_bound)}}},
      {"checks", {{"edge_ok", edge_ok}, {"ratio_ok", ratio_ok}, {"avg_degree_ok", avg_degree_ok}}},
  };
}

}  // namespace extremal
