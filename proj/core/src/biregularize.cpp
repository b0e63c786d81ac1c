#include "extremal/biregularize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/peel.hpp"
#include "roof_kernel.hpp"

namespace extremal {

namespace {

long double ld(const Rational& r) { return to_long_double(r); }

int ceil_log2(long long x) {
  int L = 0;
  while ((1LL << L) < x) ++L;
  return L;
}

void check_exponents(const Rational& alpha, const Rational& beta, bool strict_sum) {
  if (!(alpha > 0 && alpha <= 1 && beta > 0 && beta <= 1))
    throw PreconditionViolated("exponents must lie in (0,1]");
  if (strict_sum ? !(alpha + beta > 1) : !(alpha + beta >= 1))
    throw PreconditionViolated(strict_sum ? "need alpha + beta > 1" : "need alpha + beta >= 1");
}

long double power_product(long double c, int m, int n, long double a, long double b) {
  return c * std::pow(static_cast<long double>(m), a) * std::pow(static_cast<long double>(n), b);
}

void check_density(const BipartiteGraph& g, long double c, long double a, long double b) {
  if (!ge_with_slack(static_cast<long double>(g.num_edges()), power_product(c, g.m(), g.n(), a, b)))
    throw PreconditionViolated("need e(G) >= c |M|^alpha |N|^beta");
}

// Drops isolated vertices on `side`.
BipartiteGraph drop_isolated_on(const BipartiteGraph& g, Side side) {
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.side(v) != side || g.degree(v) > 0) keep.push_back(v);
  return g.induced(std::move(keep));
}

}  // namespace

OneSideResult one_side_regularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                  const Rational& beta) {
  check_exponents(alpha, beta, false);
  if (!(c > 0)) throw PreconditionViolated("need c > 0");
  long double a = ld(alpha), b = ld(beta), cf = ld(c);
  check_density(g, cf, a, b);
  Rational d = degree_stats(g).avg;
  if (d < 8) throw PreconditionViolated("one_side_regularize: need d(G) >= 8");

  auto satisfies = [&](const BipartiteGraph& h) {
    return ge_with_slack(static_cast<long double>(h.num_edges()), power_product(cf, h.m(), h.n(), a, b)) &&
           degree_stats(h).avg >= d;
  };
  auto finish = [&](const BipartiteGraph& base, const Rational& d0) {
    Side larger = base.m() > base.n() ? Side::M : Side::N;
    int k = static_cast<int>(ceil_to_int64(d0 / 4));
    OneSideResult r;
    r.graph = drop_isolated_on(half_regularize(base, larger, k), other(larger));
    r.regular_side = larger;
    r.degree = k;
    return r;
  };

  BipartiteGraph G0 = g;
  OneSideResult res;
  for (;;) {
    DegreeStats s = degree_stats(G0);
    Rational d0 = s.avg;
    int delta = std::min(s.min_M, s.min_N);
    if (Rational(4 * delta) >= d0) {
      res = finish(G0, d0);
      break;
    }
    BipartiteGraph G1 = peel_bipartite(G0, d0 / 4, d0 / 4);
    if (G1.num_vertices() == G0.num_vertices())
      throw InternalInvariantBroken("one_side_regularize: peeling removed nothing");
    if (satisfies(G1)) {
      G0 = std::move(G1);
      continue;
    }
    res = finish(G1, d0);
    break;
  }
  res.edge_bound = power_product(cf / std::pow(2.0L, 2 + 1 / a + 1 / b), res.graph.m(), res.graph.n(), a, b);
  res.avg_degree_bound = ld(d) / 8;
  res.edge_ok = ge_with_slack(static_cast<long double>(res.graph.num_edges()), res.edge_bound);
  res.avg_degree_ok = ge_with_slack(ld(degree_stats(res.graph).avg), res.avg_degree_bound);
  return res;
}

namespace {

void evaluate(BiregularizationCertificate& ct) {
  long double a = ld(ct.alpha), b = ld(ct.beta), c = ld(ct.c);
  long double gap = std::pow(2.0L, a + b - 1) - 1;
  long double strict = gap / std::pow(2.0L, 6 + 1 / a + 1 / b);
  long double in_avg = ld(ct.in_avg_degree);
  switch (ct.kind) {
    case BiregKind::HalfToBiregular:
      ct.lambda = gap / 32;
      ct.avg_degree_bound = in_avg / (8.0L * std::max(1, ceil_log2(ct.in_m)));
      break;
    case BiregKind::Strict:
      ct.lambda = strict;
      ct.avg_degree_bound = in_avg / (64.0L * std::max(1.0L, std::log2(static_cast<long double>(ct.in_m))));
      break;
    case BiregKind::Floor:
      ct.lambda = std::min(strict / 2, 1.0L / 256);
      ct.avg_degree_bound = in_avg / (64.0L * std::max(1.0L, std::log2(static_cast<long double>(ct.in_m))));
      break;
  }
  ct.edge_bound = power_product(ct.lambda * c, ct.out_m, ct.out_n, a, b);
  if (ct.kind == BiregKind::Floor) ct.edge_bound += ct.lambda * c * (ct.out_m + ct.out_n);
  bool nonempty = ct.out_m > 0 && ct.out_n > 0;
  ct.edge_ok = nonempty && ge_with_slack(static_cast<long double>(ct.out_edges), ct.edge_bound);
  ct.avg_degree_ok = nonempty && ge_with_slack(ld(ct.out_avg_degree), ct.avg_degree_bound);
  ct.ratio_ok = nonempty && ct.min_M > 0 && ct.min_N > 0 &&
                static_cast<long long>(ct.max_M) <= static_cast<long long>(ct.ratio_bound) * ct.min_M &&
                static_cast<long long>(ct.max_N) <= static_cast<long long>(ct.ratio_bound) * ct.min_N;
}

void fill_output(BiregularizationCertificate& ct, const BipartiteGraph& out) {
  DegreeStats s = degree_stats(out);
  ct.out_m = s.m;
  ct.out_n = s.n;
  ct.out_edges = s.edges;
  ct.out_avg_degree = s.avg;
  ct.min_M = s.min_M;
  ct.max_M = s.max_M;
  ct.min_N = s.min_N;
  ct.max_N = s.max_N;
}

BiregularizationCertificate make_certificate(BiregKind kind, const BipartiteGraph& in, const BipartiteGraph& out,
                                             const Rational& c, const Rational& alpha, const Rational& beta) {
  BiregularizationCertificate ct;
  ct.kind = kind;
  DegreeStats s = degree_stats(in);
  ct.in_m = s.m;
  ct.in_n = s.n;
  ct.in_edges = s.edges;
  ct.in_avg_degree = s.avg;
  ct.alpha = alpha;
  ct.beta = beta;
  ct.c = c;
  fill_output(ct, out);
  evaluate(ct);
  return ct;
}

struct H2B {
  BipartiteGraph graph;
  BiregTrace trace;
};

// Roof iteration on a graph half-regular at N; exponents only enter the bucket rule.
H2B run_half_to_biregular(const BipartiteGraph& g, int d, long double a, long double b) {
  const int m = g.m(), n = g.n();
  // current residual adjacency, N-local -> M
  std::vector<std::vector<int>> adj(n);
  for (int k = 0; k < n; ++k) {
    auto nb = g.neighbors(m + k);
    adj[k].assign(nb.begin(), nb.end());
  }
  auto ratio_ok = [&](long long xs, long long ns) { return ns > 0 && xs * m >= static_cast<long long>(n) * ns; };
  const int t = (n + m - 1) / m;

  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::vector<Edge>> roofs;
  std::vector<std::vector<int>> n_sets, m_sets;
  std::vector<int> cnt(m, 0);

  for (int i = 1; i <= d; ++i) {
    std::vector<int> X = cur;
    for (;;) {
      // greedy shrink keeping |X| >= mu |N(X)|
      std::fill(cnt.begin(), cnt.end(), 0);
      long long nx = 0;
      for (int y : X)
        for (int x : adj[y]) nx += cnt[x]++ == 0;
      std::vector<char> in(n, 0);
      for (int y : X) in[y] = 1;
      long long size = static_cast<long long>(X.size());
      for (bool changed = true; changed;) {
        changed = false;
        for (int y : X) {
          if (!in[y] || size == 1) continue;
          long long lost = 0;
          for (int x : adj[y]) lost += cnt[x] == 1;
          if (ratio_ok(size - 1, nx - lost)) {
            in[y] = 0;
            --size;
            nx -= lost;
            for (int x : adj[y]) --cnt[x];
            changed = true;
          }
        }
      }
      std::vector<int> Y;
      for (int y : X)
        if (in[y]) Y.push_back(y);
      X = std::move(Y);
      if (X.size() <= 12) {
        // smallest subset with the ratio property
        int k = static_cast<int>(X.size());
        int best = (1 << k) - 1, best_pop = k;
        for (int mask = 1; mask < (1 << k); ++mask) {
          int pop = __builtin_popcount(mask);
          if (pop >= best_pop) continue;
          std::vector<int> seen;
          for (int j = 0; j < k; ++j)
            if (mask >> j & 1)
              for (int x : adj[X[j]]) seen.push_back(x);
          std::sort(seen.begin(), seen.end());
          long long nsz = std::unique(seen.begin(), seen.end()) - seen.begin();
          if (ratio_ok(pop, nsz)) {
            best = mask;
            best_pop = pop;
          }
        }
        std::vector<int> Z;
        for (int j = 0; j < k; ++j)
          if (best >> j & 1) Z.push_back(X[j]);
        X = std::move(Z);
      }
      // roof with load <= t must exist on H[X + N(X)]
      std::vector<std::vector<int>> sub(X.size());
      for (std::size_t j = 0; j < X.size(); ++j) sub[j] = adj[X[j]];
      detail::RoofAssignment ra(m, sub);
      std::vector<int> viol;
      if (ra.run(t, &viol)) break;
      std::vector<int> Z;
      for (int j : viol) Z.push_back(X[j]);
      std::sort(Z.begin(), Z.end());
      X = std::move(Z);
    }
    // strip a minimum roof of G_i = H[X + N(X)]
    std::vector<std::vector<int>> sub(X.size());
    for (std::size_t j = 0; j < X.size(); ++j) sub[j] = adj[X[j]];
    detail::RoofAssignment ra(m, sub);
    int lo = 1, hi = t;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (ra.run(mid)) hi = mid;
      else lo = mid + 1;
    }
    if (!ra.run(lo)) throw InternalInvariantBroken("half_to_biregular: roof infeasible");
    std::vector<Edge> roof;
    std::vector<int> ms;
    for (std::size_t j = 0; j < X.size(); ++j) {
      int x = ra.assignment()[j], y = X[j];
      roof.emplace_back(x, m + y);
      for (int u : adj[y]) ms.push_back(u);
      auto& row = adj[y];
      row.erase(std::find(row.begin(), row.end(), x));
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    roofs.push_back(std::move(roof));
    n_sets.push_back(X);
    m_sets.push_back(std::move(ms));
    cur = X;
  }

  H2B out;
  BiregTrace& tr = out.trace;
  for (const auto& X : n_sets) tr.n_sizes.push_back(static_cast<int>(X.size()));
  int L = std::max(1, ceil_log2(m));
  std::vector<std::vector<int>> bucket(L + 2);
  for (int i = 0; i < d; ++i) {
    long long s = tr.n_sizes[i];
    int j = 1;
    while (s * (1LL << j) <= n) ++j;  // n/2^j < s <= n/2^{j-1}
    if (j > L + 1) throw InternalInvariantBroken("half_to_biregular: |N_i| below n/|M|");
    bucket[j].push_back(i);
  }
  long double gam = a + b - 1;
  long double eps = (std::pow(2.0L, gam) - 1) / 2;
  int best = -1;
  for (int j = 1; j <= L + 1; ++j) {
    long double thin = eps * d / std::pow(2.0L, gam * j);
    long double sz = static_cast<long double>(bucket[j].size());
    if (sz < thin) {
      tr.thin_total += static_cast<int>(bucket[j].size());
      continue;
    }
    if (sz * 2 * L < d) continue;
    if (best < 0 || bucket[j].size() > bucket[best].size()) best = j;
  }
  if (!(2.0L * tr.thin_total < d)) throw InternalInvariantBroken("half_to_biregular: thin buckets exceed d/2");
  if (best < 0) throw InternalInvariantBroken("half_to_biregular: no thick bucket of the required size");
  tr.bucket = best;
  tr.bucket_size = static_cast<int>(bucket[best].size());
  int ell = bucket[best].front();
  tr.first_iteration = ell + 1;

  std::vector<Edge> R;
  for (int i : bucket[best]) R.insert(R.end(), roofs[i].begin(), roofs[i].end());
  BipartiteGraph Rg = g.edge_subgraph(R);
  std::vector<int> keep = m_sets[ell];
  for (int y : n_sets[ell]) keep.push_back(m + y);
  BipartiteGraph Rl = Rg.induced(keep);
  Rational eR(Rl.num_edges());
  out.graph = peel_bipartite(Rl, eR / Rl.m() / 4, eR / Rl.n() / 4);
  return out;
}

int half_regular_degree_at_N(const BipartiteGraph& g) {
  if (g.n() == 0) throw PreconditionViolated("half_to_biregular: empty N");
  int d = g.degree(g.m());
  for (int v = g.m(); v < g.num_vertices(); ++v)
    if (g.degree(v) != d) throw PreconditionViolated("half_to_biregular: graph is not half-regular at N");
  if (d < 1) throw PreconditionViolated("half_to_biregular: need d >= 1");
  return d;
}

}  // namespace

BiregularizationResult half_to_biregular(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                         const Rational& beta) {
  check_exponents(alpha, beta, true);
  if (!(c > 0)) throw PreconditionViolated("need c > 0");
  int d = half_regular_degree_at_N(g);
  if (g.m() > g.n()) throw PreconditionViolated("half_to_biregular: need |M| <= |N|");
  check_density(g, ld(c), ld(alpha), ld(beta));
  H2B h = run_half_to_biregular(g, d, ld(alpha), ld(beta));
  BiregularizationResult res;
  res.graph = std::move(h.graph);
  res.trace = std::move(h.trace);
  res.certificate = make_certificate(BiregKind::HalfToBiregular, g, res.graph, c, alpha, beta);
  return res;
}

namespace {

BiregularizationResult biregularize_impl(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                         const Rational& beta, BiregKind kind) {
  check_exponents(alpha, beta, true);
  if (!(c > 0)) throw PreconditionViolated("need c > 0");
  if (g.m() > g.n()) throw PreconditionViolated("biregularize: need |M| <= |N|");
  OneSideResult os = one_side_regularize(g, c, alpha, beta);
  long double a = ld(alpha), b = ld(beta);
  BiregularizationResult res;
  if (os.regular_side == Side::N) {
    H2B h = run_half_to_biregular(os.graph, os.degree, a, b);
    res.graph = std::move(h.graph);
    res.trace = std::move(h.trace);
  } else {
    H2B h = run_half_to_biregular(os.graph.swapped(), os.degree, b, a);
    res.graph = h.graph.swapped();
    res.trace = std::move(h.trace);
  }
  res.certificate = make_certificate(kind, g, res.graph, c, alpha, beta);
  return res;
}

}  // namespace

BiregularizationResult biregularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                    const Rational& beta) {
  return biregularize_impl(g, c, alpha, beta, BiregKind::Strict);
}

BiregularizationResult biregularize_with_floor(const BipartiteGraph& g, const Rational& c,
                                               const Rational& alpha, const Rational& beta) {
  check_exponents(alpha, beta, true);
  long double need = power_product(ld(c), g.m(), g.n(), ld(alpha), ld(beta)) +
                     ld(c) * g.n() * std::log2(static_cast<long double>(std::max(1, g.m())));
  if (!ge_with_slack(static_cast<long double>(g.num_edges()), need))
    throw PreconditionViolated("need e(G) >= c (m^alpha n^beta + n log2 m)");
  return biregularize_impl(g, c, alpha, beta, BiregKind::Floor);
}

bool check_certificate(const BiregularizationCertificate& cert, const BipartiteGraph& out) {
  BiregularizationCertificate re = cert;
  re.ratio_bound = 16;
  fill_output(re, out);
  evaluate(re);
  return re.out_m == cert.out_m && re.out_n == cert.out_n && re.out_edges == cert.out_edges &&
         re.out_avg_degree == cert.out_avg_degree && re.min_M == cert.min_M && re.max_M == cert.max_M &&
         re.min_N == cert.min_N && re.max_N == cert.max_N && cert.ratio_bound == 16 &&
         re.edge_ok == cert.edge_ok && re.avg_degree_ok == cert.avg_degree_ok && re.ratio_ok == cert.ratio_ok &&
         re.all_ok();
}

nlohmann::json BiregularizationCertificate::to_json() const {
  const char* k = kind == BiregKind::HalfToBiregular ? "half_to_biregular"
                  : kind == BiregKind::Strict        ? "biregularize"
                                                     : "biregularize_floor";
  return {
      {"kind", k},
      {"input", {{"m", in_m}, {"n", in_n}, {"edges", in_edges}, {"avg_degree", to_string(in_avg_degree)}}},
      {"params", {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"c", to_string(c)}}},
      {"output",
       {{"m", out_m},
        {"n", out_n},
        {"edges", out_edges},
        {"avg_degree", to_string(out_avg_degree)},
        {"min_M", min_M},
        {"max_M", max_M},
        {"min_N", min_N},
        {"max_N", max_N}}},
      {"bounds",
       {{"lambda", static_cast<double>(lambda)},
        {"edge_bound", static_cast<double>(edge_bound)},
        {"avg_degree_bound", static_cast<double>(avg_degree_bound)},
        {"ratio_bound", ratio_bound}}},
      {"checks", {{"edge_ok", edge_ok}, {"avg_degree_ok", avg_degree_ok}, {"ratio_ok", ratio_ok}}},
  };
}

}  // namespace extremal
