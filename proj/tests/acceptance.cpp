// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any fails.
// Every check recomputes its quantities here instead of trusting library certificates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/biregularize.hpp"
#include "extremal/construct.hpp"
#include "extremal/errors.hpp"
#include "extremal/family.hpp"
#include "extremal/finders.hpp"
#include "extremal/generators.hpp"
#include "extremal/light_paths.hpp"
#include "extremal/linkage.hpp"
#include "extremal/regularize.hpp"
#include "extremal/rng.hpp"
#include "golden_cases.hpp"

using namespace extremal;

namespace {

constexpr std::uint64_t kSeed = 20240611;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few messages are kept for the report line.
class Tally {
 public:
  void fail(const std::string& why) {
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(why);
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  int failures() const { return failures_; }
  std::string notes() const {
    std::string s;
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::string fixed(double x, int digits = 2) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << x;
  return o.str();
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Relative slack for floating comparisons of recomputed bounds.
bool at_least(long double lhs, long double rhs) { return lhs >= rhs * (1 - 1e-12L) - 1e-12L; }

std::vector<int> common_neighbours(const Graph& g, int u, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(u))
    if (g.has_edge(v, w)) out.push_back(w);
  return out;
}

bool is_path_in(const Graph& g, const std::vector<int>& p) {
  std::set<int> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// 1. Enhanced regularization

Outcome regularization_contract() {
  const Rational cs[] = {make_rational(1, 2), make_rational(1)};
  const Rational es[] = {make_rational(1, 5), make_rational(1, 2), make_rational(4, 5)};
  std::mt19937_64 rng(derive_seed(kSeed, 1));
  Tally tally;
  auto start = Clock::now();
  const int instances = 200;
  int min_n = 1 << 30, max_n = 0;
  for (int i = 0; i < instances; ++i) {
    const Rational& c = cs[i % 2];
    const Rational& eps = es[(i / 2) % 3];
    long double cf = to_long_double(c), ef = to_long_double(eps);
    Graph g;
    int n = 0;
    for (;;) {
      n = uniform(rng, 32, 512);
      long double need = cf * std::pow(static_cast<long double>(n), 1 + ef);
      long double pairs = n * (n - 1) / 2.0L;
      if (need > 0.9L * pairs) continue;
      double p = std::min(0.97, static_cast<double>(need / pairs) * uniform_real(rng, 1.05, 1.6));
      g = random_graph(n, p, rng());
      if (static_cast<long double>(g.num_edges()) >= need * (1 + 1e-9L)) break;
    }
    min_n = std::min(min_n, n);
    max_n = std::max(max_n, n);
    std::string tag = "instance " + std::to_string(i);
    try {
      RegularizationResult r = enhanced_regularize(g, c, eps);
      const Graph& H = r.H;
      int m = H.num_vertices();
      if (m == 0) {
        tally.fail(tag + ": empty output");
        continue;
      }
      int lo = H.degree(0), hi = H.degree(0);
      for (int v = 0; v < m; ++v) {
        lo = std::min(lo, H.degree(v));
        hi = std::max(hi, H.degree(v));
      }
      long double eH = static_cast<long double>(H.num_edges());
      long double dG = 2.0L * g.num_edges() / n;
      long double dH = 2.0L * eH / m;
      bool ratio = lo > 0 && hi <= 6 * lo;
      bool edges = at_least(eH, (std::pow(2.0L, ef) - 1) / 48 * cf * std::pow(static_cast<long double>(m), 1 + ef));
      bool avg = at_least(dH, dG / (12 * std::log2(2.0L * n / dG)));
      tally.check(ratio, tag + ": max degree above 6 min degree");
      tally.check(edges, tag + ": edge bound");
      tally.check(avg, tag + ": average degree bound");
      tally.check(r.certificate.all_ok() && check_certificate(r.certificate, H), tag + ": certificate disagrees");
      tally.check(r.certificate.ratio_ok == ratio && r.certificate.edge_ok == edges && r.certificate.avg_degree_ok == avg,
                  tag + ": certificate booleans differ from the recomputation");
      const auto& org = H.origin();
      std::set<int> distinct(org.begin(), org.end());
      bool sub = static_cast<int>(org.size()) == m && static_cast<int>(distinct.size()) == m;
      if (sub)
        for (auto [u, v] : H.edges())
          if (org[u] < 0 || org[u] >= n || org[v] < 0 || org[v] >= n || !g.has_edge(org[u], org[v])) sub = false;
      tally.check(sub, tag + ": output is not a subgraph of the input");
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  double secs = seconds_since(start);
  tally.check(secs < 60, "runtime " + fixed(secs) + " s");
  return {tally.failures() == 0, std::to_string(instances) + " graphs, n in [" + std::to_string(min_n) + ", " +
                                     std::to_string(max_n) + "], " + std::to_string(tally.failures()) +
                                     " failures, " + fixed(secs) + " s (limit 60 s)" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 2. Tight matching

Outcome tight_matching_contract() {
  std::mt19937_64 rng(derive_seed(kSeed, 2));
  Tally tally;
  int brute = 0;
  const int instances = 500;
  for (int i = 0; i < instances; ++i) {
    int na = uniform(rng, 1, 64);
    int nb = uniform(rng, 1, na);
    int d = uniform(rng, 1, std::min(nb, 6));
    std::vector<std::vector<int>> nbrs(na);
    // Half the instances plant a small set whose neighbourhood is no larger than itself.
    int planted = 0;
    std::vector<int> inner;
    if (i % 2 == 0 && na >= 2) {
      planted = uniform(rng, std::min(d, na), std::min(12, na));
      int width = uniform(rng, d, std::max(d, std::min(planted, nb)));
      std::vector<int> all(nb);
      for (int b = 0; b < nb; ++b) all[b] = b;
      std::shuffle(all.begin(), all.end(), rng);
      inner.assign(all.begin(), all.begin() + width);
    }
    for (int a = 0; a < na; ++a) {
      std::vector<int> pool;
      if (a < planted) {
        pool = inner;
      } else {
        pool.resize(nb);
        for (int b = 0; b < nb; ++b) pool[b] = b;
      }
      std::shuffle(pool.begin(), pool.end(), rng);
      nbrs[a].assign(pool.begin(), pool.begin() + d);
    }
    std::vector<Edge> edges;
    for (int a = 0; a < na; ++a)
      for (int b : nbrs[a]) edges.emplace_back(a, na + b);
    BipartiteGraph g(na, nb, edges);
    std::string tag = "instance " + std::to_string(i);
    try {
      TightMatching tm = tight_matching(g, Side::M, d);
      std::set<int> A1(tm.A1.begin(), tm.A1.end()), B1(tm.B1.begin(), tm.B1.end());
      bool shape = !A1.empty() && A1.size() == tm.A1.size() && B1.size() == tm.B1.size() && A1.size() == B1.size();
      for (int a : A1) shape = shape && a >= 0 && a < na;
      for (int b : B1) shape = shape && b >= na && b < na + nb;
      tally.check(shape, tag + ": malformed A1 or B1");
      bool closed = true;
      for (int a : A1)
        for (int b : g.neighbors(a)) closed = closed && B1.count(b);
      tally.check(closed, tag + ": N(a) leaves B1");
      std::set<int> ma, mb;
      bool matching = tm.matching.size() == A1.size();
      for (auto [a, b] : tm.matching) {
        matching = matching && g.has_edge(a, b) && A1.count(a) && B1.count(b);
        ma.insert(a);
        mb.insert(b);
      }
      matching = matching && ma == A1 && mb == B1;
      tally.check(matching, tag + ": not a perfect matching between A1 and B1");
      if (shape && A1.size() <= 12) {
        ++brute;
        std::vector<int> av(A1.begin(), A1.end());
        unsigned full = (1u << av.size()) - 1;
        for (unsigned s = 1; s < full; ++s) {
          std::set<int> ns;
          for (std::size_t q = 0; q < av.size(); ++q)
            if (s >> q & 1u)
              for (int b : g.neighbors(av[q])) ns.insert(b);
          if (ns.size() <= static_cast<std::size_t>(__builtin_popcount(s))) {
            tally.fail(tag + ": a proper subset of A1 is already tight");
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  return {tally.failures() == 0, std::to_string(instances) + " instances, minimality brute-forced on " +
                                     std::to_string(brute) + ", " + std::to_string(tally.failures()) + " failures" +
                                     tally.notes()};
}

// ---------------------------------------------------------------------------
// 3. Roof min-max

// max over nonempty X of ceil(|X| / |N(X)|), written independently of the library oracle.
int bottleneck(const BipartiteGraph& g) {
  int n = g.n(), best = 0;
  for (unsigned x = 1; x < (1u << n); ++x) {
    std::set<int> nx;
    for (int k = 0; k < n; ++k)
      if (x >> k & 1u)
        for (int a : g.neighbors(g.m() + k)) nx.insert(a);
    int size = __builtin_popcount(x);
    int nxs = static_cast<int>(nx.size());
    best = std::max(best, (size + nxs - 1) / nxs);
  }
  return best;
}

Outcome roof_contract() {
  std::mt19937_64 rng(derive_seed(kSeed, 3));
  Tally tally;
  const int instances = 1000;
  for (int i = 0; i < instances; ++i) {
    int m = uniform(rng, 1, 10), n = uniform(rng, 1, 15);
    double p = uniform_real(rng, 0.08, 0.9);
    std::vector<Edge> edges;
    for (int b = 0; b < n; ++b) {
      bool any = false;
      for (int a = 0; a < m; ++a)
        if (uniform_real(rng, 0, 1) < p) {
          edges.emplace_back(a, m + b);
          any = true;
        }
      if (!any) edges.emplace_back(uniform(rng, 0, m - 1), m + b);
    }
    BipartiteGraph g(m, n, edges);
    std::string tag = "instance " + std::to_string(i);
    try {
      Roof r = min_roof(g);
      int oracle = roof_bottleneck_oracle(g);
      int mine = bottleneck(g);
      std::vector<int> load(m, 0);
      bool valid = static_cast<int>(r.assign.size()) == n;
      for (int k = 0; valid && k < n; ++k) {
        int a = r.assign[k];
        valid = a >= 0 && a < m && g.has_edge(a, m + k);
        if (valid) ++load[a];
      }
      int max_load = valid ? *std::max_element(load.begin(), load.end()) : -1;
      tally.check(valid && max_load == r.max_load, tag + ": invalid roof");
      tally.check(r.max_load == oracle && oracle == mine,
                  tag + ": roof " + std::to_string(r.max_load) + " vs oracle " + std::to_string(oracle) + " vs " +
                      std::to_string(mine));
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  return {tally.failures() == 0,
          std::to_string(instances) + " graphs, " + std::to_string(tally.failures()) + " discrepancies" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 4. Biregularization

Outcome biregularization_contract() {
  std::mt19937_64 rng(derive_seed(kSeed, 4));
  const std::vector<std::pair<Rational, Rational>> grid{
      {make_rational(1), make_rational(1)},       {make_rational(1), make_rational(1, 2)},
      {make_rational(1, 2), make_rational(1)},    {make_rational(3, 4), make_rational(3, 4)},
      {make_rational(2, 3), make_rational(1, 2)}, {make_rational(1), make_rational(1, 4)},
      {make_rational(4, 5), make_rational(2, 5)}, {make_rational(1, 3), make_rational(5, 6)}};
  const Rational c = make_rational(1, 2);
  Tally tally;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    const auto& [alpha, beta] = grid[i % grid.size()];
    long double a = to_long_double(alpha), b = to_long_double(beta), cf = to_long_double(c);
    BipartiteGraph g;
    int m = 0, n = 0;
    for (;;) {
      m = uniform(rng, 16, 40);
      n = uniform(rng, m, 3 * m);
      double p = uniform_real(rng, 0.35, 0.95);
      g = random_bipartite(m, n, p, rng());
      long double need = cf * std::pow(static_cast<long double>(m), a) * std::pow(static_cast<long double>(n), b);
      long double dG = 2.0L * g.num_edges() / (m + n);
      if (static_cast<long double>(g.num_edges()) >= need * (1 + 1e-9L) && dG >= 8) break;
    }
    std::string tag = "instance " + std::to_string(i);
    try {
      BiregularizationResult r = biregularize(g, c, alpha, beta);
      const BipartiteGraph& H = r.graph;
      const auto& ct = r.certificate;
      int mo = H.m(), no = H.n();
      if (mo == 0 || no == 0) {
        tally.fail(tag + ": empty side");
        continue;
      }
      auto side_range = [&](int first, int count) {
        int lo = H.degree(first), hi = lo;
        for (int v = first; v < first + count; ++v) {
          lo = std::min(lo, H.degree(v));
          hi = std::max(hi, H.degree(v));
        }
        return std::pair{lo, hi};
      };
      auto [loM, hiM] = side_range(0, mo);
      auto [loN, hiN] = side_range(mo, no);
      long double lambda = (std::pow(2.0L, a + b - 1) - 1) / std::pow(2.0L, 6 + 1 / a + 1 / b);
      long double eH = static_cast<long double>(H.num_edges());
      long double dG = 2.0L * g.num_edges() / (m + n);
      bool lambda_ok = std::fabs(ct.lambda - lambda) <= 1e-15L * lambda;
      bool edges = at_least(eH, lambda * cf * std::pow(static_cast<long double>(mo), a) *
                                    std::pow(static_cast<long double>(no), b));
      bool avg = at_least(2 * eH / (mo + no), dG / (64 * std::log2(static_cast<long double>(m))));
      bool ratio = loM > 0 && loN > 0 && hiM <= 16 * loM && hiN <= 16 * loN;
      tally.check(lambda_ok, tag + ": lambda differs from the formula");
      tally.check(edges, tag + ": edge bound");
      tally.check(avg, tag + ": average degree floor");
      tally.check(ratio, tag + ": side ratio above 16");
      tally.check(ct.all_ok() && check_certificate(ct, H), tag + ": certificate disagrees");
      tally.check(ct.edge_ok == edges && ct.avg_degree_ok == avg && ct.ratio_ok == ratio,
                  tag + ": certificate booleans differ from the recomputation");
      const auto& org = H.origin();
      bool sub = static_cast<int>(org.size()) == mo + no;
      for (int v = 0; sub && v < mo + no; ++v) sub = (v < mo) == (org[v] < m);
      if (sub)
        for (auto [u, v] : H.edges()) sub = sub && g.has_edge(org[u], org[v]);
      tally.check(sub, tag + ": output is not a side-preserving subgraph");
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  return {tally.failures() == 0, std::to_string(instances) + " instances over " + std::to_string(grid.size()) +
                                     " exponent pairs, " + std::to_string(tally.failures()) + " failures" +
                                     tally.notes()};
}

// ---------------------------------------------------------------------------
// 5. Robust subfamilies

using Member = std::vector<int>;

std::vector<Member> members_of(const EmbeddingFamily& fam) {
  std::vector<Member> out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto m = fam.member(i);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

// Are there eta members pairwise disjoint outside the leaf images? Greedy, then exact search.
bool has_disjoint_members(const std::vector<Member>& cls, const LabeledTree& t, std::int64_t eta) {
  std::vector<std::set<int>> inner;
  for (const auto& f : cls) {
    std::set<int> s;
    for (int v = 0; v < t.num_vertices(); ++v)
      if (!t.is_leaf(v)) s.insert(f[v]);
    inner.push_back(s);
  }
  auto disjoint = [](const std::set<int>& x, const std::set<int>& y) {
    for (int v : x)
      if (y.count(v)) return false;
    return true;
  };
  std::vector<int> chosen;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    bool ok = true;
    for (int c : chosen) ok = ok && disjoint(inner[i], inner[c]);
    if (ok) chosen.push_back(static_cast<int>(i));
  }
  if (static_cast<std::int64_t>(chosen.size()) >= eta) return true;
  std::uint64_t budget = 2'000'000;
  std::function<bool(std::size_t, std::vector<int>&)> search = [&](std::size_t from, std::vector<int>& pick) {
    if (static_cast<std::int64_t>(pick.size()) >= eta) return true;
    if (budget-- == 0) return false;
    for (std::size_t i = from; i < inner.size(); ++i) {
      if (static_cast<std::int64_t>(pick.size() + inner.size() - i) < eta) return false;
      bool ok = true;
      for (int c : pick) ok = ok && disjoint(inner[i], inner[c]);
      if (!ok) continue;
      pick.push_back(static_cast<int>(i));
      if (search(i + 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  };
  std::vector<int> pick;
  return search(0, pick);
}

// Both robustness conditions, straight from the definition.
std::string robust_violation(const EmbeddingFamily& fam, std::int64_t eta) {
  const LabeledTree& t = fam.tree();
  std::vector<Member> all = members_of(fam);
  int v = t.num_vertices();
  for (TreeMask m = 1; m < t.full_mask(); ++m) {
    if (!t.is_connected(m)) continue;
    for (int y = 0; y < v; ++y) {
      if (m >> y & 1u || !t.is_connected(m | TreeMask{1} << y)) continue;
      std::map<Member, std::set<int>> ext;
      for (const auto& f : all) {
        Member key;
        for (int x = 0; x < v; ++x)
          if (m >> x & 1u) key.push_back(f[x]);
        ext[key].insert(f[y]);
      }
      for (const auto& [key, imgs] : ext)
        if (static_cast<std::int64_t>(imgs.size()) < eta) return "extension condition";
    }
  }
  std::map<Member, std::vector<Member>> classes;
  for (const auto& f : all) {
    Member lv;
    for (int x : t.leaves()) lv.push_back(f[x]);
    classes[lv].push_back(f);
  }
  for (const auto& [lv, cls] : classes) {
    if (!has_disjoint_members(cls, t, eta)) return "linked condition";
    if (!certify_linked(fam, lv, eta).linked) return "certify_linked refused";
  }
  return "";
}

Outcome robust_contract() {
  std::mt19937_64 rng(derive_seed(kSeed, 5));
  Tally tally;
  int nonempty = 0, engineered = 0, random_hosts = 0;
  auto run = [&](const EmbeddingFamily& fam, std::int64_t eta, const std::string& tag) {
    try {
      RobustResult r = extract_robust(fam, eta);
      tally.check(r.family.size() + r.report.removed() == fam.size(), tag + ": removal count mismatch");
      if (r.family.empty()) return;
      ++nonempty;
      std::set<Member> input;
      for (const auto& f : members_of(fam)) input.insert(f);
      for (const auto& f : members_of(r.family)) tally.check(input.count(f) > 0, tag + ": output member not an input member");
      std::string why = robust_violation(r.family, eta);
      tally.check(why.empty(), tag + ": " + why);
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  };
  const std::vector<std::pair<int, bool>> shapes{{2, true}, {2, false}, {3, true}, {3, false}};
  for (int i = 0; i < 50; ++i) {
    int q = 2 + (i * 13) % 63;
    auto [len, a_into_M] = shapes[i % shapes.size()];
    std::int64_t eta = 1 + (i / 4) % 3;
    BipartiteGraph host = complete_bipartite(2, q);
    run(enumerate_copies(host, LabeledTree::path(len), a_into_M), eta,
        "K_{2," + std::to_string(q) + "} path " + std::to_string(len) + " eta " + std::to_string(eta));
    ++engineered;
  }
  const std::vector<LabeledTree> trees{LabeledTree::path(2), LabeledTree::path(3), LabeledTree::spider({1, 2})};
  for (int i = 0; i < 50; ++i) {
    int m = uniform(rng, 5, 11), n = uniform(rng, 5, 11);
    BipartiteGraph host = random_bipartite(m, n, uniform_real(rng, 0.3, 0.9), rng());
    const LabeledTree& t = trees[i % trees.size()];
    std::int64_t eta = uniform(rng, 1, 3);
    run(enumerate_copies(host, t, i % 2 == 0), eta, "random host " + std::to_string(i));
    ++random_hosts;
  }
  return {tally.failures() == 0, std::to_string(engineered) + " complete K_{2,q} families and " +
                                     std::to_string(random_hosts) + " random hosts, " + std::to_string(nonempty) +
                                     " nonempty outputs rechecked, " + std::to_string(tally.failures()) +
                                     " failures" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 6. Linkage producers

// Spider family on a layered host: every layer is complete to the next one along each leg.
// Layer sizes are `width`, except leaf layers use `leaf_width`.
EmbeddingFamily layered_spider_family(const std::vector<int>& legs, int width, int leaf_width) {
  LabeledTree tree = LabeledTree::spider(legs);
  int v = tree.num_vertices();
  // Layer of each tree vertex and its side.
  std::vector<int> size(v), side(v), parent(v, -1);
  size[0] = width;
  side[0] = 0;
  int idx = 1;
  for (int len : legs)
    for (int q = 1; q <= len; ++q, ++idx) {
      size[idx] = q == len ? leaf_width : width;
      side[idx] = q % 2;
      parent[idx] = q == 1 ? 0 : idx - 1;
    }
  std::vector<int> start(v);
  int next = 0;
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < v; ++x)
      if (side[x] == s) {
        start[x] = next;
        next += size[x];
      }
  int boundary = 0;
  for (int x = 0; x < v; ++x)
    if (side[x] == 0) boundary += size[x];
  std::vector<Edge> edges;
  for (int x = 1; x < v; ++x)
    for (int i = 0; i < size[x]; ++i)
      for (int j = 0; j < size[parent[x]]; ++j) {
        int a = start[x] + i, b = start[parent[x]] + j;
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
  auto host = std::make_shared<const Graph>(next, edges);
  std::vector<int> flat, digit(v, 0);
  for (;;) {
    for (int x = 0; x < v; ++x) flat.push_back(start[x] + digit[x]);
    int x = v - 1;
    while (x >= 0 && ++digit[x] == size[x]) digit[x--] = 0;
    if (x < 0) break;
  }
  return EmbeddingFamily(tree, host, std::move(flat), boundary);
}

Witness spider_witness(const SpiderLinkage& sl, int k) {
  int s = static_cast<int>(sl.branch.size());
  Witness w;
  w.branch = sl.branch;
  for (const auto& copy : sl.copies) w.branch.push_back(copy[0]);
  for (int i = 0; i < s; ++i)
    for (const auto& copy : sl.copies) {
      std::vector<int> path{copy[0]};
      path.insert(path.end(), copy.begin() + 1 + i * k, copy.begin() + 1 + (i + 1) * k);
      std::reverse(path.begin(), path.end());
      w.paths.push_back(path);
    }
  return w;
}

Outcome linkage_contract() {
  std::mt19937_64 rng(derive_seed(kSeed, 6));
  Tally tally;
  struct PathFamily {
    std::string name;
    EmbeddingFamily fam;
    std::int64_t eta;
  };
  std::vector<PathFamily> families;
  auto add = [&](const std::string& name, EmbeddingFamily fam) {
    std::int64_t eta = 0;
    for (std::int64_t e = 24; e >= 1; --e)
      if (check_robust(fam, e).ok()) {
        eta = e;
        break;
      }
    families.push_back({name, std::move(fam), eta});
  };
  add("K_{10,10} path 2 ends in M", enumerate_copies(complete_bipartite(10, 10), LabeledTree::path(2), true));
  add("K_{10,10} path 2 ends in N", enumerate_copies(complete_bipartite(10, 10), LabeledTree::path(2), false));
  add("K_{12,12} path 3", enumerate_copies(complete_bipartite(12, 12), LabeledTree::path(3), true));
  add("K_{16,16} path 3 ends in N", enumerate_copies(complete_bipartite(16, 16), LabeledTree::path(3), false));
  int trials = 0, linkers = 0;
  while (trials < 1000) {
    const PathFamily& pf = families[linkers % families.size()];
    int j = pf.fam.tree().num_edges();
    std::vector<std::pair<int, int>> options;
    for (int k = std::max(2, j); k <= 6; ++k)
      for (int h = 1; 2 * k * h <= pf.eta; ++h) options.push_back({k, h});
    ++linkers;
    if (options.empty()) {
      tally.fail(pf.name + ": not robust enough for any linkage");
      continue;
    }
    auto [k, h] = options[rng() % options.size()];
    int member = static_cast<int>(rng() % pf.fam.size());
    const Graph& host = pf.fam.host();
    std::string tag = pf.name + " k=" + std::to_string(k) + " h=" + std::to_string(h);
    try {
      PathLinker pl(pf.fam, member, k, h);
      for (int rep = 0; rep < 10; ++rep, ++trials) {
        std::set<int> W;
        std::size_t want = rng() % (static_cast<std::size_t>(k * h) + 1);
        while (W.size() < want) {
          int v = static_cast<int>(rng() % host.num_vertices());
          if (v != pl.first() && v != pl.second()) W.insert(v);
        }
        std::vector<int> p = pl.produce(W);
        bool ok = static_cast<int>(p.size()) == k + 1 && p.front() == pl.first() && p.back() == pl.second() &&
                  is_path_in(host, p);
        for (int v : p) ok = ok && !W.count(v);
        tally.check(ok, tag + ": produced path is invalid");
      }
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
      trials += 10;
    }
  }
  int path_failures = tally.failures();

  struct SpiderCase {
    int s, k, t;
    std::vector<int> legs;
    int width, leaf_width;
    // Full robustness at 2kst; otherwise only the leaf classes are linked (leaf layers are narrow).
    bool robust;
  };
  const std::vector<SpiderCase> cases{{2, 2, 2, {1, 2}, 18, 18, true},
                                      {2, 3, 2, {1, 2}, 26, 26, true},
                                      {3, 2, 2, {1, 2, 2}, 24, 5, false}};
  std::string spider_note;
  for (const auto& sc : cases) {
    std::string tag = "spider (s,k,t)=(" + std::to_string(sc.s) + "," + std::to_string(sc.k) + "," +
                      std::to_string(sc.t) + ")";
    try {
      EmbeddingFamily fam = layered_spider_family(sc.legs, sc.width, sc.leaf_width);
      if (sc.robust) tally.check(check_robust(fam, 2LL * sc.k * sc.s * sc.t).ok(), tag + ": host family not robust");
      int verified = 0;
      for (int member : {0, static_cast<int>(fam.size() / 2), static_cast<int>(fam.size() - 1)}) {
        SpiderLinkage sl = spider_linkage(fam, member, sc.k, sc.t);
        bool ok = static_cast<int>(sl.branch.size()) == sc.s && static_cast<int>(sl.copies.size()) == sc.t &&
                  verify_witness(fam.host(), PatternSpec::kst_subdivision(sc.s, sc.t, sc.k), spider_witness(sl, sc.k));
        tally.check(ok, tag + ": witness rejected");
        verified += ok;
      }
      spider_note += " " + tag + " " + std::to_string(verified) + "/3";
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  return {tally.failures() == 0, std::to_string(trials) + " path trials over " + std::to_string(linkers) +
                                     " linkers, " + std::to_string(path_failures) + " failures;" + spider_note +
                                     tally.notes()};
}

// ---------------------------------------------------------------------------
// 7. Light paths

Outcome light_path_contract() {
  Tally tally;
  std::uint64_t checked = 0;
  auto check_all = [&](const BipartiteGraph& g, int k, std::int64_t h, bool need_nonempty, const std::string& tag) {
    try {
      LightPathCollection c = light_path_collection(g, k, h);
      long double h4 = std::pow(static_cast<long double>(h), 4);
      tally.check(!need_nonempty || !c.paths.empty(), tag + ": empty output");
      for (const auto& p : c.paths) {
        ++checked;
        bool ok = static_cast<int>(p.size()) == k + 1 && g.in_M(p[0]) && is_path_in(g.graph(), p);
        for (std::size_t i = 0; ok && i + 2 < p.size(); ++i)
          if (g.in_M(p[i]))
            ok = static_cast<long double>(common_neighbours(g.graph(), p[i], p[i + 2]).size()) < h4;
        if (!ok) {
          tally.fail(tag + ": path with a heavy M-pair or broken edge");
          break;
        }
      }
    } catch (const std::exception& e) {
      tally.fail(tag + ": " + e.what());
    }
  };
  int hosts = 0;
  for (int d = 8; d <= 12; ++d)
    for (int k : {2, 3}) {
      std::int64_t h = static_cast<std::int64_t>(ProofConstants::light_h(2, k, 1));
      check_all(complete_bipartite(d, d), k, h, true, "K_{" + std::to_string(d) + "," + std::to_string(d) + "}");
      ++hosts;
    }
  // Small h so that heavy pairs exist and must be avoided.
  std::mt19937_64 rng(derive_seed(kSeed, 7));
  for (int i = 0; i < 20; ++i) {
    int m = uniform(rng, 6, 14), n = uniform(rng, 10, 30);
    BipartiteGraph g = random_bipartite(m, n, uniform_real(rng, 0.3, 0.9), rng());
    check_all(g, 2 + i % 2, 2, false, "random host " + std::to_string(i));
    ++hosts;
  }
  return {tally.failures() == 0, std::to_string(hosts) + " hosts, " + std::to_string(checked) + " paths checked, " +
                                     std::to_string(tally.failures()) + " failures" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 8. Balance intervals

// Direct subset enumeration of the balance inequality.
bool balanced(const OrientedTree& t, const Rational& alpha) {
  const LabeledTree& tr = t.tree();
  std::vector<int> internal;
  for (int v = 0; v < tr.num_vertices(); ++v)
    if (tr.degree(v) > 1) internal.push_back(v);
  int a = 0, b = 0;
  for (int v : internal) (t.in_A(v) ? a : b)++;
  if (internal.empty()) return true;
  for (unsigned mask = 1; mask < (1u << internal.size()); ++mask) {
    std::vector<bool> in(tr.num_vertices(), false);
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < internal.size(); ++i)
      if (mask >> i & 1u) {
        in[internal[i]] = true;
        (t.in_A(internal[i]) ? sa : sb)++;
      }
    int es = 0;
    for (auto [u, v] : tr.edges()) es += in[u] || in[v];
    if (Rational(es) * (alpha * a + b) < (alpha * sa + sb) * tr.num_edges()) return false;
  }
  return true;
}

Outcome balance_contract() {
  Tally tally;
  auto start = Clock::now();
  int checks = 0;
  // want < 0 only compares the library against enumeration.
  auto expect = [&](const OrientedTree& t, const Rational& alpha, int want, const std::string& tag) {
    ++checks;
    bool naive = balanced(t, alpha);
    bool lib = check_alpha_balanced(t, alpha).balanced;
    tally.check(want < 0 || naive == (want == 1), tag + " at " + to_string(alpha) + ": enumeration says " + (naive ? "balanced" : "unbalanced"));
    tally.check(lib == naive, tag + " at " + to_string(alpha) + ": library disagrees with enumeration");
  };
  auto both = [](const LabeledTree& t) { return std::vector<OrientedTree>{OrientedTree(t, true), OrientedTree(t, false)}; };
  const Rational nudge = make_rational(1, 1000);
  for (int k = 1; k <= 4; ++k) {
    // Path on 2k vertices and on 2k+1 vertices.
    for (int extra = 0; extra <= 1; ++extra) {
      int vertices = 2 * k + extra;
      Rational lo = extra ? Rational(k) / (k + 1) : Rational(k - 1) / k;
      Rational hi = extra ? Rational(k + 1) / k : (k == 1 ? Rational(1000) : Rational(k) / (k - 1));
      if (lo == 0) lo = nudge;
      for (const auto& o : both(LabeledTree::path(vertices - 1))) {
        std::string tag = "path on " + std::to_string(vertices) + " vertices (" + o.describe() + ")";
        for (const Rational& x : std::vector<Rational>{lo, Rational((lo + hi) / 2), Rational(1), hi}) expect(o, x, true, tag);
        // The orientation's own interval is contained in the balanced range.
        if (o.internal_A() > 0 && o.internal_B() > 0 && o.num_roots() >= 2) {
          RationalInterval iv = maximal_interval(o);
          tally.check(iv.lo <= lo && hi <= iv.hi, tag + ": maximal interval misses the stated one");
          expect(o, iv.lo, true, tag);
          expect(o, iv.hi, true, tag);
          expect(o, iv.lo - nudge, -1, tag);
          expect(o, iv.hi + nudge, -1, tag);
        }
      }
    }
  }
  // Spiders with s legs of length k, leaves in A, then the reversed orientation.
  for (int s : {2, 3})
    for (int k : {2, 3}) {
      LabeledTree sp = LabeledTree::spider(std::vector<int>(s, k));
      OrientedTree ab = OrientedTree::leaves_first(sp);
      for (const OrientedTree& o : {ab, ab.reversed()}) {
        int a = 0, b = 0, r = 0;
        for (int v = 0; v < sp.num_vertices(); ++v) {
          if (o.tree().is_leaf(v)) {
            ++r;
            continue;
          }
          (o.in_A(v) ? a : b)++;
        }
        Rational lo = Rational(b) / (b + r - 1), hi = Rational(a + r - 1) / a;
        std::string tag = "spider s=" + std::to_string(s) + " k=" + std::to_string(k) + " (" + o.describe() + ")";
        tally.check(maximal_interval(o).lo == lo && maximal_interval(o).hi == hi, tag + ": interval endpoints differ");
        expect(o, lo, true, tag);
        expect(o, hi, true, tag);
        IntervalConditionReport ic = check_interval_conditions(o);
        tally.check(ic.holds_A && ic.holds_B, tag + ": interval conditions fail");
      }
    }
  // Path on four vertices with a pendant leaf at each, v the far end in B.
  LabeledTree pendant(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  OrientedTree po(pendant, true);
  int v = po.in_A(3) ? 0 : 3;
  expect(po, make_rational(2, 5), false, "pendant example");
  BalanceReport rep = check_alpha_balanced(po, make_rational(2, 5));
  tally.check(rep.failing == std::vector<int>{v}, "pendant example: failing set is not {v}");
  expect(po, 1, true, "pendant example");
  double secs = seconds_since(start);
  tally.check(secs < 10, "runtime " + fixed(secs) + " s");
  return {tally.failures() == 0, std::to_string(checks) + " balance checks, " + std::to_string(tally.failures()) +
                                     " failures, " + fixed(secs, 3) + " s (limit 10 s)" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 9. Construction statistics

Outcome construction_contract() {
  Tally tally;
  auto start = Clock::now();
  LabeledTree p3 = LabeledTree::path(2);
  std::vector<OrientedTree> family{OrientedTree(p3, true), OrientedTree(p3, false)};
  std::string summary;
  const int seeds = 1000;
  for (std::int64_t q : {3, 5}) {
    ConstructionSpec spec = ConstructionSpec::from_family(family, 1, q, 0);
    tally.check(spec.ell == 2 && spec.rho * spec.ell == 1 && spec.polynomials == 1,
                "q=" + std::to_string(q) + ": parameters differ from (ell, rho ell) = (2, 1)");
    int m = static_cast<int>(q * q), n = m;
    std::vector<std::int64_t> freq(static_cast<std::size_t>(m) * n, 0);
    std::int64_t total = 0;
    int bad_prune = 0;
    for (int s = 0; s < seeds; ++s) {
      spec.seed = derive_seed(kSeed, static_cast<std::uint64_t>(q * 100000 + s));
      BipartiteGraph g = sample_construction(spec);
      for (auto [a, b] : g.edges()) ++freq[static_cast<std::size_t>(a) * n + (b - m)];
      total += g.num_edges();
      // Cherries rooted at their leaves, with the leaves on either side.
      PruneResult pr = prune_bad_roots(g, family, 3);
      const BipartiteGraph& h = pr.graph;
      bool ok = h.m() == m && h.n() == n;
      for (auto [a, b] : h.edges()) ok = ok && g.has_edge(a, b);
      for (int u = 0; ok && u < m + n; ++u)
        for (int w = u + 1; ok && w < m + n; ++w)
          if (h.in_M(u) == h.in_M(w)) ok = common_neighbours(h.graph(), u, w).size() < 3;
      bad_prune += !ok;
    }
    double p = 1.0 / static_cast<double>(q);
    double trials = static_cast<double>(seeds) * m * n;
    double sigma = std::sqrt(trials * p * (1 - p));
    double z = (static_cast<double>(total) - trials * p) / sigma;
    // Per pair: Bonferroni over all pairs at 3 sigma family-wise.
    double zb = 3.0;
    while (std::erfc(zb / std::sqrt(2.0)) * m * n > std::erfc(3.0 / std::sqrt(2.0))) zb += 0.01;
    double sp = std::sqrt(seeds * p * (1 - p)), worst = 0;
    for (auto f : freq) worst = std::max(worst, std::fabs(static_cast<double>(f) - seeds * p) / sp);
    std::string tag = "q=" + std::to_string(q);
    tally.check(std::fabs(z) <= 3, tag + ": aggregate frequency " + fixed(z) + " sigma");
    tally.check(worst <= zb, tag + ": pair frequency " + fixed(worst) + " sigma");
    tally.check(bad_prune == 0, tag + ": " + std::to_string(bad_prune) + " pruned graphs keep a pair with 3 copies");
    summary += " " + tag + ": aggregate " + fixed(z) + " sigma, worst pair " + fixed(worst) + " of " + fixed(zb) +
               " sigma;";
  }
  double secs = seconds_since(start);
  tally.check(secs < 120, "runtime " + fixed(secs) + " s");
  return {tally.failures() == 0, std::to_string(seeds) + " seeds per q;" + summary + " " + fixed(secs) +
                                     " s (limit 120 s)" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 10. Finder soundness

// Largest number of common neighbours over pairs of vertices.
int max_codegree(const BipartiteGraph& g) {
  int best = 0;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int w = u + 1; w < g.num_vertices(); ++w)
      best = std::max(best, static_cast<int>(common_neighbours(g.graph(), u, w).size()));
  return best;
}

Outcome finder_contract() {
  Tally tally;
  const std::vector<std::pair<PatternSpec, int>> patterns{{PatternSpec::theta(2, 2), 2},
                                                          {PatternSpec::theta(3, 2), 3},
                                                          {PatternSpec::complete_bipartite(2, 2), 2}};
  std::uint64_t graphs = 0, witnesses = 0;
  auto run = [&](const BipartiteGraph& g) {
    ++graphs;
    int cod = max_codegree(g);
    for (const auto& [spec, need] : patterns) {
      FindResult r = find_pattern(g, spec);
      bool expect = cod >= need;
      if (r.status == FindStatus::CeilingHit) {
        tally.fail(spec.describe() + ": ceiling hit");
        continue;
      }
      if ((r.status == FindStatus::Found) != expect) tally.fail(spec.describe() + ": disagrees with codegree count");
      if (r.witness) {
        ++witnesses;
        tally.check(verify_witness(g, spec, *r.witness), spec.describe() + ": witness rejected");
      }
    }
  };
  // Every labelled bipartite graph with parts m <= n and m + n <= 8.
  int exhaustive = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; m + n <= 8; ++n) {
      int pairs = m * n;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < pairs; ++i)
          if (mask >> i & 1u) edges.emplace_back(i / n, m + i % n);
        run(BipartiteGraph(m, n, edges));
        ++exhaustive;
      }
    }
  std::mt19937_64 rng(derive_seed(kSeed, 10));
  for (int i = 0; i < 4000; ++i) {
    int total = uniform(rng, 9, 10);
    int m = uniform(rng, 1, total / 2);
    run(random_bipartite(m, total - m, uniform_real(rng, 0.1, 0.7), rng()));
  }
  return {tally.failures() == 0, std::to_string(exhaustive) + " exhaustive graphs (up to 8 vertices) and " +
                                     std::to_string(graphs - exhaustive) + " sampled (9-10 vertices), " +
                                     std::to_string(witnesses) + " witnesses verified, " +
                                     std::to_string(tally.failures()) + " discrepancies" + tally.notes()};
}

// ---------------------------------------------------------------------------
// 11. CLI determinism

Outcome determinism_contract() {
  Tally tally;
  int runs = 0;
  for (const auto& c : golden::golden_cases()) {
    std::string golden_text = golden::read_text(std::string(EXTREMAL_GOLDEN_DIR) + "/" + c.name + ".json");
    for (int threads : {1, 4})
      for (int rep = 0; rep < 3; ++rep) {
        golden::GoldenRun r = golden::run_cli(EXTREMAL_CLI_PATH, EXTREMAL_CLI_WORKDIR, c, threads);
        ++runs;
        tally.check(r.exit_code == c.exit_code, c.name + ": exit code " + std::to_string(r.exit_code));
        tally.check(!r.report.empty() && r.report == golden_text,
                    c.name + " (threads " + std::to_string(threads) + "): report differs from the golden file");
      }
  }
  return {tally.failures() == 0, std::to_string(golden::golden_cases().size()) + " golden cases, " +
                                     std::to_string(runs) + " runs over threads {1, 4} x 3, " +
                                     std::to_string(tally.failures()) + " mismatches" + tally.notes()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "enhanced regularization contract", regularization_contract},
      {2, "tight matching", tight_matching_contract},
      {3, "roof min-max", roof_contract},
      {4, "biregularization contract", biregularization_contract},
      {5, "robust subfamily recheck", robust_contract},
      {6, "linkage producers", linkage_contract},
      {7, "light-path property", light_path_contract},
      {8, "balance intervals", balance_contract},
      {9, "construction statistics", construction_contract},
      {10, "finder soundness", finder_contract},
      {11, "CLI determinism", determinism_contract},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("uncaught: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << ": " << o.detail
              << " (" << fixed(seconds_since(start)) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
