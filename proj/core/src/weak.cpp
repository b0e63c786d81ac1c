#include <algorithm>
#include <cmath>

#include "extremal/biregularize.hpp"
#include "extremal/errors.hpp"
#include "extremal/peel.hpp"

namespace extremal {

namespace {

long double ld(const Rational& r) { return to_long_double(r); }

void evaluate(WeakBiregularityCertificate& ct) {
  long double a = ld(ct.alpha), b = ld(ct.beta), e = ld(ct.eps);
  bool larger_is_N = ct.larger_side == Side::N;
  int lmin = larger_is_N ? ct.min_N : ct.min_M, lmax = larger_is_N ? ct.max_N : ct.max_M;
  int smin = larger_is_N ? ct.min_M : ct.min_N, smax = larger_is_N ? ct.max_M : ct.max_N;
  bool nonempty = ct.out_m > 0 && ct.out_n > 0 && ct.min_M > 0 && ct.min_N > 0;
  ct.ratio_ok = nonempty && static_cast<long double>(lmax) <= ct.mu * lmin;
  ct.power_ok = nonempty && static_cast<long double>(smax) <= std::pow(static_cast<long double>(smin), 1 + e) *
                                                                 (1 + kCertificateSlack);
  long double avg = ct.out_m + ct.out_n ? 2.0L * ct.out_edges / (ct.out_m + ct.out_n) : 0;
  ct.degree_ok = nonempty && ge_with_slack(avg, ld(ct.L_prime));
  ct.edge_bound = ct.lambda * ld(ct.c) * std::pow(static_cast<long double>(ct.out_m), a) *
                  std::pow(static_cast<long double>(ct.out_n), b);
  ct.edge_ok = nonempty && ge_with_slack(static_cast<long double>(ct.out_edges), ct.edge_bound);
}

void fill(WeakBiregularityCertificate& ct, const BipartiteGraph& out) {
  DegreeStats s = degree_stats(out);
  ct.out_m = s.m;
  ct.out_n = s.n;
  ct.out_edges = s.edges;
  ct.min_M = s.min_M;
  ct.max_M = s.max_M;
  ct.min_N = s.min_N;
  ct.max_N = s.max_N;
}

// Sparse branch on a graph whose larger side is N; `a` is the exponent of M.
BipartiteGraph sparse_branch(const BipartiteGraph& G0, long double a, long double b, long double eps, int p) {
  DegreeStats s0 = degree_stats(G0);
  BipartiteGraph G1 = peel_bipartite(G0, s0.avg_M / 4, s0.avg_N / 4);
  if (G1.num_edges() == 0) throw InternalInvariantBroken("weak_biregularize: peel emptied the graph");
  long double D = std::pow(static_cast<long double>(G0.n()), (a + b - 1) / (2 * a));
  long double r = 1 + eps / 2;
  std::vector<std::vector<int>> cls(p + 1);
  for (int x = 0; x < G1.m(); ++x) {
    int deg = G1.degree(x);
    int i = 1;
    if (D > 1 && deg > 1) {
      long double ratio = std::log(static_cast<long double>(deg)) / std::log(D);
      if (ratio >= 1) i = static_cast<int>(std::floor(std::log(ratio) / std::log(r))) + 1;
      // D^{r^{i-1}} <= deg < D^{r^i}
    }
    cls[std::clamp(i, 1, p)].push_back(x);
  }
  int best = 1;
  std::int64_t best_e = -1;
  for (int i = 1; i <= p; ++i) {
    std::int64_t e = 0;
    for (int x : cls[i]) e += G1.degree(x);
    if (e > best_e) {
      best_e = e;
      best = i;
    }
  }
  std::vector<int> keep = cls[best];
  for (int y = G1.m(); y < G1.num_vertices(); ++y) keep.push_back(y);
  BipartiteGraph G2 = G1.induced(keep).without_isolated();
  DegreeStats s2 = degree_stats(G2);
  return peel_bipartite(G2, s2.avg_M / 4, s2.avg_N / 4);
}

}  // namespace

int weak_class_count(const Rational& alpha, const Rational& beta, const Rational& eps) {
  long double a = ld(alpha), b = ld(beta), e = ld(eps);
  long double v = std::log(2 * a / (a + b - 1)) / std::log(1 + e / 2);
  return std::max(1, static_cast<int>(std::ceil(v - 1e-12L)));
}

Rational default_weak_threshold(const Rational& alpha, const Rational& beta, const Rational& eps,
                                const Rational& L_prime) {
  Rational L = L_prime * 128 * weak_class_count(alpha, beta, eps);
  return L < 64 ? Rational(64) : L;
}

WeakBiregularizationResult weak_biregularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                             const Rational& beta, const Rational& eps, const Rational& L_prime,
                                             const Rational& L) {
  if (!(alpha > 0 && alpha <= 1 && beta > 0 && beta <= 1 && alpha + beta > 1))
    throw PreconditionViolated("weak_biregularize: need 0 < alpha, beta <= 1 and alpha + beta > 1");
  if (!(eps > 0) || !(c > 0)) throw PreconditionViolated("weak_biregularize: need eps > 0 and c > 0");
  long double a = ld(alpha), b = ld(beta), e = ld(eps), cf = ld(c);
  if (ld(L_prime) < std::pow(16.0L, 2 / e) * (1 - kCertificateSlack))
    throw PreconditionViolated("weak_biregularize: need L' >= 16^{2/eps}");
  if (g.m() > g.n()) throw PreconditionViolated("weak_biregularize: need |M| <= |N|");
  if (degree_stats(g).avg < L) throw PreconditionViolated("weak_biregularize: need d(G) >= L");

  OneSideResult os = one_side_regularize(g, c, alpha, beta);
  long double lambda0 = 1 / std::pow(2.0L, 2 + 1 / a + 1 / b);
  long double gam = (a + b - 1) / 2;
  bool swap = os.regular_side == Side::M;
  BipartiteGraph G0 = swap ? os.graph.swapped() : os.graph;
  long double aa = swap ? b : a, bb = swap ? a : b;  // exponents of (smaller, larger)
  int p = weak_class_count(alpha, beta, eps);

  WeakBiregularizationResult res;
  WeakBiregularityCertificate& ct = res.certificate;
  ct.c = c;
  ct.alpha = alpha;
  ct.beta = beta;
  ct.eps = eps;
  ct.L = L;
  ct.L_prime = L_prime;
  ct.p = p;
  ct.larger_side = swap ? Side::M : Side::N;

  long double dense_lhs = lambda0 * cf * std::pow(static_cast<long double>(G0.m()), aa) *
                          std::pow(static_cast<long double>(G0.n()), bb);
  BipartiteGraph out;
  if (dense_lhs > std::pow(static_cast<long double>(G0.n()), 1 + gam)) {
    ct.branch = "dense";
    // biregularize expects exponents in (M, N) order of its input
    Rational ca = swap ? beta : alpha, cb = swap ? alpha : beta;
    // c * lambda0 rounded down to a rational
    Rational scaled(BigInt(static_cast<long long>(std::floor(cf * lambda0 * 1e12L))), BigInt(1000000000000LL));
    BiregularizationResult br = biregularize(G0, scaled, ca, cb);
    out = br.graph;
    long double strict = (std::pow(2.0L, a + b - 1) - 1) / std::pow(2.0L, 6 + 1 / a + 1 / b);
    ct.lambda = lambda0 * strict;
    ct.mu = 16;
  } else {
    ct.branch = "sparse";
    out = sparse_branch(G0, aa, bb, e, p);
    ct.lambda = lambda0 / (4 * p);
    ct.mu = 4.0L * p;
  }
  res.graph = swap ? out.swapped() : out;
  fill(ct, res.graph);
  evaluate(ct);
  return res;
}

bool check_certificate(const WeakBiregularityCertificate& cert, const BipartiteGraph& out) {
  WeakBiregularityCertificate re = cert;
  fill(re, out);
  evaluate(re);
  return re.out_m == cert.out_m && re.out_n == cert.out_n && re.out_edges == cert.out_edges &&
         re.min_M == cert.min_M && re.max_M == cert.max_M && re.min_N == cert.min_N && re.max_N == cert.max_N &&
         re.ratio_ok == cert.ratio_ok && re.power_ok == cert.power_ok && re.degree_ok == cert.degree_ok &&
         re.edge_ok == cert.edge_ok;
}

nlohmann::json WeakBiregularityCertificate::to_json() const {
  return {
      {"kind", "weak_biregularize"},
      {"branch", branch},
      {"params",
       {{"c", to_string(c)},
        {"alpha", to_string(alpha)},
        {"beta", to_string(beta)},
        {"eps", to_string(eps)},
        {"L", to_string(L)},
        {"L_prime", to_string(L_prime)}}},
      {"output",
       {{"m", out_m},
        {"n", out_n},
        {"edges", out_edges},
        {"min_M", min_M},
        {"max_M", max_M},
        {"min_N", min_N},
        {"max_N", max_N},
        {"larger_side", side_name(larger_side)}}},
      {"bounds",
       {{"p", p}, {"mu", static_cast<double>(mu)}, {"lambda", static_cast<double>(lambda)},
        {"edge_bound", static_cast<double>(edge_bound)}}},
      {"checks", {{"ratio_ok", ratio_ok}, {"power_ok", power_ok}, {"degree_ok", degree_ok}, {"edge_ok", edge_ok}}},
  };
}

}  // namespace extremal
