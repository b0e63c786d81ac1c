#include "extremal/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "extremal/errors.hpp"
#include "extremal/family.hpp"
#include "extremal/rng.hpp"

namespace extremal {

namespace {

std::vector<int> mask_members(std::uint32_t mask, const std::vector<int>& items) {
  std::vector<int> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (mask >> i & 1u) out.push_back(items[i]);
  return out;
}

// Internal vertices with per-vertex side flags and per-edge endpoint masks.
struct InternalView {
  std::vector<int> internal;
  std::uint32_t a_mask = 0;
  std::vector<std::uint32_t> edge_masks;
};

InternalView internal_view(const OrientedTree& t) {
  InternalView iv;
  std::vector<int> pos(t.num_vertices(), -1);
  for (int v = 0; v < t.num_vertices(); ++v)
    if (!t.tree().is_leaf(v)) {
      pos[v] = static_cast<int>(iv.internal.size());
      if (t.in_A(v)) iv.a_mask |= 1u << pos[v];
      iv.internal.push_back(v);
    }
  if (static_cast<int>(iv.internal.size()) > kMaxBalanceInternal)
    throw TooLarge("too many internal vertices for subset enumeration");
  for (auto [u, v] : t.tree().edges()) {
    std::uint32_t m = 0;
    if (pos[u] >= 0) m |= 1u << pos[u];
    if (pos[v] >= 0) m |= 1u << pos[v];
    iv.edge_masks.push_back(m);
  }
  return iv;
}

int edges_touching(const InternalView& iv, std::uint32_t s) {
  int c = 0;
  for (std::uint32_t m : iv.edge_masks) c += (m & s) != 0;
  return c;
}

std::int64_t to_int64_checked(const BigInt& x, const char* what) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max()) || x < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw TooLarge(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

std::int64_t checked_power(std::int64_t q, std::int64_t len) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < len; ++i) {
    if (r > kMaxConstructionPairs / q) throw TooLarge("construction side exceeds the size guard");
    r *= q;
  }
  return r;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace

OrientedTree::OrientedTree(const LabeledTree& t, bool a_holds_first) : tree_(a_holds_first ? t : t.flipped()) {
  for (int v = 0; v < tree_.num_vertices(); ++v)
    if (!tree_.is_leaf(v)) (in_A(v) ? internal_a_ : internal_b_)++;
}

OrientedTree OrientedTree::leaves_first(const LabeledTree& t) { return OrientedTree(t, t.side(t.leaves()[0]) == 0); }

OrientedTree OrientedTree::reversed() const { return OrientedTree(tree_, false); }

std::string OrientedTree::describe() const {
  std::string out = tree_.describe() + " A={";
  bool first = true;
  for (int v = 0; v < num_vertices(); ++v)
    if (in_A(v)) {
      out += (first ? "" : ",") + std::to_string(v + 1);
      first = false;
    }
  return out + "}";
}

BalanceReport check_alpha_balanced(const OrientedTree& t, const Rational& alpha) {
  if (alpha <= 0) throw PreconditionViolated("alpha must be positive");
  BalanceReport rep;
  rep.alpha = alpha;
  InternalView iv = internal_view(t);
  if (iv.internal.empty()) return rep;
  const int e = t.num_edges();
  const Rational denom = alpha * t.internal_A() + t.internal_B();
  // Compare e(S) (alpha a + b) >= (alpha |S cap A| + |S cap B|) e(T) after clearing the denominator of alpha.
  const BigInt num = numerator(alpha), den = denominator(alpha);
  const bool small = num < BigInt(1) << 31 && den < BigInt(1) << 31;
  const std::int64_t n64 = small ? static_cast<std::int64_t>(num) : 0;
  const std::int64_t d64 = small ? static_cast<std::int64_t>(den) : 0;
  const std::uint32_t full = (std::uint32_t{1} << iv.internal.size()) - 1;
  int best_size = 64;
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int es = edges_touching(iv, s);
    int sa = std::popcount(s & iv.a_mask), sb = std::popcount(s & ~iv.a_mask);
    bool ok;
    if (small) {
      std::int64_t lhs = es * (n64 * t.internal_A() + d64 * t.internal_B());
      std::int64_t rhs = (n64 * sa + d64 * sb) * e;
      ok = lhs >= rhs;
    } else {
      ok = Rational(es) * denom >= (alpha * sa + sb) * e;
    }
    if (!ok) {
      int size = std::popcount(s);
      if (size < best_size) {
        best_size = size;
        best = s;
      }
    }
    if (s == full) break;
  }
  if (best_size < 64) {
    rep.balanced = false;
    rep.failing = mask_members(best, iv.internal);
    rep.failing_edges = edges_touching(iv, best);
    rep.failing_bound = (alpha * std::popcount(best & iv.a_mask) + std::popcount(best & ~iv.a_mask)) * e / denom;
  }
  return rep;
}

IntervalConditionReport check_interval_conditions(const OrientedTree& t) {
  IntervalConditionReport rep;
  InternalView iv = internal_view(t);
  const std::int64_t a = t.internal_A(), b = t.internal_B(), r1 = t.num_roots() - 1;
  const std::uint32_t full = iv.internal.empty() ? 0 : (std::uint32_t{1} << iv.internal.size()) - 1;
  for (std::uint32_t s = 1; s <= full && full; ++s) {
    std::int64_t es = edges_touching(iv, s), sz = std::popcount(s);
    std::int64_t sa = std::popcount(s & iv.a_mask), sb = sz - sa;
    if (a > 0 && rep.holds_A && es * a < sz * a + r1 * sa) {
      rep.holds_A = false;
      rep.failing_A = mask_members(s, iv.internal);
    }
    if (b > 0 && rep.holds_B && es * b < sz * b + r1 * sb) {
      rep.holds_B = false;
      rep.failing_B = mask_members(s, iv.internal);
    }
    if (s == full) break;
  }
  return rep;
}

RationalInterval RationalInterval::intersect(const RationalInterval& o) const {
  return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

std::string RationalInterval::describe() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }

RationalInterval maximal_interval(const OrientedTree& t) {
  int a = t.internal_A(), b = t.internal_B(), r = t.num_roots();
  if (r < 2) throw DegenerateTree("fewer than two roots");
  if (a == 0) throw DegenerateTree("A has no internal vertex; the upper endpoint is undefined");
  if (b == 0) throw DegenerateTree("B has no internal vertex; the lower endpoint is undefined");
  return {Rational(b) / (b + r - 1), Rational(a + r - 1) / a};
}

RationalInterval balanced_interval_verified(const OrientedTree& t) {
  RationalInterval iv = maximal_interval(t);
  for (const Rational& x : {iv.lo, iv.hi}) {
    BalanceReport rep = check_alpha_balanced(t, x);
    if (!rep.balanced) {
      std::string set;
      for (int v : rep.failing) set += (set.empty() ? "" : ",") + std::to_string(v + 1);
      throw VerificationFailed("not balanced at alpha = " + to_string(x) + " for S = {" + set + "}", rep.failing);
    }
  }
  return iv;
}

Rational rho_of(const OrientedTree& t, const Rational& alpha) {
  return (alpha * t.internal_A() + t.internal_B()) / t.num_edges();
}

RhoEll compute_rho_ell(const std::vector<OrientedTree>& family, const Rational& alpha) {
  if (family.empty()) throw PreconditionViolated("family must be nonempty");
  if (alpha <= 0) throw PreconditionViolated("alpha must be positive");
  std::int64_t a = to_int64_checked(numerator(alpha), "alpha numerator");
  std::int64_t b = to_int64_checked(denominator(alpha), "alpha denominator");
  RhoEll out;
  out.rho = rho_of(family[0], alpha);
  out.ell = 1;
  for (const auto& t : family) {
    out.rho = std::max(out.rho, rho_of(t, alpha));
    std::int64_t e = t.num_edges();
    // e | ell and b e | a ell; with gcd(a, b) = 1 the second is b e / gcd(a, e) | ell.
    std::int64_t need = std::lcm(e, b * (e / std::gcd(a, e)));
    out.ell = std::lcm(out.ell, need);
  }
  return out;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::vector<std::vector<int>> PrimePolynomial::monomials(int vars, int degree) {
  if (vars < 0 || degree < 0) throw PreconditionViolated("negative variable count or degree");
  // Count C(vars + degree, degree) before building.
  long double count = 1;
  for (int i = 1; i <= degree; ++i) count = count * (vars + i) / i;
  if (count > kMaxMonomials) throw TooLarge("too many monomials");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(vars, 0);
  for (int total = 0; total <= degree; ++total) {
    // Exponent vectors with the given total, lexicographically descending.
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == vars - 1 || vars == 0) {
        if (vars == 0) {
          if (left == 0) out.push_back(cur);
          return;
        }
        cur[i] = left;
        out.push_back(cur);
        cur[i] = 0;
        return;
      }
      for (int x = left; x >= 0; --x) {
        cur[i] = x;
        self(self, i + 1, left - x);
      }
      cur[i] = 0;
    };
    rec(rec, 0, total);
  }
  return out;
}

PrimePolynomial::PrimePolynomial(int q, int vars, int degree, std::vector<int> coefficients)
    : q_(q), vars_(vars), degree_(degree), coeffs_(std::move(coefficients)), mono_(monomials(vars, degree)) {
  if (!is_prime(q)) throw NotPrime("field size " + std::to_string(q) + " is not prime");
  if (coeffs_.size() != mono_.size()) throw PreconditionViolated("coefficient count does not match the monomials");
  for (int c : coeffs_)
    if (c < 0 || c >= q) throw PreconditionViolated("coefficient outside [0, q)");
}

PrimePolynomial PrimePolynomial::random(int q, int vars, int degree, std::mt19937_64& rng) {
  std::size_t count = monomials(vars, degree).size();
  std::uniform_int_distribution<int> coef(0, q - 1);
  std::vector<int> c(count);
  for (auto& x : c) x = coef(rng);
  return PrimePolynomial(q, vars, degree, std::move(c));
}

PrimePolynomial PrimePolynomial::constant(int q, int vars, int value) {
  std::vector<int> c(1, ((value % q) + q) % q);
  return PrimePolynomial(q, vars, 0, std::move(c));
}

int PrimePolynomial::evaluate(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != vars_) throw PreconditionViolated("point has the wrong dimension");
  std::vector<std::int64_t> pw(static_cast<std::size_t>(vars_) * (degree_ + 1));
  for (int v = 0; v < vars_; ++v) {
    std::int64_t x = ((point[v] % q_) + q_) % q_, acc = 1;
    for (int e = 0; e <= degree_; ++e) {
      pw[v * (degree_ + 1) + e] = acc;
      acc = acc * x % q_;
    }
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < mono_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::int64_t term = coeffs_[i];
    for (int v = 0; v < vars_; ++v)
      if (mono_[i][v]) term = term * pw[v * (degree_ + 1) + mono_[i][v]] % q_;
    sum += term;
  }
  return static_cast<int>(sum % q_);
}

ConstructionSpec ConstructionSpec::from_family(const std::vector<OrientedTree>& family, const Rational& alpha,
                                               std::int64_t q, std::uint64_t seed, int degree_cap) {
  RhoEll re = compute_rho_ell(family, alpha);
  ConstructionSpec spec;
  spec.family = family;
  spec.alpha = alpha;
  spec.ell = re.ell;
  spec.q = q;
  spec.rho = re.rho;
  spec.seed = seed;
  Rational rl = re.rho * re.ell;
  spec.polynomials = to_int64_checked(numerator(rl), "rho ell");
  int maxv = 0;
  for (const auto& t : family) maxv = std::max(maxv, t.num_vertices());
  // The proof's k = 2 ell (1 + alpha) max v(T) and d = k max v(T).
  BigInt k = ceil_of(Rational(2 * re.ell) * (1 + alpha) * maxv);
  BigInt d = k * maxv;
  spec.degree = d > BigInt(degree_cap) ? degree_cap : static_cast<int>(d);
  spec.validate();
  return spec;
}

std::int64_t ConstructionSpec::m_len() const {
  Rational x = alpha * ell;
  if (!is_integer(x)) throw PreconditionViolated("alpha ell must be an integer");
  return to_int64_checked(numerator(x), "alpha ell");
}

std::int64_t ConstructionSpec::m_size() const { return checked_power(q, m_len()); }
std::int64_t ConstructionSpec::n_size() const { return checked_power(q, n_len()); }

void ConstructionSpec::validate() const {
  if (q > std::numeric_limits<int>::max() || !is_prime(q)) throw NotPrime("field size " + std::to_string(q) + " is not prime");
  if (alpha <= 0) throw PreconditionViolated("alpha must be positive");
  if (ell < 1) throw PreconditionViolated("ell must be positive");
  for (const auto& t : family) {
    Rational a = Rational(ell) / t.num_edges(), b = alpha * ell / t.num_edges();
    if (!is_integer(a) || !is_integer(b))
      throw PreconditionViolated("ell / e(T) and alpha ell / e(T) must be integers for " + t.describe());
  }
  if (!is_integer(rho * ell)) throw PreconditionViolated("rho ell must be an integer");
  if (polynomials < 0) throw PreconditionViolated("polynomial count must be nonnegative");
  if (degree < 0) throw PreconditionViolated("degree must be nonnegative");
  if (prune_constant < 1) throw PreconditionViolated("pruning constant must be at least 1");
  std::int64_t m = m_size(), n = n_size();
  if (m > kMaxConstructionPairs / n) throw TooLarge("construction grid exceeds the size guard");
  PrimePolynomial::monomials(static_cast<int>(m_len() + n_len()), degree);
}

BipartiteGraph construction_graph(std::int64_t q, std::int64_t m_len, std::int64_t n_len,
                                  const std::vector<PrimePolynomial>& polys, int threads) {
  if (!is_prime(q)) throw NotPrime("field size " + std::to_string(q) + " is not prime");
  if (threads < 1) throw PreconditionViolated("threads must be at least 1");
  std::int64_t m = checked_power(q, m_len), n = checked_power(q, n_len);
  if (m > kMaxConstructionPairs / n) throw TooLarge("construction grid exceeds the size guard");
  int vars = static_cast<int>(m_len + n_len);
  for (const auto& f : polys)
    if (f.q() != q || f.vars() != vars) throw PreconditionViolated("polynomial does not match the construction");
  std::vector<std::vector<Edge>> rows(m);
  auto work = [&](std::int64_t from, std::int64_t step) {
    std::vector<int> point(vars);
    for (std::int64_t a = from; a < m; a += step) {
      std::int64_t x = a;
      for (std::int64_t i = 0; i < m_len; ++i, x /= q) point[i] = static_cast<int>(x % q);
      for (std::int64_t b = 0; b < n; ++b) {
        std::int64_t y = b;
        for (std::int64_t i = 0; i < n_len; ++i, y /= q) point[m_len + i] = static_cast<int>(y % q);
        bool all = true;
        for (const auto& f : polys)
          if (f.evaluate(point) != 0) {
            all = false;
            break;
          }
        if (all) rows[a].emplace_back(static_cast<int>(a), static_cast<int>(m + b));
      }
    }
  };
  int t = static_cast<int>(std::min<std::int64_t>(threads, m));
  if (t <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(work, i, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Edge> edges;
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return BipartiteGraph(static_cast<int>(m), static_cast<int>(n), edges);
}

std::vector<PrimePolynomial> sample_polynomials(const ConstructionSpec& spec) {
  spec.validate();
  int vars = static_cast<int>(spec.m_len() + spec.n_len());
  std::vector<PrimePolynomial> out;
  for (std::int64_t i = 0; i < spec.polynomials; ++i) {
    std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(i)));
    out.push_back(PrimePolynomial::random(static_cast<int>(spec.q), vars, spec.degree, rng));
  }
  return out;
}

BipartiteGraph sample_construction(const ConstructionSpec& spec, int threads) {
  return construction_graph(spec.q, spec.m_len(), spec.n_len(), sample_polynomials(spec), threads);
}

std::map<std::vector<int>, std::size_t> root_copy_counts(const BipartiteGraph& g, const OrientedTree& t) {
  EmbeddingFamily fam = enumerate_copies(g, t.tree(), true);
  std::map<std::vector<int>, std::size_t> out;
  for (const auto& [lv, idx] : fam.leaf_classes()) out[lv] = idx.size();
  return out;
}

PruneResult prune_bad_roots(const BipartiteGraph& g, const std::vector<OrientedTree>& family, std::int64_t C) {
  if (C < 1) throw PreconditionViolated("pruning constant must be at least 1");
  PruneResult res;
  res.graph = g;
  while (true) {
    bool cleared = false;
    for (std::size_t i = 0; i < family.size() && !cleared; ++i) {
      for (const auto& [z, count] : root_copy_counts(res.graph, family[i])) {
        if (static_cast<std::int64_t>(count) < C) continue;
        int v = *std::min_element(z.begin(), z.end());
        std::vector<Edge> keep;
        for (auto [a, b] : res.graph.edges())
          if (a != v && b != v) keep.emplace_back(a, b);
        res.removed_edges += res.graph.num_edges() - static_cast<std::int64_t>(keep.size());
        res.graph = BipartiteGraph(g.m(), g.n(), keep);
        res.steps.push_back({static_cast<int>(i), z, count, v});
        cleared = true;
        break;
      }
    }
    if (!cleared) break;
  }
  return res;
}

PruneResult prune_bad_roots(const BipartiteGraph& g, const OrientedTree& t, std::int64_t C) {
  return prune_bad_roots(g, std::vector<OrientedTree>{t}, C);
}

MinUnionReport min_union_edges(const OrientedTree& t, int p, const Rational& alpha) {
  if (p < 1) throw PreconditionViolated("p must be at least 1");
  if (alpha <= 0) throw PreconditionViolated("alpha must be positive");
  if (p > kMaxUnionCopies || t.num_vertices() > kMaxUnionTreeVertices)
    throw TooLarge("union enumeration limited to p <= 3 and v(T) <= 8");
  const LabeledTree& tr = t.tree();
  int v = tr.num_vertices(), r = t.num_roots();
  MinUnionReport rep;
  rep.tree_balanced = check_alpha_balanced(t, alpha).balanced;
  std::vector<int> internal;
  for (int x = 0; x < v; ++x)
    if (!tr.is_leaf(x)) internal.push_back(x);
  // Vertices of the union: roots first, then non-root vertices in order of creation.
  std::vector<char> hA;
  for (int leaf : t.roots()) hA.push_back(t.in_A(leaf));
  std::vector<std::vector<int>> copies;
  std::vector<int> first(v);
  for (int j = 0; j < r; ++j) first[t.roots()[j]] = j;
  for (std::size_t i = 0; i < internal.size(); ++i) {
    first[internal[i]] = r + static_cast<int>(i);
    hA.push_back(t.in_A(internal[i]));
  }
  copies.push_back(first);
  const Rational tree_weight = alpha * t.internal_A() + t.internal_B();
  rep.min_edges = std::numeric_limits<std::int64_t>::max();
  std::uint64_t nodes = 0;
  constexpr std::uint64_t kBudget = 50'000'000;

  auto evaluate = [&]() {
    std::set<std::pair<int, int>> es;
    for (const auto& c : copies)
      for (auto [a, b] : tr.edges()) es.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
    std::int64_t e = static_cast<std::int64_t>(es.size());
    int aH = 0, bH = 0;
    for (std::size_t x = r; x < hA.size(); ++x) (hA[x] ? aH : bH)++;
    ++rep.unions;
    if (Rational(e) * tree_weight < (alpha * aH + bH) * t.num_edges()) rep.bound_holds = false;
    if (e < rep.min_edges) {
      rep.min_edges = e;
      rep.attaining.assign(es.begin(), es.end());
      rep.attaining_in_A = hA;
    }
  };

  std::vector<int> cur(v);
  std::vector<char> taken;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (++nodes > kBudget) throw TooLarge("union enumeration exceeded its budget");
    if (idx == internal.size()) {
      if (std::find(copies.begin(), copies.end(), cur) != copies.end()) return;
      copies.push_back(cur);
      if (static_cast<int>(copies.size()) == p) {
        evaluate();
      } else {
        // The next copy may reuse any vertex of the union so far.
        std::vector<char> saved(hA.size(), 0);
        std::vector<int> outer = cur;
        std::swap(saved, taken);
        self(self, 0);
        std::swap(saved, taken);
        cur = std::move(outer);
      }
      copies.pop_back();
      return;
    }
    int x = internal[idx];
    bool side = t.in_A(x);
    // Reuse an existing non-root vertex of the same side, or open a new one.
    for (std::size_t w = r; w < hA.size(); ++w) {
      if (hA[w] != side || taken[w]) continue;
      taken[w] = 1;
      cur[x] = static_cast<int>(w);
      self(self, idx + 1);
      taken[w] = 0;
    }
    int fresh = static_cast<int>(hA.size());
    hA.push_back(side);
    taken.push_back(1);
    cur[x] = fresh;
    self(self, idx + 1);
    taken.pop_back();
    hA.pop_back();
  };
  if (p == 1) {
    evaluate();
  } else {
    for (int j = 0; j < r; ++j) cur[t.roots()[j]] = j;
    taken.assign(hA.size(), 0);
    rec(rec, 0);
  }
  return rep;
}

const char* lower_bound_kind_name(LowerBoundKind kind) {
  switch (kind) {
    case LowerBoundKind::ThetaOdd: return "theta-odd";
    case LowerBoundKind::ThetaEven: return "theta-even";
    case LowerBoundKind::SubdivisionOdd: return "subdivision-odd";
    case LowerBoundKind::SubdivisionEven: return "subdivision-even";
  }
  return "unknown";
}

LowerBoundKind parse_lower_bound_kind(const std::string& name) {
  if (name == "theta-odd") return LowerBoundKind::ThetaOdd;
  if (name == "theta-even") return LowerBoundKind::ThetaEven;
  if (name == "subdivision-odd") return LowerBoundKind::SubdivisionOdd;
  if (name == "subdivision-even") return LowerBoundKind::SubdivisionEven;
  throw ParseError("unknown construction '" + name + "'");
}

RationalInterval lower_bound_alpha_range(LowerBoundKind kind, int k, int s) {
  switch (kind) {
    case LowerBoundKind::ThetaOdd:
      if (k < 2) throw PreconditionViolated("k must be at least 2");
      return {Rational(k - 1) / k, 1};
    case LowerBoundKind::ThetaEven:
      if (k < 1) throw PreconditionViolated("k must be at least 1");
      return {Rational(k) / (k + 1), 1};
    case LowerBoundKind::SubdivisionOdd:
      if (k < 2 || s < 2) throw PreconditionViolated("k and s must be at least 2");
      return {Rational(k * s + 1) / (k * s + s), 1};
    case LowerBoundKind::SubdivisionEven:
      if (k < 1 || s < 2) throw PreconditionViolated("k must be at least 1 and s at least 2");
      return {Rational(k * s) / (k * s + s - 1), 1};
  }
  throw PreconditionViolated("unknown construction");
}

std::vector<OrientedTree> lower_bound_family(LowerBoundKind kind, int k, int s) {
  lower_bound_alpha_range(kind, k, s);
  LabeledTree t;
  switch (kind) {
    case LowerBoundKind::ThetaOdd: t = LabeledTree::path(2 * k - 1); break;
    case LowerBoundKind::ThetaEven: t = LabeledTree::path(2 * k); break;
    case LowerBoundKind::SubdivisionOdd: t = LabeledTree::spider(std::vector<int>(s, 2 * k + 1)); break;
    case LowerBoundKind::SubdivisionEven: t = LabeledTree::spider(std::vector<int>(s, 2 * k)); break;
  }
  OrientedTree o = OrientedTree::leaves_first(t);
  return {o, o.reversed()};
}

PatternSpec lower_bound_pattern(LowerBoundKind kind, int k, int s, int C) {
  switch (kind) {
    case LowerBoundKind::ThetaOdd: return PatternSpec::theta(C, 2 * k - 1);
    case LowerBoundKind::ThetaEven: return PatternSpec::theta(C, 2 * k);
    case LowerBoundKind::SubdivisionOdd: return PatternSpec::kst_subdivision(s, C, 2 * k + 1);
    case LowerBoundKind::SubdivisionEven: return PatternSpec::kst_subdivision(s, C, 2 * k);
  }
  throw PreconditionViolated("unknown construction");
}

LowerBoundReport lower_bound_report(const LowerBoundOptions& opt) {
  RationalInterval range = lower_bound_alpha_range(opt.kind, opt.k, opt.s);
  if (!range.contains(opt.alpha))
    throw PreconditionViolated("alpha " + to_string(opt.alpha) + " outside " + range.describe());
  if (opt.trials < 1) throw PreconditionViolated("trials must be at least 1");
  LowerBoundReport rep;
  std::vector<OrientedTree> family = lower_bound_family(opt.kind, opt.k, opt.s);
  rep.spec = ConstructionSpec::from_family(family, opt.alpha, opt.q, opt.seed, opt.degree_cap);
  rep.spec.prune_constant = opt.prune_constant;
  rep.spec.validate();
  rep.pattern = lower_bound_pattern(opt.kind, opt.k, opt.s, static_cast<int>(opt.prune_constant));
  Rational expo = rep.spec.ell * (1 + opt.alpha - rep.spec.rho);
  rep.expected_edges = std::pow(static_cast<long double>(opt.q), to_long_double(expo));
  rep.target_edges = rep.expected_edges / 2;
  long double sum = 0, sumsq = 0, sum_pruned = 0;
  for (int i = 0; i < opt.trials; ++i) {
    ConstructionSpec s = rep.spec;
    s.seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    BipartiteGraph g = sample_construction(s, opt.threads);
    PruneResult pr = prune_bad_roots(g, family, opt.prune_constant);
    LowerBoundTrial tr;
    tr.seed = s.seed;
    tr.sampled_edges = g.num_edges();
    tr.pruned_edges = pr.graph.num_edges();
    tr.deleted_vertices = pr.steps.size();
    if (opt.certify && pr.graph.num_vertices() <= opt.certify_max_vertices) {
      FindOptions fo;
      fo.ceiling = opt.finder_ceiling;
      fo.threads = opt.threads;
      tr.freeness = find_pattern(pr.graph, rep.pattern, fo).status;
      if (*tr.freeness != FindStatus::NotFound) rep.all_certified_free = false;
    }
    sum += tr.sampled_edges;
    sumsq += static_cast<long double>(tr.sampled_edges) * tr.sampled_edges;
    sum_pruned += tr.pruned_edges;
    rep.trials.push_back(tr);
  }
  long double n = opt.trials;
  rep.mean_sampled = sum / n;
  rep.mean_pruned = sum_pruned / n;
  rep.sd_sampled = opt.trials > 1 ? std::sqrt(std::max<long double>(0, (sumsq - sum * sum / n) / (n - 1))) : 0;
  return rep;
}

nlohmann::json oriented_tree_to_json(const OrientedTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : t.tree().edges()) edges.push_back({u, v});
  std::vector<int> a;
  for (int v = 0; v < t.num_vertices(); ++v)
    if (t.in_A(v)) a.push_back(v);
  return nlohmann::json{{"vertices", t.num_vertices()}, {"edges", edges}, {"A", a}};
}

OrientedTree oriented_tree_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    LabeledTree t(n, edges);
    std::set<int> a;
    for (const auto& x : j.at("A")) a.insert(x.get<int>());
    OrientedTree o(t, a.count(0) > 0);
    for (int v = 0; v < n; ++v)
      if (o.in_A(v) != (a.count(v) > 0)) throw ParseError("A is not a side of the tree bipartition");
    return o;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad oriented tree: ") + e.what());
  } catch (const PreconditionViolated& e) {
    throw ParseError(std::string("bad oriented tree: ") + e.what());
  }
}

nlohmann::json construction_spec_to_json(const ConstructionSpec& spec) {
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& t : spec.family) fam.push_back(oriented_tree_to_json(t));
  return nlohmann::json{{"family", fam},
                        {"alpha", to_string(spec.alpha)},
                        {"ell", spec.ell},
                        {"q", spec.q},
                        {"rho", to_string(spec.rho)},
                        {"degree", spec.degree},
                        {"polynomials", spec.polynomials},
                        {"prune_constant", spec.prune_constant},
                        {"seed", spec.seed}};
}

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  const auto& x = j.at(key);
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
  throw ParseError(std::string(key) + " must be an integer or a \"p/q\" string");
}

}  // namespace

ConstructionSpec construction_spec_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("construction")) {
      LowerBoundKind kind = parse_lower_bound_kind(j.at("construction").get<std::string>());
      int k = j.value("k", 1), s = j.value("s", 2);
      Rational alpha = rational_field(j, "alpha");
      RationalInterval range = lower_bound_alpha_range(kind, k, s);
      if (!range.contains(alpha)) throw PreconditionViolated("alpha outside " + range.describe());
      ConstructionSpec spec = ConstructionSpec::from_family(lower_bound_family(kind, k, s), alpha,
                                                            j.at("q").get<std::int64_t>(), j.value("seed", std::uint64_t{0}),
                                                            j.value("degree_cap", kDefaultDegreeCap));
      spec.prune_constant = j.value("prune_constant", std::int64_t{kDefaultPruneConstant});
      spec.validate();
      return spec;
    }
    std::vector<OrientedTree> family;
    for (const auto& t : j.at("family")) family.push_back(oriented_tree_from_json(t));
    Rational alpha = rational_field(j, "alpha");
    ConstructionSpec spec = ConstructionSpec::from_family(family, alpha, j.at("q").get<std::int64_t>(),
                                                          j.value("seed", std::uint64_t{0}),
                                                          j.value("degree_cap", kDefaultDegreeCap));
    if (j.contains("ell")) spec.ell = j.at("ell").get<std::int64_t>();
    if (j.contains("rho")) spec.rho = rational_field(j, "rho");
    if (j.contains("degree")) spec.degree = j.at("degree").get<int>();
    if (j.contains("polynomials")) spec.polynomials = j.at("polynomials").get<std::int64_t>();
    spec.prune_constant = j.value("prune_constant", std::int64_t{kDefaultPruneConstant});
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad construction spec: ") + e.what());
  }
}

nlohmann::json lower_bound_report_to_json(const LowerBoundReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    nlohmann::json jt{{"seed", t.seed},
                      {"sampled_edges", t.sampled_edges},
                      {"pruned_edges", t.pruned_edges},
                      {"deleted_vertices", t.deleted_vertices}};
    jt["freeness"] = t.freeness ? nlohmann::json(find_status_name(*t.freeness)) : nlohmann::json(nullptr);
    trials.push_back(jt);
  }
  return nlohmann::json{{"spec", construction_spec_to_json(r.spec)},
                        {"pattern", pattern_to_json(r.pattern)},
                        {"expected_edges", static_cast<double>(r.expected_edges)},
                        {"target_edges", static_cast<double>(r.target_edges)},
                        {"mean_sampled", static_cast<double>(r.mean_sampled)},
                        {"sd_sampled", static_cast<double>(r.sd_sampled)},
                        {"mean_pruned", static_cast<double>(r.mean_pruned)},
                        {"all_certified_free", r.all_certified_free},
                        {"trials", trials}};
}

}  // namespace extremal
