#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/finders.hpp"
#include "extremal/graph.hpp"
#include "extremal/rational.hpp"
#include "extremal/tree.hpp"

namespace extremal {

// A tree with an ordered bipartition (A, B); the roots are the leaves.
class OrientedTree {
 public:
  OrientedTree() = default;
  // A is the side holding label 1 when a_holds_first is true, the other side otherwise.
  explicit OrientedTree(const LabeledTree& t, bool a_holds_first = true);
  // A is the side holding the first leaf.
  static OrientedTree leaves_first(const LabeledTree& t);

  // The stored tree has A as its side 0.
  const LabeledTree& tree() const { return tree_; }
  bool in_A(int v) const { return tree_.side(v) == 0; }
  const std::vector<int>& roots() const { return tree_.leaves(); }
  int internal_A() const { return internal_a_; }  // |A \ R|
  int internal_B() const { return internal_b_; }  // |B \ R|
  int num_roots() const { return static_cast<int>(roots().size()); }
  int num_edges() const { return tree_.num_edges(); }
  int num_vertices() const { return tree_.num_vertices(); }
  // (T, B, A)
  OrientedTree reversed() const;
  std::string describe() const;

 private:
  LabeledTree tree_;
  int internal_a_ = 0;
  int internal_b_ = 0;
};

struct BalanceReport {
  Rational alpha;
  bool balanced = true;
  // Failing internal set (smallest size, then smallest index mask) when unbalanced.
  std::vector<int> failing;
  std::int64_t failing_edges = 0;  // e(S)
  Rational failing_bound;          // the right-hand side for S
};

inline constexpr int kMaxBalanceInternal = 22;

// Exact subset enumeration over V(T) minus the roots. Throws TooLarge past kMaxBalanceInternal.
BalanceReport check_alpha_balanced(const OrientedTree& t, const Rational& alpha);

// The interval-free form: e(S) >= |S| + (|R|-1)|S cap A|/|A\R| and the same with B.
struct IntervalConditionReport {
  bool holds_A = true;
  bool holds_B = true;
  std::vector<int> failing_A;
  std::vector<int> failing_B;
};
IntervalConditionReport check_interval_conditions(const OrientedTree& t);

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool empty() const { return lo > hi; }
  RationalInterval intersect(const RationalInterval& o) const;
  std::string describe() const;
};

// [|B\R| / (|B\R|+|R|-1), (|A\R|+|R|-1) / |A\R|]. Throws DegenerateTree when either
// internal side is empty or there are fewer than two roots. Balance can hold past either
// endpoint: the name is the conventional one, not a claim that the range is exhaustive.
RationalInterval maximal_interval(const OrientedTree& t);

// The maximal interval, checked by enumeration at both endpoints. Throws VerificationFailed.
RationalInterval balanced_interval_verified(const OrientedTree& t);

// (alpha |A\R| + |B\R|) / e(T)
Rational rho_of(const OrientedTree& t, const Rational& alpha);

struct RhoEll {
  Rational rho;
  std::int64_t ell = 0;
};

// rho is the family maximum; ell the least positive integer with ell/e(T) and alpha ell/e(T)
// integral for every member.
RhoEll compute_rho_ell(const std::vector<OrientedTree>& family, const Rational& alpha);

bool is_prime(std::int64_t q);

// A polynomial over F_q with one coefficient per monomial of total degree <= d.
class PrimePolynomial {
 public:
  PrimePolynomial(int q, int vars, int degree, std::vector<int> coefficients);
  static PrimePolynomial random(int q, int vars, int degree, std::mt19937_64& rng);
  static PrimePolynomial constant(int q, int vars, int value);

  int q() const { return q_; }
  int vars() const { return vars_; }
  int degree() const { return degree_; }
  const std::vector<int>& coefficients() const { return coeffs_; }
  // Monomial exponent vectors, in the coefficient order.
  static std::vector<std::vector<int>> monomials(int vars, int degree);
  int evaluate(std::span<const int> point) const;

 private:
  int q_;
  int vars_;
  int degree_;
  std::vector<int> coeffs_;
  std::vector<std::vector<int>> mono_;
};

inline constexpr std::int64_t kMaxMonomials = 1'000'000;
inline constexpr std::int64_t kMaxConstructionPairs = std::int64_t{1} << 24;
inline constexpr int kDefaultDegreeCap = 4;
inline constexpr int kDefaultPruneConstant = 3;

struct ConstructionSpec {
  std::vector<OrientedTree> family;
  Rational alpha;
  std::int64_t ell = 0;
  std::int64_t q = 0;
  Rational rho;
  int degree = 0;
  std::int64_t polynomials = 0;  // normally rho * ell
  std::int64_t prune_constant = kDefaultPruneConstant;
  std::uint64_t seed = 0;

  // rho and ell from the family; degree is the proof's value capped at degree_cap.
  static ConstructionSpec from_family(const std::vector<OrientedTree>& family, const Rational& alpha, std::int64_t q,
                                      std::uint64_t seed, int degree_cap = kDefaultDegreeCap);

  // Throws NotPrime, PreconditionViolated or TooLarge.
  void validate() const;
  std::int64_t m_len() const;  // alpha ell
  std::int64_t n_len() const { return ell; }
  std::int64_t m_size() const;  // q^(alpha ell)
  std::int64_t n_size() const;  // q^ell
};

// Vertex a of M is the alpha-ell tuple of base-q digits of a (least significant first);
// vertex m + b of N likewise with ell digits. An edge joins (a, b) when every polynomial
// vanishes at (a, b).
BipartiteGraph construction_graph(std::int64_t q, std::int64_t m_len, std::int64_t n_len,
                                  const std::vector<PrimePolynomial>& polys, int threads = 1);

// Polynomial i draws its coefficients from derive_seed(seed, i).
std::vector<PrimePolynomial> sample_polynomials(const ConstructionSpec& spec);
BipartiteGraph sample_construction(const ConstructionSpec& spec, int threads = 1);

// Number of copies of t (A into M, B into N) for every root vector with at least one copy.
std::map<std::vector<int>, std::size_t> root_copy_counts(const BipartiteGraph& g, const OrientedTree& t);

struct PruneStep {
  int tree = 0;
  std::vector<int> roots;
  std::size_t copies = 0;
  int deleted_vertex = -1;
};

struct PruneResult {
  BipartiteGraph graph;
  std::vector<PruneStep> steps;
  std::int64_t removed_edges = 0;
};

// Repeatedly clears every edge at the lowest-index vertex of a root vector holding at
// least C copies, until none remains.
PruneResult prune_bad_roots(const BipartiteGraph& g, const std::vector<OrientedTree>& family, std::int64_t C);
PruneResult prune_bad_roots(const BipartiteGraph& g, const OrientedTree& t, std::int64_t C);

struct MinUnionReport {
  std::int64_t min_edges = 0;
  std::vector<Edge> attaining;  // roots are vertices 0..|R|-1
  std::vector<char> attaining_in_A;
  std::uint64_t unions = 0;     // enumerated members, non-root vertices renamed canonically
  bool tree_balanced = false;   // hypothesis of the union bound at alpha
  bool bound_holds = true;      // the union bound held for every member
};

inline constexpr int kMaxUnionCopies = 3;
inline constexpr int kMaxUnionTreeVertices = 8;

// Unions of p distinct copies of t sharing the root vector. Throws TooLarge past the limits.
MinUnionReport min_union_edges(const OrientedTree& t, int p, const Rational& alpha);

// Oriented-tree families behind the four lower-bound constructions.
enum class LowerBoundKind { ThetaOdd, ThetaEven, SubdivisionOdd, SubdivisionEven };

const char* lower_bound_kind_name(LowerBoundKind kind);
LowerBoundKind parse_lower_bound_kind(const std::string& name);  // throws ParseError

// ThetaOdd: both orientations of the path on 2k vertices (forbids theta with paths of length 2k-1).
// ThetaEven: both orientations of the path on 2k+1 vertices.
// SubdivisionOdd / SubdivisionEven: both orientations of the s-legged spider with legs 2k+1 / 2k.
std::vector<OrientedTree> lower_bound_family(LowerBoundKind kind, int k, int s);
// The admissible alpha range. Throws PreconditionViolated for k or s out of range.
RationalInterval lower_bound_alpha_range(LowerBoundKind kind, int k, int s);
// The pattern excluded once every root vector holds fewer than C copies.
PatternSpec lower_bound_pattern(LowerBoundKind kind, int k, int s, int C);

struct LowerBoundOptions {
  LowerBoundKind kind = LowerBoundKind::ThetaEven;
  int k = 1;
  int s = 2;
  Rational alpha = 1;
  std::int64_t q = 5;
  std::uint64_t seed = 0;
  int trials = 1;
  std::int64_t prune_constant = kDefaultPruneConstant;
  int degree_cap = kDefaultDegreeCap;
  int threads = 1;
  bool certify = true;
  int certify_max_vertices = 200;
  std::uint64_t finder_ceiling = 10'000'000;
};

struct LowerBoundTrial {
  std::uint64_t seed = 0;
  std::int64_t sampled_edges = 0;
  std::int64_t pruned_edges = 0;
  std::size_t deleted_vertices = 0;
  std::optional<FindStatus> freeness;  // set when certification ran
};

struct LowerBoundReport {
  ConstructionSpec spec;
  PatternSpec pattern;
  long double expected_edges = 0;  // q^(ell(1+alpha-rho))
  long double target_edges = 0;    // half of it
  long double mean_sampled = 0;
  long double sd_sampled = 0;
  long double mean_pruned = 0;
  std::vector<LowerBoundTrial> trials;
  bool all_certified_free = true;  // every certification returned NotFound
};

LowerBoundReport lower_bound_report(const LowerBoundOptions& opt);

nlohmann::json oriented_tree_to_json(const OrientedTree& t);
OrientedTree oriented_tree_from_json(const nlohmann::json& j);
nlohmann::json construction_spec_to_json(const ConstructionSpec& spec);
// Accepts an explicit spec, or {"construction": kind, "k", "s", "alpha", "q", "seed"}.
ConstructionSpec construction_spec_from_json(const nlohmann::json& j);
nlohmann::json lower_bound_report_to_json(const LowerBoundReport& r);

}  // namespace extremal
