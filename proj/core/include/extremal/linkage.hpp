#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "extremal/family.hpp"
#include "extremal/graph.hpp"
#include "extremal/tree.hpp"

namespace extremal {

// Explicit constant formulas of the counting arguments, in long double.
struct ProofConstants {
  // (a+b)(2 mu)^(a+b) eta^(t^2+1) / eps^2, t = a+b-1 edges.
  static long double robust_min_degree(long double eps, long double mu, long double eta, int a, int b);
  // (2^(alpha+beta-1) - 1) / 2
  static long double thin_thick_eps(long double alpha, long double beta);
  // 4 k^2 r s t
  static long double subdivision_eta(int k, int r, int s, int t);
  // 1 / (4 (8 mu)^(2 k s))
  static long double subdivision_eps(long double mu, int k, int s);
  // p^4 k^2 r^2
  static long double light_h(int p, int k, int r);
  // p^2 k r
  static long double light_q(int p, int k, int r);
  // (1/4) (1 / (64 h q mu))^floor(k/2)
  static long double light_gamma(long double h, long double q, long double mu, int k);
};

inline constexpr std::uint64_t kPathCountBudget = 100'000'000;

// Number of paths of length len from x to y in g, stopping once `cap` is reached.
// Throws TooLarge when the search exceeds the node budget.
std::uint64_t count_paths_between(const Graph& g, int x, int y, int len, std::uint64_t cap,
                                  std::uint64_t budget = kPathCountBudget);

// True when the path between x and y of length len is eta-heavy among all copies in g.
bool path_pair_heavy(const Graph& g, int x, int y, int len, std::int64_t eta);

struct SubpathResult {
  int start = 0;   // offset of the first vertex along the input path
  int length = 0;  // number of edges
  std::vector<int> vertices;
};

// Shortest eta-heavy window of the path `path` (lexicographically first among equal
// lengths). Throws NotHeavy when the whole path is light.
SubpathResult find_admissible_subpath(const Graph& g, const std::vector<int>& path, std::int64_t eta);

struct SubspiderResult {
  std::vector<int> leg_lengths;
  TreeMask mask = 0;
  std::vector<int> vertices;  // projection of the member, ascending label order
  bool whole = false;         // true when the member itself is admissible
};

// Minimal s-legged subspider whose projection is eta-heavy in the projected family.
// The input must be a spider family and the member must hold no eta-heavy j-path in
// the host for 2 <= j <= k.
SubspiderResult find_admissible_subspider(const EmbeddingFamily& fam, std::span<const int> member, std::int64_t eta,
                                          int k);

enum class LinkRefusal { None, BelowCount, PackingShort };

struct LinkCertificate {
  bool linked = false;
  LinkRefusal refusal = LinkRefusal::None;
  std::vector<int> members;  // pairwise disjoint outside the leaf image
  std::size_t class_size = 0;
  BigInt half_threshold_times_two;  // h^(t^2); the lemma needs 2 * class_size >= this
};

// Greedy maximal packing of members with the given leaf vector; linked when it reaches h.
LinkCertificate certify_linked(const EmbeddingFamily& fam, const std::vector<int>& leaf_image, std::int64_t h);

struct RobustBound {
  long double eps = 0;
  long double edges = 0;
  long double d_M = 0;
  long double d_N = 0;
  int a = 0;
  int b = 0;
};

struct RobustReport {
  std::size_t input_size = 0;
  std::size_t removed_type_one = 0;
  std::size_t removed_type_two = 0;
  std::size_t rounds = 0;
  // eps e(G) d_M^(b-1) d_N^(a-1) and eps |F|, when a bound was supplied.
  std::optional<long double> statement_bound;
  std::optional<long double> proof_bound;
  std::size_t removed() const { return removed_type_one + removed_type_two; }
};

struct RobustResult {
  EmbeddingFamily family;
  RobustReport report;
};

// Type one and type two removals to a fixpoint.
RobustResult extract_robust(const EmbeddingFamily& fam, std::int64_t eta,
                            const std::optional<RobustBound>& bound = std::nullopt);

struct RobustCheck {
  bool linked = true;       // every leaf vector has eta disjoint members (greedy witness)
  bool extensions = true;   // every (T1, T2) pair has eta distinct T2-projections
  std::string failure;
  bool ok() const { return linked && extensions; }
};

RobustCheck check_robust(const EmbeddingFamily& fam, std::int64_t eta);

enum class Parity { Even, Odd };

struct Extension {
  int member = -1;         // index of F' (even) or F'' (odd)
  std::vector<int> path;   // even: y_j .. y'_j, length 2t; odd: x_j .. y''_j, length 2t+1
};

// Moves leaf j of `member` along a fresh path while keeping the other leaves.
// Needs eta >= |S| + 2t + 2 and y_j not in S.
Extension robust_extend(const EmbeddingFamily& fam, int member, int leaf, Parity parity, int t,
                        const std::set<int>& avoid, std::int64_t eta);

// Endpoints of a member of a robust path family linked by paths of length k.
class PathLinker {
 public:
  // The family tree must be a path of length j with 2 <= j <= k; eta = 2kh.
  PathLinker(const EmbeddingFamily& fam, int member, int k, std::int64_t h);

  int first() const { return x_; }
  int second() const { return z_; }
  std::int64_t eta() const { return eta_; }
  // A path of length k from first() to second() whose vertices avoid W. Needs |W| <= kh
  // and neither endpoint in W.
  std::vector<int> produce(const std::set<int>& W) const;

 private:
  const EmbeddingFamily* fam_;
  int member_;
  int k_;
  std::int64_t h_;
  std::int64_t eta_;
  bool flip_;
  int x_, z_;
};

struct SpiderLinkage {
  std::vector<int> branch;                // x_1..x_s
  std::vector<std::vector<int>> copies;   // each a copy of the s-legged k-spider, center first, legs outward
};

// t internally disjoint k-spiders on the branch tuple of `member`; eta = 2kst.
SpiderLinkage spider_linkage(const EmbeddingFamily& fam, int member, int k, int t);

}  // namespace extremal
