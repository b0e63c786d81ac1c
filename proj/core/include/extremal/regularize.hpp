#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Perfect matching between A1 and B1 = N(A1); A1 is an inclusion-minimal set with |N(A1)| <= |A1|.
struct TightMatching {
  std::vector<Edge> matching;  // (a, b) pairs, a in A1
  std::vector<int> A1;
  std::vector<int> B1;
};

// `a_side` plays the role of A. Requires |A| >= |B| >= 1 and every A-vertex of degree exactly d >= 1.
TightMatching tight_matching(const BipartiteGraph& g, Side a_side, int d);

// ceil(d/2) edge-disjoint matchings with nested vertex sets; matching i has >= d-i+1 edges.
std::vector<std::vector<Edge>> matching_cascade(const BipartiteGraph& g, Side a_side, int d);

struct RegularizationCertificate {
  int input_n = 0;
  std::int64_t input_edges = 0;
  Rational input_avg_degree;
  Rational c, eps;
  int m = 0;
  std::int64_t edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  long double edge_bound = 0;        // (2^eps-1)/48 * c * m^{1+eps}
  int ratio_bound = 6;               // Delta <= 6 delta
  long double avg_degree_bound = 0;  // d(G) / (12 log2(2n/d(G)))
  bool edge_ok = false;
  bool ratio_ok = false;
  bool avg_degree_ok = false;

  bool all_ok() const { return edge_ok && ratio_ok && avg_degree_ok; }
  nlohmann::json to_json() const;
};

struct RegularizationTrace {
  int peel_threshold = 0;
  int half_degree = 0;
  int cascade_length = 0;
  int bucket = 0;
  int bucket_size = 0;
  std::vector<int> matching_sizes;
};

struct RegularizationResult {
  Graph H;
  RegularizationCertificate certificate;
  RegularizationTrace trace;
};

// Requires 0 < eps < 1, c > 0 and e(g) >= c n^{1+eps}.
RegularizationResult enhanced_regularize(const Graph& g, const Rational& c, const Rational& eps);

// Recomputes every witnessed quantity from H; true iff all agree and all bounds hold.
bool check_certificate(const RegularizationCertificate& cert, const Graph& H);

// Locally optimal max-cut bipartition of g: returns side (0/1) per vertex.
std::vector<int> greedy_max_cut(const Graph& g);

}  // namespace extremal
