#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// N-roof: each N-vertex assigned to exactly one M-neighbour.
struct Roof {
  std::vector<int> assign;  // assign[k] = M-vertex chosen for N-vertex n_offset+k
  int n_offset = 0;
  int max_load = 0;
  std::vector<Edge> edges() const;  // (M-vertex, N-vertex)
};

// Roof of minimum maximum load. Throws PreconditionViolated on an isolated N-vertex.
Roof min_roof(const BipartiteGraph& g);
// max over nonempty X of N of ceil(|X|/|N(X)|) by enumeration; TooLarge above |N| = 20.
int roof_bottleneck_oracle(const BipartiteGraph& g);

struct OneSideResult {
  BipartiteGraph graph;
  Side regular_side = Side::N;  // the larger side; every vertex there has `degree` edges
  int degree = 0;
  long double edge_bound = 0;  // c/2^{2+1/a+1/b} |M'|^a |N'|^b
  long double avg_degree_bound = 0;  // d(g)/8
  bool edge_ok = false;
  bool avg_degree_ok = false;
};

// Requires 0 < a, b <= 1, a+b >= 1, e(g) >= c |M|^a |N|^b and d(g) >= 8.
OneSideResult one_side_regularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                  const Rational& beta);

enum class BiregKind { HalfToBiregular, Strict, Floor };

struct BiregularizationCertificate {
  BiregKind kind = BiregKind::Strict;
  int in_m = 0, in_n = 0;
  std::int64_t in_edges = 0;
  Rational in_avg_degree;
  Rational alpha, beta, c;
  int out_m = 0, out_n = 0;
  std::int64_t out_edges = 0;
  Rational out_avg_degree;
  int min_M = 0, max_M = 0, min_N = 0, max_N = 0;
  long double lambda = 0;
  long double edge_bound = 0;
  long double avg_degree_bound = 0;
  int ratio_bound = 16;
  bool edge_ok = false;
  bool avg_degree_ok = false;
  bool ratio_ok = false;

  bool all_ok() const { return edge_ok && avg_degree_ok && ratio_ok; }
  nlohmann::json to_json() const;
};

struct BiregTrace {
  std::vector<int> n_sizes;  // |N_i| per roof iteration
  int bucket = 0;
  int bucket_size = 0;
  int thin_total = 0;
  int first_iteration = 0;
};

struct BiregularizationResult {
  BipartiteGraph graph;
  BiregularizationCertificate certificate;
  BiregTrace trace;
};

// g must be d-half-regular at N (d >= 1) with |M| <= |N|; requires a+b > 1.
BiregularizationResult half_to_biregular(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                         const Rational& beta);
BiregularizationResult biregularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                    const Rational& beta);
// Requires e(g) >= c (m^a n^b + n log2 m).
BiregularizationResult biregularize_with_floor(const BipartiteGraph& g, const Rational& c,
                                               const Rational& alpha, const Rational& beta);

// Recomputes output fields from `out` and re-evaluates every bound.
bool check_certificate(const BiregularizationCertificate& cert, const BipartiteGraph& out);

struct WeakBiregularityCertificate {
  Rational c, alpha, beta, eps, L, L_prime;
  std::string branch;  // "dense" or "sparse"
  int out_m = 0, out_n = 0;
  std::int64_t out_edges = 0;
  int min_M = 0, max_M = 0, min_N = 0, max_N = 0;
  Side larger_side = Side::N;
  int p = 0;
  long double mu = 0;      // claimed larger-side ratio
  long double lambda = 0;  // claimed edge constant
  long double edge_bound = 0;
  bool ratio_ok = false;    // larger side: max <= mu * min
  bool power_ok = false;    // smaller side: max <= min^{1+eps}
  bool degree_ok = false;   // d(G') >= L'
  bool edge_ok = false;

  bool all_ok() const { return ratio_ok && power_ok && degree_ok && edge_ok; }
  nlohmann::json to_json() const;
};

struct WeakBiregularizationResult {
  BipartiteGraph graph;
  WeakBiregularityCertificate certificate;
};

// Default for the average-degree threshold L given the other parameters.
Rational default_weak_threshold(const Rational& alpha, const Rational& beta, const Rational& eps,
                                const Rational& L_prime);
int weak_class_count(const Rational& alpha, const Rational& beta, const Rational& eps);

// Requires L' >= 16^{2/eps}, d(g) >= L, e(g) >= c |M|^a |N|^b, a+b > 1.
WeakBiregularizationResult weak_biregularize(const BipartiteGraph& g, const Rational& c, const Rational& alpha,
                                             const Rational& beta, const Rational& eps, const Rational& L_prime,
                                             const Rational& L);

bool check_certificate(const WeakBiregularityCertificate& cert, const BipartiteGraph& out);

}  // namespace extremal
