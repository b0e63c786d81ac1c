#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/graph.hpp"

namespace extremal {

enum class PatternKind { CompleteBipartite, Theta, KstSubdivision, KpMultiSubdivision };

const char* pattern_kind_name(PatternKind kind);
PatternKind parse_pattern_kind(const std::string& name);  // throws ParseError

// Branch vertices are numbered in pattern order: the s-side then the t-side for the
// bipartite kinds, the two ends for theta, 0..p-1 for the clique kind.
struct PatternSpec {
  PatternKind kind = PatternKind::CompleteBipartite;
  int s = 1;
  int t = 1;
  int p = 2;
  int k = 1;
  int r = 1;

  static PatternSpec complete_bipartite(int s, int t);
  // s internally disjoint paths of length k between two vertices.
  static PatternSpec theta(int s, int k);
  static PatternSpec kst_subdivision(int s, int t, int k, int r = 1);
  static PatternSpec kp_multi(int p, int k, int r);

  // Throws PreconditionViolated on out-of-range parameters.
  void validate() const;
  int branch_count() const;
  int path_length() const;    // length of every connecting path
  int multiplicity() const;   // paths per pattern edge
  // Pattern edges between branch indices, in the fixed pair order.
  std::vector<std::pair<int, int>> pattern_edges() const;
  std::string describe() const;
};

struct Witness {
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;  // vertex sequences
};

enum class FindStatus { Found, NotFound, CeilingHit };

const char* find_status_name(FindStatus status);

inline constexpr std::uint64_t kDefaultNodeCeiling = 100'000'000;

struct FindOptions {
  std::uint64_t ceiling = kDefaultNodeCeiling;
  int threads = 1;
};

struct FindResult {
  FindStatus status = FindStatus::NotFound;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

// Exhaustive backtracking. NotFound is a proof of freeness; CeilingHit is inconclusive.
// The witness is the one from the earliest top-level candidate, for any thread count,
// unless the ceiling is hit.
FindResult find_pattern(const Graph& g, const PatternSpec& spec, const FindOptions& opt = {});
FindResult find_pattern(const BipartiteGraph& g, const PatternSpec& spec, const FindOptions& opt = {});

// Either side of the host may carry the s-side.
FindResult find_complete_bipartite(const Graph& g, int s, int t, const FindOptions& opt = {});

// Rechecks every witness condition edge by edge.
bool verify_witness(const Graph& g, const PatternSpec& spec, const Witness& w);
bool verify_witness(const BipartiteGraph& g, const PatternSpec& spec, const Witness& w);

// A path of the pattern length between x and y avoiding W, or nothing on refusal.
using LinkProducer = std::function<std::optional<std::vector<int>>(int x, int y, const std::set<int>& W)>;

// Requests paths in the pattern pair order, growing the avoid set with every path.
// Throws AssemblyFailed when the producer refuses or returns an unusable path.
Witness greedy_assemble(const Graph& g, const LinkProducer& producer, const std::vector<int>& branch,
                        const PatternSpec& spec);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);  // throws ParseError
nlohmann::json pattern_to_json(const PatternSpec& spec);
PatternSpec pattern_from_json(const nlohmann::json& j);  // throws ParseError

}  // namespace extremal
