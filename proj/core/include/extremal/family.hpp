#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"
#include "extremal/tree.hpp"

namespace extremal {

inline constexpr int kMaxEnumerationVertices = 12;
inline constexpr std::uint64_t kMaxCopies = 10'000'000;

// A set of copies of a labelled tree in a host graph. Member i maps tree vertex x to
// member(i)[x]. Members are kept sorted and distinct; families are immutable values.
class EmbeddingFamily {
 public:
  EmbeddingFamily(LabeledTree tree, std::shared_ptr<const Graph> host, std::vector<int> flat,
                  std::optional<int> side_boundary = std::nullopt);

  const LabeledTree& tree() const { return tree_; }
  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
  // Set when A was required to map below the boundary (into M) and B at or above it.
  std::optional<int> side_boundary() const { return boundary_; }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::span<const int> member(std::size_t i) const {
    return {flat_.data() + i * stride_, stride_};
  }
  std::vector<int> leaf_vector(std::size_t i) const;
  // Members whose leaf vector is lv, in family order; empty when none.
  const std::vector<int>& with_leaf_vector(const std::vector<int>& lv) const;
  const std::map<std::vector<int>, std::vector<int>>& leaf_classes() const { return classes_; }
  // Index of the member equal to emb, or -1.
  long find(std::span<const int> emb) const;

  EmbeddingFamily subfamily(const std::vector<int>& indices) const;
  // Distinct projections onto the subtree on `mask`, as a family of that subtree.
  EmbeddingFamily project(TreeMask mask) const;
  // Projection of one member onto `mask`, in ascending label order.
  std::vector<int> project_member(std::size_t i, TreeMask mask) const;

 private:
  LabeledTree tree_;
  std::shared_ptr<const Graph> host_;
  std::vector<int> flat_;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;
  std::optional<int> boundary_;
  std::map<std::vector<int>, std::vector<int>> classes_;
};

struct EnumerationOptions {
  std::uint64_t max_copies = kMaxCopies;
};

// Number of homomorphisms of the tree into g (an upper bound on the copy count),
// respecting the side constraint when boundary is set.
long double homomorphism_estimate(const Graph& g, const LabeledTree& t, std::optional<int> boundary);

// All injective edge-preserving maps of t into g. Throws TooLarge when v(t) > 12 or the
// copy count would exceed the cap.
EmbeddingFamily enumerate_copies(const Graph& g, const LabeledTree& t, const EnumerationOptions& opt = {});
// Bipartite host; with a_into_M the tree side A maps into M and B into N.
EmbeddingFamily enumerate_copies(const BipartiteGraph& g, const LabeledTree& t, bool a_into_M,
                                 const EnumerationOptions& opt = {});

// h^(e^2) as an exact integer.
BigInt heavy_threshold(std::int64_t h, int edges);

struct HeavyPartition {
  std::vector<int> heavy;
  std::vector<int> light;
};

// Member i is h-heavy when at least h^(e(T)^2) members share its leaf vector.
HeavyPartition classify_heavy(const EmbeddingFamily& fam, std::int64_t h);
bool is_heavy(const EmbeddingFamily& fam, std::size_t i, std::int64_t h);

// Admissibility of every member in one pass.
std::vector<bool> admissible_flags(const EmbeddingFamily& fam, std::int64_t h);
// Throws MemberNotFound when emb is not a member.
bool is_admissible(const EmbeddingFamily& fam, std::span<const int> emb, std::int64_t h);

// One member per line as "label:vertex" pairs.
void write_family(std::ostream& out, const EmbeddingFamily& fam);
// Reads members written by write_family; every line must be a copy of t in host.
EmbeddingFamily read_family(std::istream& in, const LabeledTree& t, std::shared_ptr<const Graph> host);

}  // namespace extremal
