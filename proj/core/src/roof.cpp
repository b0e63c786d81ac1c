#include <algorithm>
#include <string>

#include "extremal/biregularize.hpp"
#include "extremal/errors.hpp"
#include "roof_kernel.hpp"

namespace extremal {

namespace detail {

RoofAssignment::RoofAssignment(int nm, const std::vector<std::vector<int>>& adj)
    : nm_(nm), adj_(adj) {}

bool RoofAssignment::run(int cap, std::vector<int>* violator) {
  int nn = static_cast<int>(adj_.size());
  assign_.assign(nn, -1);
  std::vector<std::vector<int>> holders(nm_);
  std::vector<int> par_n(nn), par_m(nn), mark(nn, -1), queue;
  for (int y = 0; y < nn; ++y) {
    queue.assign(1, y);
    mark[y] = y;
    int end_n = -1, end_m = -1;
    for (std::size_t qi = 0; qi < queue.size() && end_n < 0; ++qi) {
      int z = queue[qi];
      for (int x : adj_[z]) {
        if (static_cast<int>(holders[x].size()) < cap) {
          end_n = z;
          end_m = x;
          break;
        }
        for (int w : holders[x]) {
          if (mark[w] == y) continue;
          mark[w] = y;
          par_n[w] = z;
          par_m[w] = x;
          queue.push_back(w);
        }
      }
    }
    if (end_n < 0) {
      if (violator) {
        *violator = queue;
        std::sort(violator->begin(), violator->end());
      }
      return false;
    }
    int cur = end_n, target = end_m;
    for (;;) {
      int old = assign_[cur];
      if (old >= 0) {
        auto& h = holders[old];
        h.erase(std::find(h.begin(), h.end(), cur));
      }
      assign_[cur] = target;
      holders[target].push_back(cur);
      if (cur == y) break;
      target = par_m[cur];
      cur = par_n[cur];
    }
  }
  return true;
}

}  // namespace detail

std::vector<Edge> Roof::edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < assign.size(); ++k) out.emplace_back(assign[k], n_offset + static_cast<int>(k));
  return out;
}

namespace {

std::vector<std::vector<int>> n_adjacency(const BipartiteGraph& g) {
  std::vector<std::vector<int>> adj(g.n());
  for (int k = 0; k < g.n(); ++k) {
    auto nb = g.neighbors(g.m() + k);
    if (nb.empty()) throw PreconditionViolated("roof: N-vertex " + std::to_string(g.m() + k) + " is isolated");
    adj[k].assign(nb.begin(), nb.end());
  }
  return adj;
}

}  // namespace

Roof min_roof(const BipartiteGraph& g) {
  auto adj = n_adjacency(g);
  Roof r;
  r.n_offset = g.m();
  if (g.n() == 0) return r;
  detail::RoofAssignment ra(g.m(), adj);
  int lo = 1, hi = g.n();
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (ra.run(mid)) hi = mid;
    else lo = mid + 1;
  }
  if (!ra.run(lo)) throw InternalInvariantBroken("min_roof: load |N| infeasible");
  r.assign = ra.assignment();
  std::vector<int> load(g.m(), 0);
  for (int x : r.assign) r.max_load = std::max(r.max_load, ++load[x]);
  return r;
}

int roof_bottleneck_oracle(const BipartiteGraph& g) {
  if (g.n() > 20) throw TooLarge("roof_bottleneck_oracle: |N| > 20");
  auto adj = n_adjacency(g);
  int nn = g.n(), words = (g.m() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nb(nn, std::vector<std::uint64_t>(words, 0));
  for (int k = 0; k < nn; ++k)
    for (int x : adj[k]) nb[k][x / 64] |= 1ULL << (x % 64);
  int best = 0;
  std::vector<std::uint64_t> acc(words);
  for (std::uint32_t mask = 1; mask < (1u << nn); ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    int size = 0;
    for (int k = 0; k < nn; ++k)
      if (mask >> k & 1) {
        ++size;
        for (int w = 0; w < words; ++w) acc[w] |= nb[k][w];
      }
    int cnt = 0;
    for (auto w : acc) cnt += __builtin_popcountll(w);
    best = std::max(best, (size + cnt - 1) / cnt);
  }
  return best;
}

}  // namespace extremal
