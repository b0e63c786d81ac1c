#include "matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace extremal::detail {

int max_bipartite_matching(int nl, int nr, const std::vector<std::vector<int>>& adj,
                           std::vector<int>& mate_l, std::vector<int>& mate_r) {
  const int inf = std::numeric_limits<int>::max();
  mate_l.assign(nl, -1);
  mate_r.assign(nr, -1);
  std::vector<int> dist(nl), it(nl);
  int size = 0;
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int a = 0; a < nl; ++a) {
      dist[a] = mate_l[a] < 0 ? 0 : inf;
      if (mate_l[a] < 0) q.push(a);
    }
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : adj[a]) {
        int a2 = mate_r[b];
        if (a2 < 0) {
          found = true;
        } else if (dist[a2] == inf) {
          dist[a2] = dist[a] + 1;
          q.push(a2);
        }
      }
    }
    return found;
  };
  // Iterative DFS along the layered graph.
  std::vector<int> stack;
  auto dfs = [&](int root) {
    stack.assign(1, root);
    while (!stack.empty()) {
      int a = stack.back();
      bool advanced = false;
      while (it[a] < static_cast<int>(adj[a].size())) {
        int b = adj[a][it[a]];
        int a2 = mate_r[b];
        if (a2 < 0) {
          // augment along the stack
          for (int k = static_cast<int>(stack.size()) - 1; k >= 0; --k) {
            int x = stack[k];
            int bx = adj[x][it[x]];
            mate_l[x] = bx;
            mate_r[bx] = x;
          }
          return true;
        }
        if (dist[a2] == dist[a] + 1) {
          stack.push_back(a2);
          advanced = true;
          break;
        }
        ++it[a];
      }
      if (!advanced) {
        dist[a] = inf;
        stack.pop_back();
        if (!stack.empty()) ++it[stack.back()];
      }
    }
    return false;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int a = 0; a < nl; ++a)
      if (mate_l[a] < 0 && dfs(a)) ++size;
  }
  return size;
}

std::vector<int> strong_components(const std::vector<std::vector<int>>& out, int& count) {
  int n = static_cast<int>(out.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), it(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack, call;
  int next = 0;
  count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back(root);
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      int v = call.back();
      if (it[v] < static_cast<int>(out[v].size())) {
        int w = out[v][it[v]++];
        if (index[w] < 0) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
          if (w == v) break;
        }
        ++count;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
    }
  }
  return comp;
}

}  // namespace extremal::detail
