#include "extremal/finders.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <thread>

#include "extremal/errors.hpp"

namespace extremal {

const char* pattern_kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::CompleteBipartite: return "complete-bipartite";
    case PatternKind::Theta: return "theta";
    case PatternKind::KstSubdivision: return "kst-subdivision";
    case PatternKind::KpMultiSubdivision: return "kp-multi-subdivision";
  }
  return "unknown";
}

PatternKind parse_pattern_kind(const std::string& name) {
  if (name == "complete-bipartite" || name == "kst") return PatternKind::CompleteBipartite;
  if (name == "theta") return PatternKind::Theta;
  if (name == "kst-subdivision") return PatternKind::KstSubdivision;
  if (name == "kp-multi-subdivision" || name == "kp-multi") return PatternKind::KpMultiSubdivision;
  throw ParseError("unknown pattern kind '" + name + "'");
}

PatternSpec PatternSpec::complete_bipartite(int s, int t) {
  PatternSpec p;
  p.kind = PatternKind::CompleteBipartite;
  p.s = s;
  p.t = t;
  p.validate();
  return p;
}

PatternSpec PatternSpec::theta(int s, int k) {
  PatternSpec p;
  p.kind = PatternKind::Theta;
  p.s = s;
  p.k = k;
  p.validate();
  return p;
}

PatternSpec PatternSpec::kst_subdivision(int s, int t, int k, int r) {
  PatternSpec p;
  p.kind = PatternKind::KstSubdivision;
  p.s = s;
  p.t = t;
  p.k = k;
  p.r = r;
  p.validate();
  return p;
}

PatternSpec PatternSpec::kp_multi(int p_, int k, int r) {
  PatternSpec p;
  p.kind = PatternKind::KpMultiSubdivision;
  p.p = p_;
  p.k = k;
  p.r = r;
  p.validate();
  return p;
}

void PatternSpec::validate() const {
  auto need = [](bool ok, const char* msg) {
    if (!ok) throw PreconditionViolated(msg);
  };
  switch (kind) {
    case PatternKind::CompleteBipartite:
      need(s >= 1 && t >= 1, "complete bipartite pattern needs s, t >= 1");
      break;
    case PatternKind::Theta:
      need(s >= 1 && k >= 1, "theta pattern needs s, k >= 1");
      need(k >= 2 || s <= 1, "theta with k = 1 needs s <= 1");
      break;
    case PatternKind::KstSubdivision:
      need(s >= 1 && t >= 1 && k >= 1 && r >= 1, "subdivision pattern needs s, t, k, r >= 1");
      need(k >= 2 || r == 1, "parallel paths of length 1 are not simple");
      break;
    case PatternKind::KpMultiSubdivision:
      need(p >= 1 && k >= 1 && r >= 1, "multi-subdivision pattern needs p, k, r >= 1");
      need(k >= 2 || r == 1, "parallel paths of length 1 are not simple");
      break;
  }
}

int PatternSpec::branch_count() const {
  switch (kind) {
    case PatternKind::CompleteBipartite:
    case PatternKind::KstSubdivision: return s + t;
    case PatternKind::Theta: return 2;
    case PatternKind::KpMultiSubdivision: return p;
  }
  return 0;
}

int PatternSpec::path_length() const { return kind == PatternKind::CompleteBipartite ? 1 : k; }

int PatternSpec::multiplicity() const {
  switch (kind) {
    case PatternKind::CompleteBipartite: return 1;
    case PatternKind::Theta: return s;
    default: return r;
  }
}

std::vector<std::pair<int, int>> PatternSpec::pattern_edges() const {
  std::vector<std::pair<int, int>> out;
  switch (kind) {
    case PatternKind::CompleteBipartite:
    case PatternKind::KstSubdivision:
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < t; ++b) out.emplace_back(a, s + b);
      break;
    case PatternKind::Theta: out.emplace_back(0, 1); break;
    case PatternKind::KpMultiSubdivision:
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) out.emplace_back(a, b);
      break;
  }
  return out;
}

std::string PatternSpec::describe() const {
  std::string out = pattern_kind_name(kind);
  switch (kind) {
    case PatternKind::CompleteBipartite:
      out += " s=" + std::to_string(s) + " t=" + std::to_string(t);
      break;
    case PatternKind::Theta:
      out += " s=" + std::to_string(s) + " k=" + std::to_string(k);
      break;
    case PatternKind::KstSubdivision:
      out += " s=" + std::to_string(s) + " t=" + std::to_string(t) + " k=" + std::to_string(k) +
             " r=" + std::to_string(r);
      break;
    case PatternKind::KpMultiSubdivision:
      out += " p=" + std::to_string(p) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
      break;
  }
  return out;
}

const char* find_status_name(FindStatus status) {
  switch (status) {
    case FindStatus::Found: return "found";
    case FindStatus::NotFound: return "not-found";
    case FindStatus::CeilingHit: return "ceiling-hit";
  }
  return "unknown";
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max();

// Shared by all workers of one search.
struct SearchShared {
  const Graph& g;
  int b = 0;
  int k = 1;
  int r = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> padj;  // pattern adjacency
  std::vector<int> order;              // assignment order of pattern vertices
  std::vector<int> prev_same;          // per position: earlier position of the same class, or -1
  std::vector<int> need_degree;        // per pattern vertex
  std::vector<int> by_rank;            // host vertices, descending degree
  std::vector<int> rank;
  std::uint64_t ceiling = 0;
  std::atomic<std::uint64_t> nodes{0};
  // Lowest top-level candidate index holding a witness; later indices stop early.
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::atomic<bool> hit{false};
  std::mutex mu;
  std::optional<Witness> witness;

  explicit SearchShared(const Graph& host) : g(host) {}
};

class Worker {
 public:
  explicit Worker(SearchShared& sh)
      : sh_(sh),
        n_(sh.g.num_vertices()),
        phi_(sh.b, -1),
        used_(n_, 0),
        dist_(sh.b),
        ball_(sh.b) {}

  // Searches the top-level candidates whose index is congruent to `part` mod `parts`.
  void run(int part, int parts) {
    if (sh_.b == 0) return;
    int v = sh_.order[0];
    std::int64_t idx = 0;
    for (int c : sh_.by_rank) {
      if (sh_.g.degree(c) < sh_.need_degree[v]) continue;
      top_ = idx++;
      if (stop()) return;
      if (top_ % parts != part) continue;
      if (!tick()) return;
      place(v, c);
      assign(1);
      unplace(v, c);
    }
  }

 private:
  bool stop() const {
    return sh_.best.load(std::memory_order_relaxed) <= top_ || sh_.hit.load(std::memory_order_relaxed);
  }

  bool tick() {
    if (sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > sh_.ceiling) {
      sh_.hit.store(true);
      return false;
    }
    return true;
  }

  void place(int v, int c) {
    phi_[v] = c;
    used_[c] = 1;
    if (sh_.k >= 2) bfs(v, c);
  }

  void unplace(int v, int c) {
    phi_[v] = -1;
    used_[c] = 0;
  }

  // Distances from c up to the path length; the ball lists every vertex reached.
  void bfs(int v, int c) {
    auto& d = dist_[v];
    auto& ball = ball_[v];
    if (d.empty()) d.assign(n_, kFar);
    for (int x : ball) d[x] = kFar;
    ball.clear();
    d[c] = 0;
    ball.push_back(c);
    for (std::size_t head = 0; head < ball.size(); ++head) {
      int x = ball[head];
      if (d[x] == sh_.k) continue;
      for (int y : sh_.g.neighbors(x))
        if (d[y] == kFar) {
          d[y] = d[x] + 1;
          ball.push_back(y);
        }
    }
  }

  bool compatible(int v, int c, int pos) const {
    if (used_[c] || sh_.g.degree(c) < sh_.need_degree[v]) return false;
    int ps = sh_.prev_same[pos];
    if (ps >= 0 && sh_.rank[c] <= sh_.rank[phi_[sh_.order[ps]]]) return false;
    for (int a : sh_.padj[v]) {
      if (phi_[a] < 0) continue;
      if (sh_.k == 1 ? !sh_.g.has_edge(c, phi_[a]) : dist_[a][c] > sh_.k) return false;
    }
    return true;
  }

  void assign(int pos) {
    if (stop()) return;
    if (pos == sh_.b) {
      slot_first_.assign(sh_.edges.size(), -1);
      paths_.clear();
      pack(0);
      return;
    }
    int v = sh_.order[pos];
    int anchor = -1;
    for (int a : sh_.padj[v])
      if (phi_[a] >= 0) {
        anchor = a;
        break;
      }
    std::vector<int> cands;
    if (anchor < 0) {
      cands = sh_.by_rank;
    } else {
      if (sh_.k == 1) {
        auto nb = sh_.g.neighbors(phi_[anchor]);
        cands.assign(nb.begin(), nb.end());
      } else {
        cands = ball_[anchor];
      }
      std::sort(cands.begin(), cands.end(), [&](int x, int y) { return sh_.rank[x] < sh_.rank[y]; });
    }
    for (int c : cands) {
      if (!compatible(v, c, pos)) continue;
      if (!tick()) return;
      place(v, c);
      assign(pos + 1);
      unplace(v, c);
      if (stop()) return;
    }
  }

  // Slot i packs copy i % r of pattern edge i / r.
  void pack(int slot) {
    if (stop()) return;
    int total = static_cast<int>(sh_.edges.size()) * sh_.r;
    if (slot == total) {
      finish();
      return;
    }
    auto [u, v] = sh_.edges[slot / sh_.r];
    int src = phi_[u];
    int dst = phi_[v];
    if (sh_.k == 1) {
      paths_.push_back({src, dst});
      pack(slot + 1);
      paths_.pop_back();
      return;
    }
    cur_.assign(1, src);
    extend(slot, dst, v);
  }

  void extend(int slot, int dst, int vdst) {
    int x = cur_.back();
    int left = sh_.k - static_cast<int>(cur_.size()) + 1;
    if (left == 1) {
      if (!sh_.g.has_edge(x, dst)) return;
      std::vector<int> path = cur_;
      path.push_back(dst);
      int e = slot / sh_.r;
      int saved = slot_first_[e];
      slot_first_[e] = path[1];
      paths_.push_back(path);
      std::vector<int> keep = std::move(cur_);
      pack(slot + 1);
      cur_ = std::move(keep);
      paths_.pop_back();
      slot_first_[e] = saved;
      return;
    }
    const auto& d = dist_[vdst];
    bool first_step = cur_.size() == 1;
    int floor_vertex = (first_step && slot % sh_.r != 0) ? slot_first_[slot / sh_.r] : -1;
    for (int w : sh_.g.neighbors(x)) {
      if (used_[w] || d[w] > left - 1) continue;
      // Parallel copies are ordered by their first internal vertex.
      if (first_step && w <= floor_vertex) continue;
      if (!tick()) return;
      used_[w] = 1;
      cur_.push_back(w);
      extend(slot, dst, vdst);
      cur_.pop_back();
      used_[w] = 0;
      if (stop()) return;
    }
  }

  void finish() {
    std::lock_guard<std::mutex> lock(sh_.mu);
    if (sh_.best.load() <= top_) return;
    Witness w;
    w.branch = phi_;
    w.paths = paths_;
    sh_.witness = std::move(w);
    sh_.best.store(top_);
  }

  SearchShared& sh_;
  std::int64_t top_ = 0;
  int n_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<int>> ball_;
  std::vector<int> slot_first_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> cur_;
};

}  // namespace

FindResult find_pattern(const Graph& g, const PatternSpec& spec, const FindOptions& opt) {
  spec.validate();
  if (opt.threads < 1) throw PreconditionViolated("threads must be at least 1");
  SearchShared sh(g);
  sh.b = spec.branch_count();
  sh.k = spec.path_length();
  sh.r = spec.multiplicity();
  sh.edges = spec.pattern_edges();
  sh.ceiling = opt.ceiling;
  int n = g.num_vertices();

  FindResult res;
  // Counting bounds settle small hosts without search.
  std::int64_t paths = static_cast<std::int64_t>(sh.edges.size()) * sh.r;
  if (n < sh.b + paths * (sh.k - 1) || g.num_edges() < paths * sh.k) return res;

  sh.padj.assign(sh.b, {});
  for (auto [u, v] : sh.edges) {
    sh.padj[u].push_back(v);
    sh.padj[v].push_back(u);
  }
  // Breadth-first pattern order so that every later vertex has a placed neighbour.
  std::vector<char> seen(sh.b, 0);
  for (int root = 0; root < sh.b; ++root) {
    if (seen[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      sh.order.push_back(x);
      for (int y : sh.padj[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  // Vertices of one class are interchangeable under pattern automorphisms.
  std::vector<int> cls(sh.b, 0);
  if (spec.kind == PatternKind::CompleteBipartite || spec.kind == PatternKind::KstSubdivision)
    for (int v = spec.s; v < sh.b; ++v) cls[v] = 1;
  sh.prev_same.assign(sh.b, -1);
  for (int i = 0; i < sh.b; ++i)
    for (int j = i - 1; j >= 0; --j)
      if (cls[sh.order[j]] == cls[sh.order[i]]) {
        sh.prev_same[i] = j;
        break;
      }
  sh.need_degree.assign(sh.b, 0);
  for (int v = 0; v < sh.b; ++v) sh.need_degree[v] = static_cast<int>(sh.padj[v].size()) * sh.r;
  sh.by_rank.resize(n);
  std::iota(sh.by_rank.begin(), sh.by_rank.end(), 0);
  std::stable_sort(sh.by_rank.begin(), sh.by_rank.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });
  sh.rank.assign(n, 0);
  for (int i = 0; i < n; ++i) sh.rank[sh.by_rank[i]] = i;

  int threads = std::min(opt.threads, std::max(n, 1));
  if (threads == 1) {
    Worker w(sh);
    w.run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&sh, i, threads] {
        Worker w(sh);
        w.run(i, threads);
      });
    for (auto& th : pool) th.join();
  }
  res.nodes = sh.nodes.load();
  if (sh.witness) {
    if (!verify_witness(g, spec, *sh.witness)) throw InternalInvariantBroken("search produced an invalid witness");
    res.status = FindStatus::Found;
    res.witness = std::move(sh.witness);
  } else if (sh.hit.load()) {
    res.status = FindStatus::CeilingHit;
  }
  return res;
}

FindResult find_pattern(const BipartiteGraph& g, const PatternSpec& spec, const FindOptions& opt) {
  return find_pattern(g.graph(), spec, opt);
}

FindResult find_complete_bipartite(const Graph& g, int s, int t, const FindOptions& opt) {
  return find_pattern(g, PatternSpec::complete_bipartite(s, t), opt);
}

bool verify_witness(const Graph& g, const PatternSpec& spec, const Witness& w) {
  try {
    spec.validate();
  } catch (const PreconditionViolated&) {
    return false;
  }
  // Required number of paths between branch indices i < j, from the definitions.
  int b = 0, len = 1, mult = 1;
  std::function<bool(int, int)> joined;
  switch (spec.kind) {
    case PatternKind::CompleteBipartite:
    case PatternKind::KstSubdivision:
      b = spec.s + spec.t;
      len = spec.kind == PatternKind::CompleteBipartite ? 1 : spec.k;
      mult = spec.kind == PatternKind::CompleteBipartite ? 1 : spec.r;
      joined = [s = spec.s](int i, int j) { return i < s && j >= s; };
      break;
    case PatternKind::Theta:
      b = 2;
      len = spec.k;
      mult = spec.s;
      joined = [](int, int) { return true; };
      break;
    case PatternKind::KpMultiSubdivision:
      b = spec.p;
      len = spec.k;
      mult = spec.r;
      joined = [](int, int) { return true; };
      break;
  }
  int n = g.num_vertices();
  if (static_cast<int>(w.branch.size()) != b) return false;
  std::map<int, int> index;
  for (int i = 0; i < b; ++i) {
    int x = w.branch[i];
    if (x < 0 || x >= n || index.count(x)) return false;
    index[x] = i;
  }
  std::map<std::pair<int, int>, int> count;
  std::set<int> internal;
  for (const auto& path : w.paths) {
    if (static_cast<int>(path.size()) != len + 1) return false;
    for (int x : path)
      if (x < 0 || x >= n) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) return false;
    auto a = index.find(path.front());
    auto z = index.find(path.back());
    if (a == index.end() || z == index.end() || a->second == z->second) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (index.count(path[i])) return false;
      if (!internal.insert(path[i]).second) return false;
    }
    int i = std::min(a->second, z->second), j = std::max(a->second, z->second);
    ++count[{i, j}];
  }
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      auto it = count.find({i, j});
      int have = it == count.end() ? 0 : it->second;
      if (have != (joined(i, j) ? mult : 0)) return false;
    }
  return true;
}

bool verify_witness(const BipartiteGraph& g, const PatternSpec& spec, const Witness& w) {
  return verify_witness(g.graph(), spec, w);
}

Witness greedy_assemble(const Graph& g, const LinkProducer& producer, const std::vector<int>& branch,
                        const PatternSpec& spec) {
  spec.validate();
  if (static_cast<int>(branch.size()) != spec.branch_count())
    throw PreconditionViolated("branch list does not match the pattern");
  std::set<int> branch_set(branch.begin(), branch.end());
  if (branch_set.size() != branch.size()) throw PreconditionViolated("branch vertices must be distinct");
  for (int x : branch)
    if (x < 0 || x >= g.num_vertices()) throw PreconditionViolated("branch vertex out of range");
  int len = spec.path_length();
  Witness w;
  w.branch = branch;
  std::set<int> used;
  for (auto [i, j] : spec.pattern_edges())
    for (int c = 0; c < spec.multiplicity(); ++c) {
      int x = branch[i], y = branch[j];
      std::set<int> avoid = used;
      for (int z : branch)
        if (z != x && z != y) avoid.insert(z);
      std::optional<std::vector<int>> path;
      try {
        path = producer(x, y, avoid);
      } catch (const Error& e) {
        throw AssemblyFailed(std::string("producer refused: ") + e.what());
      }
      if (!path) throw AssemblyFailed("producer refused a path request");
      std::vector<int> p = *path;
      if (!p.empty() && p.front() == y && p.back() == x) std::reverse(p.begin(), p.end());
      if (static_cast<int>(p.size()) != len + 1 || p.front() != x || p.back() != y)
        throw AssemblyFailed("producer returned a path with the wrong ends or length");
      for (std::size_t q = 0; q + 1 < p.size(); ++q)
        if (!g.has_edge(p[q], p[q + 1])) throw AssemblyFailed("producer returned a non-edge step");
      for (std::size_t q = 1; q + 1 < p.size(); ++q) {
        if (avoid.count(p[q]) || p[q] == x || p[q] == y || !used.insert(p[q]).second)
          throw AssemblyFailed("producer returned a path through a forbidden vertex");
      }
      w.paths.push_back(std::move(p));
    }
  if (!verify_witness(g, spec, w)) throw InternalInvariantBroken("assembled witness does not verify");
  return w;
}

nlohmann::json witness_to_json(const Witness& w) {
  return nlohmann::json{{"branch", w.branch}, {"paths", w.paths}};
}

Witness witness_from_json(const nlohmann::json& j) {
  try {
    Witness w;
    w.branch = j.at("branch").get<std::vector<int>>();
    w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad witness: ") + e.what());
  }
}

nlohmann::json pattern_to_json(const PatternSpec& spec) {
  return nlohmann::json{{"kind", pattern_kind_name(spec.kind)}, {"s", spec.s}, {"t", spec.t},
                        {"p", spec.p},  {"k", spec.k},  {"r", spec.r}};
}

PatternSpec pattern_from_json(const nlohmann::json& j) {
  PatternSpec spec;
  try {
    spec.kind = parse_pattern_kind(j.at("kind").get<std::string>());
    spec.s = j.value("s", 1);
    spec.t = j.value("t", 1);
    spec.p = j.value("p", 2);
    spec.k = j.value("k", 1);
    spec.r = j.value("r", 1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad pattern: ") + e.what());
  }
  return spec;
}

}  // namespace extremal
