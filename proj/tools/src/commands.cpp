#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "extremal/biregularize.hpp"
#include "extremal/construct.hpp"
#include "extremal/errors.hpp"
#include "extremal/light_paths.hpp"
#include "extremal/linkage.hpp"
#include "extremal/peel.hpp"
#include "extremal/regularize.hpp"
#include "extremal/rng.hpp"
#include "extremal/version.hpp"

namespace extremal::cli {

namespace {

using nlohmann::json;

std::vector<std::string> graph_header(const RunContext& ctx) {
  std::vector<std::string> h{std::string("extremal-cli ") + kVersion + " " + ctx.command};
  if (ctx.input.contains("sha256")) h.push_back("input sha256 " + ctx.input["sha256"].get<std::string>());
  return h;
}

// lhs <= rhs up to the certificate slack.
json inequality(const std::string& name, long double lhs, long double rhs) {
  return {{"name", name}, {"lhs", lhs}, {"relation", "<="}, {"rhs", rhs}, {"holds", ge_with_slack(rhs, lhs)},
          {"slack", kCertificateSlack}};
}

json regularization_trace(const RegularizationTrace& t) {
  return {{"peel_threshold", t.peel_threshold}, {"half_degree", t.half_degree},
          {"cascade_length", t.cascade_length}, {"bucket", t.bucket},
          {"bucket_size", t.bucket_size},       {"matching_sizes", t.matching_sizes}};
}

json bireg_trace(const BiregTrace& t) {
  return {{"n_sizes", t.n_sizes}, {"bucket", t.bucket}, {"bucket_size", t.bucket_size},
          {"thin_total", t.thin_total}, {"first_iteration", t.first_iteration}};
}

std::int64_t codegree(const BipartiteGraph& g, int u, int v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::int64_t c = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

long double realized_mu(const BipartiteGraph& g) {
  auto [mu_m, mu_n] = almost_biregularity(g);
  return to_long_double(std::max(mu_m, mu_n));
}

json certify_free(const BipartiteGraph& g, const PatternSpec& spec, RunContext& ctx, FindStatus& status) {
  FindOptions fo;
  fo.ceiling = ctx.global.guard;
  fo.threads = ctx.global.threads;
  FindResult fr = find_pattern(g, spec, fo);
  status = fr.status;
  ctx.run["finder_nodes"] = fr.nodes;
  json j{{"pattern", spec.describe()}, {"finder_status", find_status_name(fr.status)}};
  if (fr.witness) j["witness"] = witness_to_json(*fr.witness);
  return j;
}

PatternSpec pattern_from_options(const FindOptionsCli& o) {
  switch (parse_pattern_kind(o.pattern)) {
    case PatternKind::CompleteBipartite: return PatternSpec::complete_bipartite(o.s, o.t);
    case PatternKind::Theta: return PatternSpec::theta(o.s, o.k);
    case PatternKind::KstSubdivision: return PatternSpec::kst_subdivision(o.s, o.t, o.k, o.r);
    case PatternKind::KpMultiSubdivision: return PatternSpec::kp_multi(o.p, o.k, o.r);
  }
  throw ParseError("unknown pattern");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

LabeledTree tree_from_options(const BalanceOptions& o) {
  int given = (o.path ? 1 : 0) + (o.spider.empty() ? 0 : 1) + (o.edges.empty() ? 0 : 1);
  if (given != 1) throw PreconditionViolated("give exactly one of --path, --spider, --edges");
  if (o.path) return LabeledTree::path(*o.path);
  if (!o.spider.empty()) return LabeledTree::spider(parse_int_list(o.spider));
  std::vector<Edge> edges;
  int n = 0;
  std::stringstream in(o.edges);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("bad edge '" + item + "'");
    auto ends = parse_int_list(item.substr(0, dash) + "," + item.substr(dash + 1));
    edges.emplace_back(ends[0], ends[1]);
    n = std::max({n, ends[0] + 1, ends[1] + 1});
  }
  return LabeledTree(n, edges);
}

}  // namespace

void run_regularize(const RegularizeOptions& o, RunContext& ctx) {
  ctx.arguments = {{"input", o.input}, {"c", o.c}, {"eps", o.eps}, {"graph_out", o.graph_out}};
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  Graph g = as_general(in);
  RegularizationResult res = enhanced_regularize(g, parse_rational(o.c), parse_rational(o.eps));
  bool recheck = check_certificate(res.certificate, res.H);
  ctx.result["certificate"] = res.certificate.to_json();
  ctx.result["certificate_rechecked"] = recheck;
  ctx.result["trace"] = regularization_trace(res.trace);
  ctx.result["output"] = {{"vertices", res.H.num_vertices()}, {"edges", res.H.num_edges()}};
  if (!o.graph_out.empty()) ctx.result["output"] = write_graph(o.graph_out, res.H, graph_header(ctx));
  if (!(res.certificate.all_ok() && recheck)) ctx.exit_code = kExitCheckFailed;
}

void run_biregularize(const BiregularizeOptions& o, RunContext& ctx) {
  ctx.arguments = {{"input", o.input}, {"c", o.c},     {"alpha", o.alpha}, {"beta", o.beta},
                   {"variant", o.variant}, {"eps", o.eps}, {"L_prime", o.l_prime}, {"L", o.l},
                   {"graph_out", o.graph_out}};
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  const BipartiteGraph& g = require_bipartite(in);
  Rational c = parse_rational(o.c), alpha = parse_rational(o.alpha), beta = parse_rational(o.beta);
  BipartiteGraph out;
  bool ok = false, recheck = false;
  if (o.variant == "weak") {
    if (o.eps.empty() || o.l_prime.empty()) throw PreconditionViolated("weak variant needs --eps and --L-prime");
    Rational eps = parse_rational(o.eps), lp = parse_rational(o.l_prime);
    Rational l = o.l.empty() ? default_weak_threshold(alpha, beta, eps, lp) : parse_rational(o.l);
    WeakBiregularizationResult res = weak_biregularize(g, c, alpha, beta, eps, lp, l);
    recheck = check_certificate(res.certificate, res.graph);
    ok = res.certificate.all_ok();
    ctx.result["certificate"] = res.certificate.to_json();
    out = std::move(res.graph);
  } else {
    BiregularizationResult res;
    if (o.variant == "strict")
      res = biregularize(g, c, alpha, beta);
    else if (o.variant == "floor")
      res = biregularize_with_floor(g, c, alpha, beta);
    else if (o.variant == "half")
      res = half_to_biregular(g, c, alpha, beta);
    else
      throw ParseError("unknown variant '" + o.variant + "'");
    recheck = check_certificate(res.certificate, res.graph);
    ok = res.certificate.all_ok();
    ctx.result["certificate"] = res.certificate.to_json();
    ctx.result["trace"] = bireg_trace(res.trace);
    out = std::move(res.graph);
  }
  ctx.result["certificate_rechecked"] = recheck;
  ctx.result["output"] = {{"m", out.m()}, {"n", out.n()}, {"edges", out.num_edges()}};
  if (!o.graph_out.empty()) ctx.result["output"] = write_graph(o.graph_out, out, graph_header(ctx));
  if (!(ok && recheck)) ctx.exit_code = kExitCheckFailed;
}

void run_roof(const RoofOptions& o, RunContext& ctx) {
  ctx.arguments = {{"input", o.input}};
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  const BipartiteGraph& g = require_bipartite(in);
  Roof roof = min_roof(g);
  bool valid = true;
  std::vector<int> load(g.m(), 0);
  for (std::size_t k = 0; k < roof.assign.size(); ++k) {
    int a = roof.assign[k];
    if (a < 0 || a >= g.m() || !g.has_edge(a, roof.n_offset + static_cast<int>(k))) valid = false;
    else ++load[a];
  }
  int realized = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  ctx.result["max_load"] = roof.max_load;
  ctx.result["assign"] = roof.assign;
  ctx.result["roof_valid"] = valid && realized == roof.max_load;
  if (g.n() <= 20) {
    int oracle = roof_bottleneck_oracle(g);
    ctx.result["oracle_max_load"] = oracle;
    ctx.result["oracle_agrees"] = oracle == roof.max_load;
    if (oracle != roof.max_load) ctx.exit_code = kExitCheckFailed;
  }
  if (!ctx.result["roof_valid"].get<bool>()) ctx.exit_code = kExitCheckFailed;
}

void run_paths(const PathsOptions& o, RunContext& ctx) {
  long double h_formula = ProofConstants::light_h(o.p, o.k, o.r);
  std::int64_t h = o.h ? *o.h : static_cast<std::int64_t>(std::llround(h_formula));
  ctx.arguments = {{"input", o.input}, {"k", o.k}, {"h", h}, {"p", o.p}, {"r", o.r},
                   {"max_paths", o.max_paths}, {"sample", o.sample}};
  if (o.mu) ctx.arguments["mu"] = *o.mu;
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  const BipartiteGraph& g = require_bipartite(in);
  LightPathOptions lo;
  lo.max_paths = o.max_paths;
  if (o.mu) lo.gamma = ProofConstants::light_gamma(h, ProofConstants::light_q(o.p, o.k, o.r), *o.mu, o.k);
  LightPathCollection col = light_path_collection(g, o.k, h, lo);
  // Literal recheck: every 2-path with both ends in M is h-light.
  BigInt limit = heavy_threshold(h, 2);
  bool all_light = true;
  for (const auto& path : col.paths) {
    if (path.empty() || !g.in_M(path.front())) all_light = false;
    for (std::size_t i = 0; i + 2 < path.size(); ++i)
      if (g.in_M(path[i]) && BigInt(codegree(g, path[i], path[i + 2])) >= limit) all_light = false;
  }
  const LightPathReport& r = col.report;
  ctx.result["pair_edges"] = r.pair_edges;
  ctx.result["peeled_vertices"] = r.peeled_vertices;
  ctx.result["peeled_min_degree"] = r.peeled_min_degree;
  ctx.result["found"] = r.found;
  ctx.result["capped"] = r.capped;
  ctx.result["target"] = r.target ? json(*r.target) : json(nullptr);
  ctx.result["all_two_paths_light"] = all_light;
  json sample = json::array();
  for (std::size_t i = 0; i < col.paths.size() && static_cast<int>(i) < o.sample; ++i) sample.push_back(col.paths[i]);
  ctx.result["sample"] = sample;
  if (!all_light) ctx.exit_code = kExitCheckFailed;
}

void run_verify(const VerifyOptions& o, RunContext& ctx) {
  ctx.arguments = {{"input", o.input}, {"check", o.check}, {"j", o.j},   {"k", o.k},     {"r", o.r},
                   {"s", o.s},         {"t", o.t},         {"p", o.p},   {"eps", o.eps}, {"eta", o.eta},
                   {"mu", o.mu},       {"constant", o.constant},         {"linear_constant", o.linear_constant}};
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  const BipartiteGraph& g = require_bipartite(in);
  if (g.num_edges() == 0) throw EmptyGraph("host has no edges");
  Rational eps_q = parse_rational(o.eps);
  long double eps = to_long_double(eps_q);
  long double e = static_cast<long double>(g.num_edges());
  long double m = g.m(), n = g.n();
  long double d_m = e / m, d_n = e / n;
  long double mu = realized_mu(g);

  json hyp = json::object();
  hyp["realized_mu"] = mu;
  hyp["min_degree"] = "unchecked: the degree threshold is not explicit";
  bool hyp_fail = false;
  std::optional<PatternSpec> pattern;
  std::function<json()> inequalities;

  if (o.check == "admissible-paths") {
    if (o.k < 2 || o.s < 2 || o.t < 2 || o.r < 1 || o.j < 2 || o.j > o.k)
      throw PreconditionViolated("needs k, s, t >= 2, r >= 1 and 2 <= j <= k");
    if (!(eps_q > 0 && eps_q < 1)) throw PreconditionViolated("eps must lie in (0, 1)");
    pattern = PatternSpec::kst_subdivision(o.s, o.t, o.k, o.r);
    std::int64_t need = std::int64_t{o.k} * o.r * o.s * o.t;
    hyp["eta_threshold"] = need;
    hyp["eta_threshold_met"] = o.eta >= need;
    hyp_fail = o.eta < need;
    inequalities = [&]() {
      json list = json::array();
      if (o.j % 2 == 0 && o.j == 2 && o.k % 2 == 1) return list;
      HeavyAdmissibleCounts c = count_heavy_admissible(g, o.j, o.eta);
      if (o.j % 2 == 1) {
        long double q = (o.j - 1) / 2;
        list.push_back(inequality("heavy admissible copies", static_cast<long double>(c.mm + c.nn + c.mixed),
                                  4 * mu * eps * e * std::pow(d_m, q) * std::pow(d_n, q)));
      } else {
        long double half = o.j / 2;
        list.push_back(inequality("heavy admissible copies with both ends in M", static_cast<long double>(c.mm),
                                  2 * mu * eps * e * std::pow(d_m, half - 1) * std::pow(d_n, half)));
        list.push_back(inequality("heavy admissible copies with both ends in N", static_cast<long double>(c.nn),
                                  2 * mu * eps * e * std::pow(d_m, half) * std::pow(d_n, half - 1)));
      }
      return list;
    };
  } else if (o.check == "heavy-n-cherries") {
    if (o.k < 3 || o.k % 2 == 0 || o.p < 2 || o.r < 1) throw PreconditionViolated("needs odd k >= 3, p >= 2, r >= 1");
    if (!(eps_q > 0 && eps_q < 1)) throw PreconditionViolated("eps must lie in (0, 1)");
    pattern = PatternSpec::kst_subdivision(o.p, o.p, o.k, o.r);
    long double kk = o.k, pp = o.p, rr = o.r;
    long double need = 32 * kk * kk * pp * pp * rr * rr * mu * mu * mu * std::pow(2 / eps, 2 * pp);
    hyp["eta_threshold"] = need;
    hyp["eta_threshold_met"] = static_cast<long double>(o.eta) >= need;
    hyp_fail = static_cast<long double>(o.eta) < need;
    inequalities = [&]() {
      HeavyAdmissibleCounts c = count_heavy_admissible(g, 2, o.eta);
      return json::array(
          {inequality("heavy 2-paths with both ends in N", static_cast<long double>(c.nn), eps * m * d_m * d_m)});
    };
  } else if (o.check == "subdivision-density" || o.check == "multi-subdivision-density") {
    bool multi = o.check == "multi-subdivision-density";
    if (o.k < 1 || o.r < 1 || o.mu < 2) throw PreconditionViolated("needs k, r >= 1 and mu >= 2");
    if (multi && o.p < 2) throw PreconditionViolated("needs p >= 2");
    if (!multi && (o.s < 2 || o.t < 2)) throw PreconditionViolated("needs s, t >= 2");
    pattern = multi ? PatternSpec::kp_multi(o.p, 2 * o.k, o.r) : PatternSpec::kst_subdivision(o.s, o.t, 2 * o.k, o.r);
    hyp["M_not_larger"] = g.m() <= g.n();
    hyp["mu_bound_met"] = mu <= o.mu;
    hyp_fail = g.m() > g.n() || mu > o.mu;
    long double c = to_long_double(parse_rational(o.constant));
    long double lin = to_long_double(parse_rational(o.linear_constant));
    inequalities = [&, c, lin, multi]() {
      long double kk = o.k;
      long double main = std::pow(m, 0.5L + 1 / (2 * kk)) * std::sqrt(n);
      long double rhs = multi ? c * main + lin * n : c * (main + m + n);
      return json::array({inequality("edges", e, rhs)});
    };
  } else {
    throw ParseError("unknown check '" + o.check + "'");
  }

  FindStatus status = FindStatus::NotFound;
  hyp["pattern_freeness"] = certify_free(g, *pattern, ctx, status);
  if (status == FindStatus::Found) hyp_fail = true;
  ctx.result["hypotheses"] = hyp;

  if (status == FindStatus::CeilingHit && !hyp_fail) {
    ctx.result["outcome"] = "inconclusive";
    ctx.exit_code = kExitInconclusive;
    return;
  }
  json list;
  try {
    list = inequalities();
  } catch (const TooLarge& err) {
    if (!hyp_fail) throw;
    list = json::array();
    ctx.result["not_evaluated"] = err.what();
  }
  ctx.result["inequalities"] = list;
  bool holds = std::all_of(list.begin(), list.end(), [](const json& x) { return x["holds"].get<bool>(); });
  if (hyp_fail) {
    ctx.result["outcome"] = "conditional";
  } else if (list.empty()) {
    ctx.result["outcome"] = "exempt";
  } else if (holds) {
    ctx.result["outcome"] = "holds";
  } else {
    ctx.result["outcome"] = "violated";
    ctx.exit_code = kExitCheckFailed;
  }
}

void run_construct(const ConstructOptions& o, RunContext& ctx) {
  ctx.arguments = {{"spec", o.spec}, {"trials", o.trials}, {"out_dir", o.out_dir}, {"certify", o.certify},
                   {"certify_max_vertices", o.certify_max_vertices}};
  if (o.trials < 1) throw PreconditionViolated("trials must be at least 1");
  std::string text = read_file(o.spec);
  ctx.input = {{"path", o.spec}, {"sha256", sha256_hex(text)}};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad spec: ") + e.what());
  }
  ConstructionSpec spec = construction_spec_from_json(doc);
  if (ctx.global.seed_given) spec.seed = ctx.global.seed;
  ctx.global.seed = spec.seed;
  std::optional<PatternSpec> pattern;
  if (doc.contains("construction"))
    pattern = lower_bound_pattern(parse_lower_bound_kind(doc["construction"].get<std::string>()), doc.value("k", 1),
                                  doc.value("s", 2), static_cast<int>(spec.prune_constant));
  json spec_json = construction_spec_to_json(spec);
  ctx.result["spec"] = spec_json;
  ctx.result["pattern"] = pattern ? json(pattern->describe()) : json(nullptr);

  long double q = static_cast<long double>(spec.q);
  long double pairs = static_cast<long double>(spec.m_size()) * static_cast<long double>(spec.n_size());
  long double p_edge = std::pow(q, -static_cast<long double>(spec.polynomials));
  Rational expo = spec.ell * (1 + spec.alpha - spec.rho);
  ctx.result["edge_probability"] = p_edge;
  ctx.result["expected_edges"] = pairs * p_edge;
  ctx.result["target_edges"] = std::pow(q, to_long_double(expo)) / 2;

  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  json trials = json::array();
  long double sum = 0, sumsq = 0, sum_pruned = 0;
  bool all_free = true, inconclusive = false;
  for (int i = 0; i < o.trials; ++i) {
    ConstructionSpec s = spec;
    s.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
    BipartiteGraph g = sample_construction(s, ctx.global.threads);
    PruneResult pr = prune_bad_roots(g, s.family, s.prune_constant);
    json tr{{"seed", s.seed},
            {"sampled_edges", g.num_edges()},
            {"pruned_edges", pr.graph.num_edges()},
            {"removed_edges", pr.removed_edges},
            {"deleted_vertices", pr.steps.size()}};
    if (pattern && o.certify && pr.graph.num_vertices() <= o.certify_max_vertices) {
      FindOptions fo;
      fo.ceiling = ctx.global.guard;
      fo.threads = ctx.global.threads;
      FindStatus st = find_pattern(pr.graph, *pattern, fo).status;
      tr["freeness"] = find_status_name(st);
      if (st == FindStatus::Found) all_free = false;
      if (st == FindStatus::CeilingHit) inconclusive = true;
    }
    if (!o.out_dir.empty()) {
      std::string stem = o.out_dir + "/trial_" + std::to_string(i);
      std::vector<std::string> header{std::string("extremal-cli ") + kVersion + " construct",
                                      "spec " + spec_json.dump(), "seed " + std::to_string(s.seed)};
      tr["sampled_graph"] = write_graph(stem + ".sampled.txt", g, header);
      tr["pruned_graph"] = write_graph(stem + ".pruned.txt", pr.graph, header);
      json log = json::array();
      for (const auto& st : pr.steps)
        log.push_back({{"tree", st.tree}, {"roots", st.roots}, {"copies", st.copies}, {"deleted_vertex", st.deleted_vertex}});
      std::ofstream(stem + ".prune.json") << log.dump(2) << '\n';
    }
    long double se = static_cast<long double>(g.num_edges());
    sum += se;
    sumsq += se * se;
    sum_pruned += static_cast<long double>(pr.graph.num_edges());
    trials.push_back(tr);
  }
  long double cnt = o.trials;
  long double mean = sum / cnt;
  ctx.result["trials"] = trials;
  ctx.result["mean_sampled_edges"] = mean;
  ctx.result["sd_sampled_edges"] =
      o.trials > 1 ? std::sqrt(std::max<long double>(0, (sumsq - sum * sum / cnt) / (cnt - 1))) : 0.0L;
  ctx.result["mean_pruned_edges"] = sum_pruned / cnt;
  if (pattern && o.certify) ctx.result["all_certified_free"] = all_free;
  if (!all_free)
    ctx.exit_code = kExitCheckFailed;
  else if (inconclusive)
    ctx.exit_code = kExitInconclusive;
}

void run_find(const FindOptionsCli& o, RunContext& ctx) {
  ctx.arguments = {{"input", o.input}, {"pattern", o.pattern}, {"s", o.s}, {"t", o.t},
                   {"k", o.k},         {"r", o.r},             {"p", o.p}, {"guard", ctx.global.guard}};
  PatternSpec spec = pattern_from_options(o);
  LoadedGraph in = load_graph(o.input);
  ctx.input = in.summary;
  Graph g = as_general(in);
  FindOptions fo;
  fo.ceiling = ctx.global.guard;
  fo.threads = ctx.global.threads;
  FindResult fr = find_pattern(g, spec, fo);
  ctx.run["finder_nodes"] = fr.nodes;
  ctx.result["pattern"] = pattern_to_json(spec);
  ctx.result["description"] = spec.describe();
  ctx.result["finder_status"] = find_status_name(fr.status);
  if (fr.witness) {
    ctx.result["witness"] = witness_to_json(*fr.witness);
    ctx.result["witness_verified"] = verify_witness(g, spec, *fr.witness);
  }
  if (fr.status == FindStatus::NotFound) ctx.exit_code = kExitNotFound;
  if (fr.status == FindStatus::CeilingHit) ctx.exit_code = kExitInconclusive;
}

void run_balance(const BalanceOptions& o, RunContext& ctx) {
  ctx.arguments = {{"path", o.path ? json(*o.path) : json(nullptr)},
                   {"spider", o.spider},
                   {"edges", o.edges},
                   {"a_side", o.a_side},
                   {"alpha", o.alpha}};
  LabeledTree t = tree_from_options(o);
  OrientedTree ot;
  if (o.a_side == "first")
    ot = OrientedTree(t, true);
  else if (o.a_side == "second")
    ot = OrientedTree(t, false);
  else if (o.a_side == "leaves-first")
    ot = OrientedTree::leaves_first(t);
  else
    throw ParseError("unknown --a-side '" + o.a_side + "'");
  ctx.input = {{"tree", oriented_tree_to_json(ot)}, {"description", ot.describe()}};
  ctx.result["roots"] = ot.roots();
  ctx.result["internal_A"] = ot.internal_A();
  ctx.result["internal_B"] = ot.internal_B();
  IntervalConditionReport ic = check_interval_conditions(ot);
  ctx.result["interval_conditions"] = {{"holds_A", ic.holds_A}, {"holds_B", ic.holds_B},
                                       {"failing_A", ic.failing_A}, {"failing_B", ic.failing_B}};
  try {
    RationalInterval iv = maximal_interval(ot);
    ctx.result["maximal_interval"] = {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
    try {
      balanced_interval_verified(ot);
      ctx.result["interval_verified"] = true;
    } catch (const VerificationFailed& err) {
      ctx.result["interval_verified"] = false;
      ctx.result["interval_failure"] = {{"message", err.what()}, {"failing", err.witness()}};
      ctx.exit_code = kExitCheckFailed;
    }
  } catch (const DegenerateTree& err) {
    ctx.result["maximal_interval"] = nullptr;
    ctx.result["degenerate"] = err.what();
  }
  if (!o.alpha.empty()) {
    Rational alpha = parse_rational(o.alpha);
    BalanceReport br = check_alpha_balanced(ot, alpha);
    json jb{{"alpha", to_string(alpha)}, {"balanced", br.balanced}, {"rho", to_string(rho_of(ot, alpha))}};
    if (!br.balanced) {
      jb["failing"] = br.failing;
      jb["failing_edges"] = br.failing_edges;
      jb["failing_bound"] = to_string(br.failing_bound);
    }
    ctx.result["balance"] = jb;
  }
}

}  // namespace extremal::cli
