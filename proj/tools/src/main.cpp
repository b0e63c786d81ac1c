#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "extremal/version.hpp"

using namespace extremal::cli;

namespace {

// Runs one command, maps failures to exit codes and writes the report.
int dispatch(RunContext& ctx, const std::function<void(RunContext&)>& body) {
  try {
    body(ctx);
  } catch (const std::exception& e) {
    ctx.exit_code = exit_code_for(e);
    ctx.result["error"] = e.what();
    std::cerr << "extremal-cli " << ctx.command << ": " << e.what() << '\n';
  }
  ctx.status = status_for(ctx.exit_code);
  try {
    emit(ctx);
  } catch (const std::exception& e) {
    std::cerr << "extremal-cli: " << e.what() << '\n';
    return kExitParse;
  }
  return ctx.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularization, subdivision finders and algebraic constructions for bipartite Turan problems"};
  app.set_version_flag("--version", extremal::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Base seed (construct: overrides the spec seed)");
  app.add_option("--threads", global.threads, "Worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("--guard", global.guard, "Search node ceiling");
  app.add_option("--out", global.out, "Report path (default: standard output)");
  app.add_option("--format", global.format, "Report rendering")->check(CLI::IsMember({"json", "text"}));

  RegularizeOptions reg;
  auto* c_reg = app.add_subcommand("regularize", "Almost-regular subgraph with certificate");
  c_reg->add_option("input", reg.input, "Edge-list file")->required();
  c_reg->add_option("--c", reg.c, "Density constant c")->required();
  c_reg->add_option("--eps", reg.eps, "Exponent eps in (0, 1)")->required();
  c_reg->add_option("--graph-out", reg.graph_out, "Write the subgraph here");

  BiregularizeOptions bir;
  auto* c_bir = app.add_subcommand("biregularize", "Almost-biregular subgraph with certificate");
  c_bir->add_option("input", bir.input, "Bipartite edge-list file")->required();
  c_bir->add_option("--c", bir.c)->required();
  c_bir->add_option("--alpha", bir.alpha)->required();
  c_bir->add_option("--beta", bir.beta)->required();
  c_bir->add_option("--variant", bir.variant)->check(CLI::IsMember({"strict", "floor", "half", "weak"}));
  c_bir->add_option("--eps", bir.eps, "weak: exponent slack");
  c_bir->add_option("--L-prime", bir.l_prime, "weak: output degree floor");
  c_bir->add_option("--L", bir.l, "weak: input degree threshold");
  c_bir->add_option("--graph-out", bir.graph_out);

  RoofOptions roof;
  auto* c_roof = app.add_subcommand("roof", "Minimum-load N-roof, checked against the bottleneck oracle");
  c_roof->add_option("input", roof.input)->required();

  PathsOptions paths;
  auto* c_paths = app.add_subcommand("paths", "k-paths whose M-to-M 2-paths are light");
  c_paths->add_option("input", paths.input)->required();
  c_paths->add_option("--k", paths.k)->check(CLI::PositiveNumber);
  c_paths->add_option("--lightness", paths.h, "Lightness parameter h (default p^4 k^2 r^2)");
  c_paths->add_option("--p", paths.p);
  c_paths->add_option("--r", paths.r);
  c_paths->add_option("--mu", paths.mu, "Report the target count for this mu");
  c_paths->add_option("--max-paths", paths.max_paths);
  c_paths->add_option("--sample", paths.sample, "Paths listed in the report");

  VerifyOptions ver;
  auto* c_ver = app.add_subcommand("verify", "Evaluate both sides of a counting inequality on a host");
  c_ver->add_option("input", ver.input)->required();
  c_ver->add_option("--check", ver.check)
      ->required()
      ->check(CLI::IsMember({"admissible-paths", "heavy-n-cherries", "subdivision-density", "multi-subdivision-density"}));
  c_ver->add_option("--j", ver.j);
  c_ver->add_option("--k", ver.k);
  c_ver->add_option("--r", ver.r);
  c_ver->add_option("--s", ver.s);
  c_ver->add_option("--t", ver.t);
  c_ver->add_option("--p", ver.p);
  c_ver->add_option("--eps", ver.eps);
  c_ver->add_option("--eta", ver.eta);
  c_ver->add_option("--mu", ver.mu);
  c_ver->add_option("--constant", ver.constant);
  c_ver->add_option("--linear-constant", ver.linear_constant);

  ConstructOptions con;
  auto* c_con = app.add_subcommand("construct", "Sample, prune and certify a random algebraic construction");
  c_con->add_option("spec", con.spec, "Construction spec (JSON)")->required();
  c_con->add_option("--trials", con.trials);
  c_con->add_option("--out-dir", con.out_dir, "Per-trial graphs and pruning logs");
  c_con->add_flag("!--no-certify", con.certify, "Skip finder certification");
  c_con->add_option("--certify-max-vertices", con.certify_max_vertices);

  FindOptionsCli fnd;
  auto* c_fnd = app.add_subcommand("find", "Search for a theta, K_{s,t} or subdivision");
  c_fnd->add_option("input", fnd.input)->required();
  c_fnd->add_option("--pattern", fnd.pattern)->required();
  c_fnd->add_option("--s", fnd.s);
  c_fnd->add_option("--t", fnd.t);
  c_fnd->add_option("--k", fnd.k);
  c_fnd->add_option("--r", fnd.r);
  c_fnd->add_option("--p", fnd.p);

  BalanceOptions bal;
  auto* c_bal = app.add_subcommand("balance", "Alpha-balance and the maximal interval of an oriented tree");
  c_bal->add_option("--path", bal.path, "Path with this many edges");
  c_bal->add_option("--spider", bal.spider, "Leg lengths, comma separated");
  c_bal->add_option("--edges", bal.edges, "Tree edges u-v, comma separated, 0-based");
  c_bal->add_option("--a-side", bal.a_side)->check(CLI::IsMember({"first", "second", "leaves-first"}));
  c_bal->add_option("--alpha", bal.alpha);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  global.seed_given = app.count("--seed") > 0;

  RunContext ctx;
  ctx.global = global;
  std::function<void(RunContext&)> body;
  if (*c_reg) {
    ctx.command = "regularize";
    body = [&](RunContext& c) { run_regularize(reg, c); };
  } else if (*c_bir) {
    ctx.command = "biregularize";
    body = [&](RunContext& c) { run_biregularize(bir, c); };
  } else if (*c_roof) {
    ctx.command = "roof";
    body = [&](RunContext& c) { run_roof(roof, c); };
  } else if (*c_paths) {
    ctx.command = "paths";
    body = [&](RunContext& c) { run_paths(paths, c); };
  } else if (*c_ver) {
    ctx.command = "verify";
    body = [&](RunContext& c) { run_verify(ver, c); };
  } else if (*c_con) {
    ctx.command = "construct";
    body = [&](RunContext& c) { run_construct(con, c); };
  } else if (*c_fnd) {
    ctx.command = "find";
    body = [&](RunContext& c) { run_find(fnd, c); };
  } else {
    ctx.command = "balance";
    body = [&](RunContext& c) { run_balance(bal, c); };
  }
  return dispatch(ctx, body);
}
