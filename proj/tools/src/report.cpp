#include "report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <type_traits>

#include "extremal/errors.hpp"
#include "extremal/version.hpp"

namespace extremal::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalInvariantBroken("sha256 failed");
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  LoadedGraph out{parse_edge_list_string(text), nlohmann::json::object()};
  out.summary["path"] = path;
  out.summary["sha256"] = sha256_hex(text);
  std::visit(
      [&](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, BipartiteGraph>) {
          out.summary["kind"] = "bipartite";
          out.summary["m"] = g.m();
          out.summary["n"] = g.n();
        } else {
          out.summary["kind"] = "graph";
        }
        out.summary["vertices"] = g.num_vertices();
        out.summary["edges"] = g.num_edges();
      },
      out.graph);
  return out;
}

const BipartiteGraph& require_bipartite(const LoadedGraph& g) {
  if (const auto* b = std::get_if<BipartiteGraph>(&g.graph)) return *b;
  throw PreconditionViolated("input must be bipartite (header 'p m n')");
}

Graph as_general(const LoadedGraph& g) {
  if (const auto* b = std::get_if<BipartiteGraph>(&g.graph)) return b->graph();
  return std::get<Graph>(g.graph);
}

namespace {

template <class G>
nlohmann::json write_any(const std::string& path, const G& g, const std::vector<std::string>& header) {
  std::ostringstream text;
  write_edge_list(text, g, header);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text.str();
  if (!out) throw ParseError("write failed for '" + path + "'");
  return {{"path", path}, {"sha256", sha256_hex(text.str())}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
}

void flatten(const nlohmann::json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

nlohmann::json write_graph(const std::string& path, const BipartiteGraph& g, const std::vector<std::string>& header) {
  return write_any(path, g, header);
}

nlohmann::json write_graph(const std::string& path, const Graph& g, const std::vector<std::string>& header) {
  return write_any(path, g, header);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const TooLarge*>(&e)) return kExitInconclusive;
  if (dynamic_cast<const VerificationFailed*>(&e)) return kExitCheckFailed;
  if (dynamic_cast<const InternalInvariantBroken*>(&e)) return kExitInternal;
  if (dynamic_cast<const Error*>(&e)) return kExitPrecondition;
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return kExitParse;
  return kExitInternal;
}

const char* status_for(int exit_code) {
  switch (exit_code) {
    case kExitOk: return "ok";
    case kExitParse: return "parse-error";
    case kExitPrecondition: return "precondition-violated";
    case kExitInconclusive: return "inconclusive";
    case kExitNotFound: return "not-found";
    case kExitCheckFailed: return "check-failed";
    default: return "internal-error";
  }
}

nlohmann::json assemble(const RunContext& ctx) {
  nlohmann::json j;
  j["tool"] = "extremal-cli";
  j["version"] = kVersion;
  j["command"] = ctx.command;
  j["arguments"] = ctx.arguments;
  j["seed"] = ctx.global.seed;
  j["input"] = ctx.input;
  j["status"] = ctx.status;
  j["exit_code"] = ctx.exit_code;
  j["result"] = ctx.result;
  nlohmann::json run = ctx.run;
  run["threads"] = ctx.global.threads;
  run["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.start).count();
  j["run"] = run;
  return j;
}

std::string render_text(const nlohmann::json& report) {
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

void emit(const RunContext& ctx) {
  nlohmann::json report = assemble(ctx);
  std::string body = ctx.global.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (ctx.global.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(ctx.global.out, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + ctx.global.out + "'");
  out << body;
}

}  // namespace extremal::cli
