#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <string>

#include <nlohmann/json.hpp>

#include "extremal/finders.hpp"
#include "extremal/io.hpp"

namespace extremal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,         // malformed input or I/O failure
  kExitPrecondition = 2,  // instance outside an operation's hypotheses
  kExitInconclusive = 3,  // node ceiling or enumeration guard reached
  kExitNotFound = 4,      // exhaustive search found nothing
  kExitCheckFailed = 5,   // a certificate, recheck or inequality came out false
  kExitInternal = 6,
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
  std::uint64_t guard = kDefaultNodeCeiling;
  std::string out;
  std::string format = "json";
};

// Everything a command contributes to its report. `run` holds the fields that may vary
// between replays (timing, thread count, search effort); the rest is deterministic.
struct RunContext {
  GlobalOptions global;
  std::string command;
  nlohmann::json arguments = nlohmann::json::object();
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json run = nlohmann::json::object();
  std::string status = "ok";
  int exit_code = kExitOk;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);  // throws ParseError

struct LoadedGraph {
  AnyGraph graph;
  nlohmann::json summary;  // path, digest, kind, sizes
};
LoadedGraph load_graph(const std::string& path);
const BipartiteGraph& require_bipartite(const LoadedGraph& g);
Graph as_general(const LoadedGraph& g);

// Writes g in the edge-list format and returns its path, digest and sizes.
nlohmann::json write_graph(const std::string& path, const BipartiteGraph& g, const std::vector<std::string>& header);
nlohmann::json write_graph(const std::string& path, const Graph& g, const std::vector<std::string>& header);

// Exit code and status word for an exception escaping a command.
int exit_code_for(const std::exception& e);
const char* status_for(int exit_code);

nlohmann::json assemble(const RunContext& ctx);
// Flattened "key: value" lines.
std::string render_text(const nlohmann::json& report);
// Writes the report to --out or standard output.
void emit(const RunContext& ctx);

}  // namespace extremal::cli
