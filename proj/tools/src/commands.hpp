#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"

namespace extremal::cli {

struct RegularizeOptions {
  std::string input;
  std::string c;
  std::string eps;
  std::string graph_out;
};

struct BiregularizeOptions {
  std::string input;
  std::string c;
  std::string alpha;
  std::string beta;
  std::string variant = "strict";  // strict | floor | half | weak
  std::string eps;                 // weak only
  std::string l_prime;             // weak only
  std::string l;                   // weak only; defaults from the other parameters
  std::string graph_out;
};

struct RoofOptions {
  std::string input;
};

struct PathsOptions {
  std::string input;
  int k = 2;
  std::optional<std::int64_t> h;
  int p = 2;
  int r = 1;
  std::optional<long double> mu;
  std::uint64_t max_paths = 1'000'000;
  int sample = 20;
};

struct VerifyOptions {
  std::string input;
  std::string check;  // admissible-paths | heavy-n-cherries | subdivision-density | multi-subdivision-density
  int j = 2;
  int k = 2;
  int r = 1;
  int s = 2;
  int t = 2;
  int p = 2;
  std::string eps = "1/2";
  std::int64_t eta = 1;
  int mu = 2;
  std::string constant = "1";
  std::string linear_constant = "1";
};

struct ConstructOptions {
  std::string spec;
  int trials = 1;
  std::string out_dir;
  bool certify = true;
  int certify_max_vertices = 200;
};

struct FindOptionsCli {
  std::string input;
  std::string pattern;
  int s = 2;
  int t = 2;
  int k = 1;
  int r = 1;
  int p = 3;
};

struct BalanceOptions {
  std::optional<int> path;  // number of edges
  std::string spider;       // comma-separated leg lengths
  std::string edges;        // "u-v,u-v,..." on vertices 0..n-1
  std::string a_side = "first";  // first | second | leaves-first
  std::string alpha;
};

void run_regularize(const RegularizeOptions& o, RunContext& ctx);
void run_biregularize(const BiregularizeOptions& o, RunContext& ctx);
void run_roof(const RoofOptions& o, RunContext& ctx);
void run_paths(const PathsOptions& o, RunContext& ctx);
void run_verify(const VerifyOptions& o, RunContext& ctx);
void run_construct(const ConstructOptions& o, RunContext& ctx);
void run_find(const FindOptionsCli& o, RunContext& ctx);
void run_balance(const BalanceOptions& o, RunContext& ctx);

}  // namespace extremal::cli
