#include "extremal/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

bool content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

long long read_int(std::istringstream& ss, int lineno) {
  long long x;
  if (!(ss >> x)) fail(lineno, "expected integer");
  return x;
}

}  // namespace

AnyGraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!content_line(in, line, lineno)) throw ParseError("missing header line");
  std::istringstream hs(line);
  std::string kind;
  hs >> kind;
  bool bip;
  long long m = 0, n = 0;
  if (kind == "p") {
    bip = true;
    m = read_int(hs, lineno);
    n = read_int(hs, lineno);
  } else if (kind == "g") {
    bip = false;
    n = read_int(hs, lineno);
  } else {
    fail(lineno, "header must be 'p m n' or 'g n'");
  }
  std::string rest;
  if (hs >> rest) fail(lineno, "trailing text in header");
  if (m < 0 || n < 0 || m + n > (1LL << 30)) fail(lineno, "bad vertex counts");
  long long total = m + n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (content_line(in, line, lineno)) {
    std::istringstream ss(line);
    long long u = read_int(ss, lineno), v = read_int(ss, lineno);
    if (ss >> rest) fail(lineno, "trailing text");
    if (u < 0 || v < 0 || u >= total || v >= total) fail(lineno, "vertex index out of range");
    if (u == v) fail(lineno, "self-loop");
    if (bip && ((u < m) == (v < m))) fail(lineno, "edge inside one part");
    Edge key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) fail(lineno, "duplicate edge");
    edges.push_back(key);
  }
  if (bip) return BipartiteGraph(static_cast<int>(m), static_cast<int>(n), edges);
  return Graph(static_cast<int>(n), edges);
}

AnyGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

AnyGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "g " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p " << g.m() << ' ' << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace extremal
