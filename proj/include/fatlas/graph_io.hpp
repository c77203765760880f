#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fatlas/graph.hpp"

namespace fatlas {

// Edge-list text format:
//   n m
//   u v        (m lines, 0-indexed)
// Lines whose first non-blank character is '#' are comments.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<long long> numbers;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        numbers.push_back(value);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      }
    }
  }
  require(numbers.size() >= 2, ErrorCode::ParseError, "missing 'n m' header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  require(n >= 0 && n <= kMaxOrder, ErrorCode::ParseError, "vertex count out of range");
  require(m >= 0, ErrorCode::ParseError, "negative edge count");
  require(numbers.size() == static_cast<std::size_t>(2 + 2 * m), ErrorCode::ParseError,
          "expected " + std::to_string(m) + " edges, found " + std::to_string((numbers.size() - 2) / 2) +
              ((numbers.size() % 2) ? " and a dangling endpoint" : ""));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = numbers[static_cast<std::size_t>(2 + 2 * i)];
    long long v = numbers[static_cast<std::size_t>(3 + 2 * i)];
    require(u >= 0 && u < n && v >= 0 && v < n, ErrorCode::OutOfRange,
            "edge " + std::to_string(i) + " endpoint outside [0," + std::to_string(n) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::ParseError, "cannot write '" + path + "'");
  write_edge_list(out, g);
}

}  // namespace fatlas
