#pragma once

// Graph factories and brute-force oracles shared by the test binaries. The
// oracles work on dense adjacency matrices and never call into the library's
// degree or distance code.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "nzi/graph.hpp"

namespace nzi::testing {

inline std::string fixture_path(const std::string& rel) { return std::string(NZI_FIXTURE_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline Graph from_edges(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// 4-cycle with two pendants per cycle vertex.
inline Graph figure1() {
  return Graph(12, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5},
                                     {1, 6}, {1, 7}, {2, 8}, {2, 9}, {3, 10}, {3, 11}});
}

// 4-cycle with one pendant on vertex 1.
inline Graph figure2() { return Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}}); }

inline Graph c5_chord() {
  return Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline Graph paw() { return Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency_matrix(const Graph& g) {
  const auto n = g.order();
  Matrix a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::vector<std::int64_t> oracle_degrees(const Matrix& a) {
  std::vector<std::int64_t> d(a.size(), 0);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v) d[u] += a[u][v];
  return d;
}

inline std::vector<std::int64_t> oracle_nbr_degrees(const Matrix& a) {
  const auto d = oracle_degrees(a);
  std::vector<std::int64_t> out(a.size(), 0);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[u][v]) out[u] += d[v];
  return out;
}

constexpr int kUnreachable = 1 << 20;

// Floyd-Warshall.
inline Matrix oracle_distances(const Matrix& a) {
  const auto n = a.size();
  Matrix d(n, std::vector<int>(n, kUnreachable));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (a[u][v]) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<std::int64_t> oracle_dist2_degrees(const Matrix& a) {
  const auto deg = oracle_degrees(a);
  const auto dist = oracle_distances(a);
  std::vector<std::int64_t> out(a.size(), 0);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t w = 0; w < a.size(); ++w)
      if (dist[u][w] == 2) out[u] += deg[w];
  return out;
}

// graph6 decoding written against the format description: expand every data
// byte into six characters of '0'/'1', then read the upper triangle column
// by column.
inline std::vector<Edge> oracle_graph6_edges(const std::string& s, std::size_t& n) {
  n = static_cast<std::size_t>(s.at(0) - 63);
  std::string bits;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const int v = s[k] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
  }
  std::vector<Edge> edges;
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (bits.at(pos++) == '1') edges.emplace_back(i, j);
  return edges;
}

}  // namespace nzi::testing
