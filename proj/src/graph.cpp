#include "nzi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "nzi/error.hpp"

namespace nzi {

namespace {

constexpr std::size_t kMaxMaskOrder = 11;  // C(11, 2) = 55 pairs
constexpr std::size_t kMaxGraph6Order = 62;
constexpr char kGraph6Bias = 63;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_id(std::string_view token, std::size_t& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::NonContiguousIds, "graph must have at least one vertex");
  adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::NonContiguousIds,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " exceeds vertex count " +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw Error(ErrorCode::DuplicateEdge, std::to_string(v) + "-" + std::to_string(*dup));
    }
  }
  edge_count_ = edges.size();
}

Graph Graph::from_mask(std::size_t n, EdgeMask mask) {
  if (n == 0 || n > kMaxMaskOrder) {
    throw Error(ErrorCode::NTooLarge, "edge masks support 1 <= n <= 11, got " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.resize(n);
  // Iterating j outer, i inner visits pairs in mask order and keeps lists sorted.
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) {
        g.adjacency_[j].push_back(i);
        ++g.edge_count_;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.adjacency_[v]) {
      if (w < v) g.adjacency_[w].push_back(v);
    }
  }
  // Lower neighbors were appended first, in ascending order; upper neighbors
  // arrive in ascending v, so every list is already sorted.
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

EdgeMask Graph::edge_mask() const {
  if (order() > kMaxMaskOrder) {
    throw Error(ErrorCode::NTooLarge, "edge masks support n <= 11");
  }
  EdgeMask mask = 0;
  for (const auto& [u, v] : edges()) mask |= EdgeMask{1} << pair_index(u, v);
  return mask;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  bool any_content = false;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    const auto where = "line " + std::to_string(line_no) + ": '" + std::string(line) + "'";
    if (tokens.size() != 2) throw Error(ErrorCode::MalformedLine, where);

    if (tokens[0] == "n") {
      std::size_t count = 0;
      if (any_content || !parse_id(tokens[1], count) || count == 0) {
        throw Error(ErrorCode::MalformedLine, where);
      }
      declared_n = count;
      any_content = true;
      continue;
    }

    std::size_t u = 0;
    std::size_t v = 0;
    if (!parse_id(tokens[0], u) || !parse_id(tokens[1], v)) throw Error(ErrorCode::MalformedLine, where);
    if (u == v) throw Error(ErrorCode::SelfLoop, where);
    const Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) throw Error(ErrorCode::DuplicateEdge, where);
    edges.push_back(key);
    any_content = true;
  }

  if (!any_content) throw Error(ErrorCode::MalformedLine, "empty edge list");

  std::size_t n = 0;
  if (declared_n) {
    n = *declared_n;
  } else {
    std::vector<bool> used;
    for (const auto& [u, v] : edges) {
      n = std::max({n, u + 1, v + 1});
    }
    used.assign(n, false);
    for (const auto& [u, v] : edges) used[u] = used[v] = true;
    if (auto gap = std::find(used.begin(), used.end(), false); gap != used.end()) {
      throw Error(ErrorCode::NonContiguousIds,
                  "vertex " + std::to_string(gap - used.begin()) +
                      " never appears; declare 'n <count>' to allow isolated vertices");
    }
  }
  return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorCode::InvalidGraph6, "empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorCode::InvalidGraph6, "character out of range");
  }
  if (text.front() == '~') throw Error(ErrorCode::InvalidGraph6, "only n <= 62 is supported");

  const std::size_t n = static_cast<std::size_t>(text.front() - kGraph6Bias);
  if (n == 0) throw Error(ErrorCode::InvalidGraph6, "graph has no vertices");
  const std::size_t bits = pair_count(n);
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body) {
    throw Error(ErrorCode::InvalidGraph6, "expected " + std::to_string(body) + " data bytes for n=" +
                                              std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - kGraph6Bias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < body * 6; ++k) {
    const int chunk = text[1 + k / 6] - kGraph6Bias;
    if ((chunk >> (5 - k % 6)) & 1) throw Error(ErrorCode::InvalidGraph6, "non-zero padding bits");
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw Error(ErrorCode::InvalidGraph6, "only n <= 62 is supported");
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int chunk = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(chunk + kGraph6Bias));
        chunk = 0;
      }
    }
  }
  if (k % 6 != 0) {
    chunk <<= 6 - k % 6;
    out.push_back(static_cast<char>(chunk + kGraph6Bias));
  }
  return out;
}

namespace {

std::vector<std::optional<std::size_t>> bfs_from(const Graph& g, VertexId source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  const auto dist = bfs_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::vector<std::vector<std::optional<std::size_t>>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<std::optional<std::size_t>>> out;
  out.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out.push_back(bfs_from(g, v));
  return out;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    for (const auto& d : bfs_from(g, v)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

}  // namespace nzi
