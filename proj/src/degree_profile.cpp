#include "nzi/degree_profile.hpp"

#include <algorithm>

namespace nzi {

namespace {

std::int64_t lookup(const Histogram& h, std::int64_t i) {
  const auto it = h.find(i);
  return it == h.end() ? 0 : it->second;
}

}  // namespace

std::int64_t DegreeProfile::nbr_count(std::int64_t i) const { return lookup(nbr_hist, i); }
std::int64_t DegreeProfile::dist2_count(std::int64_t i) const { return lookup(dist2_hist, i); }
std::int64_t DegreeProfile::deg_count(std::int64_t i) const { return lookup(deg_hist, i); }

DegreeProfile degree_profile(const Graph& g) {
  const std::size_t n = g.order();
  DegreeProfile p;
  p.n = static_cast<std::int64_t>(n);
  p.m = static_cast<std::int64_t>(g.size());
  p.deg.resize(n);
  p.nbr_deg.assign(n, 0);
  p.dist2_deg.assign(n, 0);

  for (VertexId u = 0; u < n; ++u) {
    p.deg[u] = static_cast<std::int64_t>(g.degree(u));
    p.m1 += p.deg[u] * p.deg[u];
  }

  // stamp[w] == u + 1 marks w as already excluded or counted for source u.
  std::vector<std::size_t> stamp(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    const std::size_t tag = u + 1;
    stamp[u] = tag;
    for (VertexId v : g.neighbors(u)) {
      p.nbr_deg[u] += p.deg[v];
      stamp[v] = tag;
    }
    for (VertexId v : g.neighbors(u)) {
      for (VertexId w : g.neighbors(v)) {
        if (stamp[w] != tag) {
          stamp[w] = tag;
          p.dist2_deg[u] += p.deg[w];
        }
      }
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    ++p.deg_hist[p.deg[u]];
    ++p.nbr_hist[p.nbr_deg[u]];
    ++p.dist2_hist[p.dist2_deg[u]];
  }
  p.delta_min = p.nbr_hist.begin()->first;
  p.delta_max = p.nbr_hist.rbegin()->first;
  p.d2_min = p.dist2_hist.begin()->first;
  p.d2_max = p.dist2_hist.rbegin()->first;
  return p;
}

}  // namespace nzi
