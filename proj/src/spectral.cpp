#include "nzi/spectral.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "nzi/error.hpp"

namespace nzi {

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& opts) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(ErrorCode::EmptyGraph, "spectral radius needs n >= 2");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "spectral radius needs a connected graph");

  // The shift by I makes the Perron eigenvalue strictly dominant in modulus,
  // also for bipartite graphs where -rho would otherwise tie with rho.
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = 0.0;
  SpectralResult out;
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    for (VertexId u = 0; u < n; ++u) {
      double acc = x[u];
      for (VertexId v : g.neighbors(u)) acc += x[v];
      y[u] = acc;
    }
    const double rayleigh = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;

    out.iterations = it;
    out.residual = std::abs(rayleigh - previous);
    previous = rayleigh;
    if (it > 1 && out.residual < opts.tolerance) {
      out.rho = rayleigh - 1.0;
      out.rho_squared = out.rho * out.rho;
      return out;
    }
  }
  throw Error(ErrorCode::NoConvergence, "no convergence after " + std::to_string(opts.max_iterations) +
                                            " iterations (last change " + std::to_string(out.residual) + ")");
}

namespace {

void require_edges(const DegreeProfile& p) {
  if (p.m1 == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges (M1 = 0)");
}

}  // namespace

double ylt_lower_bound(const DegreeProfile& p) {
  require_edges(p);
  std::int64_t nm2 = 0;
  for (auto d : p.nbr_deg) nm2 += d * d;
  return static_cast<double>(nm2) / static_cast<double>(p.m1);
}

double ylt_lower_bound(const Graph& g) { return ylt_lower_bound(degree_profile(g)); }

double theorem41_lower_bound(const DegreeProfile& p) {
  require_edges(p);
  const std::int64_t delta = p.delta_min;
  const std::int64_t numerator = p.m1 * (2 * delta + 1) - p.n * delta * delta - p.n * delta;
  return static_cast<double>(numerator) / static_cast<double>(p.m1);
}

double theorem41_lower_bound(const Graph& g) { return theorem41_lower_bound(degree_profile(g)); }

SpectralResult spectral_report(const Graph& g, const PowerIterationOptions& opts) {
  const DegreeProfile p = degree_profile(g);
  SpectralResult r = spectral_radius(g, opts);
  r.bound_ylt = ylt_lower_bound(p);
  r.bound_thm41 = theorem41_lower_bound(p);
  return r;
}

BoundReport theorem41_bound_report(const Graph& g, double rel_tol, const PowerIterationOptions& opts) {
  const DegreeProfile p = degree_profile(g);
  const SpectralResult s = spectral_radius(g, opts);
  BoundReport r;
  r.source = BoundSource::Theorem41;
  r.part = 1;
  r.direction = Direction::Lower;
  r.bound = theorem41_lower_bound(p);
  r.computed = s.rho_squared;
  r.equality = p.nbr_hist.size() == 1;
  finalize(r, rel_tol);
  return r;
}

}  // namespace nzi
