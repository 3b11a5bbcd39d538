#pragma once

#include <cstddef>

#include "nzi/bounds.hpp"
#include "nzi/degree_profile.hpp"
#include "nzi/graph.hpp"

namespace nzi {

struct PowerIterationOptions {
  double tolerance = 1e-10;     // on the change of the Rayleigh quotient
  std::size_t max_iterations = 100000;
};

struct SpectralResult {
  double rho = 0.0;
  double rho_squared = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // last change of the Rayleigh quotient
  double bound_ylt = 0.0;    // NM_2 / M1
  double bound_thm41 = 0.0;  // (M1 (2 delta + 1) - n delta^2 - n delta) / M1
};

/// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
/// vector. Only the rho, rho_squared, iterations and residual fields are set.
///
/// Errors: EmptyGraph (n < 2), Disconnected, NoConvergence.
SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& opts = {});

/// rho^2 >= NM_2 / M1. Errors: EmptyGraph when M1 == 0.
double ylt_lower_bound(const Graph& g);
double ylt_lower_bound(const DegreeProfile& p);

/// rho^2 >= (M1 (2 delta + 1) - n delta^2 - n delta) / M1 with delta the
/// minimum neighborhood degree. Errors: EmptyGraph when M1 == 0.
double theorem41_lower_bound(const Graph& g);
double theorem41_lower_bound(const DegreeProfile& p);

/// spectral_radius plus both lower bounds.
SpectralResult spectral_report(const Graph& g, const PowerIterationOptions& opts = {});

/// rho^2 against the theorem41 bound as a lower BoundReport. Structural
/// equality is neighborhood regularity: then 1 is a Perron vector of A^2 and
/// rho^2 equals the common neighborhood degree, as does the bound.
BoundReport theorem41_bound_report(const Graph& g, double rel_tol = 1e-9, const PowerIterationOptions& opts = {});

}  // namespace nzi
