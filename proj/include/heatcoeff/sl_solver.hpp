#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heatcoeff/coefficient.hpp"
#include "heatcoeff/kernels.hpp"

namespace heatcoeff {

struct SolverConfig {
  // Grid density is chosen so the second-order product-integration error
  // ~ kappa^3 h^2 / 12 (kappa = k sqrt(c1)) stays below this target.
  double target_rel_tol = 2e-7;
  std::size_t n_min = 200;       // intervals per unit length, floor
  std::size_t n_max = 2'000'000; // hard cap on total intervals
  double eps_fixed_point = 1e-10;
  int max_picard_iters = 400;
  enum class Method { marching, picard };
  Method method = Method::marching;
};

// Solution pair (u, u') of u = 1 + k^2 int_0^x (x-s) q(s) u(s) ds on a grid
// containing all breakpoints of q.  For large k the true values overflow
// double range; log_u / log_du stay finite and are the authoritative form.
struct SpectralSolution {
  double k = 0.0;
  std::vector<double> grid;
  std::vector<double> u;      // +inf where the true value exceeds double range
  std::vector<double> du;
  std::vector<double> log_u;  // finite everywhere
  std::vector<double> log_du; // -inf at x = 0
  bool log_form = false;      // true if rescaling engaged during the march

  std::size_t index_of(double x) const; // exact node lookup, throws DomainError
};

kernels::MarchGrid build_march_grid(const CoefficientM& q, double k, const SolverConfig& cfg,
                                    std::span<const double> extra_nodes = {});

SpectralSolution solve_volterra(const CoefficientM& q, double k, const SolverConfig& cfg = {},
                                std::span<const double> extra_nodes = {});

// Relative sup-norm defect of the discrete fixed point u = 1 + k^2 V[u],
// measured with the same trapezoid product rule the solver uses.  Skips
// nodes whose u overflowed.
double volterra_residual(const SpectralSolution& sol, const CoefficientM& q);

struct PointwiseReport {
  double min_u_minus_1 = 0.0;
  double min_du = 0.0;
  double min_convexity = 0.0; // second divided difference normalized by u
  bool pass(double tol = 1e-8) const {
    return min_u_minus_1 >= -tol && min_du >= -tol && min_convexity >= -tol;
  }
};

PointwiseReport check_pointwise_properties(const SpectralSolution& sol);

// First-order consequence of monotonicity in k^2: u(x, k2) >= u(x, k1) - tol.
bool monotonicity_in_k2(const CoefficientM& q, double k1, double k2, double x, const SolverConfig& cfg = {},
                        double tol = 1e-10);

// u(x,k)/u(y,k) for y < x; contract: >= 1 + k^2 c0 (x-y)^2 / 2.
double growth_ratio(const CoefficientM& q, double y, double x, double k, const SolverConfig& cfg = {});
double log_growth_ratio(const CoefficientM& q, double y, double x, double k, const SolverConfig& cfg = {});

// Boundary values (log u(1), log u'(1)) for many k on one shared grid; the
// grid density is set by the largest k.  Runs through the batched march
// kernel.
std::vector<kernels::MarchBoundary> boundary_sweep(const CoefficientM& q, std::span<const double> ks,
                                                   const SolverConfig& cfg = {});

} // namespace heatcoeff
